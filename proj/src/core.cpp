#include <stdexcept>
#include <string>

#include "rapf/params.hpp"
#include "rapf/scenario.hpp"

namespace rapf {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void validate(const PlannerParams& p) {
    require(p.k_a > 0.0, "k_a must be positive");
    require(p.k_rep > 0.0, "k_rep must be positive");
    require(p.rho_0 > 0.0, "rho_0 must be positive");
    require(p.alpha_a > 0.0, "alpha_a must be positive");
    require(p.mu_a > 0.0, "mu_a must be positive");
    require(p.alpha_o > 0.0, "alpha_o must be positive");
    require(p.mu_o > 0.0, "mu_o must be positive");
    require(p.rho_l > 0.0, "rho_l must be positive");
    require(p.rho_l < p.rho_u, "rho_l must be below rho_u");
    require(p.n_bacteria >= 3, "n_bacteria must be at least 3");
    require(p.rho_b > 0.0, "rho_b must be positive");
    require(p.step_size > 0.0, "step_size must be positive");
    require(p.max_time >= 0.0, "max_time must not be negative");
    require(p.goal_margin > 0.0, "goal_margin must be positive");
    require(p.rw_steps > 0, "rw_steps must be positive");
    require(p.max_artificial > 0, "max_artificial must be positive");
    require(p.astar_grid_cell > 0.0, "astar_grid_cell must be positive");
    require(p.max_plan_steps > 0, "max_plan_steps must be positive");
}

void validate(const Scenario& s) {
    require(s.world_size.x > 0.0 && s.world_size.y > 0.0,
            "world_size must be positive");
    const Rect world{{0.0, 0.0}, s.world_size};
    require(world.contains(s.start), "start must lie inside the world");
    require(world.contains(s.goal_center),
            "goal_center must lie inside the world");
    require(s.goal_radius > 0.0, "goal_radius must be positive");
    require(s.rover_radius > 0.0, "rover_radius must be positive");
    require(s.obstacle_region.min.x <= s.obstacle_region.max.x &&
                s.obstacle_region.min.y <= s.obstacle_region.max.y,
            "obstacle_region must be a valid rectangle");
    for (const Obstacle& o : s.obstacles) {
        require(o.radius > 0.0, "obstacle radius must be positive");
        require(s.obstacle_region.contains(o.center),
                "obstacle centre must lie inside obstacle_region");
        require(distance(o.center, s.start) > o.radius + s.rover_radius,
                "start must be collision-free");
        require(distance(o.center, s.goal_center) > o.radius + s.goal_radius,
                "goal disc must be obstacle-free");
    }
}

}  // namespace rapf
