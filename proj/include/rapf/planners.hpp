#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rapf/geometry.hpp"
#include "rapf/params.hpp"
#include "rapf/potentials.hpp"

namespace rapf {

enum class PlanStatus : std::uint8_t { Reached, NoPath, Timeout };

std::string_view to_string(PlanStatus s);

struct PlanRequest {
    Vec2 start;
    Vec2 target;
    std::vector<Obstacle> known_obstacles;
    PlannerParams params;
    std::uint64_t rng_seed = 0;
    double rover_radius = 0.2;
    // Grid extent for plan_astar. Unset: bounding box of start, target and
    // obstacles, padded by one metre. The potential planners ignore it.
    std::optional<Rect> domain;
};

struct PlanResult {
    PlanStatus status = PlanStatus::NoPath;
    Path path;  // always starts at the request start; never empty
    std::vector<Obstacle> artificial_obstacles;  // added by plan_rapf
    std::uint64_t potential_evals = 0;
    double wall_time = 0.0;  // seconds; everything else is deterministic
};

// Gradient descent on the quadratic field: fixed steps of step_size along
// the normalized force. Reached within goal_margin; NoPath on a vanishing
// force, a step into a known obstacle, or no progress over a long window;
// Timeout past max_time or max_plan_steps.
PlanResult plan_apf(const PlanRequest& req);

// Same loop on the vortex field.
PlanResult plan_rvf(const PlanRequest& req);

// A bacteria candidate qualifies when its potential is strictly below the
// potential at the current position; among qualifiers the one nearest the
// target wins. Empty when none qualify. selected_potential, when given,
// receives the winner's potential so the caller need not re-evaluate it.
std::optional<std::size_t> select_bacteria(std::span<const Vec2> candidates,
                                           double current_potential,
                                           Vec2 target,
                                           const GaussField& field,
                                           double* selected_potential = nullptr);

struct LocalMinimumEvent {
    Vec2 position;
    std::size_t step;
};

// A local minimum is declared when selection failed, or when the walk
// re-entered a rho_b/2 disc around any position of the previous
// 4 * n_bacteria steps (oscillation).
std::optional<LocalMinimumEvent> detect_local_minimum(
    std::span<const Vec2> history, bool selection_failed, double rho_b,
    int n_bacteria);

// Bacteria walk on the Gaussian field with unaligned candidate rings and a
// seeded uniform random walk over finite-potential candidates as the
// local-minimum escape.
PlanResult plan_crbapf(const PlanRequest& req);

// Aligned bacteria walk: no random walk; each local minimum drops an
// artificial obstacle of radius rho_b at the stall position and restarts
// the path from the request start. NoPath once max_artificial obstacles
// have been placed.
PlanResult plan_rapf(const PlanRequest& req);

// Reference search: 8-connected grid of astar_grid_cell spacing, octile
// heuristic, nodes blocked within obstacle radius + rover radius + half a
// cell diagonal of an obstacle centre.
PlanResult plan_astar(const PlanRequest& req);

// Dispatch by CLI name: apf | rvf | crbapf | rapf | astar.
// Throws std::invalid_argument for unknown names.
PlanResult plan(std::string_view planner, const PlanRequest& req);

bool is_planner_name(std::string_view planner);
inline constexpr const char* kPlannerNames[] = {"apf", "rvf", "crbapf",
                                                "rapf", "astar"};

}  // namespace rapf
