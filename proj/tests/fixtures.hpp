#pragma once

#include <cstdint>
#include <random>

#include "rapf/scenario.hpp"

namespace fixtures {

// Five overlapping rocks forming a cup across the straight start-goal line,
// mouth open toward the start. The straight descent enters the mouth and
// stalls against the back wall; disc gaps stay below the rover diameter even
// at full jitter, so no planner can squeeze through the wall itself.
inline rapf::Scenario u_trap(std::uint64_t seed, double jitter = 0.0) {
    rapf::Scenario s;
    s.world_size = {20.0, 20.0};
    s.obstacle_region = {{0.0, 0.0}, {20.0, 20.0}};
    s.start = {2.0, 10.0};
    s.goal_center = {18.0, 10.0};
    s.goal_radius = 0.5;
    s.rover_radius = 0.2;
    s.seed = seed;

    const rapf::Vec2 wall[] = {
        {8.0, 10.0},  // back of the cup, dead on the start-goal line
        {7.7, 11.2}, {7.7, 8.8},   // shoulders
        {6.7, 11.9}, {6.7, 8.1},   // arm tips at the mouth
    };
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-jitter, jitter);
    for (rapf::Vec2 c : wall) {
        if (jitter > 0.0) {
            c.x += d(rng);
            c.y += d(rng);
        }
        s.obstacles.push_back({c, 0.7, rapf::ObstacleKind::Rock});
    }
    validate(s);
    return s;
}

}  // namespace fixtures
