#pragma once

#include <cstdint>
#include <vector>

#include "rapf/geometry.hpp"

namespace rapf {

// A navigation world: rectangular map [0, world_size.x] x [0, world_size.y],
// obstacles centred inside obstacle_region, one start pose and one goal disc.
struct Scenario {
    Vec2 world_size{30.0, 30.0};
    Rect obstacle_region{{5.0, 5.0}, {25.0, 25.0}};
    Vec2 start{2.0, 2.0};
    Vec2 goal_center{28.0, 28.0};
    double goal_radius = 0.5;
    double rover_radius = 0.2;
    std::uint64_t seed = 0;
    std::vector<Obstacle> obstacles;
};

// Invariants: start and goal inside the world, obstacle centres inside
// obstacle_region, start collision-free, goal disc free of obstacles.
// Throws std::invalid_argument naming the violated invariant.
void validate(const Scenario& s);

}  // namespace rapf
