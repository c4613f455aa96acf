#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rapf/planners.hpp"
#include "rapf/scenario.hpp"

namespace rapf {

// Idealized forward-looking obstacle sensor: detection is perfect within
// range and the field-of-view cone, with no false positives.
struct SensorModel {
    double range = 0.8;      // metres
    double fov = 1.082104;   // radians, 62 degrees
};

struct RoverState {
    Vec2 position;
    double heading = 0.0;  // radians, world frame
    std::vector<Obstacle> known_obstacles;
    std::vector<std::size_t> detected_ids;  // indices into the ground truth
};

// True when any part of the obstacle disc lies within range and inside the
// field-of-view cone. An obstacle is visible by its body, not its centre:
// the nearest edge must be within range and the disc's angular interval
// must intersect [-fov/2, fov/2] around the heading.
bool detect(Vec2 position, double heading, const Obstacle& o,
            const SensorModel& sensor);

// Ground-truth indices visible from the pose.
std::vector<std::size_t> detect_all(Vec2 position, double heading,
                                    std::span<const Obstacle> truth,
                                    const SensorModel& sensor);

enum class TrialStatus : std::uint8_t { Reached, NoPath, Timeout, Collision };

std::string_view to_string(TrialStatus s);

struct SafetySample {
    std::size_t obstacle_id = 0;   // ground-truth index
    double min_center_distance = 0.0;  // over the whole walked path
    double radius = 0.0;
};

struct TraceRecord {
    std::size_t step;
    Vec2 position;
    double heading;
    bool replanned;
};

struct TrialOutcome {
    TrialStatus status = TrialStatus::NoPath;
    Path walked;               // every pose the rover occupied
    double walked_length = 0.0;
    double planning_time = 0.0;        // sum of planner wall times, seconds
    std::uint64_t potential_evals = 0;
    int replan_count = 0;
    std::vector<SafetySample> safety_samples;  // detected obstacles only
    std::vector<TraceRecord> trace;    // filled when tracing is requested
};

struct TrialLimits {
    std::size_t max_walk_steps = 10000;
};

// Sense, plan, move loop. The rover senses every step, replans from its
// current pose whenever detection adds unseen obstacles, advances one
// step_size along the active plan, and stops on goal entry, ground-truth
// collision, planner failure, or walk budget exhaustion. With omniscient
// set, the full map is known up front and nothing is sensed.
// Deterministic for a fixed (scenario, planner, params, seed) apart from
// the wall-time fields.
TrialOutcome run_trial(const Scenario& scenario, std::string_view planner,
                       const PlannerParams& params, const SensorModel& sensor,
                       std::uint64_t seed, bool omniscient = false,
                       const TrialLimits& limits = {}, bool keep_trace = false);

}  // namespace rapf
