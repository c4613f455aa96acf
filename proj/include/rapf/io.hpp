#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "rapf/params.hpp"
#include "rapf/planners.hpp"
#include "rapf/scenario.hpp"
#include "rapf/sensor_sim.hpp"

namespace rapf {

// Filesystem failures, as opposed to malformed content.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario JSON carries world_size, obstacle_region, start, goal_center,
// goal_radius, rover_radius, seed and the obstacle list as
// {x, y, radius, kind}. Parsing throws std::invalid_argument naming the
// first missing or ill-typed key; the parsed scenario is validated.
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);
void save_scenario(const Scenario& s, const std::string& path);
Scenario load_scenario(const std::string& path);

// Parameter files override fields of a base parameter set; unknown keys are
// rejected so typos cannot silently fall back to defaults.
std::string params_to_json(const PlannerParams& p);
PlannerParams params_from_json(const std::string& text,
                               PlannerParams base = {});

std::string plan_result_to_json(const PlanResult& r);
std::string outcome_to_json(const TrialOutcome& o);

// Dense row-major grid of the Gaussian total potential over the world,
// header "# xmin ymin cell_size rows cols", one CSV row per grid row
// (y = ymin + row * cell_size), infinite cells written as "inf".
void write_potential_map(const std::string& path, Vec2 target,
                         std::span<const Obstacle> obstacles,
                         const PlannerParams& params, double rover_radius,
                         Rect bounds, double cell_size);

// Per-step trial trace: "step,x,y,heading,replan".
void write_trace_csv(const std::string& path, const TrialOutcome& outcome);

// Bare waypoint list: "x,y".
void write_path_csv(const std::string& path, const Path& p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rapf
