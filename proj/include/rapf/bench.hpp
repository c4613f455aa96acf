#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rapf/metrics.hpp"
#include "rapf/params.hpp"
#include "rapf/sensor_sim.hpp"
#include "rapf/terrain.hpp"

namespace rapf {

// Monte Carlo comparison: every planner runs the same seeded trial set on
// every preset; trial i regenerates the preset's field from base_seed + i,
// so planners face identical worlds.
struct BenchConfig {
    std::vector<std::string> planners{"astar", "apf", "rvf", "crbapf", "rapf"};
    std::vector<std::string> presets{"a", "b", "c"};
    int trials = 100;
    std::uint64_t base_seed = 1;
    PlannerParams params;
    SensorModel sensor;
    bool omniscient = false;
    TrialLimits limits;
    int workers = 0;  // 0 picks min(4, hardware)
};

struct TrialRecord {
    std::string planner;
    std::string preset;
    int trial = 0;
    std::uint64_t seed = 0;
    TrialStatus status = TrialStatus::NoPath;
    double walked_length = 0.0;
    double planning_time = 0.0;
    std::uint64_t potential_evals = 0;
    int replan_count = 0;
    std::uint64_t walked_hash = 0;  // FNV-1a over the walked positions
};

struct BenchResult {
    BenchConfig config;
    std::vector<TrialRecord> records;    // ordered by (preset, planner, trial)
    std::vector<BatchSummary> summaries;
    double elapsed_seconds = 0.0;
    // Raw outcomes per (preset, planner) cell, same order as summaries.
    std::vector<std::vector<TrialOutcome>> outcomes;
};

std::uint64_t hash_path(const Path& path);

// Partial configuration: absent keys keep their defaults, unknown keys are
// rejected. Accepts planners, presets, trials, base_seed, params (object),
// sensor {range, fov}, omniscient, max_walk_steps, workers. Empty or blank
// text yields the default configuration.
BenchConfig bench_config_from_json(const std::string& text);

using ProgressFn = std::function<void(int done, int total)>;

BenchResult run_bench(const BenchConfig& config, const ProgressFn& progress = {});

// Manifest: config plus one line per trial, enough to re-run everything.
std::string manifest_to_json(const BenchResult& result);

struct ManifestCheck {
    bool ok = false;
    int compared = 0;
    std::vector<std::string> mismatches;  // "preset/planner/trial: what"
};

// Re-runs every trial recorded in the manifest and compares status and
// walked-path hash. Wall-time fields are not compared.
ManifestCheck check_manifest(const std::string& manifest_json,
                             const ProgressFn& progress = {});

// Writes manifest.json, summary.csv and table.txt into dir (created if
// missing). Returns the manifest path.
std::string write_bench_outputs(const BenchResult& result,
                                const std::string& dir);

// Acceptance gates evaluated against bench summaries. JSON array of checks:
//   {"metric": "reachability", "scenario": "a", "planner": "rapf",
//    "op": ">=", "value": 0.9}
// An optional "ratio_of" planner divides the metric before comparison.
// Metrics: reachability | mean_planning_time | mean_path_length.
struct GateResult {
    bool ok = false;
    std::vector<std::string> failures;
    std::string report;  // one line per check
};

GateResult evaluate_gates(const std::string& gates_json,
                          std::span<const BatchSummary> summaries);

}  // namespace rapf
