#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rapf/sensor_sim.hpp"

namespace rapf {

// Fraction of trials that reached the goal. Throws std::invalid_argument on
// an empty batch.
double reachability(std::span<const TrialOutcome> outcomes);

// Mean walked length over successful trials; empty when none succeeded.
std::optional<double> mean_path_length(std::span<const TrialOutcome> outcomes);

enum class SafetyMode : std::uint8_t { Center, Edge };

// Per trial: mean over detected obstacles of the minimum distance from any
// walked position to the obstacle (centre distance, or edge distance when
// mode is Edge). Aggregated as the mean over trials that detected at least
// one obstacle; empty when no trial did.
std::optional<double> safety(std::span<const TrialOutcome> outcomes,
                             SafetyMode mode);

// Predicted potential evaluations of the aligned bacteria walk for a path
// of the given length: ceil(n_bacteria * path_length / rho_b).
std::uint64_t rapf_eval_count(int n_bacteria, double path_length,
                              double rho_b);

// Linear-interpolation quantile of a sorted sample, p in [0, 1].
double quantile(std::span<const double> sorted, double p);

struct Quantiles {
    double p25 = 0.0;
    double p50 = 0.0;
    double p75 = 0.0;
};

// Values beyond p75 + 1.5 * IQR.
int count_upper_outliers(std::span<const double> values);

struct BatchSummary {
    std::string planner;
    std::string scenario;
    int trials = 0;
    int reached = 0;
    int nopath = 0;
    int timeout = 0;
    int collision = 0;
    double reachability = 0.0;
    // Successful trials only.
    std::optional<double> mean_path_length;
    Quantiles path_length_q;
    int path_length_outliers = 0;
    std::optional<double> mean_planning_time;  // per-trial totals, seconds
    Quantiles planning_time_q;
    int planning_time_outliers = 0;
    std::optional<double> mean_time_per_replan;
    // All trials.
    double mean_potential_evals = 0.0;
    double mean_replans = 0.0;
    std::optional<double> safety_center;
    std::optional<double> safety_edge;
};

BatchSummary summarize(std::string planner, std::string scenario,
                       std::span<const TrialOutcome> outcomes);

// Human-readable comparison table, planners by rows grouped per scenario.
std::string render_table(std::span<const BatchSummary> summaries);

// Machine-readable form, one row per summary, schema comment first.
std::string render_csv(std::span<const BatchSummary> summaries);

}  // namespace rapf
