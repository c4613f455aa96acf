#include "rapf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rapf {

double reachability(std::span<const TrialOutcome> outcomes) {
    if (outcomes.empty())
        throw std::invalid_argument("reachability of an empty batch");
    std::size_t reached = 0;
    for (const TrialOutcome& t : outcomes)
        if (t.status == TrialStatus::Reached) ++reached;
    return static_cast<double>(reached) / static_cast<double>(outcomes.size());
}

std::optional<double> mean_path_length(
    std::span<const TrialOutcome> outcomes) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const TrialOutcome& t : outcomes)
        if (t.status == TrialStatus::Reached) {
            sum += t.walked_length;
            ++n;
        }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

std::optional<double> safety(std::span<const TrialOutcome> outcomes,
                             SafetyMode mode) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const TrialOutcome& t : outcomes) {
        if (t.safety_samples.empty()) continue;
        double trial_sum = 0.0;
        for (const SafetySample& s : t.safety_samples)
            trial_sum += mode == SafetyMode::Center
                             ? s.min_center_distance
                             : s.min_center_distance - s.radius;
        sum += trial_sum / static_cast<double>(t.safety_samples.size());
        ++n;
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

std::uint64_t rapf_eval_count(int n_bacteria, double path_length,
                              double rho_b) {
    if (n_bacteria <= 0 || rho_b <= 0.0 || path_length < 0.0)
        throw std::invalid_argument("rapf_eval_count: bad arguments");
    return static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(n_bacteria) * path_length / rho_b));
}

double quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("quantile p outside [0,1]");
    const double idx = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(idx));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(idx));
    const double frac = idx - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

int count_upper_outliers(std::span<const double> values) {
    if (values.size() < 4) return 0;
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double q1 = quantile(sorted, 0.25);
    const double q3 = quantile(sorted, 0.75);
    const double fence = q3 + 1.5 * (q3 - q1);
    int n = 0;
    for (double v : sorted)
        if (v > fence) ++n;
    return n;
}

namespace {

struct SuccessStats {
    std::vector<double> values;
    std::optional<double> mean() const {
        if (values.empty()) return std::nullopt;
        double s = 0.0;
        for (double v : values) s += v;
        return s / static_cast<double>(values.size());
    }
    Quantiles quartiles() const {
        if (values.empty()) return {};
        std::vector<double> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        return {quantile(sorted, 0.25), quantile(sorted, 0.50),
                quantile(sorted, 0.75)};
    }
};

}  // namespace

BatchSummary summarize(std::string planner, std::string scenario,
                       std::span<const TrialOutcome> outcomes) {
    BatchSummary s;
    s.planner = std::move(planner);
    s.scenario = std::move(scenario);
    s.trials = static_cast<int>(outcomes.size());
    if (outcomes.empty()) return s;

    SuccessStats lengths, times;
    double evals = 0.0, replans = 0.0, replan_time = 0.0;
    std::uint64_t replan_calls = 0;
    for (const TrialOutcome& t : outcomes) {
        switch (t.status) {
            case TrialStatus::Reached: ++s.reached; break;
            case TrialStatus::NoPath: ++s.nopath; break;
            case TrialStatus::Timeout: ++s.timeout; break;
            case TrialStatus::Collision: ++s.collision; break;
        }
        if (t.status == TrialStatus::Reached) {
            lengths.values.push_back(t.walked_length);
            times.values.push_back(t.planning_time);
            replan_time += t.planning_time;
            replan_calls += static_cast<std::uint64_t>(t.replan_count);
        }
        evals += static_cast<double>(t.potential_evals);
        replans += t.replan_count;
    }
    s.reachability = static_cast<double>(s.reached) / s.trials;
    s.mean_path_length = lengths.mean();
    s.path_length_q = lengths.quartiles();
    s.path_length_outliers = count_upper_outliers(lengths.values);
    s.mean_planning_time = times.mean();
    s.planning_time_q = times.quartiles();
    s.planning_time_outliers = count_upper_outliers(times.values);
    if (replan_calls > 0)
        s.mean_time_per_replan = replan_time / static_cast<double>(replan_calls);
    s.mean_potential_evals = evals / s.trials;
    s.mean_replans = replans / s.trials;
    s.safety_center = safety(outcomes, SafetyMode::Center);
    s.safety_edge = safety(outcomes, SafetyMode::Edge);
    return s;
}

namespace {

std::string fmt(double v, int precision = 3) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(precision);
    os << v;
    return os.str();
}

std::string fmt_opt(const std::optional<double>& v, int precision = 3) {
    return v ? fmt(*v, precision) : std::string("-");
}

void pad(std::string& row, const std::string& cell, std::size_t width) {
    row += cell;
    if (cell.size() < width) row.append(width - cell.size(), ' ');
    row += "  ";
}

}  // namespace

std::string render_table(std::span<const BatchSummary> summaries) {
    static constexpr const char* kHeaders[] = {
        "scenario", "planner",   "trials",  "reach%",  "len[m]",
        "t_plan[s]", "t/replan", "evals",   "replans", "safety[m]"};
    static constexpr std::size_t kWidths[] = {8, 7, 6, 7, 8, 9, 9, 11, 7, 9};

    std::string out;
    std::string head;
    for (std::size_t i = 0; i < std::size(kHeaders); ++i)
        pad(head, kHeaders[i], kWidths[i]);
    out += head + "\n";
    out += std::string(head.size(), '-') + "\n";

    for (const BatchSummary& s : summaries) {
        std::string row;
        pad(row, s.scenario, kWidths[0]);
        pad(row, s.planner, kWidths[1]);
        pad(row, std::to_string(s.trials), kWidths[2]);
        pad(row, fmt(100.0 * s.reachability, 1), kWidths[3]);
        pad(row, fmt_opt(s.mean_path_length, 2), kWidths[4]);
        pad(row, fmt_opt(s.mean_planning_time, 4), kWidths[5]);
        pad(row, fmt_opt(s.mean_time_per_replan, 5), kWidths[6]);
        pad(row, fmt(s.mean_potential_evals, 0), kWidths[7]);
        pad(row, fmt(s.mean_replans, 1), kWidths[8]);
        pad(row, fmt_opt(s.safety_edge, 3), kWidths[9]);
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + "\n";
    }
    return out;
}

std::string render_csv(std::span<const BatchSummary> summaries) {
    std::string out =
        "scenario,planner,trials,reached,nopath,timeout,collision,"
        "reachability,mean_path_length,path_p25,path_p50,path_p75,"
        "path_outliers,mean_planning_time,time_p25,time_p50,time_p75,"
        "time_outliers,mean_time_per_replan,mean_potential_evals,"
        "mean_replans,safety_center,safety_edge\n";
    for (const BatchSummary& s : summaries) {
        out += s.scenario + ',' + s.planner + ',' + std::to_string(s.trials) +
               ',' + std::to_string(s.reached) + ',' + std::to_string(s.nopath) +
               ',' + std::to_string(s.timeout) + ',' +
               std::to_string(s.collision) + ',' + fmt(s.reachability, 4) +
               ',' + fmt_opt(s.mean_path_length, 6) + ',' +
               fmt(s.path_length_q.p25, 6) + ',' + fmt(s.path_length_q.p50, 6) +
               ',' + fmt(s.path_length_q.p75, 6) + ',' +
               std::to_string(s.path_length_outliers) + ',' +
               fmt_opt(s.mean_planning_time, 6) + ',' +
               fmt(s.planning_time_q.p25, 6) + ',' +
               fmt(s.planning_time_q.p50, 6) + ',' +
               fmt(s.planning_time_q.p75, 6) + ',' +
               std::to_string(s.planning_time_outliers) + ',' +
               fmt_opt(s.mean_time_per_replan, 6) + ',' +
               fmt(s.mean_potential_evals, 1) + ',' + fmt(s.mean_replans, 2) +
               ',' + fmt_opt(s.safety_center, 6) + ',' +
               fmt_opt(s.safety_edge, 6) + '\n';
    }
    return out;
}

}  // namespace rapf
