#include "rapf/bench.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "rapf/io.hpp"

namespace rapf {

namespace {
using nlohmann::json;
}

std::uint64_t hash_path(const Path& path) {
    std::uint64_t h = 14695981039346656037ull;  // FNV-1a offset basis
    const auto mix = [&h](std::uint64_t bits) {
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(path.waypoints.size());
    for (const Vec2& w : path.waypoints) {
        mix(std::bit_cast<std::uint64_t>(w.x));
        mix(std::bit_cast<std::uint64_t>(w.y));
    }
    return h;
}

BenchResult run_bench(const BenchConfig& config, const ProgressFn& progress) {
    const auto t0 = std::chrono::steady_clock::now();
    if (config.trials <= 0)
        throw std::invalid_argument("bench needs at least one trial");
    for (const std::string& p : config.planners)
        if (!is_planner_name(p))
            throw std::invalid_argument("unknown planner: " + p);
    validate(config.params);

    // Same worlds for every planner: scenario (preset, trial) is generated
    // once from base_seed + trial.
    std::vector<std::vector<Scenario>> worlds;
    for (const std::string& name : config.presets) {
        const ScenarioSpec spec = preset(name);
        auto& row = worlds.emplace_back();
        row.reserve(config.trials);
        for (int t = 0; t < config.trials; ++t)
            row.push_back(generate_scenario(
                spec, config.base_seed + static_cast<std::uint64_t>(t)));
    }

    const std::size_t cells = config.presets.size() * config.planners.size();
    const std::size_t total = cells * static_cast<std::size_t>(config.trials);
    std::vector<TrialOutcome> outcomes(total);

    std::atomic<std::size_t> next{0}, done{0};
    std::mutex progress_mutex;
    const auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total) return;
            const std::size_t trial = task % config.trials;
            const std::size_t cell = task / config.trials;
            const std::size_t planner = cell % config.planners.size();
            const std::size_t pre = cell / config.planners.size();
            outcomes[task] = run_trial(
                worlds[pre][trial], config.planners[planner], config.params,
                config.sensor, config.base_seed + trial, config.omniscient,
                config.limits);
            const std::size_t finished = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(static_cast<int>(finished), static_cast<int>(total));
            }
        }
    };

    int workers = config.workers;
    if (workers <= 0)
        workers = static_cast<int>(
            std::min(4u, std::max(1u, std::thread::hardware_concurrency())));
    workers = std::min<int>(workers, static_cast<int>(total));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    BenchResult result;
    result.config = config;
    for (std::size_t pre = 0; pre < config.presets.size(); ++pre) {
        for (std::size_t pl = 0; pl < config.planners.size(); ++pl) {
            const std::size_t cell = pre * config.planners.size() + pl;
            auto& bucket = result.outcomes.emplace_back();
            bucket.reserve(config.trials);
            for (int t = 0; t < config.trials; ++t) {
                TrialOutcome& o =
                    outcomes[cell * config.trials + static_cast<std::size_t>(t)];
                TrialRecord rec;
                rec.planner = config.planners[pl];
                rec.preset = config.presets[pre];
                rec.trial = t;
                rec.seed = config.base_seed + static_cast<std::uint64_t>(t);
                rec.status = o.status;
                rec.walked_length = o.walked_length;
                rec.planning_time = o.planning_time;
                rec.potential_evals = o.potential_evals;
                rec.replan_count = o.replan_count;
                rec.walked_hash = hash_path(o.walked);
                result.records.push_back(std::move(rec));
                bucket.push_back(std::move(o));
            }
            result.summaries.push_back(summarize(
                config.planners[pl], config.presets[pre], bucket));
        }
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return result;
}

namespace {

json config_to_json(const BenchConfig& c) {
    return json{{"planners", c.planners},
                {"presets", c.presets},
                {"trials", c.trials},
                {"base_seed", c.base_seed},
                {"params", json::parse(params_to_json(c.params))},
                {"sensor", {{"range", c.sensor.range}, {"fov", c.sensor.fov}}},
                {"omniscient", c.omniscient},
                {"max_walk_steps", c.limits.max_walk_steps},
                {"workers", c.workers}};
}

BenchConfig config_from_json(const json& j) {
    BenchConfig c;
    c.planners = j.at("planners").get<std::vector<std::string>>();
    c.presets = j.at("presets").get<std::vector<std::string>>();
    c.trials = j.at("trials").get<int>();
    c.base_seed = j.at("base_seed").get<std::uint64_t>();
    c.params = params_from_json(j.at("params").dump());
    c.sensor.range = j.at("sensor").at("range").get<double>();
    c.sensor.fov = j.at("sensor").at("fov").get<double>();
    c.omniscient = j.at("omniscient").get<bool>();
    c.limits.max_walk_steps = j.at("max_walk_steps").get<std::size_t>();
    c.workers = j.at("workers").get<int>();
    return c;
}

}  // namespace

BenchConfig bench_config_from_json(const std::string& text) {
    BenchConfig c;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return c;
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw std::invalid_argument("bench config: malformed JSON");
    for (const auto& [key, value] : j.items()) {
        if (key == "planners")
            c.planners = value.get<std::vector<std::string>>();
        else if (key == "presets")
            c.presets = value.get<std::vector<std::string>>();
        else if (key == "trials") c.trials = value.get<int>();
        else if (key == "base_seed") c.base_seed = value.get<std::uint64_t>();
        else if (key == "params")
            c.params = params_from_json(value.dump(), c.params);
        else if (key == "sensor") {
            if (value.contains("range"))
                c.sensor.range = value["range"].get<double>();
            if (value.contains("fov")) c.sensor.fov = value["fov"].get<double>();
        } else if (key == "omniscient") c.omniscient = value.get<bool>();
        else if (key == "max_walk_steps")
            c.limits.max_walk_steps = value.get<std::size_t>();
        else if (key == "workers") c.workers = value.get<int>();
        else throw std::invalid_argument("bench config: unknown key: " + key);
    }
    return c;
}

std::string manifest_to_json(const BenchResult& result) {
    json trials = json::array();
    for (const TrialRecord& r : result.records)
        trials.push_back({{"planner", r.planner},
                          {"preset", r.preset},
                          {"trial", r.trial},
                          {"seed", r.seed},
                          {"status", std::string(to_string(r.status))},
                          {"walked_length", r.walked_length},
                          {"planning_time", r.planning_time},
                          {"potential_evals", r.potential_evals},
                          {"replan_count", r.replan_count},
                          {"walked_hash", r.walked_hash}});
    json j{{"config", config_to_json(result.config)},
           {"elapsed_seconds", result.elapsed_seconds},
           {"trials", trials}};
    return j.dump(2) + "\n";
}

ManifestCheck check_manifest(const std::string& manifest_json,
                             const ProgressFn& progress) {
    ManifestCheck check;
    json j = json::parse(manifest_json, nullptr, false);
    if (j.is_discarded() || !j.contains("config") || !j.contains("trials"))
        throw std::invalid_argument("manifest: malformed JSON");

    const BenchConfig config = config_from_json(j["config"]);
    const BenchResult fresh = run_bench(config, progress);

    std::map<std::string, const TrialRecord*> by_key;
    for (const TrialRecord& r : fresh.records)
        by_key[r.preset + '/' + r.planner + '/' + std::to_string(r.trial)] = &r;

    for (const json& row : j["trials"]) {
        const std::string key = row.at("preset").get<std::string>() + '/' +
                                row.at("planner").get<std::string>() + '/' +
                                std::to_string(row.at("trial").get<int>());
        ++check.compared;
        const auto it = by_key.find(key);
        if (it == by_key.end()) {
            check.mismatches.push_back(key + ": not reproduced");
            continue;
        }
        const TrialRecord& r = *it->second;
        if (std::string(to_string(r.status)) !=
            row.at("status").get<std::string>())
            check.mismatches.push_back(
                key + ": status " + row.at("status").get<std::string>() +
                " -> " + std::string(to_string(r.status)));
        if (r.walked_hash != row.at("walked_hash").get<std::uint64_t>())
            check.mismatches.push_back(key + ": walked path hash differs");
    }
    check.ok = check.mismatches.empty() && check.compared > 0;
    return check;
}

std::string write_bench_outputs(const BenchResult& result,
                                const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory: " + dir);
    const std::string manifest = dir + "/manifest.json";
    write_text_file(manifest, manifest_to_json(result));
    write_text_file(dir + "/summary.csv", render_csv(result.summaries));
    write_text_file(dir + "/table.txt", render_table(result.summaries));
    return manifest;
}

namespace {

std::optional<double> metric_value(const BatchSummary& s,
                                   const std::string& metric) {
    if (metric == "reachability") return s.reachability;
    if (metric == "mean_planning_time") return s.mean_planning_time;
    if (metric == "mean_path_length") return s.mean_path_length;
    throw std::invalid_argument("unknown gate metric: " + metric);
}

const BatchSummary* find_summary(std::span<const BatchSummary> summaries,
                                 const std::string& scenario,
                                 const std::string& planner) {
    for (const BatchSummary& s : summaries)
        if (s.scenario == scenario && s.planner == planner) return &s;
    return nullptr;
}

bool apply_op(const std::string& op, double lhs, double rhs) {
    if (op == ">=") return lhs >= rhs;
    if (op == "<=") return lhs <= rhs;
    if (op == ">") return lhs > rhs;
    if (op == "<") return lhs < rhs;
    throw std::invalid_argument("unknown gate op: " + op);
}

}  // namespace

GateResult evaluate_gates(const std::string& gates_json,
                          std::span<const BatchSummary> summaries) {
    json j = json::parse(gates_json, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw std::invalid_argument("gates: expected a JSON array");

    GateResult result;
    result.ok = true;
    std::ostringstream report;
    for (const json& check : j) {
        const std::string metric = check.at("metric").get<std::string>();
        const std::string scenario = check.at("scenario").get<std::string>();
        const std::string planner = check.at("planner").get<std::string>();
        const std::string op = check.at("op").get<std::string>();
        const double value = check.at("value").get<double>();

        std::ostringstream label;
        label << "scenario=" << scenario << " planner=" << planner << ' '
              << metric;

        std::optional<double> actual;
        const BatchSummary* s = find_summary(summaries, scenario, planner);
        if (s) actual = metric_value(*s, metric);
        if (actual && check.contains("ratio_of")) {
            const std::string other = check["ratio_of"].get<std::string>();
            label << "/" << other;
            const BatchSummary* d = find_summary(summaries, scenario, other);
            std::optional<double> denom;
            if (d) denom = metric_value(*d, metric);
            if (denom && *denom != 0.0) actual = *actual / *denom;
            else actual.reset();
        }
        label << ' ' << op << ' ' << value;

        const bool pass = actual && apply_op(op, *actual, value);
        if (!pass) result.ok = false;
        report << (pass ? "[PASS] " : "[FAIL] ") << label.str();
        if (actual) report << " (actual " << *actual << ")";
        else report << " (no data)";
        report << '\n';
        if (!pass) result.failures.push_back(label.str());
    }
    result.report = report.str();
    return result;
}

}  // namespace rapf
