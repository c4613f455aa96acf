// Command-line front end over the rapf C API: generate | run | bench |
// export-map. Exit codes: 0 success, 1 usage, 2 failed gate or manifest
// check, 3 runtime failure.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rapf.h"

namespace {

constexpr int kExitRuntime = 3;
constexpr int kExitGate = 2;

[[noreturn]] void die(const std::string& context) {
    std::cerr << "error: " << context << ": " << rapf_last_error() << "\n";
    std::exit(kExitRuntime);
}

void check(rapf_status st, const std::string& context) {
    if (st != RAPF_OK) die(context);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kExitRuntime);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Freed {
    void operator()(char* s) const { rapf_string_free(s); }
};
using String = std::unique_ptr<char, Freed>;

template <typename T, void (*F)(T*)>
struct Deleter {
    void operator()(T* p) const { F(p); }
};
using ScenarioPtr =
    std::unique_ptr<rapf_scenario, Deleter<rapf_scenario, rapf_scenario_free>>;
using ParamsPtr =
    std::unique_ptr<rapf_params, Deleter<rapf_params, rapf_params_free>>;
using OutcomePtr =
    std::unique_ptr<rapf_outcome, Deleter<rapf_outcome, rapf_outcome_free>>;
using BenchPtr =
    std::unique_ptr<rapf_bench, Deleter<rapf_bench, rapf_bench_free>>;

ParamsPtr load_params(const std::string& params_path) {
    rapf_params* p = nullptr;
    if (params_path.empty()) {
        check(rapf_params_create(&p), "params");
    } else {
        check(rapf_params_from_json(slurp(params_path).c_str(), &p),
              params_path);
    }
    return ParamsPtr(p);
}

// Either --scenario FILE or --preset NAME --seed N.
struct ScenarioArgs {
    std::string file;
    std::string preset;
    std::uint64_t seed = 1;

    void attach(CLI::App* cmd) {
        auto* f = cmd->add_option("--scenario", file,
                                  "scenario JSON file to load");
        auto* p = cmd->add_option(
            "--preset", preset, "generate a preset field (a, b, c, a11, b11, c11)");
        cmd->add_option("--seed", seed,
                        "generation seed when using --preset (default 1)");
        f->excludes(p);
    }

    ScenarioPtr resolve() const {
        rapf_scenario* s = nullptr;
        if (!file.empty()) {
            check(rapf_scenario_load(file.c_str(), &s), file);
        } else if (!preset.empty()) {
            check(rapf_scenario_generate(preset.c_str(), seed, &s), preset);
        } else {
            std::cerr << "error: give --scenario or --preset\n";
            std::exit(1);
        }
        return ScenarioPtr(s);
    }
};

void print_scenario_stats(const rapf_scenario* s, const std::string& label) {
    rapf_scenario_info info{};
    check(rapf_scenario_stats(s, &info), "stats");
    std::printf(
        "%s: %d rocks (%.2f%% cover), %d craters (%.2f%% cover), world "
        "%.0fx%.0f m\n",
        label.c_str(), info.rocks, 100.0 * info.rock_area_fraction,
        info.craters, 100.0 * info.crater_area_fraction, info.world_w,
        info.world_h);
}

int cmd_generate(const ScenarioArgs& args, const std::string& out_path) {
    ScenarioPtr s = args.resolve();
    if (!out_path.empty())
        check(rapf_scenario_save(s.get(), out_path.c_str()), out_path);
    print_scenario_stats(s.get(),
                         args.preset.empty() ? args.file : args.preset);
    if (out_path.empty() && args.file.empty()) {
        String json;
        char* raw = nullptr;
        check(rapf_scenario_to_json(s.get(), &raw), "to_json");
        json.reset(raw);
        std::cout << json.get();
    }
    return 0;
}

int cmd_run(const ScenarioArgs& args, const std::string& planner,
            const std::string& params_path, std::uint64_t trial_seed,
            bool omniscient, double sensor_range, double sensor_fov,
            const std::string& trace_path, const std::string& map_prefix,
            bool as_json) {
    ScenarioPtr s = args.resolve();
    ParamsPtr p = load_params(params_path);

    rapf_outcome* raw = nullptr;
    check(rapf_trial_run(s.get(), planner.c_str(), p.get(), sensor_range,
                         sensor_fov, omniscient ? 1 : 0, trial_seed, &raw),
          planner);
    OutcomePtr outcome(raw);

    if (!trace_path.empty())
        check(rapf_outcome_write_trace(outcome.get(), trace_path.c_str()),
              trace_path);
    if (!map_prefix.empty()) {
        const std::string grid = map_prefix + "_potential.csv";
        const std::string path_csv = map_prefix + "_path.csv";
        check(rapf_export_map(s.get(), p.get(), 0.1, grid.c_str()), grid);
        check(rapf_outcome_write_trace(outcome.get(), path_csv.c_str()),
              path_csv);
    }

    if (as_json) {
        char* text = nullptr;
        check(rapf_outcome_to_json(outcome.get(), &text), "outcome");
        String json(text);
        std::cout << json.get();
        return 0;
    }

    const char* status = nullptr;
    double length = 0.0, plan_time = 0.0;
    std::uint64_t evals = 0;
    int replans = 0;
    check(rapf_outcome_status(outcome.get(), &status), "status");
    check(rapf_outcome_walked_length(outcome.get(), &length), "length");
    check(rapf_outcome_planning_time(outcome.get(), &plan_time), "time");
    check(rapf_outcome_evals(outcome.get(), &evals), "evals");
    check(rapf_outcome_replans(outcome.get(), &replans), "replans");
    std::printf(
        "status=%s walked=%.3f m plan_time=%.4f s evals=%llu replans=%d\n",
        status, length, plan_time, static_cast<unsigned long long>(evals),
        replans);
    return 0;
}

int cmd_bench(CLI::App* cmd, const std::string& config_path,
              const std::string& check_path, std::vector<std::string> planners,
              std::vector<std::string> presets, int trials,
              std::uint64_t base_seed, const std::string& params_path,
              bool omniscient, int workers, bool full,
              const std::string& out_dir, const std::string& gate_path,
              bool quiet) {
    if (!check_path.empty()) {
        char* report = nullptr;
        const rapf_status st =
            rapf_bench_check_manifest(slurp(check_path).c_str(), &report);
        if (report) {
            String owned(report);
            std::cout << owned.get();
        }
        if (st == RAPF_OK) return 0;
        if (st == RAPF_ERR_INTERNAL) return kExitGate;  // did not reproduce
        die(check_path);
    }

    nlohmann::json config = nlohmann::json::object();
    if (!config_path.empty()) {
        config = nlohmann::json::parse(slurp(config_path), nullptr, false);
        if (config.is_discarded()) {
            std::cerr << "error: malformed config " << config_path << "\n";
            return kExitRuntime;
        }
    }
    if (cmd->count("--planners")) config["planners"] = planners;
    if (cmd->count("--presets")) config["presets"] = presets;
    if (cmd->count("--trials")) config["trials"] = trials;
    if (full) config["trials"] = 500;
    if (cmd->count("--base-seed")) config["base_seed"] = base_seed;
    if (!params_path.empty()) {
        nlohmann::json params =
            nlohmann::json::parse(slurp(params_path), nullptr, false);
        if (params.is_discarded()) {
            std::cerr << "error: malformed params " << params_path << "\n";
            return kExitRuntime;
        }
        config["params"] = std::move(params);
    }
    if (omniscient) config["omniscient"] = true;
    if (cmd->count("--workers")) config["workers"] = workers;

    rapf_bench* raw = nullptr;
    check(rapf_bench_run(config.dump().c_str(), &raw), "bench");
    BenchPtr bench(raw);

    if (!quiet) {
        char* table = nullptr;
        check(rapf_bench_table(bench.get(), &table), "table");
        String owned(table);
        std::cout << owned.get();
    }
    if (!out_dir.empty()) {
        check(rapf_bench_write_outputs(bench.get(), out_dir.c_str()), out_dir);
        if (!quiet) std::cout << "wrote " << out_dir << "/manifest.json\n";
    }
    if (!gate_path.empty()) {
        char* report = nullptr;
        const rapf_status st = rapf_bench_gate(
            bench.get(), slurp(gate_path).c_str(), &report);
        if (report) {
            String owned(report);
            std::cout << owned.get();
        }
        if (st != RAPF_OK) return kExitGate;
    }
    return 0;
}

int cmd_export_map(const ScenarioArgs& args, const std::string& params_path,
                   double cell, const std::string& out_path) {
    ScenarioPtr s = args.resolve();
    ParamsPtr p = load_params(params_path);
    check(rapf_export_map(s.get(), p.get(), cell, out_path.c_str()), out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Potential-field path planning benchmark"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rapf_version()));

    // generate
    auto* generate = app.add_subcommand(
        "generate", "Generate an obstacle field and save it as JSON");
    ScenarioArgs gen_args;
    gen_args.attach(generate);
    std::string gen_out;
    generate->add_option("--out", gen_out, "output scenario JSON path");

    // run
    auto* run = app.add_subcommand(
        "run", "Run one sense-plan-move trial on a scenario");
    ScenarioArgs run_args;
    run_args.attach(run);
    std::string run_planner = "rapf", run_params, run_trace, run_map;
    std::uint64_t run_seed = 0;
    bool run_omniscient = false, run_json = false;
    double run_range = 0.0, run_fov = 0.0;
    run->add_option("--planner", run_planner,
                    "apf | rvf | crbapf | rapf | astar (default rapf)");
    run->add_option("--params", run_params, "parameter JSON file");
    run->add_option("--trial-seed", run_seed,
                    "seed of the trial's random streams (default 0)");
    run->add_flag("--omniscient", run_omniscient,
                  "full map knowledge, no sensing");
    run->add_option("--sensor-range", run_range,
                    "sensor range in metres (default 0.8)");
    run->add_option("--sensor-fov", run_fov,
                    "sensor field of view in radians (default 1.0821)");
    run->add_option("--trace", run_trace, "write per-step trace CSV here");
    run->add_option("--export-potential-map", run_map,
                    "write PREFIX_potential.csv and PREFIX_path.csv");
    run->add_flag("--json", run_json, "print the full outcome as JSON");

    // bench
    auto* bench = app.add_subcommand(
        "bench", "Monte Carlo comparison of the planners");
    std::string bench_config, bench_check, bench_params, bench_out, bench_gate;
    std::vector<std::string> bench_planners, bench_presets;
    int bench_trials = 100, bench_workers = 0;
    std::uint64_t bench_seed = 1;
    bool bench_omniscient = false, bench_full = false, bench_quiet = false;
    bench->add_option("--config", bench_config, "bench config JSON file");
    bench->add_option("--check", bench_check,
                      "re-run a manifest and verify it reproduces");
    bench->add_option("--planners", bench_planners,
                      "planners to compare (default all five)")
        ->delimiter(',');
    bench->add_option("--presets", bench_presets,
                      "scenario presets (default a,b,c)")
        ->delimiter(',');
    bench->add_option("--trials", bench_trials, "trials per cell (default 100)");
    bench->add_flag("--full", bench_full, "500 trials per cell");
    bench->add_option("--base-seed", bench_seed, "first trial seed (default 1)");
    bench->add_option("--params", bench_params, "parameter JSON file");
    bench->add_flag("--omniscient", bench_omniscient,
                    "skip sensing, plan on the full map");
    bench->add_option("--workers", bench_workers,
                      "worker threads (default min(4, cores))");
    bench->add_option("--out", bench_out,
                      "directory for manifest.json, summary.csv, table.txt");
    bench->add_option("--gate", bench_gate,
                      "gate checks JSON; exit 2 when any fails");
    bench->add_flag("--quiet", bench_quiet, "suppress the table");

    // export-map
    auto* exportmap = app.add_subcommand(
        "export-map", "Write the Gaussian potential surface as CSV");
    ScenarioArgs map_args;
    map_args.attach(exportmap);
    std::string map_params, map_out = "potential_map.csv";
    double map_cell = 0.1;
    exportmap->add_option("--params", map_params, "parameter JSON file");
    exportmap->add_option("--cell", map_cell, "grid cell size in metres");
    exportmap->add_option("--out", map_out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    if (generate->parsed()) return cmd_generate(gen_args, gen_out);
    if (run->parsed())
        return cmd_run(run_args, run_planner, run_params, run_seed,
                       run_omniscient, run_range, run_fov, run_trace, run_map,
                       run_json);
    if (bench->parsed())
        return cmd_bench(bench, bench_config, bench_check, bench_planners,
                         bench_presets, bench_trials, bench_seed, bench_params,
                         bench_omniscient, bench_workers, bench_full,
                         bench_out, bench_gate, bench_quiet);
    if (exportmap->parsed())
        return cmd_export_map(map_args, map_params, map_cell, map_out);
    return 1;
}
