#include "rapf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <numbers>
#include <string>

#include "rapf/bench.hpp"
#include "rapf/io.hpp"
#include "rapf/terrain.hpp"

struct rapf_scenario {
    rapf::Scenario v;
};
struct rapf_params {
    rapf::PlannerParams v;
};
struct rapf_plan {
    rapf::PlanResult v;
};
struct rapf_outcome {
    rapf::TrialOutcome v;
};
struct rapf_bench {
    rapf::BenchResult v;
};

namespace {

thread_local std::string g_last_error = "no error";

rapf_status fail(rapf_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs the body, translating exceptions into status codes. parse_context
// maps std::invalid_argument to RAPF_ERR_PARSE instead of INVALID_ARGUMENT.
template <typename Fn>
rapf_status guarded(bool parse_context, Fn&& fn) {
    try {
        return fn();
    } catch (const rapf::IoError& e) {
        return fail(RAPF_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(parse_context ? RAPF_ERR_PARSE : RAPF_ERR_INVALID_ARGUMENT,
                    e.what());
    } catch (const std::bad_alloc&) {
        return fail(RAPF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(RAPF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(RAPF_ERR_INTERNAL, "unknown failure");
    }
}

rapf_status require_ptr(const void* p, const char* name) {
    if (p) return RAPF_OK;
    return fail(RAPF_ERR_INVALID_ARGUMENT,
                std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rapf_status out_string(const std::string& s, char** out) {
    *out = dup_string(s);
    if (!*out) return fail(RAPF_ERR_INTERNAL, "out of memory");
    return RAPF_OK;
}

rapf::PlanRequest request_for(const rapf::Scenario& s,
                              const rapf::PlannerParams& p,
                              std::uint64_t seed) {
    rapf::PlanRequest req;
    req.start = s.start;
    req.target = s.goal_center;
    req.known_obstacles = s.obstacles;
    req.params = p;
    req.params.goal_margin = std::min(p.goal_margin, s.goal_radius);
    req.rng_seed = seed;
    req.rover_radius = s.rover_radius;
    req.domain = rapf::Rect{{0.0, 0.0}, s.world_size};
    return req;
}

}  // namespace

extern "C" {

const char* rapf_version(void) { return "1.0.0"; }

const char* rapf_last_error(void) { return g_last_error.c_str(); }

void rapf_string_free(char* s) { std::free(s); }

/* ---- scenarios ---- */

rapf_status rapf_scenario_generate(const char* preset, uint64_t seed,
                                   rapf_scenario** out) {
    if (rapf_status st = require_ptr(preset, "preset"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    return guarded(false, [&] {
        rapf::ScenarioSpec spec;
        try {
            spec = rapf::preset(preset);
        } catch (const std::invalid_argument& e) {
            return fail(RAPF_ERR_UNKNOWN_NAME, e.what());
        }
        try {
            *out = new rapf_scenario{rapf::generate_scenario(spec, seed)};
        } catch (const std::runtime_error& e) {
            return fail(RAPF_ERR_GENERATION, e.what());
        }
        return RAPF_OK;
    });
}

rapf_status rapf_scenario_from_json(const char* json, rapf_scenario** out) {
    if (rapf_status st = require_ptr(json, "json"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    return guarded(true, [&] {
        *out = new rapf_scenario{rapf::scenario_from_json(json)};
        return RAPF_OK;
    });
}

rapf_status rapf_scenario_to_json(const rapf_scenario* s, char** out_json) {
    if (rapf_status st = require_ptr(s, "scenario"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_json, "out_json"); st != RAPF_OK)
        return st;
    return guarded(false,
                   [&] { return out_string(rapf::scenario_to_json(s->v), out_json); });
}

rapf_status rapf_scenario_load(const char* path, rapf_scenario** out) {
    if (rapf_status st = require_ptr(path, "path"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    return guarded(true, [&] {
        *out = new rapf_scenario{rapf::load_scenario(path)};
        return RAPF_OK;
    });
}

rapf_status rapf_scenario_save(const rapf_scenario* s, const char* path) {
    if (rapf_status st = require_ptr(s, "scenario"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(path, "path"); st != RAPF_OK) return st;
    return guarded(false, [&] {
        rapf::save_scenario(s->v, path);
        return RAPF_OK;
    });
}

void rapf_scenario_free(rapf_scenario* s) { delete s; }

rapf_status rapf_scenario_stats(const rapf_scenario* s,
                                rapf_scenario_info* out) {
    if (rapf_status st = require_ptr(s, "scenario"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    double rock_area = 0.0, crater_area = 0.0;
    int rocks = 0, craters = 0;
    for (const rapf::Obstacle& o : s->v.obstacles) {
        const double area = std::numbers::pi * o.radius * o.radius;
        if (o.kind == rapf::ObstacleKind::Rock) {
            ++rocks;
            rock_area += area;
        } else if (o.kind == rapf::ObstacleKind::Crater) {
            ++craters;
            crater_area += area;
        }
    }
    const double region = s->v.obstacle_region.area();
    out->rocks = rocks;
    out->craters = craters;
    out->rock_area_fraction = region > 0.0 ? rock_area / region : 0.0;
    out->crater_area_fraction = region > 0.0 ? crater_area / region : 0.0;
    out->world_w = s->v.world_size.x;
    out->world_h = s->v.world_size.y;
    return RAPF_OK;
}

/* ---- parameters ---- */

rapf_status rapf_params_create(rapf_params** out) {
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    return guarded(false, [&] {
        *out = new rapf_params{};
        return RAPF_OK;
    });
}

rapf_status rapf_params_from_json(const char* json, rapf_params** out) {
    if (rapf_status st = require_ptr(json, "json"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    return guarded(true, [&] {
        *out = new rapf_params{rapf::params_from_json(json)};
        return RAPF_OK;
    });
}

rapf_status rapf_params_to_json(const rapf_params* p, char** out_json) {
    if (rapf_status st = require_ptr(p, "params"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_json, "out_json"); st != RAPF_OK)
        return st;
    return guarded(false,
                   [&] { return out_string(rapf::params_to_json(p->v), out_json); });
}

namespace {

// Numeric access shared by get and set. spin reads 0 for ccw, 1 for cw.
struct ParamsField {
    const char* key;
    double (*get)(const rapf::PlannerParams&);
    void (*set)(rapf::PlannerParams&, double);
};

constexpr ParamsField kParamsFields[] = {
    {"k_a", [](const rapf::PlannerParams& p) { return p.k_a; },
     [](rapf::PlannerParams& p, double v) { p.k_a = v; }},
    {"k_rep", [](const rapf::PlannerParams& p) { return p.k_rep; },
     [](rapf::PlannerParams& p, double v) { p.k_rep = v; }},
    {"rho_0", [](const rapf::PlannerParams& p) { return p.rho_0; },
     [](rapf::PlannerParams& p, double v) { p.rho_0 = v; }},
    {"alpha_a", [](const rapf::PlannerParams& p) { return p.alpha_a; },
     [](rapf::PlannerParams& p, double v) { p.alpha_a = v; }},
    {"mu_a", [](const rapf::PlannerParams& p) { return p.mu_a; },
     [](rapf::PlannerParams& p, double v) { p.mu_a = v; }},
    {"alpha_o", [](const rapf::PlannerParams& p) { return p.alpha_o; },
     [](rapf::PlannerParams& p, double v) { p.alpha_o = v; }},
    {"mu_o", [](const rapf::PlannerParams& p) { return p.mu_o; },
     [](rapf::PlannerParams& p, double v) { p.mu_o = v; }},
    {"rho_l", [](const rapf::PlannerParams& p) { return p.rho_l; },
     [](rapf::PlannerParams& p, double v) { p.rho_l = v; }},
    {"rho_u", [](const rapf::PlannerParams& p) { return p.rho_u; },
     [](rapf::PlannerParams& p, double v) { p.rho_u = v; }},
    {"n_bacteria",
     [](const rapf::PlannerParams& p) { return double(p.n_bacteria); },
     [](rapf::PlannerParams& p, double v) { p.n_bacteria = int(v); }},
    {"rho_b", [](const rapf::PlannerParams& p) { return p.rho_b; },
     [](rapf::PlannerParams& p, double v) { p.rho_b = v; }},
    {"step_size", [](const rapf::PlannerParams& p) { return p.step_size; },
     [](rapf::PlannerParams& p, double v) { p.step_size = v; }},
    {"max_time", [](const rapf::PlannerParams& p) { return p.max_time; },
     [](rapf::PlannerParams& p, double v) { p.max_time = v; }},
    {"goal_margin", [](const rapf::PlannerParams& p) { return p.goal_margin; },
     [](rapf::PlannerParams& p, double v) { p.goal_margin = v; }},
    {"rw_steps", [](const rapf::PlannerParams& p) { return double(p.rw_steps); },
     [](rapf::PlannerParams& p, double v) { p.rw_steps = int(v); }},
    {"max_artificial",
     [](const rapf::PlannerParams& p) { return double(p.max_artificial); },
     [](rapf::PlannerParams& p, double v) { p.max_artificial = int(v); }},
    {"spin",
     [](const rapf::PlannerParams& p) {
         return p.spin == rapf::Spin::CCW ? 0.0 : 1.0;
     },
     [](rapf::PlannerParams& p, double v) {
         p.spin = v == 0.0 ? rapf::Spin::CCW : rapf::Spin::CW;
     }},
    {"astar_grid_cell",
     [](const rapf::PlannerParams& p) { return p.astar_grid_cell; },
     [](rapf::PlannerParams& p, double v) { p.astar_grid_cell = v; }},
    {"max_plan_steps",
     [](const rapf::PlannerParams& p) { return double(p.max_plan_steps); },
     [](rapf::PlannerParams& p, double v) { p.max_plan_steps = long(v); }},
};

}  // namespace

rapf_status rapf_params_set(rapf_params* p, const char* key, double value) {
    if (rapf_status st = require_ptr(p, "params"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(key, "key"); st != RAPF_OK) return st;
    for (const ParamsField& f : kParamsFields)
        if (std::strcmp(f.key, key) == 0) {
            f.set(p->v, value);
            return RAPF_OK;
        }
    return fail(RAPF_ERR_INVALID_ARGUMENT,
                std::string("unknown parameter: ") + key);
}

rapf_status rapf_params_get(const rapf_params* p, const char* key,
                            double* out) {
    if (rapf_status st = require_ptr(p, "params"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(key, "key"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    for (const ParamsField& f : kParamsFields)
        if (std::strcmp(f.key, key) == 0) {
            *out = f.get(p->v);
            return RAPF_OK;
        }
    return fail(RAPF_ERR_INVALID_ARGUMENT,
                std::string("unknown parameter: ") + key);
}

void rapf_params_free(rapf_params* p) { delete p; }

/* ---- planning ---- */

rapf_status rapf_plan_run(const rapf_scenario* s, const char* planner,
                          const rapf_params* p, uint64_t seed,
                          rapf_plan** out) {
    if (rapf_status st = require_ptr(s, "scenario"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(planner, "planner"); st != RAPF_OK)
        return st;
    if (rapf_status st = require_ptr(p, "params"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    if (!rapf::is_planner_name(planner))
        return fail(RAPF_ERR_UNKNOWN_NAME,
                    std::string("unknown planner: ") + planner);
    return guarded(false, [&] {
        *out = new rapf_plan{
            rapf::plan(planner, request_for(s->v, p->v, seed))};
        return RAPF_OK;
    });
}

rapf_status rapf_plan_status(const rapf_plan* r, const char** out_name) {
    if (rapf_status st = require_ptr(r, "plan"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_name, "out_name"); st != RAPF_OK)
        return st;
    *out_name = rapf::to_string(r->v.status).data();
    return RAPF_OK;
}

rapf_status rapf_plan_length(const rapf_plan* r, double* out) {
    if (rapf_status st = require_ptr(r, "plan"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    *out = r->v.path.length();
    return RAPF_OK;
}

rapf_status rapf_plan_waypoint_count(const rapf_plan* r, size_t* out) {
    if (rapf_status st = require_ptr(r, "plan"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    *out = r->v.path.waypoints.size();
    return RAPF_OK;
}

rapf_status rapf_plan_waypoints(const rapf_plan* r, double* xy,
                                size_t capacity, size_t* written) {
    if (rapf_status st = require_ptr(r, "plan"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(xy, "xy"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(written, "written"); st != RAPF_OK)
        return st;
    const auto& wp = r->v.path.waypoints;
    const size_t n = std::min(capacity, wp.size());
    for (size_t i = 0; i < n; ++i) {
        xy[2 * i] = wp[i].x;
        xy[2 * i + 1] = wp[i].y;
    }
    *written = n;
    return RAPF_OK;
}

rapf_status rapf_plan_evals(const rapf_plan* r, uint64_t* out) {
    if (rapf_status st = require_ptr(r, "plan"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    *out = r->v.potential_evals;
    return RAPF_OK;
}

rapf_status rapf_plan_wall_time(const rapf_plan* r, double* out) {
    if (rapf_status st = require_ptr(r, "plan"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    *out = r->v.wall_time;
    return RAPF_OK;
}

rapf_status rapf_plan_to_json(const rapf_plan* r, char** out_json) {
    if (rapf_status st = require_ptr(r, "plan"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_json, "out_json"); st != RAPF_OK)
        return st;
    return guarded(false,
                   [&] { return out_string(rapf::plan_result_to_json(r->v), out_json); });
}

void rapf_plan_free(rapf_plan* r) { delete r; }

/* ---- trials ---- */

rapf_status rapf_trial_run(const rapf_scenario* s, const char* planner,
                           const rapf_params* p, double sensor_range,
                           double sensor_fov, int omniscient, uint64_t seed,
                           rapf_outcome** out) {
    if (rapf_status st = require_ptr(s, "scenario"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(planner, "planner"); st != RAPF_OK)
        return st;
    if (rapf_status st = require_ptr(p, "params"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    if (!rapf::is_planner_name(planner))
        return fail(RAPF_ERR_UNKNOWN_NAME,
                    std::string("unknown planner: ") + planner);
    return guarded(false, [&] {
        rapf::SensorModel sensor;
        if (sensor_range > 0.0) sensor.range = sensor_range;
        if (sensor_fov > 0.0) sensor.fov = sensor_fov;
        *out = new rapf_outcome{rapf::run_trial(s->v, planner, p->v, sensor,
                                                seed, omniscient != 0, {},
                                                /*keep_trace=*/true)};
        return RAPF_OK;
    });
}

rapf_status rapf_outcome_status(const rapf_outcome* o, const char** out_name) {
    if (rapf_status st = require_ptr(o, "outcome"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_name, "out_name"); st != RAPF_OK)
        return st;
    *out_name = rapf::to_string(o->v.status).data();
    return RAPF_OK;
}

rapf_status rapf_outcome_walked_length(const rapf_outcome* o, double* out) {
    if (rapf_status st = require_ptr(o, "outcome"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    *out = o->v.walked_length;
    return RAPF_OK;
}

rapf_status rapf_outcome_planning_time(const rapf_outcome* o, double* out) {
    if (rapf_status st = require_ptr(o, "outcome"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    *out = o->v.planning_time;
    return RAPF_OK;
}

rapf_status rapf_outcome_evals(const rapf_outcome* o, uint64_t* out) {
    if (rapf_status st = require_ptr(o, "outcome"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    *out = o->v.potential_evals;
    return RAPF_OK;
}

rapf_status rapf_outcome_replans(const rapf_outcome* o, int* out) {
    if (rapf_status st = require_ptr(o, "outcome"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    *out = o->v.replan_count;
    return RAPF_OK;
}

rapf_status rapf_outcome_to_json(const rapf_outcome* o, char** out_json) {
    if (rapf_status st = require_ptr(o, "outcome"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_json, "out_json"); st != RAPF_OK)
        return st;
    return guarded(false,
                   [&] { return out_string(rapf::outcome_to_json(o->v), out_json); });
}

rapf_status rapf_outcome_write_trace(const rapf_outcome* o, const char* path) {
    if (rapf_status st = require_ptr(o, "outcome"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(path, "path"); st != RAPF_OK) return st;
    return guarded(false, [&] {
        rapf::write_trace_csv(path, o->v);
        return RAPF_OK;
    });
}

void rapf_outcome_free(rapf_outcome* o) { delete o; }

/* ---- benchmark ---- */

rapf_status rapf_bench_run(const char* config_json, rapf_bench** out) {
    if (rapf_status st = require_ptr(out, "out"); st != RAPF_OK) return st;
    return guarded(true, [&] {
        const std::string text = config_json ? config_json : "";
        const rapf::BenchConfig config = rapf::bench_config_from_json(text);
        *out = new rapf_bench{rapf::run_bench(config)};
        return RAPF_OK;
    });
}

rapf_status rapf_bench_table(const rapf_bench* b, char** out_text) {
    if (rapf_status st = require_ptr(b, "bench"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_text, "out_text"); st != RAPF_OK)
        return st;
    return guarded(false, [&] {
        return out_string(rapf::render_table(b->v.summaries), out_text);
    });
}

rapf_status rapf_bench_csv(const rapf_bench* b, char** out_csv) {
    if (rapf_status st = require_ptr(b, "bench"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_csv, "out_csv"); st != RAPF_OK)
        return st;
    return guarded(false, [&] {
        return out_string(rapf::render_csv(b->v.summaries), out_csv);
    });
}

rapf_status rapf_bench_manifest(const rapf_bench* b, char** out_json) {
    if (rapf_status st = require_ptr(b, "bench"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(out_json, "out_json"); st != RAPF_OK)
        return st;
    return guarded(false, [&] {
        return out_string(rapf::manifest_to_json(b->v), out_json);
    });
}

rapf_status rapf_bench_write_outputs(const rapf_bench* b, const char* dir) {
    if (rapf_status st = require_ptr(b, "bench"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(dir, "dir"); st != RAPF_OK) return st;
    return guarded(false, [&] {
        rapf::write_bench_outputs(b->v, dir);
        return RAPF_OK;
    });
}

rapf_status rapf_bench_check_manifest(const char* manifest_json,
                                      char** out_report) {
    if (rapf_status st = require_ptr(manifest_json, "manifest_json");
        st != RAPF_OK)
        return st;
    if (rapf_status st = require_ptr(out_report, "out_report"); st != RAPF_OK)
        return st;
    return guarded(true, [&] {
        const rapf::ManifestCheck check = rapf::check_manifest(manifest_json);
        std::string report = "compared " + std::to_string(check.compared) +
                             " trials: " +
                             (check.ok ? "all reproduced" : "MISMATCH") + "\n";
        for (const std::string& m : check.mismatches) report += m + "\n";
        if (rapf_status st = out_string(report, out_report); st != RAPF_OK)
            return st;
        if (!check.ok)
            return fail(RAPF_ERR_INTERNAL, "manifest did not reproduce");
        return RAPF_OK;
    });
}

rapf_status rapf_bench_gate(const rapf_bench* b, const char* gates_json,
                            char** out_report) {
    if (rapf_status st = require_ptr(b, "bench"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(gates_json, "gates_json"); st != RAPF_OK)
        return st;
    if (rapf_status st = require_ptr(out_report, "out_report"); st != RAPF_OK)
        return st;
    return guarded(true, [&] {
        const rapf::GateResult gate =
            rapf::evaluate_gates(gates_json, b->v.summaries);
        if (rapf_status st = out_string(gate.report, out_report); st != RAPF_OK)
            return st;
        if (!gate.ok)
            return fail(RAPF_ERR_INVALID_ARGUMENT,
                        std::to_string(gate.failures.size()) +
                            " gate check(s) failed");
        return RAPF_OK;
    });
}

void rapf_bench_free(rapf_bench* b) { delete b; }

/* ---- map export ---- */

rapf_status rapf_export_map(const rapf_scenario* s, const rapf_params* p,
                            double cell_size, const char* path) {
    if (rapf_status st = require_ptr(s, "scenario"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(p, "params"); st != RAPF_OK) return st;
    if (rapf_status st = require_ptr(path, "path"); st != RAPF_OK) return st;
    return guarded(false, [&] {
        rapf::write_potential_map(path, s->v.goal_center, s->v.obstacles,
                                  p->v, s->v.rover_radius,
                                  rapf::Rect{{0.0, 0.0}, s->v.world_size},
                                  cell_size);
        return RAPF_OK;
    });
}

} /* extern "C" */
