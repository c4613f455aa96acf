/* C API for the rapf planning library.
 *
 * Every object is an opaque handle created and destroyed here; every
 * function returns a rapf_status, with outputs through pointers. On any
 * failure rapf_last_error() describes what went wrong (thread-local).
 * Strings returned through char** are heap-allocated; release them with
 * rapf_string_free.
 */
#ifndef RAPF_H
#define RAPF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rapf_status {
    RAPF_OK = 0,
    RAPF_ERR_INVALID_ARGUMENT = 1,
    RAPF_ERR_PARSE = 2,
    RAPF_ERR_IO = 3,
    RAPF_ERR_UNKNOWN_NAME = 4, /* planner or preset */
    RAPF_ERR_GENERATION = 5,
    RAPF_ERR_INTERNAL = 6
} rapf_status;

typedef struct rapf_scenario rapf_scenario;
typedef struct rapf_params rapf_params;
typedef struct rapf_plan rapf_plan;
typedef struct rapf_outcome rapf_outcome;
typedef struct rapf_bench rapf_bench;

const char* rapf_version(void);
/* Message for the most recent failure on this thread; never NULL. */
const char* rapf_last_error(void);
void rapf_string_free(char* s);

/* ---- scenarios ---- */
rapf_status rapf_scenario_generate(const char* preset, uint64_t seed,
                                   rapf_scenario** out);
rapf_status rapf_scenario_from_json(const char* json, rapf_scenario** out);
rapf_status rapf_scenario_to_json(const rapf_scenario* s, char** out_json);
rapf_status rapf_scenario_load(const char* path, rapf_scenario** out);
rapf_status rapf_scenario_save(const rapf_scenario* s, const char* path);
void rapf_scenario_free(rapf_scenario* s);

typedef struct rapf_scenario_info {
    int rocks;
    int craters;
    double rock_area_fraction;   /* of the obstacle region */
    double crater_area_fraction;
    double world_w, world_h;
} rapf_scenario_info;

rapf_status rapf_scenario_stats(const rapf_scenario* s,
                                rapf_scenario_info* out);

/* ---- parameters ---- */
rapf_status rapf_params_create(rapf_params** out); /* defaults */
rapf_status rapf_params_from_json(const char* json, rapf_params** out);
rapf_status rapf_params_to_json(const rapf_params* p, char** out_json);
rapf_status rapf_params_set(rapf_params* p, const char* key, double value);
rapf_status rapf_params_get(const rapf_params* p, const char* key,
                            double* out);
void rapf_params_free(rapf_params* p);

/* ---- one-shot planning on a fully known map ---- */
/* planner: apf | rvf | crbapf | rapf | astar */
rapf_status rapf_plan_run(const rapf_scenario* s, const char* planner,
                          const rapf_params* p, uint64_t seed,
                          rapf_plan** out);
rapf_status rapf_plan_status(const rapf_plan* r, const char** out_name);
rapf_status rapf_plan_length(const rapf_plan* r, double* out);
rapf_status rapf_plan_waypoint_count(const rapf_plan* r, size_t* out);
/* xy receives x0,y0,x1,y1,... capacity counts points, returns written. */
rapf_status rapf_plan_waypoints(const rapf_plan* r, double* xy,
                                size_t capacity, size_t* written);
rapf_status rapf_plan_evals(const rapf_plan* r, uint64_t* out);
rapf_status rapf_plan_wall_time(const rapf_plan* r, double* out);
rapf_status rapf_plan_to_json(const rapf_plan* r, char** out_json);
void rapf_plan_free(rapf_plan* r);

/* ---- closed-loop trial under the limited-view sensor ---- */
/* sensor_range <= 0 or sensor_fov <= 0 select the defaults (0.8 m, 62 deg). */
rapf_status rapf_trial_run(const rapf_scenario* s, const char* planner,
                           const rapf_params* p, double sensor_range,
                           double sensor_fov, int omniscient, uint64_t seed,
                           rapf_outcome** out);
rapf_status rapf_outcome_status(const rapf_outcome* o, const char** out_name);
rapf_status rapf_outcome_walked_length(const rapf_outcome* o, double* out);
rapf_status rapf_outcome_planning_time(const rapf_outcome* o, double* out);
rapf_status rapf_outcome_evals(const rapf_outcome* o, uint64_t* out);
rapf_status rapf_outcome_replans(const rapf_outcome* o, int* out);
rapf_status rapf_outcome_to_json(const rapf_outcome* o, char** out_json);
rapf_status rapf_outcome_write_trace(const rapf_outcome* o, const char* path);
void rapf_outcome_free(rapf_outcome* o);

/* ---- benchmark ---- */
/* config JSON mirrors the CLI: planners, presets, trials, base_seed,
 * params, sensor {range, fov}, omniscient, workers. Empty string or "{}"
 * runs the defaults (5 planners x presets a,b,c x 100 trials). */
rapf_status rapf_bench_run(const char* config_json, rapf_bench** out);
rapf_status rapf_bench_table(const rapf_bench* b, char** out_text);
rapf_status rapf_bench_csv(const rapf_bench* b, char** out_csv);
rapf_status rapf_bench_manifest(const rapf_bench* b, char** out_json);
/* Writes manifest.json, summary.csv, table.txt into dir. */
rapf_status rapf_bench_write_outputs(const rapf_bench* b, const char* dir);
/* Re-runs the manifest's trials; RAPF_OK only if statuses and walked paths
 * reproduce exactly. Report is human-readable either way. */
rapf_status rapf_bench_check_manifest(const char* manifest_json,
                                      char** out_report);
/* Gate file: JSON checks against the bench summaries (see docs). Fails with
 * RAPF_ERR_INVALID_ARGUMENT when any check fails; report lists each check. */
rapf_status rapf_bench_gate(const rapf_bench* b, const char* gates_json,
                            char** out_report);
void rapf_bench_free(rapf_bench* b);

/* ---- potential-field map export ---- */
/* Writes the Gaussian total-potential grid of the scenario to a CSV file
 * ("# xmin ymin cell_size rows cols" header, "inf" for forbidden cells). */
rapf_status rapf_export_map(const rapf_scenario* s, const rapf_params* p,
                            double cell_size, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAPF_H */
