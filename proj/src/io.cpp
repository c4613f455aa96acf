#include "rapf/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rapf/potentials.hpp"

namespace rapf {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

const json& require(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing key: ") + key);
    return *it;
}

double require_num(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number())
        throw std::invalid_argument(std::string("not a number: ") + key);
    return v.get<double>();
}

Vec2 require_vec(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number())
        throw std::invalid_argument(std::string("not an [x, y] pair: ") + key);
    return {v[0].get<double>(), v[1].get<double>()};
}

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

const char* kind_name(ObstacleKind k) {
    switch (k) {
        case ObstacleKind::Rock: return "rock";
        case ObstacleKind::Crater: return "crater";
        case ObstacleKind::Artificial: return "artificial";
    }
    return "rock";
}

ObstacleKind kind_of(const std::string& name) {
    if (name == "rock") return ObstacleKind::Rock;
    if (name == "crater") return ObstacleKind::Crater;
    if (name == "artificial") return ObstacleKind::Artificial;
    throw std::invalid_argument("unknown obstacle kind: " + name);
}

json obstacles_json(std::span<const Obstacle> obstacles) {
    json arr = json::array();
    for (const Obstacle& o : obstacles)
        arr.push_back({{"x", o.center.x},
                       {"y", o.center.y},
                       {"radius", o.radius},
                       {"kind", kind_name(o.kind)}});
    return arr;
}

json path_json(const Path& p) {
    json arr = json::array();
    for (const Vec2& w : p.waypoints) arr.push_back(vec_json(w));
    return arr;
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
    json j{{"world_size", vec_json(s.world_size)},
           {"obstacle_region",
            {{"min", vec_json(s.obstacle_region.min)},
             {"max", vec_json(s.obstacle_region.max)}}},
           {"start", vec_json(s.start)},
           {"goal_center", vec_json(s.goal_center)},
           {"goal_radius", s.goal_radius},
           {"rover_radius", s.rover_radius},
           {"seed", s.seed},
           {"obstacles", obstacles_json(s.obstacles)}};
    return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    const json j = parse(text, "scenario");
    Scenario s;
    s.world_size = require_vec(j, "world_size");
    const json& region = require(j, "obstacle_region");
    s.obstacle_region = {require_vec(region, "min"), require_vec(region, "max")};
    s.start = require_vec(j, "start");
    s.goal_center = require_vec(j, "goal_center");
    s.goal_radius = require_num(j, "goal_radius");
    s.rover_radius = require_num(j, "rover_radius");
    const json& seed = require(j, "seed");
    if (!seed.is_number_unsigned())
        throw std::invalid_argument("not an unsigned integer: seed");
    s.seed = seed.get<std::uint64_t>();
    const json& obstacles = require(j, "obstacles");
    if (!obstacles.is_array())
        throw std::invalid_argument("not an array: obstacles");
    for (const json& o : obstacles) {
        Obstacle parsed;
        parsed.center = {require_num(o, "x"), require_num(o, "y")};
        parsed.radius = require_num(o, "radius");
        const json& kind = require(o, "kind");
        if (!kind.is_string())
            throw std::invalid_argument("not a string: kind");
        parsed.kind = kind_of(kind.get<std::string>());
        s.obstacles.push_back(parsed);
    }
    validate(s);
    return s;
}

void save_scenario(const Scenario& s, const std::string& path) {
    write_text_file(path, scenario_to_json(s));
}

Scenario load_scenario(const std::string& path) {
    return scenario_from_json(read_text_file(path));
}

std::string params_to_json(const PlannerParams& p) {
    json j{{"k_a", p.k_a},
           {"k_rep", p.k_rep},
           {"rho_0", p.rho_0},
           {"alpha_a", p.alpha_a},
           {"mu_a", p.mu_a},
           {"alpha_o", p.alpha_o},
           {"mu_o", p.mu_o},
           {"rho_l", p.rho_l},
           {"rho_u", p.rho_u},
           {"n_bacteria", p.n_bacteria},
           {"rho_b", p.rho_b},
           {"step_size", p.step_size},
           {"max_time", p.max_time},
           {"goal_margin", p.goal_margin},
           {"rw_steps", p.rw_steps},
           {"max_artificial", p.max_artificial},
           {"spin", p.spin == Spin::CCW ? "ccw" : "cw"},
           {"astar_grid_cell", p.astar_grid_cell},
           {"max_plan_steps", p.max_plan_steps}};
    return j.dump(2) + "\n";
}

PlannerParams params_from_json(const std::string& text, PlannerParams base) {
    const json j = parse(text, "params");
    if (!j.is_object())
        throw std::invalid_argument("params: not a JSON object");
    PlannerParams p = base;
    for (const auto& [key, value] : j.items()) {
        const auto num = [&value, &key = key]() {
            if (!value.is_number())
                throw std::invalid_argument("not a number: " + key);
            return value.get<double>();
        };
        if (key == "k_a") p.k_a = num();
        else if (key == "k_rep") p.k_rep = num();
        else if (key == "rho_0") p.rho_0 = num();
        else if (key == "alpha_a") p.alpha_a = num();
        else if (key == "mu_a") p.mu_a = num();
        else if (key == "alpha_o") p.alpha_o = num();
        else if (key == "mu_o") p.mu_o = num();
        else if (key == "rho_l") p.rho_l = num();
        else if (key == "rho_u") p.rho_u = num();
        else if (key == "n_bacteria") p.n_bacteria = static_cast<int>(num());
        else if (key == "rho_b") p.rho_b = num();
        else if (key == "step_size") p.step_size = num();
        else if (key == "max_time") p.max_time = num();
        else if (key == "goal_margin") p.goal_margin = num();
        else if (key == "rw_steps") p.rw_steps = static_cast<int>(num());
        else if (key == "max_artificial")
            p.max_artificial = static_cast<int>(num());
        else if (key == "spin") {
            if (!value.is_string())
                throw std::invalid_argument("not a string: spin");
            const std::string s = value.get<std::string>();
            if (s == "ccw") p.spin = Spin::CCW;
            else if (s == "cw") p.spin = Spin::CW;
            else throw std::invalid_argument("spin must be ccw or cw");
        } else if (key == "astar_grid_cell") p.astar_grid_cell = num();
        else if (key == "max_plan_steps")
            p.max_plan_steps = static_cast<long>(num());
        else throw std::invalid_argument("unknown parameter: " + key);
    }
    validate(p);
    return p;
}

std::string plan_result_to_json(const PlanResult& r) {
    json j{{"status", std::string(to_string(r.status))},
           {"path", path_json(r.path)},
           {"path_length", r.path.length()},
           {"artificial_obstacles", obstacles_json(r.artificial_obstacles)},
           {"potential_evals", r.potential_evals},
           {"wall_time", r.wall_time}};
    return j.dump(2) + "\n";
}

std::string outcome_to_json(const TrialOutcome& o) {
    json samples = json::array();
    for (const SafetySample& s : o.safety_samples)
        samples.push_back({{"obstacle", s.obstacle_id},
                           {"min_center_distance", s.min_center_distance},
                           {"radius", s.radius}});
    json j{{"status", std::string(to_string(o.status))},
           {"walked", path_json(o.walked)},
           {"walked_length", o.walked_length},
           {"planning_time", o.planning_time},
           {"potential_evals", o.potential_evals},
           {"replan_count", o.replan_count},
           {"safety_samples", samples}};
    return j.dump(2) + "\n";
}

void write_potential_map(const std::string& path, Vec2 target,
                         std::span<const Obstacle> obstacles,
                         const PlannerParams& params, double rover_radius,
                         Rect bounds, double cell_size) {
    if (cell_size <= 0.0)
        throw std::invalid_argument("cell_size must be positive");
    const long cols =
        static_cast<long>(std::floor(bounds.width() / cell_size)) + 1;
    const long rows =
        static_cast<long>(std::floor(bounds.height() / cell_size)) + 1;
    GaussField field(target, obstacles, params, rover_radius);

    std::ostringstream os;
    os.precision(10);
    os << "# " << bounds.min.x << ' ' << bounds.min.y << ' ' << cell_size
       << ' ' << rows << ' ' << cols << '\n';
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c) {
            const Vec2 p{bounds.min.x + c * cell_size,
                         bounds.min.y + r * cell_size};
            const double v = field.total(p);
            if (c) os << ',';
            if (std::isinf(v)) os << "inf";
            else os << v;
        }
        os << '\n';
    }
    write_text_file(path, os.str());
}

void write_trace_csv(const std::string& path, const TrialOutcome& outcome) {
    std::ostringstream os;
    os.precision(17);
    os << "step,x,y,heading,replan\n";
    for (const TraceRecord& t : outcome.trace)
        os << t.step << ',' << t.position.x << ',' << t.position.y << ','
           << t.heading << ',' << (t.replanned ? 1 : 0) << '\n';
    write_text_file(path, os.str());
}

void write_path_csv(const std::string& path, const Path& p) {
    std::ostringstream os;
    os.precision(17);
    os << "x,y\n";
    for (const Vec2& w : p.waypoints) os << w.x << ',' << w.y << '\n';
    write_text_file(path, os.str());
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace rapf
