#include <algorithm>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rapf/io.hpp"
#include "rapf/terrain.hpp"

using namespace rapf;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    const fs::path dir = fs::temp_directory_path() / "rapf_io_tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("scenario json round trip is exact") {
    const Scenario s = generate_scenario(preset("a"), 3);
    const Scenario back = scenario_from_json(scenario_to_json(s));
    CHECK(back.world_size == s.world_size);
    CHECK(back.obstacle_region.min == s.obstacle_region.min);
    CHECK(back.obstacle_region.max == s.obstacle_region.max);
    CHECK(back.start == s.start);
    CHECK(back.goal_center == s.goal_center);
    CHECK(back.goal_radius == s.goal_radius);
    CHECK(back.rover_radius == s.rover_radius);
    CHECK(back.seed == s.seed);
    REQUIRE(back.obstacles.size() == s.obstacles.size());
    for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
        CHECK(back.obstacles[i].center == s.obstacles[i].center);
        CHECK(back.obstacles[i].radius == s.obstacles[i].radius);
        CHECK(back.obstacles[i].kind == s.obstacles[i].kind);
    }
}

TEST_CASE("scenario files save and load") {
    const Scenario s = generate_scenario(preset("b"), 1);
    const std::string path = (tmp_dir() / "scenario.json").string();
    save_scenario(s, path);
    const Scenario back = load_scenario(path);
    CHECK(back.obstacles.size() == s.obstacles.size());
    CHECK(back.seed == s.seed);
}

TEST_CASE("scenario parsing names the first offending key") {
    const std::string valid = scenario_to_json(generate_scenario(preset("a"), 1));

    nlohmann::json j = nlohmann::json::parse(valid);
    j.erase("seed");
    CHECK_THROWS_WITH_AS(scenario_from_json(j.dump()), "missing key: seed",
                         std::invalid_argument);

    j = nlohmann::json::parse(valid);
    j["goal_radius"] = "big";
    CHECK_THROWS_WITH_AS(scenario_from_json(j.dump()),
                         "not a number: goal_radius", std::invalid_argument);

    j = nlohmann::json::parse(valid);
    j["seed"] = 1.5;
    CHECK_THROWS_WITH_AS(scenario_from_json(j.dump()),
                         "not an unsigned integer: seed",
                         std::invalid_argument);

    j = nlohmann::json::parse(valid);
    j["obstacles"][0]["kind"] = "boulder";
    CHECK_THROWS_WITH_AS(scenario_from_json(j.dump()),
                         "unknown obstacle kind: boulder",
                         std::invalid_argument);

    CHECK_THROWS_WITH_AS(scenario_from_json("["), "scenario: malformed JSON",
                         std::invalid_argument);
}

TEST_CASE("parameter json round trip covers every field") {
    PlannerParams p;
    p.k_a = 2.5;
    p.k_rep = 99.0;
    p.rho_0 = 0.6;
    p.alpha_a = 11.0;
    p.mu_a = 0.07;
    p.alpha_o = 4.0;
    p.mu_o = 1.5;
    p.rho_l = 0.04;
    p.rho_u = 0.3;
    p.n_bacteria = 12;
    p.rho_b = 0.25;
    p.step_size = 0.01;
    p.max_time = 3.0;
    p.goal_margin = 0.4;
    p.rw_steps = 7;
    p.max_artificial = 9;
    p.spin = Spin::CW;
    p.astar_grid_cell = 0.2;
    p.max_plan_steps = 1234;

    const PlannerParams back = params_from_json(params_to_json(p));
    CHECK(back.k_a == p.k_a);
    CHECK(back.k_rep == p.k_rep);
    CHECK(back.rho_0 == p.rho_0);
    CHECK(back.alpha_a == p.alpha_a);
    CHECK(back.mu_a == p.mu_a);
    CHECK(back.alpha_o == p.alpha_o);
    CHECK(back.mu_o == p.mu_o);
    CHECK(back.rho_l == p.rho_l);
    CHECK(back.rho_u == p.rho_u);
    CHECK(back.n_bacteria == p.n_bacteria);
    CHECK(back.rho_b == p.rho_b);
    CHECK(back.step_size == p.step_size);
    CHECK(back.max_time == p.max_time);
    CHECK(back.goal_margin == p.goal_margin);
    CHECK(back.rw_steps == p.rw_steps);
    CHECK(back.max_artificial == p.max_artificial);
    CHECK(back.spin == Spin::CW);
    CHECK(back.astar_grid_cell == p.astar_grid_cell);
    CHECK(back.max_plan_steps == p.max_plan_steps);
}

TEST_CASE("parameter overrides are partial and typo-proof") {
    const PlannerParams base;
    const PlannerParams p = params_from_json(R"({"rho_b": 0.2})", base);
    CHECK(p.rho_b == 0.2);
    CHECK(p.k_a == base.k_a);
    CHECK(p.n_bacteria == base.n_bacteria);

    CHECK_THROWS_WITH_AS(params_from_json(R"({"bogus": 1})"),
                         "unknown parameter: bogus", std::invalid_argument);
    CHECK_THROWS_WITH_AS(params_from_json("{"), "params: malformed JSON",
                         std::invalid_argument);
    // inverted annulus is rejected by validation
    CHECK_THROWS_AS(params_from_json(R"({"rho_l": 0.5, "rho_u": 0.3})"),
                    std::invalid_argument);
    CHECK_THROWS_WITH_AS(params_from_json(R"({"spin": "up"})"),
                         "spin must be ccw or cw", std::invalid_argument);
}

TEST_CASE("potential map grid has the declared shape") {
    const std::string path = (tmp_dir() / "map.csv").string();
    const std::vector<Obstacle> obs{{{0.5, 0.5}, 0.3, ObstacleKind::Rock}};
    write_potential_map(path, {28.0, 28.0}, obs, {}, 0.2,
                        {{0.0, 0.0}, {1.0, 1.0}}, 0.5);
    const std::string text = read_text_file(path);

    REQUIRE(text.substr(0, text.find('\n')) == "# 0 0 0.5 3 3");
    std::size_t infs = 0;
    for (std::size_t pos = text.find("inf"); pos != std::string::npos;
         pos = text.find("inf", pos + 3))
        ++infs;
    // centre and edge midpoints sit inside the padded contact radius 0.52,
    // corners at 0.707 are outside it
    CHECK(infs == 5);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("trace and path files carry their headers") {
    TrialOutcome o;
    o.trace = {{0, {1.0, 2.0}, 0.5, true}, {1, {1.1, 2.0}, 0.5, false}};
    const std::string trace_path = (tmp_dir() / "trace.csv").string();
    write_trace_csv(trace_path, o);
    const std::string trace = read_text_file(trace_path);
    CHECK(trace.substr(0, trace.find('\n')) == "step,x,y,heading,replan");
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 3);

    const std::string path_path = (tmp_dir() / "path.csv").string();
    write_path_csv(path_path, Path{{{0.0, 0.0}, {3.0, 4.0}}});
    const std::string pcsv = read_text_file(path_path);
    CHECK(pcsv.substr(0, pcsv.find('\n')) == "x,y");
    CHECK(std::count(pcsv.begin(), pcsv.end(), '\n') == 3);
}

TEST_CASE("filesystem failures raise io errors") {
    CHECK_THROWS_AS(read_text_file("/nonexistent/nowhere.txt"), IoError);
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/out.txt", "x"), IoError);
}

TEST_CASE("plan results serialize with their artifacts") {
    PlanResult r;
    r.status = PlanStatus::Reached;
    r.path.waypoints = {{0.0, 0.0}, {1.0, 0.0}};
    r.artificial_obstacles = {{{0.5, 0.5}, 0.1, ObstacleKind::Artificial}};
    r.potential_evals = 5;
    r.wall_time = 0.25;
    const nlohmann::json j = nlohmann::json::parse(plan_result_to_json(r));
    CHECK(j.at("status") == "reached");
    CHECK(j.at("path").size() == 2);
    CHECK(j.at("path_length").get<double>() == doctest::Approx(1.0));
    CHECK(j.at("artificial_obstacles").size() == 1);
    CHECK(j.at("artificial_obstacles")[0].at("kind") == "artificial");
    CHECK(j.at("potential_evals") == 5);
    CHECK(j.at("wall_time").get<double>() == doctest::Approx(0.25));
}

TEST_CASE("trial outcomes serialize with safety samples") {
    TrialOutcome o;
    o.status = TrialStatus::Collision;
    o.walked.waypoints = {{0.0, 0.0}, {0.5, 0.0}};
    o.walked_length = 0.5;
    o.planning_time = 0.125;
    o.potential_evals = 42;
    o.replan_count = 2;
    o.safety_samples = {{3, 1.5, 0.4}};
    const nlohmann::json j = nlohmann::json::parse(outcome_to_json(o));
    CHECK(j.at("status") == "collision");
    CHECK(j.at("walked").size() == 2);
    CHECK(j.at("walked_length").get<double>() == doctest::Approx(0.5));
    CHECK(j.at("planning_time").get<double>() == doctest::Approx(0.125));
    CHECK(j.at("potential_evals") == 42);
    CHECK(j.at("replan_count") == 2);
    REQUIRE(j.at("safety_samples").size() == 1);
    CHECK(j.at("safety_samples")[0].at("obstacle") == 3);
    CHECK(j.at("safety_samples")[0].at("min_center_distance").get<double>() ==
          doctest::Approx(1.5));
    CHECK(j.at("safety_samples")[0].at("radius").get<double>() ==
          doctest::Approx(0.4));
}
