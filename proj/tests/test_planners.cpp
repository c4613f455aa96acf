#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "rapf/planners.hpp"

using namespace rapf;

namespace {

PlanRequest make_req(Vec2 start, Vec2 target,
                     std::vector<Obstacle> obstacles = {},
                     PlannerParams params = {}) {
    PlanRequest req;
    req.start = start;
    req.target = target;
    req.known_obstacles = std::move(obstacles);
    req.params = params;
    return req;
}

// Signed lateral deviation with the largest magnitude from the line y = y0.
double max_deviation(const Path& path, double y0) {
    double dev = 0.0;
    for (const Vec2& p : path.waypoints)
        if (std::abs(p.y - y0) > std::abs(dev)) dev = p.y - y0;
    return dev;
}

}  // namespace

TEST_CASE("descent on an empty field walks straight in fixed steps") {
    PlannerParams pr;
    pr.step_size = 0.1;
    pr.goal_margin = 0.1;
    const PlanResult r = plan_apf(make_req({2.0, 5.0}, {7.0, 5.0}, {}, pr));
    REQUIRE(r.status == PlanStatus::Reached);
    CHECK(r.path.waypoints.front() == Vec2{2.0, 5.0});
    CHECK(std::abs(r.path.length() - 5.0) <= pr.step_size + 1e-9);
    for (std::size_t i = 1; i < r.path.size(); ++i) {
        CHECK(distance(r.path.waypoints[i - 1], r.path.waypoints[i]) ==
              doctest::Approx(0.1).epsilon(1e-12));
        CHECK(r.path.waypoints[i].y == doctest::Approx(5.0).epsilon(1e-12));
    }
    CHECK(r.path.size() ==
          1 + static_cast<std::size_t>(std::lround(r.path.length() / 0.1)));
    CHECK(r.artificial_obstacles.empty());
}

TEST_CASE("vortex descent equals plain descent when nothing repels") {
    PlannerParams pr;
    pr.step_size = 0.05;
    const auto a = plan_apf(make_req({1.0, 1.0}, {6.0, 4.0}, {}, pr));
    const auto v = plan_rvf(make_req({1.0, 1.0}, {6.0, 4.0}, {}, pr));
    CHECK(a.status == v.status);
    REQUIRE(a.path.size() == v.path.size());
    for (std::size_t i = 0; i < a.path.size(); ++i)
        CHECK(a.path.waypoints[i] == v.path.waypoints[i]);
}

TEST_CASE("vortex spin picks the side of the detour") {
    PlannerParams pr;
    pr.step_size = 0.01;
    pr.goal_margin = 0.1;
    const std::vector<Obstacle> obs{{{5.0, 5.0}, 0.3, ObstacleKind::Rock}};

    pr.spin = Spin::CCW;
    const auto ccw = plan_rvf(make_req({2.0, 5.0}, {8.0, 5.0}, obs, pr));
    pr.spin = Spin::CW;
    const auto cw = plan_rvf(make_req({2.0, 5.0}, {8.0, 5.0}, obs, pr));

    REQUIRE(ccw.status == PlanStatus::Reached);
    REQUIRE(cw.status == PlanStatus::Reached);
    const double dev_ccw = max_deviation(ccw.path, 5.0);
    const double dev_cw = max_deviation(cw.path, 5.0);
    CHECK(dev_ccw * dev_cw < 0.0);
    CHECK(std::abs(dev_ccw) > 0.1);
    CHECK(std::abs(dev_cw) > 0.1);
}

TEST_CASE("pure attraction walks into the rock and reports no path") {
    PlannerParams pr;
    pr.step_size = 0.01;
    pr.k_rep = 1e-6;  // negligible: the force field stays goal-directed
    const std::vector<Obstacle> obs{{{5.0, 5.0}, 0.3, ObstacleKind::Rock}};
    const auto r = plan_apf(make_req({2.0, 5.0}, {8.0, 5.0}, obs, pr));
    CHECK(r.status == PlanStatus::NoPath);
    // stopped at the contact shell, not beyond it
    CHECK(distance(r.path.waypoints.back(), {5.0, 5.0}) <
          0.3 + 0.2 + pr.step_size);
}

TEST_CASE("zero wall-clock budget times out with the start recorded") {
    PlannerParams pr;
    pr.max_time = 0.0;
    for (const char* name : kPlannerNames) {
        CAPTURE(name);
        const auto r = plan(name, make_req({2.0, 5.0}, {7.0, 5.0}, {}, pr));
        CHECK(r.status == PlanStatus::Timeout);
        REQUIRE(!r.path.empty());
        CHECK(r.path.waypoints.front() == Vec2{2.0, 5.0});
    }
}

TEST_CASE("a start already inside the goal margin is a one-point plan") {
    for (const char* name : kPlannerNames) {
        CAPTURE(name);
        const auto r = plan(name, make_req({3.0, 3.0}, {3.0, 3.0}));
        CHECK(r.status == PlanStatus::Reached);
        CHECK(r.path.size() == 1);
        CHECK(r.path.waypoints.front() == Vec2{3.0, 3.0});
    }
}

TEST_CASE("aligned bacteria walk crosses an empty field on the ray") {
    const auto r = plan_rapf(make_req({2.0, 2.0}, {28.0, 28.0}));
    REQUIRE(r.status == PlanStatus::Reached);
    REQUIRE(r.path.size() == 364);  // start + 363 hops of 0.1
    CHECK(r.path.length() == doctest::Approx(36.3).epsilon(1e-9));
    CHECK(r.artificial_obstacles.empty());
    CHECK(r.potential_evals == 2905);  // 1 + 363 * 8 through the cache

    const Vec2 dir = (Vec2{28.0, 28.0} - Vec2{2.0, 2.0}).normalized();
    double before = distance({2.0, 2.0}, {28.0, 28.0});
    for (std::size_t i = 1; i < r.path.size(); ++i) {
        const Vec2 p = r.path.waypoints[i];
        const Vec2 rel = p - Vec2{2.0, 2.0};
        CHECK(std::abs(rel.x * dir.y - rel.y * dir.x) <= 1e-9);
        const double after = distance(p, {28.0, 28.0});
        CHECK(before - after == doctest::Approx(0.1).epsilon(1e-9));
        before = after;
    }
    CHECK(before == doctest::Approx(36.76955262170047 - 36.3));
    CHECK(before < 0.5);
}

TEST_CASE("unaligned bacteria walk hops on the fixed ring directions") {
    const auto r = plan_crbapf(make_req({0.0, 0.0}, {5.0, 5.0}));
    REQUIRE(r.status == PlanStatus::Reached);
    REQUIRE(r.path.size() == 67);  // start + 66 hops
    CHECK(r.path.length() == doctest::Approx(6.6).epsilon(1e-9));
    CHECK(r.potential_evals == 529);  // 1 + 66 * 8
    for (std::size_t i = 1; i < r.path.size(); ++i) {
        const Vec2 d = r.path.waypoints[i] - r.path.waypoints[i - 1];
        CHECK(d.norm() == doctest::Approx(0.1).epsilon(1e-12));
        CHECK(std::atan2(d.y, d.x) ==
              doctest::Approx(std::numbers::pi / 4).epsilon(1e-9));
    }
}

TEST_CASE("seeded escape walks reproduce and differ across seeds") {
    const Scenario trap = fixtures::u_trap(1);
    PlanRequest req = make_req(trap.start, trap.goal_center, trap.obstacles);
    req.rng_seed = 7;
    const auto r1 = plan_crbapf(req);
    const auto r2 = plan_crbapf(req);
    CHECK(r1.status == r2.status);
    CHECK(r1.potential_evals == r2.potential_evals);
    REQUIRE(r1.path.size() == r2.path.size());
    for (std::size_t i = 0; i < r1.path.size(); ++i)
        CHECK(r1.path.waypoints[i] == r2.path.waypoints[i]);

    req.rng_seed = 8;
    const auto r3 = plan_crbapf(req);
    const bool same_shape = r3.path.size() == r1.path.size() &&
                            r3.path.waypoints == r1.path.waypoints;
    CHECK(!same_shape);
}

TEST_CASE("walling off the trap either escapes or gives up cleanly") {
    const Scenario trap = fixtures::u_trap(1);
    PlanRequest req = make_req(trap.start, trap.goal_center, trap.obstacles);

    const auto rapf1 = plan_rapf(req);
    CHECK(rapf1.status == PlanStatus::Reached);
    CHECK(rapf1.artificial_obstacles.size() >= 1);
    CHECK(rapf1.artificial_obstacles.size() <= 50);
    for (const Obstacle& o : rapf1.artificial_obstacles) {
        CHECK(o.kind == ObstacleKind::Artificial);
        CHECK(o.radius == doctest::Approx(req.params.rho_b));
    }
    // no randomness anywhere in this planner
    const auto rapf2 = plan_rapf(req);
    CHECK(rapf2.path.waypoints == rapf1.path.waypoints);

    const auto apf = plan_apf(req);
    CHECK(apf.status != PlanStatus::Reached);
}

TEST_CASE("candidate selection wants strictly lower potential, then distance") {
    PlannerParams pr;
    const Vec2 target{1.0, 0.0};
    GaussField field(target, {}, pr, 0.2);
    const std::vector<Vec2> cands{{0.0, 1.0}, {1.0, 0.0}, {0.5, 0.0}};
    double current = field.total({0.0, 0.0});
    double selected = 0.0;
    auto pick = select_bacteria(cands, current, target, field, &selected);
    REQUIRE(pick.has_value());
    CHECK(*pick == 1);
    CHECK(selected == field.total({1.0, 0.0}));

    // nothing beats the global minimum
    CHECK(!select_bacteria(cands, field.total(target), target, field));

    // exact tie on potential and distance: the first candidate wins
    GaussField origin_field({0.0, 0.0}, {}, pr, 0.2);
    const std::vector<Vec2> tie{{0.0, 2.0}, {0.0, -2.0}};
    auto t = select_bacteria(tie, origin_field.total({3.0, 0.0}), {0.0, 0.0},
                             origin_field);
    REQUIRE(t.has_value());
    CHECK(*t == 0);
}

TEST_CASE("stall detection: failed selection or re-entry into the window") {
    const std::vector<Vec2> lone{{2.0, 2.0}};
    const auto direct = detect_local_minimum(lone, true, 0.1, 8);
    REQUIRE(direct.has_value());
    CHECK(direct->position == Vec2{2.0, 2.0});
    CHECK(direct->step == 0);

    // a straight march never re-enters
    std::vector<Vec2> history;
    for (int i = 0; i < 40; ++i)
        history.push_back({0.1 * i, 0.0});
    CHECK(!detect_local_minimum(history, false, 0.1, 8));

    // returning near a previous position fires
    history.push_back(history[20] + Vec2{0.01, 0.0});
    CHECK(detect_local_minimum(history, false, 0.1, 8).has_value());

    // the window is 4 * n_bacteria positions: one short, then one inside
    const std::vector<Vec2> outside{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0},
                                    {3.0, 0.0}, {4.0, 0.0}, {0.01, 0.0}};
    CHECK(!detect_local_minimum(outside, false, 0.1, 1));
    const std::vector<Vec2> inside{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0},
                                   {3.0, 0.0}, {0.01, 0.0}};
    CHECK(detect_local_minimum(inside, false, 0.1, 1).has_value());

    // half the ring radius, strictly: 0.06 apart is not a stall at 0.05
    const std::vector<Vec2> apart{{0.0, 0.0}, {0.06, 0.0}};
    CHECK(!detect_local_minimum(apart, false, 0.1, 8));
    const std::vector<Vec2> close{{0.0, 0.0}, {0.04, 0.0}};
    CHECK(detect_local_minimum(close, false, 0.1, 8).has_value());
}

TEST_CASE("planner dispatch knows its names") {
    CHECK(is_planner_name("apf"));
    CHECK(is_planner_name("rvf"));
    CHECK(is_planner_name("crbapf"));
    CHECK(is_planner_name("rapf"));
    CHECK(is_planner_name("astar"));
    CHECK(!is_planner_name("dijkstra"));
    CHECK(!is_planner_name(""));
    CHECK(!is_planner_name("APF"));
    CHECK_THROWS_AS(plan("dijkstra", make_req({0, 0}, {1, 1})),
                    std::invalid_argument);
}

TEST_CASE("status names") {
    CHECK(to_string(PlanStatus::Reached) == "reached");
    CHECK(to_string(PlanStatus::NoPath) == "no_path");
    CHECK(to_string(PlanStatus::Timeout) == "timeout");
}
