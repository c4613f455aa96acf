#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rapf/geometry.hpp"

using namespace rapf;

TEST_CASE("vector arithmetic") {
    const Vec2 a{3.0, 4.0};
    const Vec2 b{1.0, -2.0};
    CHECK(a + b == Vec2{4.0, 2.0});
    CHECK(a - b == Vec2{2.0, 6.0});
    CHECK(a * 2.0 == Vec2{6.0, 8.0});
    CHECK(2.0 * a == Vec2{6.0, 8.0});
    CHECK(a / 2.0 == Vec2{1.5, 2.0});
    CHECK(a.dot(b) == doctest::Approx(-5.0));
    CHECK(a.norm_sq() == doctest::Approx(25.0));
    CHECK(a.norm() == doctest::Approx(5.0));

    Vec2 c = a;
    c += b;
    CHECK(c == Vec2{4.0, 2.0});
}

TEST_CASE("normalized is unit length and safe at zero") {
    CHECK(Vec2{3.0, 4.0}.normalized() == Vec2{0.6, 0.8});
    CHECK(Vec2{0.0, 0.0}.normalized() == Vec2{0.0, 0.0});
    CHECK(Vec2{1e-200, 0.0}.normalized().norm() == doctest::Approx(1.0));
}

TEST_CASE("perp rotates a quarter turn counterclockwise") {
    CHECK(Vec2{1.0, 0.0}.perp() == Vec2{0.0, 1.0});
    CHECK(Vec2{0.0, 1.0}.perp() == Vec2{-1.0, 0.0});
    const Vec2 v{2.0, -3.0};
    CHECK(v.perp().dot(v) == doctest::Approx(0.0));
    CHECK(v.perp().norm() == doctest::Approx(v.norm()));
}

TEST_CASE("distance is a metric") {
    CHECK(distance({1.0, 2.0}, {4.0, 6.0}) == doctest::Approx(5.0));
    CHECK(distance({1.0, 2.0}, {1.0, 2.0}) == 0.0);
    const Vec2 p{0.0, 0.0}, q{2.0, 1.0}, r{5.0, -3.0};
    CHECK(distance(p, q) == distance(q, p));
    CHECK(distance(p, r) <= distance(p, q) + distance(q, r));
}

TEST_CASE("clearance and collision against a disc") {
    const Obstacle o{{3.0, 0.0}, 1.0, ObstacleKind::Rock};
    CHECK(clearance({0.0, 0.0}, o) == doctest::Approx(2.0));
    CHECK(clearance({3.0, 0.0}, o) == doctest::Approx(-1.0));

    const std::vector<Obstacle> small{{{0.0, 0.0}, 0.25, ObstacleKind::Rock}};
    CHECK(in_collision({0.4, 0.0}, 0.25, small));   // 0.4 < 0.5
    CHECK(!in_collision({0.5, 0.0}, 0.25, small));  // touching is not overlap
    CHECK(!in_collision({0.6, 0.0}, 0.25, small));
    CHECK(!in_collision({0.4, 0.0}, 0.25, {}));

    // growing the disc can only reduce clearance
    const Obstacle bigger{{3.0, 0.0}, 1.5, ObstacleKind::Crater};
    CHECK(clearance({0.0, 0.0}, bigger) < clearance({0.0, 0.0}, o));
}

TEST_CASE("rectangle containment is inclusive") {
    const Rect r{{1.0, 2.0}, {4.0, 6.0}};
    CHECK(r.width() == doctest::Approx(3.0));
    CHECK(r.height() == doctest::Approx(4.0));
    CHECK(r.area() == doctest::Approx(12.0));
    CHECK(r.contains({1.0, 2.0}));
    CHECK(r.contains({4.0, 6.0}));
    CHECK(r.contains({2.5, 3.0}));
    CHECK(!r.contains({0.999, 3.0}));
    CHECK(!r.contains({2.5, 6.001}));
}

TEST_CASE("path length sums the polyline") {
    Path p;
    CHECK(p.empty());
    CHECK(p.length() == 0.0);
    p.waypoints = {{0.0, 0.0}};
    CHECK(p.length() == 0.0);
    p.waypoints = {{0.0, 0.0}, {3.0, 0.0}, {3.0, 4.0}};
    CHECK(p.size() == 3);
    CHECK(p.length() == doctest::Approx(7.0));
}
