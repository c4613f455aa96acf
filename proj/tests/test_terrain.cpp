#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "rapf/terrain.hpp"

using namespace rapf;

namespace {

const AbundanceModel kRocks{0.02, 1.6, 0.065, 2.0};
const AbundanceModel kCraters{0.15, 1.0, 0.3, 4.0};

}  // namespace

TEST_CASE("cumulative area is the exponential law") {
    CHECK(cumulative_area(kRocks, 0.5) ==
          doctest::Approx(0.02 * std::exp(-0.8)).epsilon(1e-14));
    CHECK(cumulative_area(kRocks, 0.065) ==
          doctest::Approx(oracle::kRockAreaAtCritical).epsilon(1e-14));
    CHECK(cumulative_area(kCraters, 1.0) ==
          doctest::Approx(0.15 * std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("cumulative number matches high-precision references") {
    for (const auto& g : oracle::kRockNumber) {
        CHECK(cumulative_number(kRocks, g.x) ==
              doctest::Approx(g.value).epsilon(1e-12));
    }
    for (const auto& g : oracle::kCraterNumber) {
        CHECK(cumulative_number(kCraters, g.x) ==
              doctest::Approx(g.value).epsilon(1e-12));
    }
    CHECK_THROWS_AS(cumulative_number(kRocks, 0.0), std::domain_error);
    CHECK_THROWS_AS(cumulative_number(kRocks, -1.0), std::domain_error);
}

TEST_CASE("truncated cdf spans [0, 1] and matches references") {
    CHECK(truncated_cdf(kRocks, kRocks.d_min) == 0.0);
    CHECK(truncated_cdf(kRocks, kRocks.d_max) == doctest::Approx(1.0));
    CHECK(truncated_cdf(kRocks, 0.01) == 0.0);
    CHECK(truncated_cdf(kRocks, 5.0) == 1.0);
    for (const auto& g : oracle::kRockCdf) {
        CHECK(truncated_cdf(kRocks, g.x) ==
              doctest::Approx(g.value).epsilon(1e-12));
    }
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double d =
            kRocks.d_min + (kRocks.d_max - kRocks.d_min) * i / 200.0;
        const double c = truncated_cdf(kRocks, d);
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("diameter sampling is bounded and seed-determined") {
    std::mt19937_64 rng(42);
    const auto d1 = sample_diameters(kRocks, 1000, rng);
    REQUIRE(d1.size() == 1000);
    for (double d : d1) {
        CHECK(d >= kRocks.d_min);
        CHECK(d <= kRocks.d_max);
    }
    std::mt19937_64 rng2(42);
    CHECK(sample_diameters(kRocks, 1000, rng2) == d1);
    std::mt19937_64 rng3(7);
    CHECK(sample_diameters(kRocks, 1000, rng3) != d1);

    // most mass sits near the small end of an exponential census
    const double median_count = static_cast<double>(
        std::count_if(d1.begin(), d1.end(), [](double d) { return d < 0.2; }));
    CHECK(median_count / 1000.0 > 0.5);
}

TEST_CASE("presets carry the fixed census") {
    const ScenarioSpec a = preset("a");
    CHECK(a.rock_count == 42);
    CHECK(a.crater_count == 38);
    CHECK(a.rock_area_fraction == doctest::Approx(0.018));
    CHECK(a.crater_area_fraction == doctest::Approx(0.15));
    CHECK(preset("b").rock_count == 88);
    CHECK(preset("b").crater_count == 32);
    CHECK(preset("c").rock_count == 137);
    CHECK(preset("c").crater_count == 24);
    CHECK(preset("a11").crater_area_fraction == doctest::Approx(0.11));
    CHECK(preset("b11").rock_count == 88);
    CHECK(preset("c11").crater_area_fraction == doctest::Approx(0.11));
    CHECK(preset("A").rock_count == 42);  // case-insensitive
    CHECK(preset("C11").crater_count == 24);
    CHECK_THROWS_AS(preset("d"), std::invalid_argument);
    CHECK(preset_names().size() == 6);
}

TEST_CASE("generated fields hit the census and coverage exactly") {
    const ScenarioSpec spec = preset("a");
    const double region_area = spec.obstacle_region.area();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Scenario s = generate_scenario(spec, seed);
        CHECK(s.seed == seed);
        CHECK_NOTHROW(validate(s));

        int rocks = 0;
        int craters = 0;
        double rock_area = 0.0;
        double crater_area = 0.0;
        for (const auto& o : s.obstacles) {
            const double area = std::numbers::pi * o.radius * o.radius;
            if (o.kind == ObstacleKind::Rock) {
                ++rocks;
                rock_area += area;
                CHECK(2.0 * o.radius >= spec.critical_diameter);
            } else {
                REQUIRE(o.kind == ObstacleKind::Crater);
                ++craters;
                crater_area += area;
            }
            CHECK(spec.obstacle_region.contains(o.center));
            CHECK(distance(o.center, spec.start) >
                  o.radius + spec.rover_radius);
            CHECK(distance(o.center, spec.goal_center) >
                  o.radius + spec.goal_radius);
        }
        CHECK(rocks == 42);
        CHECK(craters == 38);
        CHECK(rock_area / region_area ==
              doctest::Approx(0.018).epsilon(1e-9));
        CHECK(crater_area / region_area ==
              doctest::Approx(0.15).epsilon(1e-9));
    }
}

TEST_CASE("generation is reproducible and seed-sensitive") {
    const ScenarioSpec spec = preset("b");
    const Scenario s1 = generate_scenario(spec, 9);
    const Scenario s2 = generate_scenario(spec, 9);
    REQUIRE(s1.obstacles.size() == s2.obstacles.size());
    for (std::size_t i = 0; i < s1.obstacles.size(); ++i) {
        CHECK(s1.obstacles[i].center == s2.obstacles[i].center);
        CHECK(s1.obstacles[i].radius == s2.obstacles[i].radius);
        CHECK(s1.obstacles[i].kind == s2.obstacles[i].kind);
    }
    const Scenario s3 = generate_scenario(spec, 10);
    CHECK(s1.obstacles[0].center != s3.obstacles[0].center);
}

TEST_CASE("impossible placement reports failure instead of spinning") {
    ScenarioSpec spec = preset("a");
    spec.goal_center = {15.0, 15.0};
    spec.goal_radius = 40.0;  // goal disc swallows the whole region
    CHECK_THROWS_AS(generate_scenario(spec, 1), std::runtime_error);
}
