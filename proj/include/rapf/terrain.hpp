#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rapf/scenario.hpp"

namespace rapf {

// Exponential size-frequency model of surface debris. cumulative_area(d) is
// the fraction of ground covered by pieces of diameter >= d, k exp(-q d);
// cumulative_number(d) is the corresponding count per square metre,
//   (4 q k / pi) (exp(-q d)/d - q Ei(-q d)).
struct AbundanceModel {
    double k = 0.02;    // cumulative area fraction amplitude
    double q = 1.6;     // 1/m decay
    double d_min = 0.065;  // sampled diameter range, metres
    double d_max = 2.0;
};

double cumulative_area(const AbundanceModel& m, double d);
double cumulative_number(const AbundanceModel& m, double d);

// Truncated CDF over [d_min, d_max] used for inverse-transform sampling:
//   CDF(d) = (N(d_min) - N(d)) / (N(d_min) - N(d_max)).
double truncated_cdf(const AbundanceModel& m, double d);

// n diameters drawn by inverse transform (bisection on the truncated CDF).
std::vector<double> sample_diameters(const AbundanceModel& m, std::size_t n,
                                     std::mt19937_64& rng);

struct ScenarioSpec {
    std::string name;
    int rock_count = 0;
    int crater_count = 0;
    AbundanceModel rock_model{0.02, 1.6, 0.065, 2.0};
    AbundanceModel crater_model{0.15, 1.0, 0.3, 4.0};
    double rock_area_fraction = 0.018;
    double crater_area_fraction = 0.15;
    double critical_diameter = 0.065;  // smaller rocks are not emitted
    Vec2 world_size{30.0, 30.0};
    Rect obstacle_region{{5.0, 5.0}, {25.0, 25.0}};
    Vec2 start{2.0, 2.0};
    Vec2 goal_center{28.0, 28.0};
    double goal_radius = 0.5;
    double rover_radius = 0.2;
};

// Fixed rock/crater census presets. a, b, c carry 15% crater coverage;
// a11, b11, c11 the 11% variant. Throws std::invalid_argument on unknown
// names. Matching is case-insensitive.
ScenarioSpec preset(std::string_view name);
std::vector<std::string> preset_names();

// Samples diameters for both classes, rescales each class multiplicatively
// so its total disc area hits the configured fraction of the obstacle
// region, then places centres uniformly in the region, rejecting any that
// overlap the start or goal discs. Fully determined by the seed.
Scenario generate_scenario(const ScenarioSpec& spec, std::uint64_t seed);

}  // namespace rapf
