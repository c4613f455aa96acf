#include "rapf/terrain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rapf/expint.hpp"

namespace rapf {

double cumulative_area(const AbundanceModel& m, double d) {
    return m.k * std::exp(-m.q * d);
}

double cumulative_number(const AbundanceModel& m, double d) {
    if (!(d > 0.0))
        throw std::domain_error("cumulative_number: d must be positive");
    const double qd = m.q * d;
    return (4.0 * m.q * m.k / std::numbers::pi) *
           (std::exp(-qd) / d - m.q * expint_ei_neg(qd));
}

double truncated_cdf(const AbundanceModel& m, double d) {
    if (d <= m.d_min) return 0.0;
    if (d >= m.d_max) return 1.0;
    const double n_min = cumulative_number(m, m.d_min);
    const double n_max = cumulative_number(m, m.d_max);
    return (n_min - cumulative_number(m, d)) / (n_min - n_max);
}

namespace {

// Uniform double in [0, 1) from the top 53 bits; keeps sampling identical
// across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace

std::vector<double> sample_diameters(const AbundanceModel& m, std::size_t n,
                                     std::mt19937_64& rng) {
    if (!(m.d_min > 0.0 && m.d_min < m.d_max))
        throw std::invalid_argument("sample_diameters: need 0 < d_min < d_max");
    const double n_min = cumulative_number(m, m.d_min);
    const double n_max = cumulative_number(m, m.d_max);
    const double span = n_min - n_max;

    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = uniform01(rng);
        // Bisection on the monotone decreasing N(d): find d with
        // (N(d_min) - N(d)) / span = u.
        const double target = n_min - u * span;
        double lo = m.d_min, hi = m.d_max;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (cumulative_number(m, mid) > target)
                lo = mid;
            else
                hi = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

ScenarioSpec preset(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });

    ScenarioSpec spec;
    spec.name = key;
    if (key == "a" || key == "a11") {
        spec.rock_count = 42;
        spec.crater_count = 38;
    } else if (key == "b" || key == "b11") {
        spec.rock_count = 88;
        spec.crater_count = 32;
    } else if (key == "c" || key == "c11") {
        spec.rock_count = 137;
        spec.crater_count = 24;
    } else {
        throw std::invalid_argument("unknown preset: " + std::string(name));
    }
    if (key.size() > 1) spec.crater_area_fraction = 0.11;
    return spec;
}

std::vector<std::string> preset_names() {
    return {"a", "b", "c", "a11", "b11", "c11"};
}

namespace {

// Multiplicative diameter rescale so the class covers exactly the target
// fraction of the region.
void rescale_to_fraction(std::vector<double>& diameters, double fraction,
                         double region_area) {
    if (diameters.empty() || fraction <= 0.0) return;
    double area = 0.0;
    for (double d : diameters) area += 0.25 * std::numbers::pi * d * d;
    if (area <= 0.0) return;
    const double s = std::sqrt(fraction * region_area / area);
    for (double& d : diameters) d *= s;
}

}  // namespace

Scenario generate_scenario(const ScenarioSpec& spec, std::uint64_t seed) {
    Scenario s;
    s.world_size = spec.world_size;
    s.obstacle_region = spec.obstacle_region;
    s.start = spec.start;
    s.goal_center = spec.goal_center;
    s.goal_radius = spec.goal_radius;
    s.rover_radius = spec.rover_radius;
    s.seed = seed;

    std::mt19937_64 rng(seed);
    auto rock_d = sample_diameters(spec.rock_model,
                                   static_cast<std::size_t>(spec.rock_count),
                                   rng);
    auto crater_d = sample_diameters(
        spec.crater_model, static_cast<std::size_t>(spec.crater_count), rng);

    const double region_area = spec.obstacle_region.area();
    rescale_to_fraction(rock_d, spec.rock_area_fraction, region_area);
    rescale_to_fraction(crater_d, spec.crater_area_fraction, region_area);

    auto place = [&](double diameter, ObstacleKind kind) {
        const double r = 0.5 * diameter;
        const Rect& reg = spec.obstacle_region;
        for (int attempt = 0; attempt < 10000; ++attempt) {
            const Vec2 c{uniform_range(rng, reg.min.x, reg.max.x),
                         uniform_range(rng, reg.min.y, reg.max.y)};
            if (distance(c, spec.start) <= r + spec.rover_radius) continue;
            if (distance(c, spec.goal_center) <= r + spec.goal_radius) continue;
            s.obstacles.push_back({c, r, kind});
            return;
        }
        throw std::runtime_error(
            "generate_scenario: could not place an obstacle clear of the "
            "start and goal discs");
    };

    for (double d : rock_d)
        if (d > spec.critical_diameter) place(d, ObstacleKind::Rock);
    for (double d : crater_d) place(d, ObstacleKind::Crater);

    validate(s);
    return s;
}

}  // namespace rapf
