#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rapf/geometry.hpp"
#include "rapf/params.hpp"

namespace rapf {

// Sentinel for the forbidden zone of the Gaussian field. IEEE infinity is
// totally ordered above every finite value and absorbing under addition,
// which is exactly the contract the planners rely on.
inline constexpr double kInfinitePotential =
    std::numeric_limits<double>::infinity();

// --- Quadratic field, parameters taken from PlannerParams as-is ---

// 1/2 k_a d^2 toward the target.
double quad_attractive(Vec2 p, Vec2 target, const PlannerParams& pr);

// Sum of 1/2 k_rep (1/d - 1/rho_0)^2 over obstacles with centre distance
// d <= rho_0; zero beyond. Throws std::domain_error on d == 0.
double quad_repulsive(Vec2 p, std::span<const Obstacle> obstacles,
                      const PlannerParams& pr);

double quad_total(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                  const PlannerParams& pr);

// Analytic force -grad J of the quadratic field. Throws std::domain_error
// when p coincides with an obstacle centre.
Vec2 quad_gradient(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                   const PlannerParams& pr);

// Vortex variant: inside an obstacle's influence radius its gradient
// contribution is rotated 90 degrees instead of negated, so the field
// follows equipotential contours around the obstacle. Spin picks the side:
// CCW maps a gradient g to (g.y, -g.x). The attractive term is never
// rotated, and the rotation preserves the contribution's magnitude.
Vec2 vortex_force(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                  const PlannerParams& pr, Spin spin);

// --- Gaussian field ---
// Distances enter these potentials squared: the attractive well is
// -alpha_a exp(-mu_a d^2) and the repulsive bump alpha_o exp(-mu_o d^2).

double gauss_attractive(Vec2 p, Vec2 target, const PlannerParams& pr);

// Piecewise per obstacle on centre distance d: zero beyond rho_u, infinite
// sentinel below rho_l, alpha_o exp(-mu_o d^2) in the annulus between.
// Flat variant reads rho_l/rho_u straight from the parameters; the
// changing-radii variant derives them per obstacle as
//   rho_l = obstacle.radius + rover_radius, rho_u = rho_l + pr.rho_u,
// except artificial markers, whose rho_l is the bare marker radius: they
// cannot be collided with, and inflating them would trap a rover standing
// where one is dropped.
double gauss_repulsive(Vec2 p, std::span<const Obstacle> obstacles,
                       const PlannerParams& pr);
double gauss_repulsive_cr(Vec2 p, std::span<const Obstacle> obstacles,
                          const PlannerParams& pr, double rover_radius);

double gauss_total(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                   const PlannerParams& pr);
double gauss_total_cr(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                      const PlannerParams& pr, double rover_radius);

// --- Bacteria candidate ring ---
// n_bacteria points on the circle of radius rho_b around p, at angles
// 2 pi j / n_bacteria for j = 1..n_bacteria. With align_to set, the ring is
// rotated so the j = n_bacteria point lies exactly on the ray from p toward
// align_to. Throws std::domain_error when align_to coincides with p.
std::vector<Vec2> bacteria_points(Vec2 p, const PlannerParams& pr,
                                  std::optional<Vec2> align_to = std::nullopt);

// --- Field objects for the planning loops ---
// These bake per-obstacle radii once and report every evaluation to a
// caller-owned counter; the planners own no hidden state.

// Safety skin added to each contact radius inside GaussField. Keeps the
// straight chords between ring hops (sagitta < 4 mm at rho_b = 0.1) clear
// of the physical discs, so a rover sampling the chord cannot clip one.
inline constexpr double kContactPad = 0.02;

// Uniform-grid index over disc reach boxes. A disc is filed under every
// cell its bounding box touches, so a query cell's bucket is a superset of
// the discs whose influence can reach any point in that cell; evaluation
// over the bucket is exact, the grid only prunes.
class DiscGrid {
public:
    explicit DiscGrid(double cell = 1.0) : cell_(cell) {}

    void insert(Vec2 center, double reach, std::size_t index);
    // Indices filed under p's cell; nullptr when the cell is empty.
    const std::vector<std::size_t>* bucket(Vec2 p) const;

private:
    long cell_coord(double x) const {
        return static_cast<long>(std::floor(x / cell_));
    }
    static std::uint64_t key(long ix, long iy) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix))
                << 32) |
               static_cast<std::uint32_t>(iy);
    }
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> map_;
};

// Gaussian field with changing radii: per obstacle,
//   rho_l = radius + rover_radius + kContactPad, rho_u = rho_l + pr.rho_u
// (bare radius for artificial markers, as above). add_obstacle admits
// artificial obstacles mid-plan.
class GaussField {
public:
    GaussField(Vec2 target, std::span<const Obstacle> obstacles,
               const PlannerParams& pr, double rover_radius,
               std::uint64_t* eval_counter = nullptr);

    double total(Vec2 p) const;
    void add_obstacle(const Obstacle& o);
    Vec2 target() const { return target_; }

private:
    struct Disc {
        Vec2 c;
        double rl2;  // squared lower radius
        double ru2;  // squared upper radius
    };
    std::vector<Disc> discs_;
    DiscGrid grid_;
    Vec2 target_;
    double alpha_a_, mu_a_, alpha_o_, mu_o_, rover_radius_, margin_;
    std::uint64_t* evals_;
};

// Quadratic field the descent planners walk. Each obstacle's influence
// radius is inflated by its contact radius (obstacle + rover) and its gain
// scaled by the squared contact radius, so multi-metre craters repel as
// strongly at their rim as pebbles do at theirs.
class QuadField {
public:
    QuadField(Vec2 target, std::span<const Obstacle> obstacles,
              const PlannerParams& pr, double rover_radius,
              std::uint64_t* eval_counter = nullptr);

    Vec2 force(Vec2 p) const;              // -grad J
    Vec2 vortex_force(Vec2 p, Spin spin) const;
    double total(Vec2 p) const;

private:
    struct Disc {
        Vec2 c;
        double rho0;  // inflated influence radius
        double k;     // scaled repulsive gain
    };
    std::vector<Disc> discs_;
    DiscGrid grid_;
    Vec2 target_;
    double k_a_;
    std::uint64_t* evals_;
};

}  // namespace rapf
