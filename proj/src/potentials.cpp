#include "rapf/potentials.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rapf {

double quad_attractive(Vec2 p, Vec2 target, const PlannerParams& pr) {
    return 0.5 * pr.k_a * (p - target).norm_sq();
}

namespace {

// Repulsive bracket 1/d - 1/rho_0, zero outside the influence radius.
double quad_bracket(double d, double rho0) {
    return d <= rho0 ? 1.0 / d - 1.0 / rho0 : 0.0;
}

}  // namespace

double quad_repulsive(Vec2 p, std::span<const Obstacle> obstacles,
                      const PlannerParams& pr) {
    double sum = 0.0;
    for (const Obstacle& o : obstacles) {
        const double d = distance(p, o.center);
        if (d > pr.rho_0) continue;
        if (d == 0.0)
            throw std::domain_error("quad_repulsive: point on obstacle centre");
        const double b = quad_bracket(d, pr.rho_0);
        sum += 0.5 * pr.k_rep * b * b;
    }
    return sum;
}

double quad_total(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                  const PlannerParams& pr) {
    return quad_attractive(p, target, pr) + quad_repulsive(p, obstacles, pr);
}

Vec2 quad_gradient(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                   const PlannerParams& pr) {
    Vec2 force = (target - p) * pr.k_a;
    for (const Obstacle& o : obstacles) {
        const Vec2 away = p - o.center;
        const double d = away.norm();
        if (d > pr.rho_0) continue;
        if (d == 0.0)
            throw std::domain_error("quad_gradient: point on obstacle centre");
        const double b = quad_bracket(d, pr.rho_0);
        // -dJ_o/dp = k_rep (1/d - 1/rho_0) / d^2 * unit(away)
        force += away * (pr.k_rep * b / (d * d * d));
    }
    return force;
}

Vec2 vortex_force(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                  const PlannerParams& pr, Spin spin) {
    Vec2 force = (target - p) * pr.k_a;
    const double sign = spin == Spin::CCW ? 1.0 : -1.0;
    for (const Obstacle& o : obstacles) {
        const Vec2 away = p - o.center;
        const double d = away.norm();
        if (d > pr.rho_0) continue;
        if (d == 0.0)
            throw std::domain_error("vortex_force: point on obstacle centre");
        const double b = quad_bracket(d, pr.rho_0);
        const Vec2 grad = away * (-pr.k_rep * b / (d * d * d));
        force += Vec2{grad.y, -grad.x} * sign;
    }
    return force;
}

double gauss_attractive(Vec2 p, Vec2 target, const PlannerParams& pr) {
    return -pr.alpha_a * std::exp(-pr.mu_a * (p - target).norm_sq());
}

namespace {

double gauss_bump(double d2, double rl2, double ru2, double alpha_o,
                  double mu_o) {
    if (d2 > ru2) return 0.0;
    if (d2 < rl2) return kInfinitePotential;
    return alpha_o * std::exp(-mu_o * d2);
}

}  // namespace

double gauss_repulsive(Vec2 p, std::span<const Obstacle> obstacles,
                       const PlannerParams& pr) {
    const double rl2 = pr.rho_l * pr.rho_l;
    const double ru2 = pr.rho_u * pr.rho_u;
    double sum = 0.0;
    for (const Obstacle& o : obstacles)
        sum += gauss_bump((p - o.center).norm_sq(), rl2, ru2, pr.alpha_o,
                          pr.mu_o);
    return sum;
}

double gauss_repulsive_cr(Vec2 p, std::span<const Obstacle> obstacles,
                          const PlannerParams& pr, double rover_radius) {
    double sum = 0.0;
    for (const Obstacle& o : obstacles) {
        // Markers are not physical: no rover inflation, or a marker dropped
        // at the rover's own position could never be walked out of.
        const double rl = o.kind == ObstacleKind::Artificial
                              ? o.radius
                              : o.radius + rover_radius;
        const double ru = rl + pr.rho_u;
        sum += gauss_bump((p - o.center).norm_sq(), rl * rl, ru * ru,
                          pr.alpha_o, pr.mu_o);
    }
    return sum;
}

double gauss_total(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                   const PlannerParams& pr) {
    return gauss_attractive(p, target, pr) + gauss_repulsive(p, obstacles, pr);
}

double gauss_total_cr(Vec2 p, Vec2 target, std::span<const Obstacle> obstacles,
                      const PlannerParams& pr, double rover_radius) {
    return gauss_attractive(p, target, pr) +
           gauss_repulsive_cr(p, obstacles, pr, rover_radius);
}

std::vector<Vec2> bacteria_points(Vec2 p, const PlannerParams& pr,
                                  std::optional<Vec2> align_to) {
    double base = 0.0;
    if (align_to) {
        const Vec2 ray = *align_to - p;
        if (ray.norm_sq() == 0.0)
            throw std::domain_error("bacteria_points: align_to equals p");
        base = std::atan2(ray.y, ray.x);
    }
    const int n = pr.n_bacteria;
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const double a =
            base + 2.0 * std::numbers::pi * static_cast<double>(j) / n;
        out.push_back({p.x + pr.rho_b * std::cos(a),
                       p.y + pr.rho_b * std::sin(a)});
    }
    return out;
}

void DiscGrid::insert(Vec2 center, double reach, std::size_t index) {
    const long x0 = cell_coord(center.x - reach);
    const long x1 = cell_coord(center.x + reach);
    const long y0 = cell_coord(center.y - reach);
    const long y1 = cell_coord(center.y + reach);
    for (long ix = x0; ix <= x1; ++ix)
        for (long iy = y0; iy <= y1; ++iy)
            map_[key(ix, iy)].push_back(index);
}

const std::vector<std::size_t>* DiscGrid::bucket(Vec2 p) const {
    const auto it = map_.find(key(cell_coord(p.x), cell_coord(p.y)));
    return it == map_.end() ? nullptr : &it->second;
}

GaussField::GaussField(Vec2 target, std::span<const Obstacle> obstacles,
                       const PlannerParams& pr, double rover_radius,
                       std::uint64_t* eval_counter)
    : target_(target),
      alpha_a_(pr.alpha_a),
      mu_a_(pr.mu_a),
      alpha_o_(pr.alpha_o),
      mu_o_(pr.mu_o),
      rover_radius_(rover_radius),
      margin_(pr.rho_u),
      evals_(eval_counter) {
    discs_.reserve(obstacles.size());
    for (const Obstacle& o : obstacles) add_obstacle(o);
}

void GaussField::add_obstacle(const Obstacle& o) {
    const double rl = o.kind == ObstacleKind::Artificial
                          ? o.radius
                          : o.radius + rover_radius_ + kContactPad;
    const double ru = rl + margin_;
    grid_.insert(o.center, ru, discs_.size());
    discs_.push_back({o.center, rl * rl, ru * ru});
}

double GaussField::total(Vec2 p) const {
    if (evals_) ++*evals_;
    double sum = -alpha_a_ * std::exp(-mu_a_ * (p - target_).norm_sq());
    if (const auto* near = grid_.bucket(p)) {
        for (const std::size_t i : *near) {
            const Disc& d = discs_[i];
            const double d2 = (p - d.c).norm_sq();
            if (d2 > d.ru2) continue;
            if (d2 < d.rl2) return kInfinitePotential;
            sum += alpha_o_ * std::exp(-mu_o_ * d2);
        }
    }
    return sum;
}

QuadField::QuadField(Vec2 target, std::span<const Obstacle> obstacles,
                     const PlannerParams& pr, double rover_radius,
                     std::uint64_t* eval_counter)
    : target_(target), k_a_(pr.k_a), evals_(eval_counter) {
    discs_.reserve(obstacles.size());
    for (const Obstacle& o : obstacles) {
        const double contact = o.radius + rover_radius;
        const double rho0 = contact + pr.rho_0;
        grid_.insert(o.center, rho0, discs_.size());
        discs_.push_back({o.center, rho0, pr.k_rep * contact * contact});
    }
}

Vec2 QuadField::force(Vec2 p) const {
    if (evals_) ++*evals_;
    Vec2 f = (target_ - p) * k_a_;
    if (const auto* near = grid_.bucket(p)) {
        for (const std::size_t i : *near) {
            const Disc& ds = discs_[i];
            const Vec2 away = p - ds.c;
            const double d2 = away.norm_sq();
            if (d2 >= ds.rho0 * ds.rho0 || d2 == 0.0) continue;
            const double d = std::sqrt(d2);
            const double b = 1.0 / d - 1.0 / ds.rho0;
            f += away * (ds.k * b / (d2 * d));
        }
    }
    return f;
}

Vec2 QuadField::vortex_force(Vec2 p, Spin spin) const {
    if (evals_) ++*evals_;
    Vec2 f = (target_ - p) * k_a_;
    const double sign = spin == Spin::CCW ? 1.0 : -1.0;
    if (const auto* near = grid_.bucket(p)) {
        for (const std::size_t i : *near) {
            const Disc& ds = discs_[i];
            const Vec2 away = p - ds.c;
            const double d2 = away.norm_sq();
            if (d2 >= ds.rho0 * ds.rho0 || d2 == 0.0) continue;
            const double d = std::sqrt(d2);
            const double b = 1.0 / d - 1.0 / ds.rho0;
            const Vec2 grad = away * (-ds.k * b / (d2 * d));
            f += Vec2{grad.y, -grad.x} * sign;
        }
    }
    return f;
}

double QuadField::total(Vec2 p) const {
    if (evals_) ++*evals_;
    double sum = 0.5 * k_a_ * (p - target_).norm_sq();
    if (const auto* near = grid_.bucket(p)) {
        for (const std::size_t i : *near) {
            const Disc& ds = discs_[i];
            const double d = distance(p, ds.c);
            if (d > ds.rho0) continue;
            const double b = 1.0 / d - 1.0 / ds.rho0;
            sum += 0.5 * ds.k * b * b;
        }
    }
    return sum;
}

}  // namespace rapf
