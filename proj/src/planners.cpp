#include "rapf/planners.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <random>
#include <stdexcept>

namespace rapf {

std::string_view to_string(PlanStatus s) {
    switch (s) {
        case PlanStatus::Reached: return "reached";
        case PlanStatus::NoPath: return "no_path";
        case PlanStatus::Timeout: return "timeout";
    }
    return "unknown";
}

namespace {

class Stopwatch {
    using clock = std::chrono::steady_clock;
    clock::time_point t0_ = clock::now();

public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - t0_).count();
    }
};

// Unbiased enough for candidate counts and exactly reproducible everywhere,
// unlike std::uniform_int_distribution.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

constexpr double kForceEpsilon = 1e-9;
// Descent is stuck when a whole window of steps stays inside a small ball:
// force-balance jitter never leaves one, while a vortex orbit riding round a
// cluster translates and must be left to finish. Displacement, not progress
// toward the target, is the discriminator.
constexpr long kStallWindow = 2000;
constexpr double kStallBallSteps = 10.0;  // ball radius in units of step_size

PlanResult plan_descent(const PlanRequest& req, bool vortex) {
    validate(req.params);
    const PlannerParams& pr = req.params;
    Stopwatch timer;

    PlanResult res;
    std::uint64_t evals = 0;
    QuadField field(req.target, req.known_obstacles, pr, req.rover_radius,
                    &evals);
    res.path.waypoints.push_back(req.start);
    Vec2 cur = req.start;

    const double ball2 = kStallBallSteps * pr.step_size * kStallBallSteps *
                         pr.step_size;
    Vec2 window_pos = cur;
    double window_disp2 = 0.0;
    long window_start = 0;

    for (long step = 0;; ++step) {
        if (distance(cur, req.target) < pr.goal_margin) {
            res.status = PlanStatus::Reached;
            break;
        }
        if (step >= pr.max_plan_steps || timer.seconds() > pr.max_time) {
            res.status = PlanStatus::Timeout;
            break;
        }
        const Vec2 f =
            vortex ? field.vortex_force(cur, pr.spin) : field.force(cur);
        const double fn = f.norm();
        if (fn < kForceEpsilon) {
            if (std::getenv("RVF_DEBUG")) std::fprintf(stderr, "rvf eps\n");
            res.status = PlanStatus::NoPath;
            break;
        }
        const Vec2 next = cur + f * (pr.step_size / fn);
        if (in_collision(next, req.rover_radius, req.known_obstacles)) {
            if (std::getenv("RVF_DEBUG"))
                std::fprintf(stderr, "rvf clip at (%.2f,%.2f) step %ld\n",
                             next.x, next.y, step);
            res.status = PlanStatus::NoPath;
            break;
        }
        cur = next;
        res.path.waypoints.push_back(cur);
        window_disp2 = std::max(window_disp2, (cur - window_pos).norm_sq());
        if (step - window_start >= kStallWindow) {
            if (window_disp2 < ball2) {
                if (std::getenv("RVF_DEBUG"))
                    std::fprintf(stderr, "rvf ball at (%.2f,%.2f) step %ld\n",
                                 cur.x, cur.y, step);
                res.status = PlanStatus::NoPath;
                break;
            }
            window_pos = cur;
            window_disp2 = 0.0;
            window_start = step;
        }
    }
    res.potential_evals = evals;
    res.wall_time = timer.seconds();
    return res;
}

}  // namespace

PlanResult plan_apf(const PlanRequest& req) { return plan_descent(req, false); }

PlanResult plan_rvf(const PlanRequest& req) { return plan_descent(req, true); }

std::optional<std::size_t> select_bacteria(std::span<const Vec2> candidates,
                                           double current_potential,
                                           Vec2 target,
                                           const GaussField& field,
                                           double* selected_potential) {
    std::optional<std::size_t> best;
    double best_d2 = kInfinitePotential;
    double best_j = kInfinitePotential;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        // Strict comparison keeps the infinite sentinel total-ordered: a
        // candidate at infinity never qualifies, while a robot standing at
        // infinity accepts any finite candidate.
        const double j = field.total(candidates[i]);
        if (!(j < current_potential)) continue;
        const double d2 = (candidates[i] - target).norm_sq();
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
            best_j = j;
        }
    }
    if (best && selected_potential) *selected_potential = best_j;
    return best;
}

std::optional<LocalMinimumEvent> detect_local_minimum(
    std::span<const Vec2> history, bool selection_failed, double rho_b,
    int n_bacteria) {
    if (history.empty()) return std::nullopt;
    const Vec2 cur = history.back();
    const std::size_t here = history.size() - 1;
    if (selection_failed) return LocalMinimumEvent{cur, here};

    const std::size_t window = static_cast<std::size_t>(4 * n_bacteria);
    const std::size_t lo = here > window ? here - window : 0;
    const double thresh = 0.5 * rho_b;
    for (std::size_t i = lo; i < here; ++i)
        if (distance(history[i], cur) < thresh)
            return LocalMinimumEvent{cur, here};
    return std::nullopt;
}

namespace {

// Shared scaffolding of the bacteria planners. The potential at the robot
// is carried over from the selected candidate, so a normal step costs
// exactly n_bacteria evaluations.
struct BacteriaWalk {
    const PlanRequest& req;
    const PlannerParams& pr;
    Stopwatch timer;
    std::uint64_t evals = 0;
    GaussField field;
    Path path;
    double j_cur;
    long step = 0;

    explicit BacteriaWalk(const PlanRequest& r)
        : req(r),
          pr(r.params),
          field(r.target, r.known_obstacles, r.params, r.rover_radius,
                &evals) {
        path.waypoints.push_back(r.start);
        j_cur = field.total(r.start);
    }

    Vec2 cur() const { return path.waypoints.back(); }
    bool reached() const {
        return distance(cur(), req.target) < pr.goal_margin;
    }
    bool exhausted() const {
        return step >= pr.max_plan_steps || timer.seconds() > pr.max_time;
    }
    void move_to(Vec2 p, double potential) {
        path.waypoints.push_back(p);
        j_cur = potential;
    }

    PlanResult finish(PlanStatus status, std::vector<Obstacle> artificial = {}) {
        PlanResult res;
        res.status = status;
        res.path = std::move(path);
        res.artificial_obstacles = std::move(artificial);
        res.potential_evals = evals;
        res.wall_time = timer.seconds();
        return res;
    }
};

}  // namespace

PlanResult plan_crbapf(const PlanRequest& req) {
    validate(req.params);
    BacteriaWalk w(req);
    std::mt19937_64 rng(req.rng_seed);

    while (true) {
        if (w.reached()) return w.finish(PlanStatus::Reached);
        if (w.exhausted()) return w.finish(PlanStatus::Timeout);
        ++w.step;

        const auto cands = bacteria_points(w.cur(), w.pr);
        double j_sel = kInfinitePotential;
        const auto sel =
            select_bacteria(cands, w.j_cur, req.target, w.field, &j_sel);
        const auto minimum = detect_local_minimum(
            w.path.waypoints, !sel.has_value(), w.pr.rho_b, w.pr.n_bacteria);
        if (!minimum) {
            w.move_to(cands[*sel], j_sel);
            continue;
        }

        // Random-walk escape over finite-potential candidates.
        bool moved = false;
        for (int i = 0; i < w.pr.rw_steps && !w.exhausted(); ++i) {
            const auto ring = bacteria_points(w.cur(), w.pr);
            std::vector<Vec2> finite;
            std::vector<double> potentials;
            finite.reserve(ring.size());
            for (const Vec2& c : ring) {
                const double j = w.field.total(c);
                if (std::isfinite(j)) {
                    finite.push_back(c);
                    potentials.push_back(j);
                }
            }
            if (finite.empty()) break;
            const std::size_t pick = uniform_index(rng, finite.size());
            w.move_to(finite[pick], potentials[pick]);
            moved = true;
            ++w.step;
        }
        if (!moved) return w.finish(PlanStatus::NoPath);  // fully walled in
    }
}

PlanResult plan_rapf(const PlanRequest& req) {
    validate(req.params);
    BacteriaWalk w(req);
    std::vector<Obstacle> artificial;

    while (true) {
        if (w.reached()) return w.finish(PlanStatus::Reached, artificial);
        if (w.exhausted()) return w.finish(PlanStatus::Timeout, artificial);
        ++w.step;

        const auto cands = bacteria_points(w.cur(), w.pr, req.target);
        double j_sel = kInfinitePotential;
        const auto sel =
            select_bacteria(cands, w.j_cur, req.target, w.field, &j_sel);
        const auto minimum = detect_local_minimum(
            w.path.waypoints, !sel.has_value(), w.pr.rho_b, w.pr.n_bacteria);
        if (!minimum) {
            w.move_to(cands[*sel], j_sel);
            continue;
        }

        // Seal the dead end and restart the walk from the original start.
        if (static_cast<int>(artificial.size()) >= w.pr.max_artificial)
            return w.finish(PlanStatus::NoPath, artificial);
        const Obstacle plug{minimum->position, w.pr.rho_b,
                            ObstacleKind::Artificial};
        artificial.push_back(plug);
        w.field.add_obstacle(plug);

        // The plug only changes potentials within rho_b + rho_u of its
        // centre, and a selection at pose p reads nothing farther than
        // rho_b from p. Selections made strictly outside that reach would
        // come out identical on the restarted walk, so keep that prefix
        // and resume from its end instead of re-evaluating it hop by hop.
        const double reach = plug.radius + w.pr.rho_u + w.pr.rho_b;
        std::vector<Vec2> old = std::move(w.path.waypoints);
        std::size_t keep = 0;
        while (keep < old.size() &&
               distance(old[keep], plug.center) > reach)
            ++keep;
        old.resize(std::max<std::size_t>(keep, 1));  // old[0] is req.start
        w.path.waypoints = std::move(old);
        w.step += static_cast<long>(w.path.waypoints.size()) - 1;
        w.j_cur = w.field.total(w.cur());
    }
}

PlanResult plan(std::string_view planner, const PlanRequest& req) {
    if (planner == "apf") return plan_apf(req);
    if (planner == "rvf") return plan_rvf(req);
    if (planner == "crbapf") return plan_crbapf(req);
    if (planner == "rapf") return plan_rapf(req);
    if (planner == "astar") return plan_astar(req);
    throw std::invalid_argument("unknown planner: " + std::string(planner));
}

bool is_planner_name(std::string_view planner) {
    for (const char* name : kPlannerNames)
        if (planner == name) return true;
    return false;
}

}  // namespace rapf
