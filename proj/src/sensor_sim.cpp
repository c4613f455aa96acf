#include "rapf/sensor_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rapf {

std::string_view to_string(TrialStatus s) {
    switch (s) {
        case TrialStatus::Reached: return "reached";
        case TrialStatus::NoPath: return "no_path";
        case TrialStatus::Timeout: return "timeout";
        case TrialStatus::Collision: return "collision";
    }
    return "unknown";
}

bool detect(Vec2 position, double heading, const Obstacle& o,
            const SensorModel& sensor) {
    const Vec2 rel = o.center - position;
    const double d = rel.norm();
    if (d - o.radius > sensor.range) return false;
    if (d <= o.radius) return true;  // the disc fills the view
    const double bearing =
        std::fabs(std::remainder(std::atan2(rel.y, rel.x) - heading,
                                 2.0 * std::numbers::pi));
    const double half_width = std::asin(std::min(1.0, o.radius / d));
    return bearing - half_width <= 0.5 * sensor.fov;
}

std::vector<std::size_t> detect_all(Vec2 position, double heading,
                                    std::span<const Obstacle> truth,
                                    const SensorModel& sensor) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (detect(position, heading, truth[i], sensor)) ids.push_back(i);
    return ids;
}

namespace {

// Cursor along a polyline. Each advance lands on the first point of the
// remaining polyline at straight-line distance step_size from the current
// position, so consecutive positions differ by exactly step_size. Only
// the final step is shorter, when the rest of the path fits inside the
// step circle.
struct WalkCursor {
    const Path* path = nullptr;
    std::size_t seg = 0;     // index of the segment's first vertex
    double off = 0.0;        // metres into the segment

    bool done() const {
        return !path || path->waypoints.size() < 2 ||
               seg + 1 >= path->waypoints.size();
    }

    Vec2 position() const {
        const auto& wp = path->waypoints;
        if (seg + 1 >= wp.size()) return wp.back();
        const Vec2 d = wp[seg + 1] - wp[seg];
        const double len = d.norm();
        return len > 0.0 ? wp[seg] + d * (off / len) : wp[seg];
    }

    Vec2 advance(double step_size) {
        const auto& wp = path->waypoints;
        const Vec2 p = position();
        double t0 = off;
        for (std::size_t s = seg; s + 1 < wp.size(); ++s, t0 = 0.0) {
            const Vec2 ab = wp[s + 1] - wp[s];
            const double len = ab.norm();
            if (len < 1e-15) continue;
            // |wp[s] + t*u - p| = step_size, u unit along the segment.
            const Vec2 u = ab / len;
            const Vec2 w = wp[s] - p;
            const double c = w.dot(u);
            const double disc = c * c - w.norm_sq() + step_size * step_size;
            if (disc >= 0.0) {
                const double t = -c + std::sqrt(disc);
                if (t >= t0 - 1e-12 && t <= len + 1e-12) {
                    seg = s;
                    off = std::min(t, len);
                    return wp[s] + u * off;
                }
            }
        }
        seg = wp.size() - 1;  // whole remainder is inside the step circle
        off = 0.0;
        return wp.back();
    }
};

}  // namespace

TrialOutcome run_trial(const Scenario& scenario, std::string_view planner,
                       const PlannerParams& params, const SensorModel& sensor,
                       std::uint64_t seed, bool omniscient,
                       const TrialLimits& limits, bool keep_trace) {
    PlannerParams pr = params;
    pr.goal_margin = std::min(params.goal_margin, scenario.goal_radius);
    validate(pr);

    const std::span<const Obstacle> truth = scenario.obstacles;
    TrialOutcome out;
    Vec2 pos = scenario.start;
    double heading =
        std::atan2(scenario.goal_center.y - pos.y, scenario.goal_center.x - pos.x);
    out.walked.waypoints.push_back(pos);

    std::vector<double> min_center_dist(truth.size());
    std::vector<char> seen(truth.size(), 0);
    for (std::size_t i = 0; i < truth.size(); ++i)
        min_center_dist[i] = distance(pos, truth[i].center);

    PlanRequest req;
    req.target = scenario.goal_center;
    req.params = pr;
    req.rover_radius = scenario.rover_radius;
    req.domain = Rect{{0.0, 0.0}, scenario.world_size};
    if (omniscient)
        req.known_obstacles.assign(truth.begin(), truth.end());

    std::vector<Obstacle> artificial;  // carried across replans
    WalkCursor cursor;
    Path active;

    const auto in_goal = [&](Vec2 p) {
        return distance(p, scenario.goal_center) <= scenario.goal_radius;
    };

    // One trace row per walked pose; the flag marks a replan made there.
    if (keep_trace) out.trace.push_back({0, pos, heading, false});

    if (in_collision(pos, scenario.rover_radius, truth)) {
        out.status = TrialStatus::Collision;
        return out;
    }
    if (in_goal(pos)) {
        out.status = TrialStatus::Reached;
        return out;
    }

    out.status = TrialStatus::Timeout;  // walk budget default
    for (std::size_t step = 0; step < limits.max_walk_steps; ++step) {
        bool replanned = false;
        if (!omniscient) {
            for (std::size_t id : detect_all(pos, heading, truth, sensor)) {
                if (seen[id]) continue;
                seen[id] = 1;
                req.known_obstacles.push_back(truth[id]);
                replanned = true;
            }
        }
        if (replanned || cursor.done()) {
            req.start = pos;
            req.rng_seed =
                seed + 0x9E3779B97F4A7C15ull *
                           static_cast<std::uint64_t>(out.replan_count);
            std::vector<Obstacle> known = req.known_obstacles;
            known.insert(known.end(), artificial.begin(), artificial.end());
            PlanRequest attempt = req;
            attempt.known_obstacles = std::move(known);
            PlanResult plan_res = plan(planner, attempt);
            ++out.replan_count;
            out.planning_time += plan_res.wall_time;
            out.potential_evals += plan_res.potential_evals;
            artificial.insert(artificial.end(),
                              plan_res.artificial_obstacles.begin(),
                              plan_res.artificial_obstacles.end());
            if (plan_res.status != PlanStatus::Reached) {
                out.status = plan_res.status == PlanStatus::NoPath
                                 ? TrialStatus::NoPath
                                 : TrialStatus::Timeout;
                break;
            }
            active = std::move(plan_res.path);
            cursor = WalkCursor{&active};
            replanned = true;
        }
        if (keep_trace && replanned) out.trace.back().replanned = true;

        const Vec2 next = cursor.advance(pr.step_size);
        if (distance(next, pos) > 1e-12)
            heading = std::atan2(next.y - pos.y, next.x - pos.x);
        pos = next;
        out.walked.waypoints.push_back(pos);
        for (std::size_t i = 0; i < truth.size(); ++i)
            min_center_dist[i] =
                std::min(min_center_dist[i], distance(pos, truth[i].center));
        if (keep_trace)
            out.trace.push_back({step + 1, pos, heading, false});

        if (in_collision(pos, scenario.rover_radius, truth)) {
            out.status = TrialStatus::Collision;
            break;
        }
        if (in_goal(pos)) {
            out.status = TrialStatus::Reached;
            break;
        }
    }

    out.walked_length = out.walked.length();
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (seen[i] || omniscient)
            out.safety_samples.push_back(
                {i, min_center_dist[i], truth[i].radius});
    return out;
}

}  // namespace rapf
