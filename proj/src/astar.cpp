#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "rapf/astar_grid.hpp"
#include "rapf/planners.hpp"

namespace rapf::grid {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

SearchResult shortest_path(const SearchInput& in) {
    SearchResult out;
    const long w = in.width, h = in.height, n = w * h;
    if (w <= 0 || h <= 0 || in.goal < 0 || in.goal >= n ||
        in.blocked == nullptr)
        throw std::invalid_argument("grid search: bad input");
    if (in.blocked[in.goal]) return out;

    std::vector<double> dist(static_cast<std::size_t>(n),
                             std::numeric_limits<double>::infinity());
    std::vector<long> parent(static_cast<std::size_t>(n), -1);
    using Entry = std::pair<double, long>;  // (priority, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

    const long gi = in.goal % w, gj = in.goal / w;
    const auto h_of = [&](long node) {
        if (!in.heuristic) return 0.0;
        const double dx = static_cast<double>(std::labs(node % w - gi));
        const double dy = static_cast<double>(std::labs(node / w - gj));
        return in.edge * (std::max(dx, dy) + (kSqrt2 - 1.0) * std::min(dx, dy));
    };

    for (const auto& [node, cost] : in.sources) {
        if (node < 0 || node >= n || in.blocked[node]) continue;
        if (cost < dist[node]) {
            dist[node] = cost;
            heap.emplace(cost + h_of(node), node);
        }
    }

    long pops = 0;
    while (!heap.empty()) {
        const auto [prio, node] = heap.top();
        heap.pop();
        if (prio - h_of(node) > dist[node] + 1e-12) continue;  // stale
        if (node == in.goal) break;
        if (in.pop_cap >= 0 && ++pops > in.pop_cap) {
            out.kind = SearchResult::Kind::Capped;
            return out;
        }
        const long ci = node % w, cj = node / w;
        for (int dj = -1; dj <= 1; ++dj) {
            for (int di = -1; di <= 1; ++di) {
                if (di == 0 && dj == 0) continue;
                const long ni = ci + di, nj = cj + dj;
                if (ni < 0 || ni >= w || nj < 0 || nj >= h) continue;
                const long next = nj * w + ni;
                if (in.blocked[next]) continue;
                const bool diagonal = di != 0 && dj != 0;
                if (diagonal &&
                    (in.blocked[cj * w + ni] || in.blocked[nj * w + ci]))
                    continue;  // no squeezing through corners
                const double nd =
                    dist[node] + (diagonal ? in.edge * kSqrt2 : in.edge);
                if (nd < dist[next]) {
                    dist[next] = nd;
                    parent[next] = node;
                    heap.emplace(nd + h_of(next), next);
                }
            }
        }
    }

    if (!std::isfinite(dist[in.goal])) return out;
    out.kind = SearchResult::Kind::Found;
    out.cost = dist[in.goal];
    for (long node = in.goal; node >= 0; node = parent[node])
        out.nodes.push_back(node);
    std::reverse(out.nodes.begin(), out.nodes.end());
    return out;
}

}  // namespace rapf::grid

namespace rapf {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

class Stopwatch {
    using clock = std::chrono::steady_clock;
    clock::time_point t0_ = clock::now();

public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - t0_).count();
    }
};

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm_sq();
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return distance(p, a + ab * t);
}

bool segment_clear(Vec2 a, Vec2 b, std::span<const Obstacle> obstacles,
                   double rover_radius) {
    for (const Obstacle& o : obstacles)
        if (point_segment_distance(o.center, a, b) <= o.radius + rover_radius)
            return false;
    return true;
}

// Greedy string pulling: from each anchor, extend the straight segment one
// waypoint at a time while it stays clear. Linear in path length; the
// unsmoothed lattice edge is the safe fallback when no extension holds.
void smooth_path(std::vector<Vec2>& wp, std::span<const Obstacle> obstacles,
                 double rover_radius) {
    if (wp.size() < 3) return;
    std::vector<Vec2> out;
    out.push_back(wp.front());
    std::size_t anchor = 0;
    while (anchor + 1 < wp.size()) {
        std::size_t far = anchor + 1;
        while (far + 1 < wp.size() &&
               segment_clear(wp[anchor], wp[far + 1], obstacles, rover_radius))
            ++far;
        out.push_back(wp[far]);
        anchor = far;
    }
    wp = std::move(out);
}

}  // namespace

PlanResult plan_astar(const PlanRequest& req) {
    validate(req.params);
    Stopwatch timer;
    PlanResult res;
    res.path.waypoints.push_back(req.start);

    const double g = req.params.astar_grid_cell;
    Rect dom = req.domain.value_or(Rect{});
    if (!req.domain) {
        dom = Rect{req.start, req.start};
        const auto grow = [&dom](Vec2 p, double pad) {
            dom.min.x = std::min(dom.min.x, p.x - pad);
            dom.min.y = std::min(dom.min.y, p.y - pad);
            dom.max.x = std::max(dom.max.x, p.x + pad);
            dom.max.y = std::max(dom.max.y, p.y + pad);
        };
        grow(req.start, 1.0);
        grow(req.target, 1.0);
        for (const Obstacle& o : req.known_obstacles)
            grow(o.center, o.radius + 1.0);
    }

    const long i0 = static_cast<long>(std::ceil(dom.min.x / g - 1e-9));
    const long i1 = static_cast<long>(std::floor(dom.max.x / g + 1e-9));
    const long j0 = static_cast<long>(std::ceil(dom.min.y / g - 1e-9));
    const long j1 = static_cast<long>(std::floor(dom.max.y / g + 1e-9));
    const long w = i1 - i0 + 1, h = j1 - j0 + 1;
    if (w < 1 || h < 1) {
        res.status = PlanStatus::NoPath;
        res.wall_time = timer.seconds();
        return res;
    }
    if (w * h > 16'000'000)
        throw std::invalid_argument("astar grid exceeds 16M nodes");

    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(w * h), 0);
    const double half_diag = 0.5 * kSqrt2 * g;
    for (const Obstacle& o : req.known_obstacles) {
        const double thr = o.radius + req.rover_radius + half_diag;
        const double thr2 = thr * thr;
        const long bi0 = std::max(i0, static_cast<long>(
                                          std::floor((o.center.x - thr) / g))),
                   bi1 = std::min(i1, static_cast<long>(
                                          std::ceil((o.center.x + thr) / g))),
                   bj0 = std::max(j0, static_cast<long>(
                                          std::floor((o.center.y - thr) / g))),
                   bj1 = std::min(j1, static_cast<long>(
                                          std::ceil((o.center.y + thr) / g)));
        for (long j = bj0; j <= bj1; ++j)
            for (long i = bi0; i <= bi1; ++i) {
                const Vec2 p{i * g, j * g};
                if ((p - o.center).norm_sq() <= thr2)
                    blocked[(j - j0) * w + (i - i0)] = 1;
            }
    }

    const auto clamp_idx = [](long v, long lo, long hi) {
        return std::min(std::max(v, lo), hi);
    };
    const auto snap = [&](Vec2 p) {
        const long ii = clamp_idx(std::lround(p.x / g), i0, i1);
        const long jj = clamp_idx(std::lround(p.y / g), j0, j1);
        return std::pair<long, long>{ii, jj};
    };
    const auto pos_of = [&](long node) {
        const long ii = i0 + node % w, jj = j0 + node / w;
        return Vec2{ii * g, jj * g};
    };

    const auto [si, sj] = snap(req.start);
    const auto [gi, gj] = snap(req.target);
    const long goal_node = (gj - j0) * w + (gi - i0);

    grid::SearchInput in;
    in.width = w;
    in.height = h;
    in.blocked = blocked.data();
    in.goal = goal_node;
    in.edge = g;
    in.pop_cap = req.params.max_plan_steps;
    // Link the exact start pose to nearby free nodes the rover can reach on
    // a straight clear segment; the pose itself may sit inside the inflation
    // band after a mid-drive replan.
    for (long dj = -1; dj <= 1; ++dj)
        for (long di = -1; di <= 1; ++di) {
            const long ii = si + di, jj = sj + dj;
            if (ii < i0 || ii > i1 || jj < j0 || jj > j1) continue;
            const long node = (jj - j0) * w + (ii - i0);
            if (blocked[node]) continue;
            const Vec2 p{ii * g, jj * g};
            const double hop = distance(req.start, p);
            if (hop > 1e-12 &&
                !segment_clear(req.start, p, req.known_obstacles,
                               req.rover_radius))
                continue;
            in.sources.emplace_back(node, hop);
        }

    const auto found = grid::shortest_path(in);
    res.wall_time = timer.seconds();
    if (found.kind == grid::SearchResult::Kind::Capped ||
        timer.seconds() > req.params.max_time) {
        res.status = PlanStatus::Timeout;
        return res;
    }
    if (found.kind != grid::SearchResult::Kind::Found) {
        res.status = PlanStatus::NoPath;
        return res;
    }

    auto& wp = res.path.waypoints;
    for (long node : found.nodes) {
        const Vec2 p = pos_of(node);
        if (distance(p, wp.back()) > 1e-12) wp.push_back(p);
    }
    if (distance(req.target, wp.back()) > 1e-12 &&
        segment_clear(wp.back(), req.target, req.known_obstacles,
                      req.rover_radius))
        wp.push_back(req.target);
    smooth_path(wp, req.known_obstacles, req.rover_radius);

    res.status = distance(wp.back(), req.target) < req.params.goal_margin
                     ? PlanStatus::Reached
                     : PlanStatus::NoPath;
    res.wall_time = timer.seconds();
    return res;
}

}  // namespace rapf
