#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace rapf {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    constexpr double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    // Zero vector normalizes to zero.
    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{};
    }
    // 90 degree counter-clockwise rotation.
    constexpr Vec2 perp() const { return {-y, x}; }
};

constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

enum class ObstacleKind : std::uint8_t { Rock, Crater, Artificial };

struct Obstacle {
    Vec2 center;
    double radius = 0.0;  // metres, > 0
    ObstacleKind kind = ObstacleKind::Rock;
};

// Signed distance from a point to the obstacle edge; negative inside.
inline double clearance(Vec2 p, const Obstacle& o) {
    return distance(p, o.center) - o.radius;
}

// A disc body of rover_radius collides when it overlaps any obstacle disc.
inline bool in_collision(Vec2 p, double rover_radius,
                         std::span<const Obstacle> obstacles) {
    for (const Obstacle& o : obstacles) {
        const double reach = o.radius + rover_radius;
        if ((p - o.center).norm_sq() < reach * reach) return true;
    }
    return false;
}

// Axis-aligned rectangle, min <= max on both axes.
struct Rect {
    Vec2 min;
    Vec2 max;
    constexpr bool contains(Vec2 p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
    constexpr double width() const { return max.x - min.x; }
    constexpr double height() const { return max.y - min.y; }
    constexpr double area() const { return width() * height(); }
};

struct Path {
    std::vector<Vec2> waypoints;

    double length() const {
        double total = 0.0;
        for (std::size_t i = 1; i < waypoints.size(); ++i)
            total += distance(waypoints[i - 1], waypoints[i]);
        return total;
    }
    bool empty() const { return waypoints.empty(); }
    std::size_t size() const { return waypoints.size(); }
};

}  // namespace rapf
