#pragma once

#include <cstdint>
#include <vector>

namespace rapf::grid {

// 8-connected shortest path on a blocked/free bitmap. Straight moves cost
// `edge`, diagonal moves edge * sqrt(2), and a diagonal move is allowed only
// when both adjacent cardinal cells are free. With `heuristic` the search is
// A* under the octile lower bound toward `goal`; without it, Dijkstra. Both
// return identical costs.
struct SearchInput {
    long width = 0;
    long height = 0;
    const std::uint8_t* blocked = nullptr;  // row-major, nonzero = blocked
    // Entry nodes with their initial costs; a plain search uses one
    // zero-cost source.
    std::vector<std::pair<long, double>> sources;
    long goal = -1;
    double edge = 1.0;
    bool heuristic = true;
    long pop_cap = -1;  // max heap pops, -1 = unlimited
};

struct SearchResult {
    enum class Kind { Found, Unreachable, Capped };
    Kind kind = Kind::Unreachable;
    double cost = 0.0;
    std::vector<long> nodes;  // source..goal when found
};

SearchResult shortest_path(const SearchInput& in);

}  // namespace rapf::grid
