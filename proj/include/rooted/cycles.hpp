#ifndef ROOTED_CYCLES_HPP
#define ROOTED_CYCLES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "rooted/graph.hpp"

namespace rooted {

// Simple path as a vertex sequence; consecutive vertices must be adjacent in
// whatever host graph the path is used against.
using Path = std::vector<int>;

bool is_path_of(const Graph& g, const Path& p);
// interior = all but first and last vertex
std::vector<int> path_interior(const Path& p);

// Cycle stored in canonical rotation/reflection: smallest vertex first,
// smaller of its two cycle-neighbors second.
struct Cycle {
    std::vector<int> verts;
    auto operator<=>(const Cycle&) const = default;

    bool contains(int v) const;
    bool contains_edge(Edge e) const;
    std::vector<Edge> edge_set() const;
};

Cycle canonical_cycle(std::vector<int> raw);
bool is_cycle_of(const Graph& g, const Cycle& c);

// All simple cycles, each exactly once, in a fixed deterministic search
// order (DFS anchored at the smallest cycle vertex). The callback returns
// false to stop early; for_each_* return true when stopped early.
bool for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& fn);
std::vector<Cycle> all_cycles(const Graph& g);

// Cycles through e: DFS over simple paths between the endpoints of e in
// g minus e, each cycle exactly once.
bool for_each_cycle_through_edge(const Graph& g, Edge e, const std::function<bool(const Cycle&)>& fn);
std::vector<Cycle> cycles_containing_edge(const Graph& g, Edge e);

// Lexicographically least canonical cycle, if any.
std::optional<Cycle> find_cycle(const Graph& g);

}  // namespace rooted

#endif
