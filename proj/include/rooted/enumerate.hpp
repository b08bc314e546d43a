#ifndef ROOTED_ENUMERATE_HPP
#define ROOTED_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "rooted/graph.hpp"

namespace rooted {

// Isomorph-free generation by canonical augmentation: one vertex is added per
// level and a child survives only when the new vertex sits in the same
// automorphism orbit as the canonical deletion vertex.
struct EnumSpec {
    int n = 4;                 // order of the emitted graphs
    int min_connectivity = 0;  // 0..4
    std::function<bool(const Graph&)> filter;  // optional extra predicate

    static constexpr int kMaxN = 9;
};

void for_each_graph(const EnumSpec& spec, const std::function<bool(const Graph&)>& fn);
std::vector<Graph> enumerate_graphs(const EnumSpec& spec);

// Validation pass over an externally supplied graph6 stream: parses, drops
// isomorphic duplicates (keeping first occurrences), applies the filters.
std::vector<Graph> dedup_graph_stream(const std::vector<std::string>& graph6_lines,
                                      const EnumSpec& spec);

}  // namespace rooted

#endif
