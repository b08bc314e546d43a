#ifndef ROOTED_CONNECTIVITY_HPP
#define ROOTED_CONNECTIVITY_HPP

#include <vector>

#include "rooted/cycles.hpp"
#include "rooted/graph.hpp"

namespace rooted {

struct DisjointPaths {
    int count = 0;
    std::vector<Path> paths;
};

// Maximum family of S-T paths avoiding the forbidden vertices, pairwise
// vertex-disjoint everywhere except that a singleton S (resp. T) endpoint is
// shared by all paths. Unit-capacity vertex-split max-flow; deterministic.
DisjointPaths max_vertex_disjoint_paths(const Graph& g, const std::vector<int>& S,
                                        const std::vector<int>& T,
                                        const std::vector<int>& forbidden = {});

// Minimum over non-adjacent pairs of pairwise-internally-disjoint path counts;
// complete graphs give n-1, disconnected graphs 0.
int vertex_connectivity(const Graph& g);

}  // namespace rooted

#endif
