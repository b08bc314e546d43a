#ifndef ROOTED_ORACLES_HPP
#define ROOTED_ORACLES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "rooted/cycles.hpp"
#include "rooted/graph.hpp"

namespace rooted {

struct RootedInstance {
    Graph g;
    Edge e;

    RootedInstance(Graph graph, Edge edge) : g(std::move(graph)), e(edge) {
        if (!g.has_edge(e)) throw std::invalid_argument("RootedInstance: rooted edge not in graph");
    }
    int u1() const { return e.a; }
    int u2() const { return e.b; }
};

enum class DisjointnessMode { vertex, edge };

struct CyclePairWitness {
    Cycle c;  // contains the rooted edge for the rooted oracles
    Cycle d;
    DisjointnessMode mode = DisjointnessMode::vertex;
};

// Independent re-validation of a claimed witness; never trusts construction.
bool verify_cycle_pair(const Graph& g, const CyclePairWitness& w,
                       std::optional<Edge> rooted = std::nullopt);

// Prism pattern: vertices 0..5, triangles {0,1,2} and {3,4,5}, matching i ~ i+3.
inline constexpr std::array<std::pair<int, int>, 9> kPrismEdges = {
    {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}};

// A topological prism model: branch images plus one path per prism edge.
// Paths are internally disjoint from each other and from all branch vertices;
// path k connects the images of kPrismEdges[k].
struct PrismWitness {
    std::array<int, 6> branch{};
    std::array<Path, 9> paths{};
};

bool verify_prism_witness(const Graph& g, const PrismWitness& w,
                          std::optional<Edge> rooted = std::nullopt);

enum class SearchOutcome { witness, none, budget_exceeded };

struct SearchBudget {
    std::uint64_t max_expansions = UINT64_MAX;
};

template <class T>
struct Search {
    SearchOutcome outcome = SearchOutcome::none;
    std::optional<T> value;
    std::uint64_t expansions = 0;

    bool found() const { return outcome == SearchOutcome::witness; }
    bool empty() const { return outcome == SearchOutcome::none; }
    bool exhausted() const { return outcome == SearchOutcome::budget_exceeded; }
};

// Empty iff for every cycle C through e, g - V(C) is a forest. Otherwise the
// first (C, D) under the documented search order: C in DFS path order through
// e, D the least canonical cycle of the remainder.
Search<CyclePairWitness> e_dirac_oracle(const RootedInstance& inst, SearchBudget budget = {});

// Edge-disjoint variant: empty iff for every cycle C through e, g - E(C) is a
// forest.
Search<CyclePairWitness> strongly_e_dirac_oracle(const RootedInstance& inst, SearchBudget budget = {});

// Unrooted: any pair of vertex-disjoint cycles.
Search<CyclePairWitness> two_disjoint_cycles_oracle(const Graph& g, SearchBudget budget = {});

// Pair of vertex-disjoint cycles with v on one of them.
Search<CyclePairWitness> disjoint_cycles_through_vertex_oracle(const Graph& g, int v,
                                                               SearchBudget budget = {});

// Pair of vertex-disjoint cycles jointly covering {u, v}.
Search<CyclePairWitness> cycles_cover_pair_oracle(const Graph& g, int u, int v,
                                                  SearchBudget budget = {});

// Topological prism model with the rooted edge on the model. Requires a
// 3-connected graph on at least six vertices (the cubic-pattern equivalence
// between minors and topological minors needs 3-connectivity).
Search<PrismWitness> prism_minor_using_edge_oracle(const RootedInstance& inst,
                                                   SearchBudget budget = {});

// Unrooted variant; requires 3-connectivity.
Search<PrismWitness> prism_minor_exists_oracle(const Graph& g, SearchBudget budget = {});

}  // namespace rooted

#endif
