#ifndef ROOTED_CANONICAL_HPP
#define ROOTED_CANONICAL_HPP

#include <string>
#include <vector>

#include "rooted/graph.hpp"

namespace rooted {

// Canonical certificate of an isomorphism class. Equal bytes iff isomorphic
// (exact; the relabeled adjacency matrix itself, no hashing). For uncolored
// graphs the bytes are the graph6 string of the canonically relabeled graph.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<int> to_canonical;  // vertex -> canonical position
};

// Degree/neighborhood refinement plus full backtracking over the residual
// candidates. colors, when given, must be non-negative; vertices with
// different colors are never mapped to each other.
CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors = {});

CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// True iff some automorphism of g maps u to v.
bool same_orbit(const Graph& g, int u, int v);

// Certificate of the rooted isomorphism class of (g, e): equal iff there is
// an isomorphism carrying one rooted edge onto the other.
CanonicalForm canonical_form_edge_rooted(const Graph& g, Edge e);

}  // namespace rooted

#endif
