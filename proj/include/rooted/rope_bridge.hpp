#ifndef ROOTED_ROPE_BRIDGE_HPP
#define ROOTED_ROPE_BRIDGE_HPP

#include <optional>
#include <vector>

#include "rooted/cycles.hpp"
#include "rooted/graph.hpp"

namespace rooted {

// The (u,x,y) structure: two ropes meeting only at u and a family of steps
// between them, subject to the axioms RB0..RB6 below.
struct RopeBridgeSpec {
    Graph g;
    int u = 0, x = 0, y = 0;
    Path rope_x, rope_y;          // u..x and u..y
    std::vector<Path> steps;      // each stored from its rope_x end to its rope_y end
};

enum class RopeBridgeAxiom { RB0, RB1, RB2, RB3, RB4, RB5, RB6 };

// Raw construction data: the graph is the union of rope edges, step edges and
// u-incident extras.
struct RopeBridgeInput {
    int n = 0;
    int u = 0, x = 0, y = 0;
    Path rope_x, rope_y;
    std::vector<Path> steps;
    std::vector<int> u_edges;  // additional neighbors of u
};

// Throws on malformed data (repeated vertices, wrong endpoints); axiom
// violations are reported by check_rope_bridge_axioms, not here.
RopeBridgeSpec build_rope_bridge(const RopeBridgeInput& in);

// Annotate an existing graph. Validates that ropes and steps are paths of g
// with the right endpoints; throws otherwise.
RopeBridgeSpec make_rope_bridge_spec(Graph g, int u, int x, int y, Path rope_x, Path rope_y,
                                     std::vector<Path> steps);

// Each axiom tested independently; empty result iff rope bridge.
std::vector<RopeBridgeAxiom> check_rope_bridge_axioms(const RopeBridgeSpec& spec);

// The forced step family of (g,u,x,y,ropes): every rope-to-rope edge is a
// short step and every off-rope component must be the interior of one step.
// nullopt when the shape admits no valid family at all.
std::optional<std::vector<Path>> derive_steps(const Graph& g, int u, int x, int y,
                                              const Path& rope_x, const Path& rope_y);

// Path/cycle form of the rope-bridge property: for each z in {x,y} and every
// cycle C of g - {u,z}, g - V(C) has no (u,z)-path. Requires valid ropes and
// the RB0 degree condition.
bool rope_bridge_criterion(const Graph& g, int u, int x, int y, const Path& rope_x,
                           const Path& rope_y);

// Edge-disjoint form: for each z in {x,y} and every cycle C of g, g - E(C)
// has no (u,z)-path.
bool strong_rope_bridge_criterion(const Graph& g, int u, int x, int y, const Path& rope_x,
                                  const Path& rope_y);

// Strong = all steps short and no two steps share an endvertex (on top of the
// axioms).
bool is_strong_rope_bridge(const RopeBridgeSpec& spec);

// Equal-length ropes with every rung straight or swapped within a family of
// pairwise disjoint pairs of consecutive indices.
struct StrongNormalForm {
    int n = 0;
    std::vector<std::pair<int, int>> swaps;
};
std::optional<StrongNormalForm> strong_normal_form(const Graph& g, int u, int x, int y,
                                                   const Path& rope_x, const Path& rope_y);

// The normal-form builder: ropes u,v_1..v_n and u,w_1..w_n with v_n = x,
// w_n = y, rungs straight except the swapped pairs.
RopeBridgeSpec build_strong_rope_bridge(int n, const std::vector<std::pair<int, int>>& swaps);

}  // namespace rooted

#endif
