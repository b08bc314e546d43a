#ifndef ROOTED_FAMILIES_HPP
#define ROOTED_FAMILIES_HPP

#include <optional>
#include <vector>

#include "rooted/graph.hpp"
#include "rooted/oracles.hpp"
#include "rooted/rope_bridge.hpp"

namespace rooted {

// ---- named graphs ----
// wheel: rim 0..n-1, hub n. fan: path 0..n-1, hub n. double wheel: rim
// 0..n-1, hubs n and n+1; the rooted variant adds the hub-hub edge and roots
// there.
Graph wheel(int n);
Graph fan(int n);
Graph double_wheel(int n);
RootedInstance double_wheel_plus_e(int n);
Graph k5();
Graph k5_minus();
// 3-class {0,1,2}, n-class 3..n+2; t extra edges inside the 3-class, placed
// 0-1, 0-2, 1-2 in that order.
Graph k3n(int n, int t);
Graph prism();

// ---- ladders (edge-disjoint characterization normal form) ----
// Rows u1,v_1..v_n,u2 and u1,w_1..w_n,u2 plus e = u1u2; each rung straight or
// swapped within the disjoint consecutive pairs of swaps.
struct LadderSpec {
    int n = 1;
    std::vector<std::pair<int, int>> swaps;  // 1-based pairs {k, k+1}

    bool operator==(const LadderSpec&) const = default;
};
void validate_ladder_spec(const LadderSpec& spec);
// Layout: u1 = 0, u2 = 1, v_i = 1+i, w_i = n+1+i.
RootedInstance build_ladder(const LadderSpec& spec);

// ---- structured instance builders ----
// Rim cycle 0..rim_n-1, endpoints u = rim_n, v = rim_n+1, e = uv. assign
// gives each rim vertex its spokes: 'u', 'v' or 'b' (both); doubled must be
// exactly the 'b' positions. Verifies simplicity, degree >= 4 at both
// endpoints and 3-connectivity, rejecting otherwise.
RootedInstance build_type_a(int rim_n, const std::vector<int>& doubled,
                            const std::vector<char>& assign);

// One tree component hanging off the cut {u,v,w}: local vertices 0..n_verts-1,
// w_attach must name exactly one of them.
struct TypeBComponent {
    int n_verts = 1;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> w_attach;
    std::vector<int> u_attach;
    std::vector<int> v_attach;
};
// Layout: u = 0, v = 1, w = 2, components numbered from 3 in order.
RootedInstance build_type_b(const std::vector<TypeBComponent>& comps, bool edge_uw = false,
                            bool edge_vw = false);

// ---- chains (2-connected edge-disjoint characterization) ----
struct ChainBlock {
    enum class Kind { single_edge, cycle, strong_instance };
    Kind kind = Kind::single_edge;
    int cycle_len = 4;  // kind == cycle; both arcs between the cut vertices get >= 2 edges
    std::optional<RootedInstance> instance;  // kind == strong_instance; 3-connected and
                                             // strongly Dirac at its rooted edge (verified)
};
struct ChainSpec {
    std::vector<ChainBlock> blocks;
};
RootedInstance build_chain(const ChainSpec& spec);

// ---- figure templates (positive generators for the vertex-disjoint
// characterization, type c) ----
// A side hangs off one endpoint of e: rope starts x1,x2 / y1,y2, bottom fans
// (paths whose vertices all see the hub, ends attached to x2 and y2), and
// either one spanning arc fan y1..x1 or two crossing fans x1..y2 / y1..x2.
struct TypeCSide {
    enum class Kind { arc, cross };
    Kind kind = Kind::arc;
    int arc_size = 0;              // arc interior vertices (kind == arc)
    int cross_from_x1 = 0;         // interior sizes of the crossing fans (kind == cross)
    int cross_from_y1 = 0;
    std::vector<int> fan_sizes{1};  // bottom fans, each >= 1 vertices, at least one fan
};
struct TypeCTemplateSpec {
    int variant = 1;  // 1: both sides arc, 2: both cross, 3: side1 arc + side2 cross
    TypeCSide side1, side2;
    int ladder_pairs = 0;  // crossed rung pairs between the sides
};
RootedInstance build_type_c_template(const TypeCTemplateSpec& spec);

}  // namespace rooted

#endif
