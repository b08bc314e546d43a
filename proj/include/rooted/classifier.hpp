#ifndef ROOTED_CLASSIFIER_HPP
#define ROOTED_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rooted/families.hpp"
#include "rooted/graph.hpp"
#include "rooted/oracles.hpp"
#include "rooted/rope_bridge.hpp"

namespace rooted {

// ---- certificates for the vertex-disjoint characterization ----

struct TypeACert {
    std::vector<int> rim;      // cyclic order of G - {u1,u2}
    std::vector<char> assign;  // 'u', 'v' or 'b' per rim position
};

struct TypeBCert {
    int w = -1;
    struct Comp {
        std::vector<int> vertices;
        int w_neighbor = -1;
    };
    std::vector<Comp> comps;
};

// One side of the 4-cut {u1,u2,x,y}: either the endpoint sees no component,
// or its single component forms a rope bridge, or each of its components is a
// fan (path covered by the hub, ends picked up by x and y).
struct SideCert {
    enum class Kind { empty, bridge, fans };
    Kind kind = Kind::empty;
    std::vector<std::vector<int>> comps;  // the components on this side
    // bridge data
    Path rope_x, rope_y;
    std::vector<Path> steps;
    // fans data: per component, the path ordered from the x-attached end
    std::vector<Path> fan_paths;
    std::vector<char> fan_is_wheel;
};

struct TypeCCert {
    int x = -1, y = -1;
    int i = 1, j = 2;      // premise endpoint u_i, case endpoint u_j
    int case_tag = 1;      // 1, 2 or 3 per the u_j side
    SideCert side_u1, side_u2;
};

struct NotDiracCert {
    CyclePairWitness witness;
};

using Classification = std::variant<NotDiracCert, TypeACert, TypeBCert, TypeCCert>;

std::optional<TypeACert> recognize_type_a(const RootedInstance& inst);
std::optional<TypeBCert> recognize_type_b(const RootedInstance& inst);
std::optional<TypeCCert> recognize_type_c(const RootedInstance& inst);

bool validate_type_a(const RootedInstance& inst, const TypeACert& cert);
bool validate_type_b(const RootedInstance& inst, const TypeBCert& cert);
bool validate_type_c(const RootedInstance& inst, const TypeCCert& cert);

struct ClassifyResult {
    Classification value;
    bool matches_a = false, matches_b = false, matches_c = false;

    bool is_dirac() const { return !std::holds_alternative<NotDiracCert>(value); }
};

// Requires a 3-connected graph on at least six vertices. Runs the three
// recognizers in order a, b, c; falls back to the oracle witness and raises
// inconsistency_error if the oracle is empty too (a theorem violation).
ClassifyResult classify_vertex_dirac(const RootedInstance& inst);

// ---- rooted prism decision ----

struct FamilyIso {
    std::string family;        // "W_n", "K_{3,n}", "K'_{3,n}", "K''_{3,n}", "K'''_{3,n}"
    int n = 0;                 // the family parameter
    std::vector<int> mapping;  // family vertex -> graph vertex
};

struct PrismDecision {
    enum class Tag { has_rooted_prism, family_free, cut_free };
    Tag tag = Tag::has_rooted_prism;
    std::optional<PrismWitness> witness;  // has_rooted_prism
    std::optional<FamilyIso> family;      // family_free
    std::optional<TypeBCert> cut;         // cut_free
};

PrismDecision decide_prism_rooted(const RootedInstance& inst);

// ---- strong (edge-disjoint) recognizers ----

struct LadderCert {
    LadderSpec spec;
    Path alpha, beta;  // u1, v_1..v_n, u2 and u1, w_1..w_n, u2
};
std::optional<LadderCert> recognize_strong_ladder(const RootedInstance& inst);
bool validate_ladder_cert(const RootedInstance& inst, const LadderCert& cert);

struct ChainBlockCert {
    enum class Kind { single_edge, cycle, strong };
    Kind kind = Kind::single_edge;
    std::vector<int> vertices;  // block vertices including its two cut vertices
    // strong blocks: the block plus the virtual edge, degree-2 suppressed
    Graph suppressed;
    Edge virtual_edge{0, 1};
    LadderSpec ladder;
};
struct ChainDecomposition {
    std::vector<int> cuts;  // u_0 .. u_n
    std::vector<ChainBlockCert> blocks;
};
// Requires 2-connectivity. None when the chain clauses cannot all be met.
std::optional<ChainDecomposition> decompose_2conn_strong(const RootedInstance& inst);
bool validate_chain_decomposition(const RootedInstance& inst, const ChainDecomposition& dec);

// Requires 4-connectivity: a disjoint-cycle witness exists or the graph is a
// double wheel with e joining the hubs.
bool check_4connected_corollary(const RootedInstance& inst);

}  // namespace rooted

#endif
