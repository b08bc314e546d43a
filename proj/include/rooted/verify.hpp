#ifndef ROOTED_VERIFY_HPP
#define ROOTED_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rooted/graph.hpp"
#include "rooted/rope_bridge.hpp"

namespace rooted {

struct Disagreement {
    std::string graph6;
    std::string edge;  // "a-b" or "-" when not edge-rooted
    std::string oracle;
    std::string characterization;
};

// Per-campaign result. The record form is reproducible bit for bit across
// runs and worker counts; wall time is reported separately.
struct VerificationReport {
    std::string theorem;
    std::uint64_t instances = 0;
    std::vector<Disagreement> disagreements;
    std::uint64_t wall_ms = 0;

    std::uint64_t agreements() const { return instances - disagreements.size(); }
    std::string to_records() const;
};

// Documented per-instance search budget for the rooted-prism sweeps; never
// reached on graphs with at most eight vertices.
inline constexpr std::uint64_t kPrismSweepBudget = 200'000'000;

VerificationReport verify_theorem_1(int n_max, int jobs = 1);
VerificationReport verify_theorem_2(int n_max, int jobs = 1);
VerificationReport verify_theorem_3(int n_max, int jobs = 1);
VerificationReport verify_theorem_4(int n_max, int jobs = 1);
VerificationReport verify_theorem_5(int n_max, int jobs = 1);
VerificationReport verify_theorem_6(int n_max, int jobs = 1);
VerificationReport verify_corollary_4conn(int n_max, int jobs = 1);
VerificationReport verify_proposition_vertex(int n_max, int jobs = 1);
VerificationReport verify_rope_bridge_lemmas(int size_max, int random_specs = 10000, int jobs = 1);

// The Dirac-Lovasz list at the given order: W_n, K5, K5 minus an edge, or a
// K_{3,n} variant. Returns the family name when isomorphic to one of them.
std::optional<std::string> dirac_lovasz_family_member(const Graph& g);

// Rope-bridge corpus generators (deterministic).
std::vector<RopeBridgeInput> systematic_rope_inputs(int size_max);
std::vector<RopeBridgeInput> random_rope_inputs(int count, int size_max, std::uint32_t seed);

}  // namespace rooted

#endif
