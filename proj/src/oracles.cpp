#include "rooted/oracles.hpp"

#include <algorithm>

#include "rooted/connectivity.hpp"

namespace rooted {

bool verify_cycle_pair(const Graph& g, const CyclePairWitness& w, std::optional<Edge> rooted) {
    if (!is_cycle_of(g, w.c) || !is_cycle_of(g, w.d)) return false;
    if (rooted && !w.c.contains_edge(*rooted)) return false;
    if (w.mode == DisjointnessMode::vertex) {
        for (int v : w.c.verts)
            if (w.d.contains(v)) return false;
    } else {
        auto ec = w.c.edge_set(), ed = w.d.edge_set();
        for (const Edge& e : ec)
            if (std::find(ed.begin(), ed.end(), e) != ed.end()) return false;
    }
    return true;
}

namespace {

Cycle map_cycle_back(const Cycle& c, const std::vector<int>& old_to_new) {
    std::vector<int> new_to_old(old_to_new.size(), -1);
    for (size_t v = 0; v < old_to_new.size(); ++v)
        if (old_to_new[v] >= 0) new_to_old[old_to_new[v]] = static_cast<int>(v);
    std::vector<int> verts;
    for (int v : c.verts) verts.push_back(new_to_old[v]);
    return canonical_cycle(std::move(verts));
}

template <class FindD>
Search<CyclePairWitness> cycle_pair_search(const Graph& g,
                                           const std::function<bool(const std::function<bool(const Cycle&)>&)>& each_c,
                                           FindD find_d, DisjointnessMode mode, SearchBudget budget) {
    Search<CyclePairWitness> result;
    each_c([&](const Cycle& c) {
        if (++result.expansions > budget.max_expansions) {
            result.outcome = SearchOutcome::budget_exceeded;
            return false;
        }
        std::optional<Cycle> d = find_d(c);
        if (d) {
            result.outcome = SearchOutcome::witness;
            result.value = CyclePairWitness{c, *d, mode};
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace

Search<CyclePairWitness> e_dirac_oracle(const RootedInstance& inst, SearchBudget budget) {
    const Graph& g = inst.g;
    return cycle_pair_search(
        g,
        [&](const std::function<bool(const Cycle&)>& fn) {
            return for_each_cycle_through_edge(g, inst.e, fn);
        },
        [&](const Cycle& c) -> std::optional<Cycle> {
            VertexMap rest = delete_vertices(g, c.verts);
            if (is_forest(rest.graph)) return std::nullopt;
            return map_cycle_back(*find_cycle(rest.graph), rest.old_to_new);
        },
        DisjointnessMode::vertex, budget);
}

Search<CyclePairWitness> strongly_e_dirac_oracle(const RootedInstance& inst, SearchBudget budget) {
    const Graph& g = inst.g;
    return cycle_pair_search(
        g,
        [&](const std::function<bool(const Cycle&)>& fn) {
            return for_each_cycle_through_edge(g, inst.e, fn);
        },
        [&](const Cycle& c) -> std::optional<Cycle> {
            Graph rest = remove_edges(g, c.edge_set());
            if (is_forest(rest)) return std::nullopt;
            return find_cycle(rest);
        },
        DisjointnessMode::edge, budget);
}

Search<CyclePairWitness> two_disjoint_cycles_oracle(const Graph& g, SearchBudget budget) {
    return cycle_pair_search(
        g, [&](const std::function<bool(const Cycle&)>& fn) { return for_each_cycle(g, fn); },
        [&](const Cycle& c) -> std::optional<Cycle> {
            VertexMap rest = delete_vertices(g, c.verts);
            if (is_forest(rest.graph)) return std::nullopt;
            return map_cycle_back(*find_cycle(rest.graph), rest.old_to_new);
        },
        DisjointnessMode::vertex, budget);
}

Search<CyclePairWitness> disjoint_cycles_through_vertex_oracle(const Graph& g, int v,
                                                               SearchBudget budget) {
    if (!g.has_vertex(v)) throw std::invalid_argument("disjoint_cycles_through_vertex: bad vertex");
    return cycle_pair_search(
        g,
        [&](const std::function<bool(const Cycle&)>& fn) {
            return for_each_cycle(g, [&](const Cycle& c) { return c.contains(v) ? fn(c) : true; });
        },
        [&](const Cycle& c) -> std::optional<Cycle> {
            VertexMap rest = delete_vertices(g, c.verts);
            if (is_forest(rest.graph)) return std::nullopt;
            return map_cycle_back(*find_cycle(rest.graph), rest.old_to_new);
        },
        DisjointnessMode::vertex, budget);
}

Search<CyclePairWitness> cycles_cover_pair_oracle(const Graph& g, int u, int v, SearchBudget budget) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
        throw std::invalid_argument("cycles_cover_pair: need two distinct vertices");
    return cycle_pair_search(
        g,
        [&](const std::function<bool(const Cycle&)>& fn) {
            return for_each_cycle(g, [&](const Cycle& c) { return c.contains(u) ? fn(c) : true; });
        },
        [&](const Cycle& c) -> std::optional<Cycle> {
            VertexMap rest = delete_vertices(g, c.verts);
            if (c.contains(v)) {
                if (is_forest(rest.graph)) return std::nullopt;
                return map_cycle_back(*find_cycle(rest.graph), rest.old_to_new);
            }
            // need the second cycle to pick up v
            int vv = rest.old_to_new[v];
            std::optional<Cycle> best;
            for_each_cycle(rest.graph, [&](const Cycle& d) {
                if (d.contains(vv) && (!best || d < *best)) best = d;
                return true;
            });
            if (!best) return std::nullopt;
            return map_cycle_back(*best, rest.old_to_new);
        },
        DisjointnessMode::vertex, budget);
}

bool verify_prism_witness(const Graph& g, const PrismWitness& w, std::optional<Edge> rooted) {
    std::vector<char> is_branch(g.n(), 0);
    for (int b : w.branch) {
        if (!g.has_vertex(b) || is_branch[b]) return false;
        is_branch[b] = 1;
    }
    std::vector<char> used_interior(g.n(), 0);
    bool covered = !rooted.has_value();
    for (int k = 0; k < 9; ++k) {
        const Path& p = w.paths[k];
        if (p.size() < 2 || !is_path_of(g, p)) return false;
        if (p.front() != w.branch[kPrismEdges[k].first] || p.back() != w.branch[kPrismEdges[k].second])
            return false;
        for (int x : path_interior(p)) {
            if (is_branch[x] || used_interior[x]) return false;
            used_interior[x] = 1;
        }
        if (rooted)
            for (size_t i = 0; i + 1 < p.size(); ++i)
                if (Edge(p[i], p[i + 1]) == *rooted) covered = true;
    }
    return covered;
}

namespace {

struct PrismSearch {
    const Graph& g;
    std::optional<Edge> rooted;
    SearchBudget budget;
    Search<PrismWitness>& result;

    std::array<int, 6> branch{};
    std::array<Path, 9> paths{};
    std::vector<char> is_branch;
    std::vector<char> used;  // path interiors
    bool covered = false;

    PrismSearch(const Graph& graph, std::optional<Edge> e, SearchBudget b, Search<PrismWitness>& r)
        : g(graph), rooted(e), budget(b), result(r), is_branch(g.n(), 0), used(g.n(), 0) {}

    bool tick() {
        if (++result.expansions > budget.max_expansions) {
            result.outcome = SearchOutcome::budget_exceeded;
            return false;
        }
        return true;
    }

    // Can the rooted edge still land on some unassigned path?
    bool rooted_feasible(int next_edge) const {
        if (covered) return true;
        for (int k = next_edge; k < 9; ++k) {
            bool ok = true;
            for (int z : {rooted->a, rooted->b}) {
                if (used[z]) ok = false;
                if (is_branch[z] && z != branch[kPrismEdges[k].first] &&
                    z != branch[kPrismEdges[k].second])
                    ok = false;
            }
            if (ok) return true;
        }
        return false;
    }

    bool extend_path(int k, int target, Path& p) {
        if (result.outcome == SearchOutcome::budget_exceeded) return false;
        int v = p.back();
        if (v == target) {
            bool added = false;
            if (rooted && !covered) {
                for (size_t i = 0; i + 1 < p.size(); ++i)
                    if (Edge(p[i], p[i + 1]) == *rooted) {
                        covered = true;
                        added = true;
                    }
            }
            paths[k] = p;
            if (search_edge(k + 1)) return true;
            if (added) covered = false;
            return false;
        }
        for (int w : g.neighbors(v)) {
            if (!tick()) return false;
            if (w == target) {
                p.push_back(w);
                if (extend_path(k, target, p)) return true;
                p.pop_back();
                continue;
            }
            if (used[w] || is_branch[w]) continue;
            used[w] = 1;
            p.push_back(w);
            if (extend_path(k, target, p)) return true;
            p.pop_back();
            used[w] = 0;
        }
        return false;
    }

    bool search_edge(int k) {
        if (result.outcome == SearchOutcome::budget_exceeded) return false;
        if (rooted && !rooted_feasible(k)) return false;
        if (k == 9) {
            if (rooted && !covered) return false;
            result.outcome = SearchOutcome::witness;
            result.value = PrismWitness{branch, paths};
            return true;
        }
        Path p{branch[kPrismEdges[k].first]};
        return extend_path(k, branch[kPrismEdges[k].second], p);
    }

    bool assign_branch(int slot, const std::vector<int>& candidates) {
        if (result.outcome == SearchOutcome::budget_exceeded) return false;
        if (slot == 6) return search_edge(0);
        for (int v : candidates) {
            if (is_branch[v]) continue;
            if (!tick()) return false;
            branch[slot] = v;
            is_branch[v] = 1;
            if (assign_branch(slot + 1, candidates)) return true;
            is_branch[v] = 0;
        }
        return false;
    }
};

Search<PrismWitness> prism_search(const Graph& g, std::optional<Edge> rooted, SearchBudget budget) {
    Search<PrismWitness> result;
    if (g.n() < 6) return result;
    std::vector<int> candidates;
    if (rooted) {
        // rooted endpoints first: the rooted constraint prunes hardest
        candidates.push_back(rooted->a);
        candidates.push_back(rooted->b);
    }
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 3) continue;
        if (rooted && (v == rooted->a || v == rooted->b)) continue;
        candidates.push_back(v);
    }
    if (rooted) {
        std::erase_if(candidates, [&](int v) { return g.degree(v) < 3; });
    }
    if (static_cast<int>(candidates.size()) < 6) return result;
    PrismSearch s(g, rooted, budget, result);
    s.assign_branch(0, candidates);
    return result;
}

}  // namespace

Search<PrismWitness> prism_minor_using_edge_oracle(const RootedInstance& inst, SearchBudget budget) {
    if (inst.g.n() < 6)
        throw std::invalid_argument("prism_minor_using_edge_oracle: needs at least six vertices");
    if (vertex_connectivity(inst.g) < 3)
        throw std::invalid_argument("prism_minor_using_edge_oracle: graph must be 3-connected");
    return prism_search(inst.g, inst.e, budget);
}

Search<PrismWitness> prism_minor_exists_oracle(const Graph& g, SearchBudget budget) {
    if (vertex_connectivity(g) < 3)
        throw std::invalid_argument("prism_minor_exists_oracle: graph must be 3-connected");
    return prism_search(g, std::nullopt, budget);
}

}  // namespace rooted
