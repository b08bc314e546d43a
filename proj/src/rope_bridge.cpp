#include "rooted/rope_bridge.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace rooted {

namespace {

void require_path_shape(const Path& p, const char* what) {
    if (p.empty()) throw std::invalid_argument(std::string(what) + ": empty path");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument(std::string(what) + ": repeated vertex");
}

bool has_uv_path(const Graph& g, int s, int t, const std::vector<char>& blocked) {
    if (s == t) return true;
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    if (blocked[s] || blocked[t]) return false;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (blocked[w] || seen[w]) continue;
            if (w == t) return true;
            seen[w] = 1;
            q.push(w);
        }
    }
    return false;
}

}  // namespace

RopeBridgeSpec make_rope_bridge_spec(Graph g, int u, int x, int y, Path rope_x, Path rope_y,
                                     std::vector<Path> steps) {
    if (!g.has_vertex(u) || !g.has_vertex(x) || !g.has_vertex(y) || u == x || u == y || x == y)
        throw std::invalid_argument("rope bridge: u,x,y must be distinct vertices");
    require_path_shape(rope_x, "rope_x");
    require_path_shape(rope_y, "rope_y");
    if (rope_x.front() != u || rope_x.back() != x) throw std::invalid_argument("rope_x: must run u..x");
    if (rope_y.front() != u || rope_y.back() != y) throw std::invalid_argument("rope_y: must run u..y");
    if (!is_path_of(g, rope_x)) throw std::invalid_argument("rope_x: not a path of the graph");
    if (!is_path_of(g, rope_y)) throw std::invalid_argument("rope_y: not a path of the graph");
    for (const Path& s : steps) {
        require_path_shape(s, "step");
        if (s.size() < 2) throw std::invalid_argument("step: needs two endpoints");
        if (!is_path_of(g, s)) throw std::invalid_argument("step: not a path of the graph");
    }
    return RopeBridgeSpec{std::move(g), u, x, y, std::move(rope_x), std::move(rope_y), std::move(steps)};
}

RopeBridgeSpec build_rope_bridge(const RopeBridgeInput& in) {
    std::vector<Edge> edges;
    auto add_path = [&](const Path& p) {
        for (size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
    };
    add_path(in.rope_x);
    add_path(in.rope_y);
    for (const Path& s : in.steps) add_path(s);
    for (int v : in.u_edges) edges.emplace_back(in.u, v);
    Graph g = Graph::from_edges(in.n, std::move(edges));
    return make_rope_bridge_spec(std::move(g), in.u, in.x, in.y, in.rope_x, in.rope_y, in.steps);
}

std::vector<RopeBridgeAxiom> check_rope_bridge_axioms(const RopeBridgeSpec& spec) {
    const Graph& g = spec.g;
    std::vector<RopeBridgeAxiom> out;
    const int n = g.n();

    std::vector<int> pos_x(n, -1), pos_y(n, -1);
    for (size_t i = 0; i < spec.rope_x.size(); ++i) pos_x[spec.rope_x[i]] = static_cast<int>(i);
    for (size_t i = 0; i < spec.rope_y.size(); ++i) pos_y[spec.rope_y[i]] = static_cast<int>(i);
    std::vector<char> on_rope(n, 0);
    for (int v : spec.rope_x) on_rope[v] = 1;
    for (int v : spec.rope_y) on_rope[v] = 1;

    // RB0
    for (int v = 0; v < n; ++v)
        if (v != spec.u && v != spec.x && v != spec.y && g.degree(v) < 3) {
            out.push_back(RopeBridgeAxiom::RB0);
            break;
        }

    // RB1: ropes meet exactly in u
    for (int v = 0; v < n; ++v)
        if (pos_x[v] >= 0 && pos_y[v] >= 0 && v != spec.u) {
            out.push_back(RopeBridgeAxiom::RB1);
            break;
        }

    // Orient every step from rope_x to rope_y; collect endpoint data.
    struct StepInfo {
        int xe = -1, ye = -1;  // rope positions of the endpoints
        bool ok = false;
        bool shrt = false;
    };
    std::vector<StepInfo> info(spec.steps.size());
    bool rb2 = true;
    std::vector<char> interior_seen(n, 0);
    for (size_t k = 0; k < spec.steps.size(); ++k) {
        Path s = spec.steps[k];
        int a = s.front(), b = s.back();
        bool fwd = pos_x[a] > 0 && pos_y[b] > 0;
        bool rev = pos_y[a] > 0 && pos_x[b] > 0;
        if (!fwd && !rev) {
            rb2 = false;
            continue;
        }
        if (!fwd) std::reverse(s.begin(), s.end());
        info[k].xe = pos_x[s.front()];
        info[k].ye = pos_y[s.back()];
        info[k].ok = true;
        info[k].shrt = s.size() == 2;
        for (int v : path_interior(s)) {
            if (on_rope[v] || interior_seen[v]) rb2 = false;
            interior_seen[v] = 1;
        }
    }
    if (!rb2) out.push_back(RopeBridgeAxiom::RB2);

    // RB3: each step crosses at most one other
    auto crosses = [&](const StepInfo& p, const StepInfo& q) {
        if (!p.ok || !q.ok) return false;
        return (p.xe < q.xe && q.ye < p.ye) || (q.xe < p.xe && p.ye < q.ye);
    };
    for (size_t k = 0; k < spec.steps.size(); ++k) {
        int c = 0;
        for (size_t l = 0; l < spec.steps.size(); ++l)
            if (l != k && crosses(info[k], info[l])) ++c;
        if (c > 1) {
            out.push_back(RopeBridgeAxiom::RB3);
            break;
        }
    }

    // RB4: off-rope vertices lie on some step
    {
        std::vector<char> covered(n, 0);
        for (const Path& s : spec.steps)
            for (int v : s) covered[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!on_rope[v] && !covered[v]) {
                out.push_back(RopeBridgeAxiom::RB4);
                break;
            }
    }

    // RB5: every other edge is incident to u
    {
        std::vector<Edge> allowed;
        auto add_path_edges = [&](const Path& p) {
            for (size_t i = 0; i + 1 < p.size(); ++i) allowed.emplace_back(p[i], p[i + 1]);
        };
        add_path_edges(spec.rope_x);
        add_path_edges(spec.rope_y);
        for (const Path& s : spec.steps) add_path_edges(s);
        std::sort(allowed.begin(), allowed.end());
        for (const Edge& e : g.edges()) {
            if (std::binary_search(allowed.begin(), allowed.end(), e)) continue;
            if (e.a == spec.u || e.b == spec.u) continue;
            out.push_back(RopeBridgeAxiom::RB5);
            break;
        }
    }

    // RB6: two step ends strictly before v on its rope force uv out of the
    // graph and every step ending at v to be short
    {
        bool bad = false;
        for (int side = 0; side < 2 && !bad; ++side) {
            const Path& rope = side == 0 ? spec.rope_x : spec.rope_y;
            for (size_t t = 1; t < rope.size() && !bad; ++t) {
                int before = 0;
                for (const StepInfo& si : info) {
                    if (!si.ok) continue;
                    int end = side == 0 ? si.xe : si.ye;
                    if (end >= 1 && end < static_cast<int>(t)) ++before;
                }
                if (before < 2) continue;
                int v = rope[t];
                if (g.adjacent(spec.u, v)) bad = true;
                for (const StepInfo& si : info) {
                    if (!si.ok) continue;
                    int end = side == 0 ? si.xe : si.ye;
                    if (end == static_cast<int>(t) && !si.shrt) bad = true;
                }
            }
        }
        if (bad) out.push_back(RopeBridgeAxiom::RB6);
    }

    return out;
}

std::optional<std::vector<Path>> derive_steps(const Graph& g, int u, int x, int y,
                                              const Path& rope_x, const Path& rope_y) {
    const int n = g.n();
    std::vector<int> pos_x(n, -1), pos_y(n, -1);
    for (size_t i = 0; i < rope_x.size(); ++i) pos_x[rope_x[i]] = static_cast<int>(i);
    for (size_t i = 0; i < rope_y.size(); ++i) pos_y[rope_y[i]] = static_cast<int>(i);
    std::vector<char> on_rope(n, 0);
    for (int v : rope_x) on_rope[v] = 1;
    for (int v : rope_y) on_rope[v] = 1;

    std::vector<Path> steps;
    // short steps: every rope-to-rope edge off u
    for (const Edge& e : g.edges()) {
        int a = -1, b = -1;
        if (pos_x[e.a] > 0 && pos_y[e.b] > 0) a = e.a, b = e.b;
        if (pos_y[e.a] > 0 && pos_x[e.b] > 0) a = e.b, b = e.a;
        if (a >= 0) steps.push_back({a, b});
    }
    // long steps: off-rope components
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (on_rope[s] || seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!on_rope[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        // the component must be a path; find its ends
        std::vector<int> ends;
        bool path_shape = true;
        for (int v : comp) {
            int d = 0;
            for (int w : g.neighbors(v))
                if (!on_rope[w]) ++d;
            if (d > 2) path_shape = false;
            if (d <= 1) ends.push_back(v);
        }
        if (!path_shape) return std::nullopt;
        if (comp.size() == 1) {
            ends = {comp[0], comp[0]};
        } else if (ends.size() != 2) {
            return std::nullopt;
        }
        std::sort(ends.begin(), ends.end());
        // walk the path from ends[0]
        Path interior{ends[0]};
        std::vector<char> used(n, 0);
        used[ends[0]] = 1;
        while (static_cast<int>(interior.size()) < static_cast<int>(comp.size())) {
            int v = interior.back();
            int nxt = -1;
            for (int w : g.neighbors(v))
                if (!on_rope[w] && !used[w]) nxt = nxt < 0 ? w : nxt;
            if (nxt < 0) return std::nullopt;
            used[nxt] = 1;
            interior.push_back(nxt);
        }
        // attachments: first vertex to one rope, last to the other, exactly once each
        auto rope_neighbors = [&](int v, const std::vector<int>& pos) {
            std::vector<int> r;
            for (int w : g.neighbors(v))
                if (pos[w] > 0) r.push_back(w);
            return r;
        };
        int head = interior.front(), tail = interior.back();
        for (size_t i = 0; i < interior.size(); ++i) {
            bool endpoint = i == 0 || i + 1 == interior.size();
            int v = interior[i];
            size_t attach = rope_neighbors(v, pos_x).size() + rope_neighbors(v, pos_y).size();
            if (!endpoint && attach != 0) return std::nullopt;
        }
        if (comp.size() == 1) {
            auto rx = rope_neighbors(head, pos_x), ry = rope_neighbors(head, pos_y);
            if (rx.size() != 1 || ry.size() != 1) return std::nullopt;
            Path step{rx[0]};
            step.insert(step.end(), interior.begin(), interior.end());
            step.push_back(ry[0]);
            steps.push_back(std::move(step));
        } else {
            auto hx = rope_neighbors(head, pos_x), hy = rope_neighbors(head, pos_y);
            auto tx = rope_neighbors(tail, pos_x), ty = rope_neighbors(tail, pos_y);
            Path step;
            if (hx.size() == 1 && hy.empty() && ty.size() == 1 && tx.empty()) {
                step.push_back(hx[0]);
                step.insert(step.end(), interior.begin(), interior.end());
                step.push_back(ty[0]);
            } else if (hy.size() == 1 && hx.empty() && tx.size() == 1 && ty.empty()) {
                step.push_back(tx[0]);
                step.insert(step.end(), interior.rbegin(), interior.rend());
                step.push_back(hy[0]);
            } else {
                return std::nullopt;
            }
            steps.push_back(std::move(step));
        }
    }
    std::sort(steps.begin(), steps.end(), [&](const Path& a, const Path& b) {
        auto key = [&](const Path& p) {
            return std::tuple(pos_x[p.front()], pos_y[p.back()], p.size(), p);
        };
        return key(a) < key(b);
    });
    return steps;
}

namespace {

void validate_criterion_input(const Graph& g, int u, int x, int y, const Path& rope_x,
                              const Path& rope_y) {
    require_path_shape(rope_x, "rope_x");
    require_path_shape(rope_y, "rope_y");
    if (rope_x.front() != u || rope_x.back() != x || rope_y.front() != u || rope_y.back() != y)
        throw std::invalid_argument("criterion: ropes must run u..x and u..y");
    if (!is_path_of(g, rope_x) || !is_path_of(g, rope_y))
        throw std::invalid_argument("criterion: ropes are not paths of the graph");
    for (int v : rope_x)
        for (int w : rope_y)
            if (v == w && v != u) throw std::invalid_argument("criterion: ropes meet outside u");
    for (int v = 0; v < g.n(); ++v)
        if (v != u && v != x && v != y && g.degree(v) < 3)
            throw std::invalid_argument("criterion: degree condition fails at " + std::to_string(v));
}

}  // namespace

bool rope_bridge_criterion(const Graph& g, int u, int x, int y, const Path& rope_x,
                           const Path& rope_y) {
    validate_criterion_input(g, u, x, y, rope_x, rope_y);
    for (int z : {x, y}) {
        VertexMap del = delete_vertices(g, {u, z});
        std::vector<int> new_to_old(g.n(), -1);
        for (int v = 0; v < g.n(); ++v)
            if (del.old_to_new[v] >= 0) new_to_old[del.old_to_new[v]] = v;
        bool bad = for_each_cycle(del.graph, [&](const Cycle& c) {
            std::vector<char> blocked(g.n(), 0);
            for (int v : c.verts) blocked[new_to_old[v]] = 1;
            return !has_uv_path(g, u, z, blocked);  // stop when a path exists
        });
        if (bad) return false;
    }
    return true;
}

bool strong_rope_bridge_criterion(const Graph& g, int u, int x, int y, const Path& rope_x,
                                  const Path& rope_y) {
    validate_criterion_input(g, u, x, y, rope_x, rope_y);
    std::vector<char> unblocked(g.n(), 0);
    for (int z : {x, y}) {
        bool bad = for_each_cycle(g, [&](const Cycle& c) {
            Graph rest = remove_edges(g, c.edge_set());
            return !has_uv_path(rest, u, z, unblocked);
        });
        if (bad) return false;
    }
    return true;
}

bool is_strong_rope_bridge(const RopeBridgeSpec& spec) {
    if (!check_rope_bridge_axioms(spec).empty()) return false;
    std::vector<int> endpoints;
    for (const Path& s : spec.steps) {
        if (s.size() != 2) return false;
        endpoints.push_back(s.front());
        endpoints.push_back(s.back());
    }
    std::sort(endpoints.begin(), endpoints.end());
    return std::adjacent_find(endpoints.begin(), endpoints.end()) == endpoints.end();
}

std::optional<StrongNormalForm> strong_normal_form(const Graph& g, int u, int x, int y,
                                                   const Path& rope_x, const Path& rope_y) {
    if (rope_x.size() != rope_y.size() || rope_x.size() < 2) return std::nullopt;
    const int n = static_cast<int>(rope_x.size()) - 1;
    std::vector<char> on_rope(g.n(), 0);
    for (int v : rope_x) on_rope[v] = 1;
    for (int v : rope_y) on_rope[v] = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!on_rope[v]) return std::nullopt;  // (a)

    std::vector<Edge> expect;
    for (int i = 0; i + 1 <= n; ++i) {
        expect.emplace_back(rope_x[i], rope_x[i + 1]);
        expect.emplace_back(rope_y[i], rope_y[i + 1]);
    }
    // rung pattern: straight everywhere except swapped pairs
    std::vector<int> partner(n + 1, 0);  // partner[a] = b when v_a ~ w_b
    std::vector<char> claimed(n + 1, 0);
    std::vector<std::pair<int, int>> swaps;
    for (int a = 1; a <= n; ++a) {
        if (claimed[a]) continue;
        if (g.adjacent(rope_x[a], rope_y[a])) {
            partner[a] = a;
            claimed[a] = 1;
            expect.emplace_back(rope_x[a], rope_y[a]);
        } else if (a + 1 <= n && g.adjacent(rope_x[a], rope_y[a + 1]) &&
                   g.adjacent(rope_x[a + 1], rope_y[a])) {
            claimed[a] = claimed[a + 1] = 1;
            swaps.emplace_back(a, a + 1);
            expect.emplace_back(rope_x[a], rope_y[a + 1]);
            expect.emplace_back(rope_x[a + 1], rope_y[a]);
        } else {
            return std::nullopt;
        }
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    if (expect != g.edges()) return std::nullopt;  // (b)
    return StrongNormalForm{n, std::move(swaps)};
}

RopeBridgeSpec build_strong_rope_bridge(int n, const std::vector<std::pair<int, int>>& swaps) {
    if (n < 1) throw std::invalid_argument("build_strong_rope_bridge: n >= 1");
    std::vector<char> in_swap(n + 2, 0);
    for (auto [a, b] : swaps) {
        if (b != a + 1 || a < 1 || b > n)
            throw std::invalid_argument("build_strong_rope_bridge: swaps must be consecutive pairs in 1..n");
        if (in_swap[a] || in_swap[b])
            throw std::invalid_argument("build_strong_rope_bridge: swaps must be pairwise disjoint");
        in_swap[a] = in_swap[b] = 1;
    }
    RopeBridgeInput in;
    in.n = 2 * n + 1;
    in.u = 0;
    in.x = n;
    in.y = 2 * n;
    for (int i = 0; i <= n; ++i) in.rope_x.push_back(i);
    in.rope_y.push_back(0);
    for (int i = 1; i <= n; ++i) in.rope_y.push_back(n + i);
    for (auto [a, b] : swaps) {
        in.steps.push_back({a, n + b});
        in.steps.push_back({b, n + a});
    }
    for (int k = 1; k <= n; ++k)
        if (!in_swap[k]) in.steps.push_back({k, n + k});
    return build_rope_bridge(in);
}

}  // namespace rooted
