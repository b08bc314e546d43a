#include "rooted/families.hpp"

#include <algorithm>

#include "rooted/connectivity.hpp"

namespace rooted {

Graph wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel: n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
    }
    return Graph::from_edges(n + 1, std::move(edges));
}

Graph fan(int n) {
    if (n < 1) throw std::invalid_argument("fan: n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
    return Graph::from_edges(n + 1, std::move(edges));
}

Graph double_wheel(int n) {
    if (n < 3) throw std::invalid_argument("double_wheel: n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
        edges.emplace_back(i, n + 1);
    }
    return Graph::from_edges(n + 2, std::move(edges));
}

RootedInstance double_wheel_plus_e(int n) {
    Graph g = add_edge(double_wheel(n), Edge(n, n + 1));
    return RootedInstance(std::move(g), Edge(n, n + 1));
}

Graph k5() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(5, std::move(edges));
}

Graph k5_minus() { return remove_edges(k5(), {Edge(3, 4)}); }

Graph k3n(int n, int t) {
    if (n < 3) throw std::invalid_argument("k3n: n >= 3");
    if (t < 0 || t > 3) throw std::invalid_argument("k3n: t in 0..3");
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, 3 + j);
    const Edge extra[3] = {Edge(0, 1), Edge(0, 2), Edge(1, 2)};
    for (int k = 0; k < t; ++k) edges.push_back(extra[k]);
    return Graph::from_edges(n + 3, std::move(edges));
}

Graph prism() {
    return Graph::from_edge_list(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

void validate_ladder_spec(const LadderSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("ladder: n >= 1");
    std::vector<char> used(spec.n + 2, 0);
    for (auto [a, b] : spec.swaps) {
        if (b != a + 1 || a < 1 || b > spec.n)
            throw std::invalid_argument("ladder: swaps must be consecutive pairs within 1..n");
        if (used[a] || used[b]) throw std::invalid_argument("ladder: swaps must be pairwise disjoint");
        used[a] = used[b] = 1;
    }
}

RootedInstance build_ladder(const LadderSpec& spec) {
    validate_ladder_spec(spec);
    const int n = spec.n;
    auto v = [&](int i) { return 1 + i; };
    auto w = [&](int i) { return n + 1 + i; };
    std::vector<Edge> edges{Edge(0, 1)};
    edges.emplace_back(0, v(1));
    edges.emplace_back(0, w(1));
    edges.emplace_back(v(n), 1);
    edges.emplace_back(w(n), 1);
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(v(i), v(i + 1));
        edges.emplace_back(w(i), w(i + 1));
    }
    std::vector<char> swapped(n + 2, 0);
    for (auto [a, b] : spec.swaps) {
        swapped[a] = swapped[b] = 1;
        edges.emplace_back(v(a), w(b));
        edges.emplace_back(v(b), w(a));
    }
    for (int k = 1; k <= n; ++k)
        if (!swapped[k]) edges.emplace_back(v(k), w(k));
    return RootedInstance(Graph::from_edges(2 * n + 2, std::move(edges)), Edge(0, 1));
}

RootedInstance build_type_a(int rim_n, const std::vector<int>& doubled,
                            const std::vector<char>& assign) {
    if (rim_n < 4) throw std::invalid_argument("type a: rim length >= 4");
    if (static_cast<int>(assign.size()) != rim_n)
        throw std::invalid_argument("type a: assignment must cover the rim");
    std::vector<char> dbl(rim_n, 0);
    for (int r : doubled) {
        if (r < 0 || r >= rim_n) throw std::invalid_argument("type a: doubled index out of range");
        dbl[r] = 1;
    }
    for (int r = 0; r < rim_n; ++r) {
        if (assign[r] != 'u' && assign[r] != 'v' && assign[r] != 'b')
            throw std::invalid_argument("type a: assignment letters are u, v, b");
        if (dbl[r] != (assign[r] == 'b'))
            throw std::invalid_argument("type a: doubled set must match the 'b' positions");
    }
    const int u = rim_n, v = rim_n + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < rim_n; ++i) edges.emplace_back(i, (i + 1) % rim_n);
    for (int r = 0; r < rim_n; ++r) {
        if (assign[r] == 'u' || assign[r] == 'b') edges.emplace_back(r, u);
        if (assign[r] == 'v' || assign[r] == 'b') edges.emplace_back(r, v);
    }
    edges.emplace_back(u, v);
    Graph g = Graph::from_edges(rim_n + 2, std::move(edges));
    if (g.degree(u) < 4 || g.degree(v) < 4)
        throw std::invalid_argument("type a: both endpoints need degree at least four");
    if (vertex_connectivity(g) < 3) throw std::invalid_argument("type a: result is not 3-connected");
    return RootedInstance(std::move(g), Edge(u, v));
}

RootedInstance build_type_b(const std::vector<TypeBComponent>& comps, bool edge_uw, bool edge_vw) {
    if (comps.empty()) throw std::invalid_argument("type b: needs at least one component");
    const int u = 0, v = 1, w = 2;
    std::vector<Edge> edges{Edge(u, v)};
    if (edge_uw) edges.emplace_back(u, w);
    if (edge_vw) edges.emplace_back(v, w);
    int base = 3;
    for (const TypeBComponent& c : comps) {
        if (c.n_verts < 1) throw std::invalid_argument("type b: empty component");
        if (static_cast<int>(c.tree_edges.size()) != c.n_verts - 1)
            throw std::invalid_argument("type b: component is not a tree");
        if (c.w_attach.size() != 1)
            throw std::invalid_argument("type b: each component needs exactly one neighbor of w");
        std::vector<std::pair<int, int>> local = c.tree_edges;
        Graph t = Graph::from_edge_list(c.n_verts, local);
        if (!is_connected(t)) throw std::invalid_argument("type b: component is not a tree");
        auto check = [&](int lv) {
            if (lv < 0 || lv >= c.n_verts)
                throw std::invalid_argument("type b: attachment out of range");
        };
        for (const auto& [a, b] : c.tree_edges) edges.emplace_back(base + a, base + b);
        check(c.w_attach[0]);
        edges.emplace_back(w, base + c.w_attach[0]);
        for (int a : c.u_attach) {
            check(a);
            edges.emplace_back(u, base + a);
        }
        for (int a : c.v_attach) {
            check(a);
            edges.emplace_back(v, base + a);
        }
        base += c.n_verts;
    }
    Graph g = Graph::from_edges(base, std::move(edges));
    if (vertex_connectivity(g) < 3) throw std::invalid_argument("type b: result is not 3-connected");
    return RootedInstance(std::move(g), Edge(u, v));
}

RootedInstance build_chain(const ChainSpec& spec) {
    if (spec.blocks.empty()) throw std::invalid_argument("chain: needs at least one block");
    const int n = static_cast<int>(spec.blocks.size());
    if (n == 1 && spec.blocks[0].kind == ChainBlock::Kind::single_edge)
        throw std::invalid_argument("chain: a single edge block would duplicate e");

    std::vector<Edge> edges;
    std::vector<int> cuts{0};
    int next = 1;
    for (const ChainBlock& blk : spec.blocks) {
        int from = cuts.back();
        switch (blk.kind) {
            case ChainBlock::Kind::single_edge: {
                int to = next++;
                edges.emplace_back(from, to);
                cuts.push_back(to);
                break;
            }
            case ChainBlock::Kind::cycle: {
                if (blk.cycle_len < 4)
                    throw std::invalid_argument("chain: cycle blocks need length >= 4");
                int to = next++;
                int arc1 = blk.cycle_len / 2, arc2 = blk.cycle_len - arc1;
                for (int arc : {arc1, arc2}) {
                    int prev = from;
                    for (int i = 0; i + 1 < arc; ++i) {
                        int mid = next++;
                        edges.emplace_back(prev, mid);
                        prev = mid;
                    }
                    edges.emplace_back(prev, to);
                }
                cuts.push_back(to);
                break;
            }
            case ChainBlock::Kind::strong_instance: {
                if (!blk.instance) throw std::invalid_argument("chain: missing block instance");
                const RootedInstance& inst = *blk.instance;
                if (vertex_connectivity(inst.g) < 3)
                    throw std::invalid_argument("chain: block instance must be 3-connected");
                if (!strongly_e_dirac_oracle(inst).empty())
                    throw std::invalid_argument(
                        "chain: block instance has edge-disjoint cycles through its edge");
                int to = next++;
                std::vector<int> map(inst.g.n(), -1);
                map[inst.u1()] = from;
                map[inst.u2()] = to;
                for (int lv = 0; lv < inst.g.n(); ++lv)
                    if (map[lv] < 0) map[lv] = next++;
                for (const Edge& f : inst.g.edges()) {
                    if (f == inst.e) continue;  // the virtual edge
                    edges.emplace_back(map[f.a], map[f.b]);
                }
                cuts.push_back(to);
                break;
            }
        }
    }
    edges.emplace_back(0, cuts.back());  // e
    Graph g = Graph::from_edges(next, std::move(edges));
    // chord condition: cut vertices pairwise non-adjacent apart from e and
    // the single-edge blocks
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        for (size_t j = i + 2; j < cuts.size(); ++j) {
            if (i == 0 && j + 1 == cuts.size()) continue;
            if (g.adjacent(cuts[i], cuts[j]))
                throw std::invalid_argument("chain: blocks create a chord between cut vertices");
        }
    return RootedInstance(std::move(g), Edge(0, cuts.back()));
}

namespace {

void validate_side(const TypeCSide& s) {
    if (s.arc_size < 0 || s.cross_from_x1 < 0 || s.cross_from_y1 < 0)
        throw std::invalid_argument("type c: negative side size");
    if (s.fan_sizes.empty()) throw std::invalid_argument("type c: each side needs a bottom fan");
    for (int f : s.fan_sizes)
        if (f < 1) throw std::invalid_argument("type c: fan sizes are >= 1");
}

}  // namespace

RootedInstance build_type_c_template(const TypeCTemplateSpec& spec) {
    if (spec.variant < 1 || spec.variant > 3) throw std::invalid_argument("type c: variant 1, 2 or 3");
    if (spec.ladder_pairs < 0) throw std::invalid_argument("type c: ladder pairs >= 0");
    validate_side(spec.side1);
    validate_side(spec.side2);
    auto expect = [&](const TypeCSide& s, TypeCSide::Kind k) {
        if (s.kind != k) throw std::invalid_argument("type c: side kind does not match variant");
    };
    switch (spec.variant) {
        case 1:
            expect(spec.side1, TypeCSide::Kind::arc);
            expect(spec.side2, TypeCSide::Kind::arc);
            break;
        case 2:
            expect(spec.side1, TypeCSide::Kind::cross);
            expect(spec.side2, TypeCSide::Kind::cross);
            break;
        case 3:
            expect(spec.side1, TypeCSide::Kind::arc);
            expect(spec.side2, TypeCSide::Kind::cross);
            break;
    }

    std::vector<Edge> edges{Edge(0, 1)};
    int next = 2;
    auto fresh = [&] { return next++; };

    struct SidePorts {
        int x2 = -1, y2 = -1;
    };
    auto build_side = [&](int hub, const TypeCSide& s) {
        int x1 = fresh(), x2 = fresh(), y1 = fresh(), y2 = fresh();
        edges.emplace_back(hub, x1);
        edges.emplace_back(x1, x2);
        edges.emplace_back(hub, y1);
        edges.emplace_back(y1, y2);
        auto hub_fan_path = [&](int from, int to, int size) {
            int prev = from;
            for (int i = 0; i < size; ++i) {
                int m = fresh();
                edges.emplace_back(prev, m);
                edges.emplace_back(hub, m);
                prev = m;
            }
            edges.emplace_back(prev, to);
        };
        if (s.kind == TypeCSide::Kind::arc) {
            hub_fan_path(y1, x1, s.arc_size);
        } else {
            hub_fan_path(x1, y2, s.cross_from_x1);
            hub_fan_path(y1, x2, s.cross_from_y1);
        }
        for (int fs : s.fan_sizes) {
            int first = fresh();
            edges.emplace_back(x2, first);
            edges.emplace_back(hub, first);
            int prev = first;
            for (int i = 1; i < fs; ++i) {
                int m = fresh();
                edges.emplace_back(prev, m);
                edges.emplace_back(hub, m);
                prev = m;
            }
            edges.emplace_back(prev, y2);
        }
        return SidePorts{x2, y2};
    };

    SidePorts p1 = build_side(0, spec.side1);
    SidePorts p2 = build_side(1, spec.side2);

    // crossed-rung ladder joining the two sides
    int xprev = p1.x2, yprev = p1.y2;
    for (int t = 0; t < spec.ladder_pairs; ++t) {
        int xa = fresh(), xb = fresh(), ya = fresh(), yb = fresh();
        edges.emplace_back(xprev, xa);
        edges.emplace_back(xa, xb);
        edges.emplace_back(yprev, ya);
        edges.emplace_back(ya, yb);
        edges.emplace_back(xa, yb);
        edges.emplace_back(xb, ya);
        xprev = xb;
        yprev = yb;
    }
    edges.emplace_back(xprev, p2.x2);
    edges.emplace_back(yprev, p2.y2);

    Graph g = Graph::from_edges(next, std::move(edges));
    if (vertex_connectivity(g) < 3)
        throw std::invalid_argument("type c: template failed the 3-connectivity check");
    return RootedInstance(std::move(g), Edge(0, 1));
}

}  // namespace rooted
