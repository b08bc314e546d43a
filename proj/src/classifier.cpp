#include "rooted/classifier.hpp"

#include <algorithm>
#include <map>

#include "rooted/canonical.hpp"
#include "rooted/connectivity.hpp"

namespace rooted {

namespace {

void require_classifier_input(const RootedInstance& inst, int min_n) {
    if (inst.g.n() < min_n)
        throw std::invalid_argument("classifier: graph below the supported order (small case)");
    if (vertex_connectivity(inst.g) < 3)
        throw std::invalid_argument("classifier: graph must be 3-connected");
}

// components of g - removed, reported in g's vertex ids
std::vector<std::vector<int>> components_after_removal(const Graph& g, const std::vector<int>& removed) {
    VertexMap del = delete_vertices(g, removed);
    std::vector<int> new_to_old(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (del.old_to_new[v] >= 0) new_to_old[del.old_to_new[v]] = v;
    std::vector<std::vector<int>> out;
    for (const auto& comp : connected_components(del.graph)) {
        std::vector<int> c;
        for (int v : comp) c.push_back(new_to_old[v]);
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

bool sees(const Graph& g, int v, const std::vector<int>& comp) {
    for (int w : comp)
        if (g.adjacent(v, w)) return true;
    return false;
}

}  // namespace

// ---------------------------------------------------------------- type (a)

std::optional<TypeACert> recognize_type_a(const RootedInstance& inst) {
    const Graph& g = inst.g;
    const int u1 = inst.u1(), u2 = inst.u2();
    if (g.degree(u1) < 4 || g.degree(u2) < 4) return std::nullopt;
    VertexMap del = delete_vertices(g, {u1, u2});
    const Graph& rim_g = del.graph;
    if (rim_g.n() < 4 || !is_connected(rim_g)) return std::nullopt;
    for (int v = 0; v < rim_g.n(); ++v)
        if (rim_g.degree(v) != 2) return std::nullopt;
    std::vector<int> new_to_old(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (del.old_to_new[v] >= 0) new_to_old[del.old_to_new[v]] = v;
    // walk the rim from the smallest vertex toward its smaller neighbor
    std::vector<int> rim{0};
    std::vector<char> used(rim_g.n(), 0);
    used[0] = 1;
    int cur = rim_g.neighbors(0)[0];
    while (!used[cur]) {
        used[cur] = 1;
        rim.push_back(cur);
        int nxt = -1;
        for (int w : rim_g.neighbors(cur))
            if (!used[w]) nxt = nxt < 0 ? w : nxt;
        if (nxt < 0) break;
        cur = nxt;
    }
    if (static_cast<int>(rim.size()) != rim_g.n()) return std::nullopt;  // not a single cycle
    TypeACert cert;
    for (int v : rim) cert.rim.push_back(new_to_old[v]);
    for (int v : cert.rim) {
        bool au = g.adjacent(v, u1), av = g.adjacent(v, u2);
        if (!au && !av) return std::nullopt;
        cert.assign.push_back(au && av ? 'b' : au ? 'u' : 'v');
    }
    return cert;
}

bool validate_type_a(const RootedInstance& inst, const TypeACert& cert) {
    const Graph& g = inst.g;
    const int u1 = inst.u1(), u2 = inst.u2();
    const int k = static_cast<int>(cert.rim.size());
    if (k < 4 || k + 2 != g.n() || cert.assign.size() != cert.rim.size()) return false;
    std::vector<char> seen(g.n(), 0);
    seen[u1] = seen[u2] = 1;
    for (int v : cert.rim) {
        if (v == u1 || v == u2 || seen[v]) return false;
        seen[v] = 1;
    }
    if (g.degree(u1) < 4 || g.degree(u2) < 4) return false;
    std::vector<Edge> expect{inst.e};
    for (int i = 0; i < k; ++i) {
        expect.emplace_back(cert.rim[i], cert.rim[(i + 1) % k]);
        char a = cert.assign[i];
        if (a == 'u' || a == 'b') expect.emplace_back(cert.rim[i], u1);
        if (a == 'v' || a == 'b') expect.emplace_back(cert.rim[i], u2);
        if (a != 'u' && a != 'v' && a != 'b') return false;
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    return expect == g.edges();
}

// ---------------------------------------------------------------- type (b)

namespace {

std::optional<TypeBCert> type_b_for_w(const Graph& g, int u1, int u2, int w) {
    auto comps = components_after_removal(g, {u1, u2, w});
    if (comps.size() < 2) return std::nullopt;
    TypeBCert cert;
    cert.w = w;
    for (const auto& comp : comps) {
        VertexMap sub = induced_subgraph(g, comp);
        if (!is_forest(sub.graph)) return std::nullopt;
        int wn = -1;
        for (int v : comp)
            if (g.adjacent(w, v)) {
                if (wn >= 0) return std::nullopt;
                wn = v;
            }
        if (wn < 0) return std::nullopt;
        cert.comps.push_back({comp, wn});
    }
    return cert;
}

}  // namespace

std::optional<TypeBCert> recognize_type_b(const RootedInstance& inst) {
    const Graph& g = inst.g;
    for (int w = 0; w < g.n(); ++w) {
        if (w == inst.u1() || w == inst.u2()) continue;
        if (auto cert = type_b_for_w(g, inst.u1(), inst.u2(), w)) return cert;
    }
    return std::nullopt;
}

bool validate_type_b(const RootedInstance& inst, const TypeBCert& cert) {
    const Graph& g = inst.g;
    if (cert.w < 0 || cert.w >= g.n() || cert.w == inst.u1() || cert.w == inst.u2()) return false;
    auto comps = components_after_removal(g, {inst.u1(), inst.u2(), cert.w});
    if (comps.size() != cert.comps.size() || comps.size() < 2) return false;
    for (size_t k = 0; k < comps.size(); ++k) {
        if (comps[k] != cert.comps[k].vertices) return false;
        VertexMap sub = induced_subgraph(g, comps[k]);
        if (!is_forest(sub.graph)) return false;
        int wn = -1;
        for (int v : comps[k])
            if (g.adjacent(cert.w, v)) {
                if (wn >= 0) return false;
                wn = v;
            }
        if (wn != cert.comps[k].w_neighbor) return false;
    }
    return true;
}

// ---------------------------------------------------------------- type (c)

namespace {

// Fan test: component is a path fully covered by the hub, x picks up exactly
// one end and y the other. Extra edges among {hub,x,y} are tolerated; the
// wheel flag records the fully closed variant.
std::optional<Path> fan_component(const Graph& g, const std::vector<int>& comp, int hub, int x,
                                  int y) {
    for (int v : comp)
        if (!g.adjacent(hub, v)) return std::nullopt;
    VertexMap sub = induced_subgraph(g, comp);
    std::vector<int> new_to_old(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (sub.old_to_new[v] >= 0) new_to_old[sub.old_to_new[v]] = v;
    // must be a path
    std::vector<int> ends;
    for (int v = 0; v < sub.graph.n(); ++v) {
        if (sub.graph.degree(v) > 2) return std::nullopt;
        if (sub.graph.degree(v) <= 1) ends.push_back(v);
    }
    if (sub.graph.n() == 1) {
        ends = {0, 0};
    } else if (ends.size() != 2 || !is_connected(sub.graph)) {
        return std::nullopt;
    }
    Path p{new_to_old[ends[0]]};
    std::vector<char> used(sub.graph.n(), 0);
    used[ends[0]] = 1;
    int cur = ends[0];
    while (static_cast<int>(p.size()) < sub.graph.n()) {
        int nxt = -1;
        for (int w : sub.graph.neighbors(cur))
            if (!used[w]) nxt = nxt < 0 ? w : nxt;
        if (nxt < 0) return std::nullopt;
        used[nxt] = 1;
        p.push_back(new_to_old[nxt]);
        cur = nxt;
    }
    auto attach_count = [&](int s) {
        int c = 0;
        for (int v : comp)
            if (g.adjacent(s, v)) ++c;
        return c;
    };
    if (attach_count(x) != 1 || attach_count(y) != 1) return std::nullopt;
    bool x_front = g.adjacent(x, p.front()), x_back = g.adjacent(x, p.back());
    bool y_front = g.adjacent(y, p.front()), y_back = g.adjacent(y, p.back());
    if (x_front && y_back) return p;
    if (x_back && y_front) {
        std::reverse(p.begin(), p.end());
        return p;
    }
    return std::nullopt;
}

std::optional<SideCert> certify_side(const Graph& g, int hub, int other, int x, int y,
                                     const std::vector<std::vector<int>>& comps) {
    SideCert cert;
    cert.comps = comps;
    if (comps.empty()) {
        if (g.degree(hub) != 3 || !g.adjacent(hub, other) || !g.adjacent(hub, x) ||
            !g.adjacent(hub, y))
            return std::nullopt;
        cert.kind = SideCert::Kind::empty;
        return cert;
    }
    if (comps.size() == 1) {
        std::vector<int> rv = comps[0];
        rv.push_back(hub);
        rv.push_back(x);
        rv.push_back(y);
        VertexMap sub = induced_subgraph(g, rv);
        const Graph& r = sub.graph;
        if (!is_connected(r)) return std::nullopt;
        int ru = sub.old_to_new[hub], rx = sub.old_to_new[x], ry = sub.old_to_new[y];
        for (int v = 0; v < r.n(); ++v)
            if (v != ru && v != rx && v != ry && r.degree(v) < 3) return std::nullopt;
        DisjointPaths dp = max_vertex_disjoint_paths(r, {ru}, {rx, ry});
        if (dp.count < 2) return std::nullopt;
        Path rope_x, rope_y;
        for (const Path& p : dp.paths) {
            if (p.back() == rx) rope_x = p;
            if (p.back() == ry) rope_y = p;
        }
        if (rope_x.empty() || rope_y.empty()) return std::nullopt;
        if (!rope_bridge_criterion(r, ru, rx, ry, rope_x, rope_y)) return std::nullopt;
        auto steps = derive_steps(r, ru, rx, ry, rope_x, rope_y);
        if (!steps) return std::nullopt;
        RopeBridgeSpec spec = make_rope_bridge_spec(r, ru, rx, ry, rope_x, rope_y, *steps);
        if (!check_rope_bridge_axioms(spec).empty()) return std::nullopt;
        std::vector<int> new_to_old(g.n(), -1);
        for (int v = 0; v < g.n(); ++v)
            if (sub.old_to_new[v] >= 0) new_to_old[sub.old_to_new[v]] = v;
        auto lift = [&](const Path& p) {
            Path q;
            for (int v : p) q.push_back(new_to_old[v]);
            return q;
        };
        cert.kind = SideCert::Kind::bridge;
        cert.rope_x = lift(rope_x);
        cert.rope_y = lift(rope_y);
        for (const Path& s : *steps) cert.steps.push_back(lift(s));
        return cert;
    }
    cert.kind = SideCert::Kind::fans;
    for (const auto& comp : comps) {
        auto p = fan_component(g, comp, hub, x, y);
        if (!p) return std::nullopt;
        cert.fan_paths.push_back(*p);
        cert.fan_is_wheel.push_back(g.adjacent(x, y) && g.adjacent(hub, x) && g.adjacent(hub, y) ? 1
                                                                                                 : 0);
    }
    return cert;
}

}  // namespace

std::optional<TypeCCert> recognize_type_c(const RootedInstance& inst) {
    const Graph& g = inst.g;
    const int u1 = inst.u1(), u2 = inst.u2();
    for (int x = 0; x < g.n(); ++x) {
        if (x == u1 || x == u2) continue;
        for (int y = x + 1; y < g.n(); ++y) {
            if (y == u1 || y == u2) continue;
            auto comps = components_after_removal(g, {u1, u2, x, y});
            std::vector<std::vector<int>> side1, side2;
            bool ok = true;
            for (auto& comp : comps) {
                bool s1 = sees(g, u1, comp), s2 = sees(g, u2, comp);
                if (s1 == s2) {
                    ok = false;  // a component seeing both endpoints or neither
                    break;
                }
                (s1 ? side1 : side2).push_back(comp);
            }
            if (!ok) continue;
            auto c1 = certify_side(g, u1, u2, x, y, side1);
            if (!c1) continue;
            auto c2 = certify_side(g, u2, u1, x, y, side2);
            if (!c2) continue;
            bool is_cut = comps.size() >= 2;
            for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
                int ui = i == 1 ? u1 : u2;
                const SideCert& side_j = j == 1 ? *c1 : *c2;
                bool premise_empty = (i == 1 ? c1 : c2)->kind == SideCert::Kind::empty;
                bool premise_wide = g.degree(ui) >= 4 && is_cut;
                if (!premise_empty && !premise_wide) continue;
                TypeCCert cert;
                cert.x = x;
                cert.y = y;
                cert.i = i;
                cert.j = j;
                cert.case_tag = side_j.kind == SideCert::Kind::empty    ? 1
                                : side_j.kind == SideCert::Kind::bridge ? 2
                                                                        : 3;
                cert.side_u1 = *c1;
                cert.side_u2 = *c2;
                return cert;
            }
        }
    }
    return std::nullopt;
}

bool validate_type_c(const RootedInstance& inst, const TypeCCert& cert) {
    const Graph& g = inst.g;
    const int u1 = inst.u1(), u2 = inst.u2();
    if (cert.x < 0 || cert.y < 0 || cert.x == cert.y) return false;
    for (int s : {cert.x, cert.y})
        if (!g.has_vertex(s) || s == u1 || s == u2) return false;
    auto comps = components_after_removal(g, {u1, u2, cert.x, cert.y});
    std::vector<std::vector<int>> side1, side2;
    for (auto& comp : comps) {
        bool s1 = sees(g, u1, comp), s2 = sees(g, u2, comp);
        if (s1 == s2) return false;
        (s1 ? side1 : side2).push_back(comp);
    }
    if (side1 != cert.side_u1.comps || side2 != cert.side_u2.comps) return false;

    auto check_side = [&](const SideCert& sc, int hub, int other) {
        switch (sc.kind) {
            case SideCert::Kind::empty:
                return sc.comps.empty() && g.degree(hub) == 3 && g.adjacent(hub, other) &&
                       g.adjacent(hub, cert.x) && g.adjacent(hub, cert.y);
            case SideCert::Kind::bridge: {
                if (sc.comps.size() != 1) return false;
                std::vector<int> rv = sc.comps[0];
                rv.push_back(hub);
                rv.push_back(cert.x);
                rv.push_back(cert.y);
                VertexMap sub = induced_subgraph(g, rv);
                auto map_down = [&](const Path& p) {
                    Path q;
                    for (int v : p) {
                        if (!g.has_vertex(v) || sub.old_to_new[v] < 0) return Path{};
                        q.push_back(sub.old_to_new[v]);
                    }
                    return q;
                };
                Path rx = map_down(sc.rope_x), ry = map_down(sc.rope_y);
                if (rx.empty() || ry.empty()) return false;
                std::vector<Path> steps;
                for (const Path& s : sc.steps) {
                    Path q = map_down(s);
                    if (q.empty()) return false;
                    steps.push_back(q);
                }
                if (!is_connected(sub.graph)) return false;
                try {
                    RopeBridgeSpec spec =
                        make_rope_bridge_spec(sub.graph, sub.old_to_new[hub], sub.old_to_new[cert.x],
                                              sub.old_to_new[cert.y], rx, ry, steps);
                    return check_rope_bridge_axioms(spec).empty();
                } catch (const std::invalid_argument&) {
                    return false;
                }
            }
            case SideCert::Kind::fans: {
                if (sc.comps.size() < 2 || sc.fan_paths.size() != sc.comps.size()) return false;
                for (size_t k = 0; k < sc.comps.size(); ++k) {
                    const Path& p = sc.fan_paths[k];
                    std::vector<int> sorted = p;
                    std::sort(sorted.begin(), sorted.end());
                    if (sorted != sc.comps[k]) return false;
                    if (!is_path_of(g, p)) return false;
                    for (int v : p)
                        if (!g.adjacent(hub, v)) return false;
                    int cx = 0, cy = 0;
                    for (int v : p) {
                        cx += g.adjacent(cert.x, v);
                        cy += g.adjacent(cert.y, v);
                    }
                    if (cx != 1 || cy != 1) return false;
                    if (!g.adjacent(cert.x, p.front()) || !g.adjacent(cert.y, p.back())) return false;
                }
                return true;
            }
        }
        return false;
    };
    if (!check_side(cert.side_u1, u1, u2)) return false;
    if (!check_side(cert.side_u2, u2, u1)) return false;

    const SideCert& side_i = cert.i == 1 ? cert.side_u1 : cert.side_u2;
    const SideCert& side_j = cert.j == 1 ? cert.side_u1 : cert.side_u2;
    if (cert.i == cert.j || cert.i < 1 || cert.i > 2 || cert.j < 1 || cert.j > 2) return false;
    int ui = cert.i == 1 ? u1 : u2;
    bool premise_empty = side_i.kind == SideCert::Kind::empty;
    bool premise_wide = g.degree(ui) >= 4 && comps.size() >= 2;
    if (!premise_empty && !premise_wide) return false;
    int expect_tag = side_j.kind == SideCert::Kind::empty    ? 1
                     : side_j.kind == SideCert::Kind::bridge ? 2
                                                             : 3;
    return cert.case_tag == expect_tag;
}

// ---------------------------------------------------------------- classify

ClassifyResult classify_vertex_dirac(const RootedInstance& inst) {
    require_classifier_input(inst, 6);
    auto a = recognize_type_a(inst);
    auto b = recognize_type_b(inst);
    auto c = recognize_type_c(inst);
    ClassifyResult out{NotDiracCert{}};
    out.matches_a = a.has_value();
    out.matches_b = b.has_value();
    out.matches_c = c.has_value();
    if (a)
        out.value = *a;
    else if (b)
        out.value = *b;
    else if (c)
        out.value = *c;
    else {
        auto witness = e_dirac_oracle(inst);
        if (!witness.found())
            throw inconsistency_error(
                "classify_vertex_dirac: no type matched yet no disjoint-cycle witness exists");
        out.value = NotDiracCert{*witness.value};
    }
    return out;
}

// ---------------------------------------------------------------- prism

PrismDecision decide_prism_rooted(const RootedInstance& inst) {
    require_classifier_input(inst, 6);
    const Graph& g = inst.g;
    const int m = g.n();
    CanonicalLabeling mine = canonical_labeling(g);
    std::vector<int> pos_to_mine(m);
    for (int v = 0; v < m; ++v) pos_to_mine[mine.to_canonical[v]] = v;

    auto try_family = [&](const Graph& f, const std::string& name, int n) -> std::optional<FamilyIso> {
        if (f.n() != m || f.edge_count() != g.edge_count()) return std::nullopt;
        CanonicalLabeling theirs = canonical_labeling(f);
        if (theirs.form != mine.form) return std::nullopt;
        FamilyIso iso;
        iso.family = name;
        iso.n = n;
        iso.mapping.assign(m, -1);
        for (int v = 0; v < m; ++v) iso.mapping[v] = pos_to_mine[theirs.to_canonical[v]];
        return iso;
    };

    PrismDecision out;
    std::vector<std::pair<Graph, std::pair<std::string, int>>> fams;
    fams.emplace_back(wheel(m - 1), std::pair{std::string("W_n"), m - 1});
    if (m >= 6) {
        const char* names[4] = {"K_{3,n}", "K'_{3,n}", "K''_{3,n}", "K'''_{3,n}"};
        for (int t = 0; t <= 3; ++t)
            fams.emplace_back(k3n(m - 3, t), std::pair{std::string(names[t]), m - 3});
    }
    for (auto& [f, meta] : fams)
        if (auto iso = try_family(f, meta.first, meta.second)) {
            out.tag = PrismDecision::Tag::family_free;
            out.family = iso;
            return out;
        }
    if (auto cut = recognize_type_b(inst)) {
        out.tag = PrismDecision::Tag::cut_free;
        out.cut = cut;
        return out;
    }
    auto witness = prism_minor_using_edge_oracle(inst);
    if (!witness.found())
        throw inconsistency_error(
            "decide_prism_rooted: neither family, cut condition, nor rooted prism model found");
    out.tag = PrismDecision::Tag::has_rooted_prism;
    out.witness = witness.value;
    return out;
}

// ---------------------------------------------------------------- ladders

std::optional<LadderCert> recognize_strong_ladder(const RootedInstance& inst) {
    const Graph& g = inst.g;
    const int u1 = inst.u1(), u2 = inst.u2();
    if (g.n() < 4 || g.n() % 2 != 0) return std::nullopt;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3) return std::nullopt;
    const int n = (g.n() - 2) / 2;

    std::vector<int> starts;
    for (int w : g.neighbors(u1))
        if (w != u2) starts.push_back(w);
    if (starts.size() != 2) return std::nullopt;

    struct Rec {
        const Graph& g;
        int u1, u2, n;
        std::vector<int> va, wb;
        std::vector<char> used;
        std::vector<std::pair<int, int>> swaps;
        std::optional<LadderCert> found;

        // rung_done: the rung at the current index was consumed by a swap
        void step(int k, bool rung_done) {
            if (found) return;
            int vk = va.back(), wk = wb.back();
            auto others = [&](int v, int prev) {
                std::vector<int> r;
                for (int w : g.neighbors(v))
                    if (w != prev && w != u1) r.push_back(w);
                return r;
            };
            int vprev = va.size() >= 2 ? va[va.size() - 2] : u1;
            int wprev = wb.size() >= 2 ? wb[wb.size() - 2] : u1;
            if (k == n) {
                if (!g.adjacent(vk, u2) || !g.adjacent(wk, u2)) return;
                if (!rung_done && !g.adjacent(vk, wk)) return;
                LadderCert cert;
                cert.spec.n = n;
                cert.spec.swaps = swaps;
                cert.alpha = va;
                cert.alpha.insert(cert.alpha.begin(), u1);
                cert.alpha.push_back(u2);
                cert.beta = wb;
                cert.beta.insert(cert.beta.begin(), u1);
                cert.beta.push_back(u2);
                found = cert;
                return;
            }
            if (rung_done || g.adjacent(vk, wk)) {
                // straight rung or already-consumed swap: successors forced
                int vn = -1, wn = -1;
                for (int w : g.neighbors(vk)) {
                    if (w == vprev || w == wk || w == u2 || used[w]) continue;
                    vn = vn < 0 ? w : -2;
                }
                for (int w : g.neighbors(wk)) {
                    if (w == wprev || w == vk || w == u2 || used[w]) continue;
                    wn = wn < 0 ? w : -2;
                }
                if (vn < 0 || wn < 0 || vn == -2 || wn == -2 || vn == wn) return;
                used[vn] = used[wn] = 1;
                va.push_back(vn);
                wb.push_back(wn);
                step(k + 1, false);
                va.pop_back();
                wb.pop_back();
                used[vn] = used[wn] = 0;
                return;
            }
            // swap pair {k, k+1}: both successors are common neighbors of vk, wk
            if (k + 1 > n) return;
            std::vector<int> cand;
            for (int w : g.neighbors(vk)) {
                if (w == vprev || w == u2 || used[w]) continue;
                if (g.adjacent(wk, w)) cand.push_back(w);
            }
            for (int vi : cand)
                for (int wi : cand) {
                    if (vi == wi) continue;
                    used[vi] = used[wi] = 1;
                    va.push_back(vi);
                    wb.push_back(wi);
                    swaps.emplace_back(k, k + 1);
                    step(k + 1, true);
                    swaps.pop_back();
                    va.pop_back();
                    wb.pop_back();
                    used[vi] = used[wi] = 0;
                }
        }
    };

    for (int first : {0, 1}) {
        Rec rec{g, u1, u2, n, {starts[first]}, {starts[1 - first]}, {}, {}, std::nullopt};
        rec.used.assign(g.n(), 0);
        rec.used[starts[0]] = rec.used[starts[1]] = 1;
        rec.step(1, false);
        if (rec.found && validate_ladder_cert(inst, *rec.found)) return rec.found;
    }
    return std::nullopt;
}

bool validate_ladder_cert(const RootedInstance& inst, const LadderCert& cert) {
    try {
        validate_ladder_spec(cert.spec);
    } catch (const std::invalid_argument&) {
        return false;
    }
    const int n = cert.spec.n;
    const Graph& g = inst.g;
    if (g.n() != 2 * n + 2) return false;
    if (static_cast<int>(cert.alpha.size()) != n + 2 || static_cast<int>(cert.beta.size()) != n + 2)
        return false;
    if (cert.alpha.front() != inst.u1() || cert.alpha.back() != inst.u2()) return false;
    if (cert.beta.front() != inst.u1() || cert.beta.back() != inst.u2()) return false;
    // the two rows partition V - {u1,u2}
    std::vector<char> seen(g.n(), 0);
    seen[inst.u1()] = seen[inst.u2()] = 1;
    for (size_t i = 1; i + 1 < cert.alpha.size(); ++i) {
        int v = cert.alpha[i];
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 1; i + 1 < cert.beta.size(); ++i) {
        int v = cert.beta[i];
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    std::vector<Edge> expect{inst.e};
    for (int i = 0; i + 1 < n + 2; ++i) {
        expect.emplace_back(cert.alpha[i], cert.alpha[i + 1]);
        expect.emplace_back(cert.beta[i], cert.beta[i + 1]);
    }
    std::vector<char> swapped(n + 1, 0);
    for (auto [a, b] : cert.spec.swaps) {
        swapped[a] = swapped[b] = 1;
        expect.emplace_back(cert.alpha[a], cert.beta[b]);
        expect.emplace_back(cert.alpha[b], cert.beta[a]);
    }
    for (int k = 1; k <= n; ++k)
        if (!swapped[k]) expect.emplace_back(cert.alpha[k], cert.beta[k]);
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    return expect == g.edges();
}

// ---------------------------------------------------------------- chains

namespace {

// biconnected components of g as edge partitions
struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), num(graph.n(), -1), low(graph.n(), 0) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = timer++;
        for (int w : g.neighbors(v)) {
            if (w == parent) {
                parent = -2;  // skip the tree edge once; parallel edges cannot occur
                continue;
            }
            if (num[w] < 0) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::vector<Edge> block;
                    while (true) {
                        auto [a, b] = stack.back();
                        stack.pop_back();
                        block.emplace_back(a, b);
                        if (a == v && b == w) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (num[w] < num[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    }

    std::vector<std::vector<Edge>> run() {
        for (int v = 0; v < g.n(); ++v)
            if (num[v] < 0) dfs(v, -1);
        return blocks;
    }
};

std::vector<int> block_vertices(const std::vector<Edge>& block) {
    std::vector<int> vs;
    for (const Edge& e : block) {
        vs.push_back(e.a);
        vs.push_back(e.b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

}  // namespace

std::optional<ChainDecomposition> decompose_2conn_strong(const RootedInstance& inst) {
    const Graph& g = inst.g;
    if (g.n() < 3 || vertex_connectivity(g) < 2)
        throw std::invalid_argument("decompose_2conn_strong: graph must be 2-connected");
    Graph rest = remove_edges(g, {inst.e});
    BlockFinder bf(rest);
    auto blocks = bf.run();
    if (blocks.empty()) return std::nullopt;

    // chain order: walk from u1's block to u2's block
    const int u1 = inst.u1(), u2 = inst.u2();
    std::vector<std::vector<int>> bverts;
    for (auto& b : blocks) bverts.push_back(block_vertices(b));
    auto blocks_containing = [&](int v) {
        std::vector<int> ids;
        for (size_t k = 0; k < bverts.size(); ++k)
            if (std::binary_search(bverts[k].begin(), bverts[k].end(), v)) ids.push_back(static_cast<int>(k));
        return ids;
    };
    if (blocks_containing(u1).size() != 1 || blocks_containing(u2).size() != 1) return std::nullopt;

    // order the blocks into a path by walking shared cut vertices
    std::vector<int> order{blocks_containing(u1)[0]};
    std::vector<int> cuts{u1};
    std::vector<char> used_block(blocks.size(), 0);
    used_block[order[0]] = 1;
    while (true) {
        int cur = order.back();
        if (std::binary_search(bverts[cur].begin(), bverts[cur].end(), u2)) break;
        // the unique next block shares exactly one vertex with cur
        int next = -1, shared = -1;
        for (size_t k = 0; k < blocks.size(); ++k) {
            if (used_block[k]) continue;
            std::vector<int> inter;
            std::set_intersection(bverts[cur].begin(), bverts[cur].end(), bverts[k].begin(),
                                  bverts[k].end(), std::back_inserter(inter));
            if (inter.empty()) continue;
            if (inter.size() > 1 || next >= 0) return std::nullopt;
            next = static_cast<int>(k);
            shared = inter[0];
        }
        if (next < 0) return std::nullopt;
        if (shared == u1 || shared == u2 || shared == cuts.back()) return std::nullopt;
        cuts.push_back(shared);
        order.push_back(next);
        used_block[next] = 1;
    }
    cuts.push_back(u2);
    if (std::find(used_block.begin(), used_block.end(), 0) != used_block.end())
        return std::nullopt;  // stray blocks off the chain
    // every vertex of g must lie on the chain
    {
        std::vector<char> covered(g.n(), 0);
        for (int b : order)
            for (int v : bverts[b]) covered[v] = 1;
        for (int v = 0; v < g.n(); ++v)
            if (!covered[v]) return std::nullopt;
    }

    ChainDecomposition dec;
    dec.cuts = cuts;
    for (size_t idx = 0; idx < order.size(); ++idx) {
        const auto& block = blocks[order[idx]];
        const auto& verts = bverts[order[idx]];
        int from = cuts[idx], to = cuts[idx + 1];
        ChainBlockCert cert;
        cert.vertices = verts;
        if (block.size() == 1) {
            cert.kind = ChainBlockCert::Kind::single_edge;
            dec.blocks.push_back(std::move(cert));
            continue;
        }
        VertexMap sub = induced_subgraph(rest, verts);
        bool all_two = true;
        for (int v = 0; v < sub.graph.n(); ++v) all_two &= sub.graph.degree(v) == 2;
        if (all_two && is_connected(sub.graph) &&
            sub.graph.edge_count() == static_cast<int>(block.size())) {
            cert.kind = ChainBlockCert::Kind::cycle;
            dec.blocks.push_back(std::move(cert));
            continue;
        }
        // (f3): the block plus the virtual edge must be a subdivision of a
        // 3-connected graph with no edge-disjoint cycles through that edge
        if (rest.adjacent(from, to)) return std::nullopt;  // the virtual edge must be new
        Edge ve(sub.old_to_new[from], sub.old_to_new[to]);
        Graph with = add_edge(sub.graph, ve);
        VertexMap sup = suppress_degree_two(with, {ve.a, ve.b});
        for (int v = 0; v < sup.graph.n(); ++v)
            if (sup.graph.degree(v) < 3) return std::nullopt;  // not a subdivision of one
        if (vertex_connectivity(sup.graph) < 3) return std::nullopt;
        Edge sve(sup.old_to_new[ve.a], sup.old_to_new[ve.b]);
        RootedInstance core(sup.graph, sve);
        auto ladder = recognize_strong_ladder(core);
        if (!ladder) return std::nullopt;
        cert.kind = ChainBlockCert::Kind::strong;
        cert.suppressed = sup.graph;
        cert.virtual_edge = sve;
        cert.ladder = ladder->spec;
        dec.blocks.push_back(std::move(cert));
    }
    return dec;
}

bool validate_chain_decomposition(const RootedInstance& inst, const ChainDecomposition& dec) {
    const Graph& g = inst.g;
    if (dec.cuts.size() != dec.blocks.size() + 1 || dec.blocks.empty()) return false;
    if (dec.cuts.front() != inst.u1() || dec.cuts.back() != inst.u2()) return false;
    // cut vertices distinct
    std::vector<int> cs = dec.cuts;
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
    // non-consecutive cuts non-adjacent (apart from e)
    for (size_t i = 0; i + 1 < dec.cuts.size(); ++i)
        for (size_t j = i + 2; j < dec.cuts.size(); ++j) {
            if (i == 0 && j + 1 == dec.cuts.size()) continue;
            if (g.adjacent(dec.cuts[i], dec.cuts[j])) return false;
        }
    // blocks pairwise intersect only in shared cuts; cover all of V and E - e
    std::vector<char> covered(g.n(), 0);
    Graph rest = remove_edges(g, {inst.e});
    int edge_total = 0;
    for (size_t k = 0; k < dec.blocks.size(); ++k) {
        const auto& verts = dec.blocks[k].vertices;
        for (int v : verts) covered[v] = 1;
        if (!std::binary_search(verts.begin(), verts.end(), dec.cuts[k]) ||
            !std::binary_search(verts.begin(), verts.end(), dec.cuts[k + 1]))
            return false;
        for (size_t l = k + 1; l < dec.blocks.size(); ++l) {
            std::vector<int> inter;
            std::set_intersection(verts.begin(), verts.end(), dec.blocks[l].vertices.begin(),
                                  dec.blocks[l].vertices.end(), std::back_inserter(inter));
            if (l == k + 1) {
                if (inter != std::vector<int>{dec.cuts[k + 1]}) return false;
            } else if (!inter.empty()) {
                return false;
            }
        }
        VertexMap sub = induced_subgraph(rest, verts);
        edge_total += sub.graph.edge_count();
        int from = dec.cuts[k], to = dec.cuts[k + 1];
        switch (dec.blocks[k].kind) {
            case ChainBlockCert::Kind::single_edge:
                if (verts.size() != 2 || sub.graph.edge_count() != 1) return false;
                if (!rest.adjacent(from, to)) return false;
                break;
            case ChainBlockCert::Kind::cycle: {
                if (sub.graph.n() < 3) return false;
                for (int v = 0; v < sub.graph.n(); ++v)
                    if (sub.graph.degree(v) != 2) return false;
                if (!is_connected(sub.graph)) return false;
                break;
            }
            case ChainBlockCert::Kind::strong: {
                if (rest.adjacent(from, to)) return false;
                Edge ve(sub.old_to_new[from], sub.old_to_new[to]);
                Graph with = add_edge(sub.graph, ve);
                VertexMap sup = suppress_degree_two(with, {ve.a, ve.b});
                if (!(sup.graph == dec.blocks[k].suppressed)) return false;
                Edge sve(sup.old_to_new[ve.a], sup.old_to_new[ve.b]);
                if (!(sve == dec.blocks[k].virtual_edge)) return false;
                if (vertex_connectivity(sup.graph) < 3) return false;
                RootedInstance core(sup.graph, sve);
                auto ladder = recognize_strong_ladder(core);
                if (!ladder || !(ladder->spec == dec.blocks[k].ladder)) return false;
                break;
            }
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (!covered[v]) return false;
    return edge_total == rest.edge_count();
}

// ---------------------------------------------------------------- corollary

bool check_4connected_corollary(const RootedInstance& inst) {
    if (vertex_connectivity(inst.g) < 4)
        throw std::invalid_argument("check_4connected_corollary: graph must be 4-connected");
    if (e_dirac_oracle(inst).found()) return true;
    // double wheel with e between the hubs: the rest is a cycle fully joined
    // to both endpoints
    const Graph& g = inst.g;
    VertexMap del = delete_vertices(g, {inst.u1(), inst.u2()});
    if (del.graph.n() < 3 || !is_connected(del.graph)) return false;
    for (int v = 0; v < del.graph.n(); ++v)
        if (del.graph.degree(v) != 2) return false;
    if (del.graph.edge_count() != del.graph.n()) return false;  // a single cycle
    for (int v = 0; v < g.n(); ++v) {
        if (v == inst.u1() || v == inst.u2()) continue;
        if (!g.adjacent(v, inst.u1()) || !g.adjacent(v, inst.u2())) return false;
    }
    return true;
}

}  // namespace rooted
