#include "rooted/cycles.hpp"

#include <algorithm>

namespace rooted {

bool is_path_of(const Graph& g, const Path& p) {
    if (p.empty()) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : p) {
        if (!g.has_vertex(v) || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1])) return false;
    return true;
}

std::vector<int> path_interior(const Path& p) {
    if (p.size() <= 2) return {};
    return std::vector<int>(p.begin() + 1, p.end() - 1);
}

bool Cycle::contains(int v) const { return std::find(verts.begin(), verts.end(), v) != verts.end(); }

bool Cycle::contains_edge(Edge e) const {
    for (size_t i = 0; i < verts.size(); ++i) {
        Edge f(verts[i], verts[(i + 1) % verts.size()]);
        if (f == e) return true;
    }
    return false;
}

std::vector<Edge> Cycle::edge_set() const {
    std::vector<Edge> es;
    for (size_t i = 0; i < verts.size(); ++i) es.emplace_back(verts[i], verts[(i + 1) % verts.size()]);
    std::sort(es.begin(), es.end());
    return es;
}

Cycle canonical_cycle(std::vector<int> raw) {
    if (raw.size() < 3) throw std::invalid_argument("cycle: needs at least 3 vertices");
    {
        std::vector<int> sorted = raw;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("cycle: repeated vertex");
    }
    size_t k = raw.size();
    size_t at = std::min_element(raw.begin(), raw.end()) - raw.begin();
    std::vector<int> fwd(k), rev(k);
    for (size_t i = 0; i < k; ++i) {
        fwd[i] = raw[(at + i) % k];
        rev[i] = raw[(at + k - i) % k];
    }
    return Cycle{fwd <= rev ? std::move(fwd) : std::move(rev)};
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
    if (c.verts.size() < 3) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : c.verts) {
        if (!g.has_vertex(v) || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i < c.verts.size(); ++i)
        if (!g.adjacent(c.verts[i], c.verts[(i + 1) % c.verts.size()])) return false;
    return true;
}

namespace {

// DFS over simple paths s,v1,...,vk with all vertices > s except s itself;
// a cycle closes when vk is adjacent to s. Requiring v1 < vk skips the
// mirror traversal, so each cycle is reported exactly once.
struct CycleEnum {
    const Graph& g;
    const std::function<bool(const Cycle&)>& fn;
    std::vector<int> path;
    std::vector<char> used;
    bool stopped = false;

    void dfs(int s, int v) {
        if (stopped) return;
        path.push_back(v);
        used[v] = 1;
        if (path.size() >= 3 && g.adjacent(v, s) && path[1] < v)
            if (!fn(canonical_cycle(path))) stopped = true;
        if (!stopped)
            for (int w : g.neighbors(v)) {
                if (w <= s || used[w]) continue;
                dfs(s, w);
                if (stopped) break;
            }
        used[v] = 0;
        path.pop_back();
    }
};

}  // namespace

bool for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& fn) {
    CycleEnum e{g, fn};
    e.used.assign(g.n(), 0);
    for (int s = 0; s < g.n() && !e.stopped; ++s) {
        e.path.assign(1, s);
        e.used.assign(g.n(), 0);
        e.used[s] = 1;
        for (int w : g.neighbors(s)) {
            if (w <= s) continue;
            e.dfs(s, w);
            if (e.stopped) break;
        }
    }
    return e.stopped;
}

std::vector<Cycle> all_cycles(const Graph& g) {
    std::vector<Cycle> out;
    for_each_cycle(g, [&](const Cycle& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

namespace {

struct EdgeCycleEnum {
    const Graph& g;
    Edge e;
    const std::function<bool(const Cycle&)>& fn;
    std::vector<int> path;
    std::vector<char> used;
    bool stopped = false;

    void dfs(int v) {
        if (stopped) return;
        path.push_back(v);
        used[v] = 1;
        if (v == e.b) {
            if (path.size() >= 3 && !fn(canonical_cycle(path))) stopped = true;
        } else {
            for (int w : g.neighbors(v)) {
                if (used[w]) continue;
                if (v == e.a && w == e.b) continue;  // the rooted edge itself
                dfs(w);
                if (stopped) break;
            }
        }
        used[v] = 0;
        path.pop_back();
    }
};

}  // namespace

bool for_each_cycle_through_edge(const Graph& g, Edge e, const std::function<bool(const Cycle&)>& fn) {
    if (!g.has_edge(e)) throw std::invalid_argument("cycles_containing_edge: edge not present");
    EdgeCycleEnum en{g, e, fn};
    en.used.assign(g.n(), 0);
    en.dfs(e.a);
    return en.stopped;
}

std::vector<Cycle> cycles_containing_edge(const Graph& g, Edge e) {
    std::vector<Cycle> out;
    for_each_cycle_through_edge(g, e, [&](const Cycle& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::optional<Cycle> find_cycle(const Graph& g) {
    std::optional<Cycle> best;
    for_each_cycle(g, [&](const Cycle& c) {
        if (!best || c < *best) best = c;
        return true;
    });
    return best;
}

}  // namespace rooted
