#include "rooted/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace rooted {

namespace {

// Dense flow network, small graphs only. Nodes: 2v = v_in, 2v+1 = v_out,
// then source and sink.
struct FlowNet {
    int nodes;
    std::vector<std::vector<int>> cap;

    explicit FlowNet(int k) : nodes(k), cap(k, std::vector<int>(k, 0)) {}

    int augment(int s, int t) {
        std::vector<int> prev(nodes, -1);
        std::queue<int> q;
        q.push(s);
        prev[s] = s;
        while (!q.empty() && prev[t] < 0) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < nodes; ++w)
                if (prev[w] < 0 && cap[v][w] > 0) {
                    prev[w] = v;
                    q.push(w);
                }
        }
        if (prev[t] < 0) return 0;
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        return 1;
    }
};

}  // namespace

DisjointPaths max_vertex_disjoint_paths(const Graph& g, const std::vector<int>& S,
                                        const std::vector<int>& T,
                                        const std::vector<int>& forbidden) {
    if (S.empty() || T.empty())
        throw std::invalid_argument("max_vertex_disjoint_paths: empty terminal set");
    std::vector<char> inS(g.n(), 0), inT(g.n(), 0), bad(g.n(), 0);
    for (int v : S) {
        if (!g.has_vertex(v)) throw std::invalid_argument("max_vertex_disjoint_paths: bad S vertex");
        inS[v] = 1;
    }
    for (int v : T) {
        if (!g.has_vertex(v)) throw std::invalid_argument("max_vertex_disjoint_paths: bad T vertex");
        if (inS[v]) throw std::invalid_argument("max_vertex_disjoint_paths: S and T intersect");
        inT[v] = 1;
    }
    for (int v : forbidden) {
        if (!g.has_vertex(v)) throw std::invalid_argument("max_vertex_disjoint_paths: bad forbidden vertex");
        if (inS[v] || inT[v])
            throw std::invalid_argument("max_vertex_disjoint_paths: forbidden meets terminals");
        bad[v] = 1;
    }

    const int n = g.n();
    const int src = 2 * n, snk = 2 * n + 1;
    const int inf = n + 2;
    FlowNet net(2 * n + 2);
    for (int v = 0; v < n; ++v) {
        if (bad[v]) continue;
        int vcap = 1;
        if ((inS[v] && S.size() == 1) || (inT[v] && T.size() == 1)) vcap = inf;
        net.cap[2 * v][2 * v + 1] = vcap;
    }
    for (const Edge& e : g.edges()) {
        if (bad[e.a] || bad[e.b]) continue;
        net.cap[2 * e.a + 1][2 * e.b] = 1;
        net.cap[2 * e.b + 1][2 * e.a] = 1;
    }
    for (int v : S) net.cap[src][2 * v] = inf;
    for (int v : T) net.cap[2 * v + 1][snk] = inf;

    int flow = 0;
    while (net.augment(src, snk)) ++flow;

    // Decompose: a used arc u_out -> v_in has residual back-capacity toward
    // u, i.e. cap[v_in][u_out] was raised above its initial 0.
    std::vector<std::vector<int>> used(n);
    for (const Edge& e : g.edges()) {
        if (bad[e.a] || bad[e.b]) continue;
        int fwd = 1 - net.cap[2 * e.a + 1][2 * e.b];
        int bwd = 1 - net.cap[2 * e.b + 1][2 * e.a];
        if (fwd > 0 && bwd > 0) continue;  // two-cycle of flow, cancels
        if (fwd > 0) used[e.a].push_back(e.b);
        if (bwd > 0) used[e.b].push_back(e.a);
    }
    for (auto& list : used) std::sort(list.begin(), list.end());

    DisjointPaths out;
    out.count = flow;
    for (int start : S) {
        int launches = inf - net.cap[src][2 * start];
        for (int k = 0; k < launches; ++k) {
            Path p{start};
            int cur = start;
            while (!inT[cur]) {
                if (used[cur].empty()) throw std::logic_error("flow decomposition: dead end");
                int nxt = used[cur].front();
                used[cur].erase(used[cur].begin());
                p.push_back(nxt);
                cur = nxt;
            }
            out.paths.push_back(std::move(p));
        }
    }
    return out;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.n();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    bool complete = g.edge_count() == n * (n - 1) / 2;
    if (complete) return n - 1;
    int best = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            DisjointPaths dp = max_vertex_disjoint_paths(g, {u}, {v});
            best = std::min(best, dp.count);
        }
    return best;
}

}  // namespace rooted
