#include "rooted/graph.hpp"

#include <algorithm>
#include <sstream>

namespace rooted {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: order must be in 0.." + std::to_string(kMaxVertices));
    for (const Edge& e : edges)
        if (e.b >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    g.mask_.assign(n, 0);
    for (const Edge& e : g.edges_) {
        g.adj_[e.a].push_back(e.b);
        g.adj_[e.b].push_back(e.a);
        g.mask_[e.a] |= std::uint64_t{1} << e.b;
        g.mask_[e.b] |= std::uint64_t{1} << e.a;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.emplace_back(u, v);
    return from_edges(n, std::move(edges));
}

Graph Graph::empty(int n) { return from_edges(n, {}); }

namespace {

std::vector<int> compact_map(int n, const std::vector<char>& removed) {
    std::vector<int> map(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) map[v] = next++;
    return map;
}

}  // namespace

VertexMap delete_vertices(const Graph& g, const std::vector<int>& xs) {
    std::vector<char> removed(g.n(), 0);
    for (int v : xs) {
        if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertices: vertex out of range");
        removed[v] = 1;
    }
    std::vector<int> map = compact_map(g.n(), removed);
    int m = 0;
    for (int v = 0; v < g.n(); ++v) m += !removed[v];
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!removed[e.a] && !removed[e.b]) edges.emplace_back(map[e.a], map[e.b]);
    return {Graph::from_edges(m, std::move(edges)), std::move(map)};
}

VertexMap induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<char> kept(g.n(), 0);
    for (int v : keep) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: vertex out of range");
        kept[v] = 1;
    }
    std::vector<int> drop;
    for (int v = 0; v < g.n(); ++v)
        if (!kept[v]) drop.push_back(v);
    return delete_vertices(g, drop);
}

VertexMap contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) throw std::invalid_argument("contract_edge: edge not present");
    // b merges into a; loops vanish and parallel edges collapse by set semantics.
    std::vector<char> removed(g.n(), 0);
    removed[e.b] = 1;
    std::vector<int> map = compact_map(g.n(), removed);
    std::vector<Edge> edges;
    for (const Edge& f : g.edges()) {
        int u = f.a == e.b ? e.a : f.a;
        int v = f.b == e.b ? e.a : f.b;
        if (u == v) continue;
        edges.emplace_back(map[u], map[v]);
    }
    return {Graph::from_edges(g.n() - 1, std::move(edges)), std::move(map)};
}

VertexMap suppress_degree_two(const Graph& g, const std::vector<int>& protected_vertices) {
    Graph cur = g;
    std::vector<int> total(g.n());
    for (int v = 0; v < g.n(); ++v) total[v] = v;
    std::vector<char> prot(g.n(), 0);  // indexed by current vertices, remapped below
    for (int v : protected_vertices) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("suppress_degree_two: bad protected vertex");
        prot[v] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < cur.n(); ++v) {
            if (prot[v] || cur.degree(v) != 2) continue;
            int p = cur.neighbors(v)[0], q = cur.neighbors(v)[1];
            if (cur.adjacent(p, q)) continue;
            VertexMap del = delete_vertices(add_edge(cur, Edge(p, q)), {v});
            for (int old = 0; old < g.n(); ++old)
                total[old] = total[old] < 0 ? -1 : del.old_to_new[total[old]];
            std::vector<char> nprot(cur.n() - 1, 0);
            for (int w = 0; w < cur.n(); ++w)
                if (del.old_to_new[w] >= 0) nprot[del.old_to_new[w]] = prot[w];
            prot = std::move(nprot);
            cur = std::move(del.graph);
            changed = true;
            break;
        }
    }
    return {std::move(cur), std::move(total)};
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& es) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (std::find(es.begin(), es.end(), e) == es.end()) edges.push_back(e);
    return Graph::from_edges(g.n(), std::move(edges));
}

Graph add_edge(const Graph& g, Edge e) {
    std::vector<Edge> edges = g.edges();
    edges.push_back(e);
    return Graph::from_edges(g.n(), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

bool is_forest(const Graph& g) {
    // acyclic <=> every component has |V| - 1 edges
    auto comps = connected_components(g);
    return g.edge_count() + static_cast<int>(comps.size()) == g.n();
}

Graph parse_edge_list(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("edge list: missing ';'");
    int n = 0;
    try {
        n = std::stoi(text.substr(0, semi));
    } catch (const std::exception&) {
        throw std::invalid_argument("edge list: bad vertex count '" + text.substr(0, semi) + "'");
    }
    std::vector<std::pair<int, int>> pairs;
    std::stringstream rest(text.substr(semi + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        std::string trimmed;
        for (char c : item)
            if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) continue;
        auto dash = trimmed.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == trimmed.size())
            throw std::invalid_argument("edge list: bad edge token '" + trimmed + "'");
        int a, b;
        try {
            a = std::stoi(trimmed.substr(0, dash));
            b = std::stoi(trimmed.substr(dash + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("edge list: bad edge token '" + trimmed + "'");
        }
        pairs.emplace_back(a, b);
    }
    return Graph::from_edge_list(n, pairs);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + ";";
    bool first = true;
    for (const Edge& e : g.edges()) {
        out += first ? " " : ", ";
        out += std::to_string(e.a) + "-" + std::to_string(e.b);
        first = false;
    }
    return out;
}

}  // namespace rooted
