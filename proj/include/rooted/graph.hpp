#ifndef ROOTED_GRAPH_HPP
#define ROOTED_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rooted {

// Everything in this library is sized for exhaustive small-graph work.
// 62 is the largest order representable in short-form graph6.
inline constexpr int kMaxVertices = 62;

struct Edge {
    int a = 0;
    int b = 1;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {
        if (u == v) throw std::invalid_argument("Edge: loop " + std::to_string(u));
        if (u < 0 || v < 0) throw std::invalid_argument("Edge: negative vertex");
    }
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// every operation that changes a graph returns a new one, so backtracking
// searches never have to undo anything. Edges are kept sorted and the same
// adjacency is mirrored as per-vertex sorted neighbor lists and as bitmasks.
class Graph {
  public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);
    static Graph from_edges(int n, std::vector<Edge> edges);
    static Graph empty(int n);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::uint64_t neighbor_mask(int v) const { return mask_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const {
        return u != v && u >= 0 && v >= 0 && u < n_ && v < n_ && (mask_[u] >> v & 1u);
    }
    bool has_edge(const Edge& e) const { return adjacent(e.a, e.b); }
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;
};

// Result of an operation that renumbers vertices. old_to_new[v] is the new
// index of v, or -1 if v was removed; the mapping is order-preserving.
struct VertexMap {
    Graph graph;
    std::vector<int> old_to_new;
};

VertexMap delete_vertices(const Graph& g, const std::vector<int>& xs);
VertexMap contract_edge(const Graph& g, Edge e);

// Repeatedly replaces an unprotected degree-2 vertex whose neighbors are
// non-adjacent by an edge between the neighbors, until a fixpoint. A
// degree-2 vertex with adjacent neighbors stays (the result must stay simple).
VertexMap suppress_degree_two(const Graph& g, const std::vector<int>& protected_vertices = {});

Graph remove_edges(const Graph& g, const std::vector<Edge>& es);
Graph add_edge(const Graph& g, Edge e);

bool is_connected(const Graph& g);
// Components ordered by smallest contained vertex; vertices sorted within.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_forest(const Graph& g);

// Induced subgraph on the given vertex set (complement of delete_vertices).
VertexMap induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Plain text edge-list format: "n; a-b, c-d, ...".
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Thrown when a verified theorem would be contradicted by computed data.
struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rooted

#endif
