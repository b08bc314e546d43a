#include "rooted/enumerate.hpp"

#include <algorithm>
#include <set>

#include "rooted/canonical.hpp"
#include "rooted/connectivity.hpp"

namespace rooted {

namespace {

std::vector<Graph> next_level(const std::vector<Graph>& parents) {
    std::vector<Graph> out;
    for (const Graph& p : parents) {
        const int k = p.n();
        std::set<CanonicalForm> emitted;  // dedup within one parent
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<Edge> edges = p.edges();
            for (int v = 0; v < k; ++v)
                if (mask >> v & 1) edges.emplace_back(v, k);
            Graph child = Graph::from_edges(k + 1, std::move(edges));
            CanonicalLabeling lab = canonical_labeling(child);
            // canonical deletion vertex: the one with the highest label
            int w = 0;
            for (int v = 0; v <= k; ++v)
                if (lab.to_canonical[v] == k) w = v;
            if (!same_orbit(child, k, w)) continue;
            if (emitted.insert(lab.form).second) out.push_back(std::move(child));
        }
    }
    return out;
}

}  // namespace

void for_each_graph(const EnumSpec& spec, const std::function<bool(const Graph&)>& fn) {
    if (spec.n < 1 || spec.n > EnumSpec::kMaxN)
        throw std::invalid_argument("enumerate: order must be in 1.." + std::to_string(EnumSpec::kMaxN));
    if (spec.min_connectivity < 0 || spec.min_connectivity > 4)
        throw std::invalid_argument("enumerate: min connectivity must be in 0..4");
    std::vector<Graph> level{Graph::empty(1)};
    for (int k = 1; k < spec.n; ++k) level = next_level(level);
    for (const Graph& g : level) {
        if (spec.min_connectivity > 0 && vertex_connectivity(g) < spec.min_connectivity) continue;
        if (spec.filter && !spec.filter(g)) continue;
        if (!fn(g)) return;
    }
}

std::vector<Graph> enumerate_graphs(const EnumSpec& spec) {
    std::vector<Graph> out;
    for_each_graph(spec, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::vector<Graph> dedup_graph_stream(const std::vector<std::string>& graph6_lines,
                                      const EnumSpec& spec) {
    std::vector<Graph> out;
    std::set<CanonicalForm> seen;
    for (const std::string& line : graph6_lines) {
        if (line.empty()) continue;
        Graph g = parse_graph6(line);
        if (!seen.insert(canonical_form(g)).second) continue;
        if (spec.min_connectivity > 0 && vertex_connectivity(g) < spec.min_connectivity) continue;
        if (spec.filter && !spec.filter(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace rooted
