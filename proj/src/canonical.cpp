#include "rooted/canonical.hpp"

#include <algorithm>
#include <map>

namespace rooted {

namespace {

// One round of color refinement: the new color of v is the rank of
// (old color, sorted neighbor colors). Ranks are assigned in signature order,
// which is isomorphism-invariant, so refined colors are too.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
    const int n = g.n();
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colors[v]);
            std::vector<int> nb;
            for (int w : g.neighbors(v)) nb.push_back(colors[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> rank;
        for (int v = 0; v < n; ++v) rank[sig[v]] = 0;
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        std::vector<int> out(n);
        for (int v = 0; v < n; ++v) out[v] = rank[sig[v]];
        if (out == colors) return out;
        colors = std::move(out);
    }
}

struct Searcher {
    const Graph& g;
    const std::vector<int>& init_colors;
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;

    std::string encode(const std::vector<int>& pos) const {
        const int n = g.n();
        std::vector<int> at(n);
        for (int v = 0; v < n; ++v) at[pos[v]] = v;
        int bits = n * (n - 1) / 2;
        std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
        out[0] = static_cast<char>(63 + n);
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if (g.adjacent(at[i], at[j])) out[1 + idx / 6] += 1 << (5 - idx % 6);
        bool colored = false;
        for (int c : init_colors) colored |= c != 0;
        if (colored) {
            out += '|';
            for (int i = 0; i < n; ++i) out += static_cast<char>('0' + init_colors[at[i]]);
        }
        return out;
    }

    void search(std::vector<int> colors) {
        colors = refine(g, colors);
        const int n = g.n();
        // target cell: smallest color value with a non-singleton class
        // (invariant under isomorphism, unlike anything keyed on vertex ids)
        int cell_color = -1;
        std::vector<int> counts(n + 1, 0);
        for (int c : colors) counts[c]++;
        for (int c = 0; c <= n && cell_color < 0; ++c)
            if (counts[c] > 1) cell_color = c;
        if (cell_color < 0) {
            std::string code = encode(colors);
            if (!have_best || code < best) {
                best = code;
                best_perm = colors;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colors[v] != cell_color) continue;
            std::vector<int> child = colors;
            for (int w = 0; w < n; ++w) child[w] = 2 * child[w] + 1;
            child[v] -= 1;  // v now precedes the rest of its cell
            search(std::move(child));
        }
    }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors) {
    std::vector<int> init = colors.empty() ? std::vector<int>(g.n(), 0) : colors;
    if (static_cast<int>(init.size()) != g.n())
        throw std::invalid_argument("canonical_labeling: color vector size mismatch");
    for (int c : init)
        if (c < 0) throw std::invalid_argument("canonical_labeling: negative color");
    if (g.n() == 0) return {CanonicalForm{std::string(1, 63)}, {}};
    Searcher s{g, init};
    s.search(init);
    return {CanonicalForm{std::move(s.best)}, std::move(s.best_perm)};
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool same_orbit(const Graph& g, int u, int v) {
    if (u == v) return true;
    std::vector<int> cu(g.n(), 0), cv(g.n(), 0);
    cu[u] = 1;
    cv[v] = 1;
    return canonical_labeling(g, cu).form == canonical_labeling(g, cv).form;
}

CanonicalForm canonical_form_edge_rooted(const Graph& g, Edge e) {
    if (!g.has_edge(e)) throw std::invalid_argument("canonical_form_edge_rooted: edge not present");
    std::vector<int> colors(g.n(), 0);
    colors[e.a] = colors[e.b] = 1;
    return canonical_labeling(g, colors).form;
}

}  // namespace rooted
