#include "rooted/graph6.hpp"

namespace rooted {

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) throw std::invalid_argument("graph6: empty input");
    if (line[0] == '~') throw std::invalid_argument("graph6: long form (n > 62) not supported");
    if (line[0] < 63 || line[0] > 125) throw std::invalid_argument("graph6: malformed header byte");
    int n = line[0] - 63;
    int bits = n * (n - 1) / 2;
    int expect = 1 + (bits + 5) / 6;
    if (static_cast<int>(line.size()) != expect)
        throw std::invalid_argument("graph6: expected " + std::to_string(expect) + " bytes, got " +
                                    std::to_string(line.size()));
    std::vector<Edge> edges;
    int idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            char c = line[1 + idx / 6];
            if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
            int bit = (c - 63) >> (5 - idx % 6) & 1;
            if (bit) edges.emplace_back(i, j);
        }
    }
    // trailing pad bits must be zero
    for (int k = bits; k < 6 * ((bits + 5) / 6); ++k) {
        char c = line[1 + k / 6];
        if ((c - 63) >> (5 - k % 6) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    int n = g.n();
    int bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, 63);
    out[0] = static_cast<char>(63 + n);
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (g.adjacent(i, j)) out[1 + idx / 6] += 1 << (5 - idx % 6);
    return out;
}

}  // namespace rooted
