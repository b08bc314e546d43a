#ifndef ROOTED_GRAPH6_HPP
#define ROOTED_GRAPH6_HPP

#include <string>

#include "rooted/graph.hpp"

namespace rooted {

// Standard graph6 encoding, one graph per line, short form only (n <= 62).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

}  // namespace rooted

#endif
