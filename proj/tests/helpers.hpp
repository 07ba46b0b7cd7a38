#pragma once

#include "hocc/graph.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using hocc::Graph;
using hocc::NodeId;

inline Graph make(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges) {
    return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make(n, e);
}

inline Graph triangle() { return complete(3); }

// Center 0, leaves 1..leaves.
inline Graph star(std::size_t leaves) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return make(leaves + 1, e);
}

inline Graph path(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return make(n, e);
}

inline Graph petersen() {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return make(10, e);
}

inline Graph diamond() { return make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph parse(const std::string& text) {
    std::istringstream in(text);
    return hocc::load_edge_list(in);
}

}  // namespace testing
