#include "hocc/graph.hpp"

#include "hocc/error.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace hocc {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n) {
        throw ConfigError("label count does not match node count");
    }
    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }

    std::vector<std::uint64_t> degree(n + 1, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw ConfigError("edge endpoint out of range");
        if (u == v) continue;
        ++degree[u];
        ++degree[v];
    }

    Graph g;
    g.labels_ = std::move(labels);
    g.offsets_.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + degree[u];

    std::vector<NodeId> raw(g.offsets_[n]);
    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        raw[fill[u]++] = v;
        raw[fill[v]++] = u;
    }

    // Sort and dedupe each list, then compact.
    std::vector<std::uint64_t> offsets(n + 1, 0);
    std::size_t out = 0;
    for (std::size_t u = 0; u < n; ++u) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
        std::sort(first, last);
        auto end = std::unique(first, last);
        for (auto it = first; it != end; ++it) raw[out++] = *it;
        offsets[u + 1] = out;
    }
    raw.resize(out);
    raw.shrink_to_fit();
    g.neighbors_ = std::move(raw);
    g.offsets_ = std::move(offsets);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
    auto a = neighbors(u);
    auto b = neighbors(v);
    if (a.size() > b.size()) std::swap(a, b), std::swap(u, v);
    return std::binary_search(a.begin(), a.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t u = 0; u < num_nodes(); ++u) best = std::max(best, degree(NodeId(u)));
    return best;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(num_nodes());
    for (std::size_t u = 0; u < d.size(); ++u) d[u] = degree(NodeId(u));
    return d;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(num_edges());
    for (NodeId u = 0; u < num_nodes(); ++u) {
        for (NodeId v : neighbors(u)) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return edges;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on whitespace into at most 3 tokens; the count tells the caller
// whether the line was a pair.
std::size_t tokenize(std::string_view line, std::string_view (&tokens)[3]) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i == line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (count < 3) tokens[count] = line.substr(start, i - start);
        ++count;
    }
    return count;
}

}  // namespace

Graph load_edge_list(std::istream& in, const LoadOptions& options) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::unordered_set<std::uint64_t> seen;  // only used when !dedupe

    auto intern = [&](std::string_view token) {
        auto [it, inserted] = ids.try_emplace(std::string(token), NodeId(labels.size()));
        if (inserted) labels.emplace_back(token);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        std::size_t first = 0;
        while (first < view.size() && is_space(view[first])) ++first;
        if (first == view.size()) continue;
        if (view[first] == '#' || view[first] == '%') continue;

        std::string_view tokens[3];
        std::size_t count = tokenize(view, tokens);
        if (count != 2) {
            throw ParseError(lineno, "expected 2 tokens, found " + std::to_string(count));
        }
        NodeId u = intern(tokens[0]);
        NodeId v = intern(tokens[1]);
        if (u == v) {
            if (!options.drop_self_loops) throw ParseError(lineno, "self-loop");
            continue;
        }
        if (!options.dedupe) {
            std::uint64_t key = (std::uint64_t(std::min(u, v)) << 32) | std::max(u, v);
            if (!seen.insert(key).second) throw ParseError(lineno, "duplicate edge");
        }
        edges.emplace_back(u, v);
    }
    if (edges.empty()) throw EmptyGraphError("edge list contains no edges");

    std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
}

Graph load_edge_list_file(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return load_edge_list(in, options);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        if (g.degree(u) == 0) {
            out << g.label(u) << ' ' << g.label(u) << '\n';
            continue;
        }
        for (NodeId v : g.neighbors(u)) {
            if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
        }
    }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_edge_list(g, out);
    if (!out) throw Error("write failed: " + path);
}

Graph neighborhood_subgraph(const Graph& g, NodeId u) {
    auto hood = g.neighbors(u);
    std::vector<std::string> labels;
    labels.reserve(hood.size());
    for (NodeId v : hood) labels.push_back(g.label(v));

    // Local index of a neighbor is its rank in the sorted neighbor list, so
    // membership and lookup are one binary search.
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < hood.size(); ++i) {
        for (NodeId w : g.neighbors(hood[i])) {
            if (w <= hood[i]) continue;
            auto it = std::lower_bound(hood.begin(), hood.end(), w);
            if (it != hood.end() && *it == w) {
                edges.emplace_back(i, NodeId(it - hood.begin()));
            }
        }
    }
    return Graph::from_edges(hood.size(), edges, std::move(labels));
}

Graph disjoint_union(const Graph& a, const Graph& b, const std::string& b_prefix) {
    std::vector<std::pair<NodeId, NodeId>> edges = a.edge_list();
    NodeId shift = NodeId(a.num_nodes());
    for (auto [u, v] : b.edge_list()) edges.emplace_back(u + shift, v + shift);
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) labels.push_back(b_prefix + l);
    return Graph::from_edges(a.num_nodes() + b.num_nodes(), edges, std::move(labels));
}

namespace {

VertexOrdering finish(OrderingKind kind, std::vector<NodeId> order) {
    VertexOrdering o;
    o.kind = kind;
    o.position.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) o.position[order[i]] = NodeId(i);
    o.order = std::move(order);
    return o;
}

}  // namespace

VertexOrdering degeneracy_order(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::size_t> degree = g.degrees();
    std::vector<char> removed(n, 0);

    // Lazy-deletion min-heap keyed by (current degree, id).
    using Entry = std::pair<std::size_t, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (NodeId u = 0; u < n; ++u) heap.emplace(degree[u], u);

    std::vector<NodeId> order;
    order.reserve(n);
    std::size_t core = 0;
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (removed[u] || d != degree[u]) continue;
        removed[u] = 1;
        core = std::max(core, d);
        order.push_back(u);
        for (NodeId v : g.neighbors(u)) {
            if (!removed[v]) heap.emplace(--degree[v], v);
        }
    }
    VertexOrdering o = finish(OrderingKind::degeneracy, std::move(order));
    o.degeneracy = core;
    return o;
}

VertexOrdering degree_order(const Graph& g) {
    std::vector<NodeId> order(g.num_nodes());
    std::iota(order.begin(), order.end(), NodeId(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) < g.degree(b); });
    return finish(OrderingKind::degree, std::move(order));
}

VertexOrdering input_order(const Graph& g) {
    std::vector<NodeId> order(g.num_nodes());
    std::iota(order.begin(), order.end(), NodeId(0));
    return finish(OrderingKind::input, std::move(order));
}

}  // namespace hocc
