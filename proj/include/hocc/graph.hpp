#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hocc {

using NodeId = std::uint32_t;

// Immutable undirected simple graph in CSR form.
//
// Invariants: no self-loops, no duplicate edges, symmetric adjacency and every
// neighbor list strictly ascending. Node ids are contiguous 0..n-1; the
// external identifier of each node is kept in labels().
class Graph {
public:
    Graph() = default;

    // Builds from an arbitrary edge list. Self-loops and duplicates (in either
    // orientation) are dropped. Every id must be < n. Empty labels means
    // "use the decimal id".
    static Graph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges,
                            std::vector<std::string> labels = {});

    std::size_t num_nodes() const noexcept { return labels_.size(); }
    std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId u) const noexcept {
        return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
    }
    std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
    bool has_edge(NodeId u, NodeId v) const noexcept;

    const std::string& label(NodeId u) const { return labels_[u]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::size_t max_degree() const noexcept;
    std::vector<std::size_t> degrees() const;

    // Each edge once as (u, v) with u < v, ordered by u then v.
    std::vector<std::pair<NodeId, NodeId>> edge_list() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::uint64_t> offsets_{0};
    std::vector<NodeId> neighbors_;
    std::vector<std::string> labels_;
};

struct LoadOptions {
    bool dedupe = true;           // false: a repeated edge is a parse error
    bool drop_self_loops = true;  // false: a self-loop is a parse error
};

// Whitespace-separated "u v" pairs, one per line. Lines starting with '#' or
// '%' and blank lines are skipped. Labels are opaque tokens, numbered in
// order of first appearance. Nodes seen only in self-loops are kept with
// degree 0. Directed input is symmetrized.
Graph load_edge_list(std::istream& in, const LoadOptions& options = {});
Graph load_edge_list_file(const std::string& path, const LoadOptions& options = {});

// One "u v" line per edge using labels, sorted by internal id, LF endings.
// Isolated nodes are written as a self-loop line so the node set survives a
// reload.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// Induced subgraph on the neighbors of u, excluding u. Local node i is the
// i-th neighbor of u; labels carry over.
Graph neighborhood_subgraph(const Graph& g, NodeId u);

// Disjoint union; node ids of b are shifted by a.num_nodes(). Labels of b are
// prefixed with `b_prefix` to keep them distinct.
Graph disjoint_union(const Graph& a, const Graph& b, const std::string& b_prefix = "b");

enum class OrderingKind { degeneracy, degree, input };

struct VertexOrdering {
    OrderingKind kind = OrderingKind::input;
    std::vector<NodeId> order;     // order[i] = node at position i
    std::vector<NodeId> position;  // position[u] = index of u in order
    std::size_t degeneracy = 0;    // only meaningful for OrderingKind::degeneracy
};

// Repeatedly removes a minimum-degree node, smallest id first on ties.
VertexOrdering degeneracy_order(const Graph& g);
// Ascending degree, smallest id first on ties.
VertexOrdering degree_order(const Graph& g);
VertexOrdering input_order(const Graph& g);

}  // namespace hocc
