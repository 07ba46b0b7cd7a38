#pragma once

#include "hocc/graph.hpp"

#include <cstdint>
#include <string>

namespace hocc {

enum class Model { gnp, ring, small_world, multipartite_hood, clique_star_hood };

// Parameters for one generator call. Fields a model does not use are ignored.
struct GenSpec {
    Model model = Model::gnp;
    std::size_t n = 0;
    double p = 0;
    std::size_t k = 0;
    unsigned l = 3;               // multipartite_hood: order whose wedges never close
    std::size_t part_size = 1;    // multipartite_hood
    std::size_t c = 2;            // clique_star_hood: clique size
    std::size_t b = 0;            // clique_star_hood: pendant count
    std::uint64_t seed = 0;

    // Throws ConfigError when parameters are out of range for the model.
    void validate() const;
};

Graph generate(const GenSpec& spec);

Model parse_model(const std::string& name);  // gnp | ring | sw | mphood | cshood
std::string model_name(Model model);

// Each of the C(n, 2) pairs is an edge independently with probability p.
// Pairs are visited with geometric skipping, so cost is O(n + m).
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// Circulant graph: node u is adjacent to u +- 1, ..., u +- k (mod n).
// Requires 2k < n.
Graph ring_lattice(std::size_t n, std::size_t k);

// Ring lattice, then for each node u = 0..n-1 and each clockwise edge
// (u, u + j), j = 1..k, with probability p the edge becomes (u, w) with w
// uniform over nodes that are neither u nor already adjacent to u. A target
// that collides is redrawn up to kMaxRewireDraws times, then the edge stays.
// The edge count is always n * k.
Graph small_world(std::size_t n, std::size_t k, double p, std::uint64_t seed);

inline constexpr int kMaxRewireDraws = 64;

// Hub node 0 joined to every node of a complete (l - 1)-partite graph with
// parts of part_size nodes. The hub's l-wedges never close.
Graph multipartite_hood(unsigned l, std::size_t part_size);

// Hub node 0 joined to a c-clique (nodes 1..c) and to b pendant nodes
// (c + 1..c + b).
Graph clique_star_hood(std::size_t c, std::size_t b);

}  // namespace hocc
