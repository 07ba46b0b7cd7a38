#include "hocc/generators.hpp"

#include "hocc/error.hpp"
#include "hocc/random.hpp"

#include <cmath>
#include <unordered_set>

namespace hocc {

namespace {

using Edge = std::pair<NodeId, NodeId>;

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
}

void check_ring(std::size_t n, std::size_t k) {
    if (2 * k >= n) throw ConfigError("ring lattice requires 2k < n");
    if (n > std::size_t(UINT32_MAX)) throw ConfigError("too many nodes");
}

std::uint64_t key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t(u) << 32) | v;
}

}  // namespace

void GenSpec::validate() const {
    switch (model) {
    case Model::gnp:
        if (n < 1) throw ConfigError("gnp requires n >= 1");
        check_probability(p);
        break;
    case Model::ring:
        check_ring(n, k);
        break;
    case Model::small_world:
        check_ring(n, k);
        check_probability(p);
        break;
    case Model::multipartite_hood:
        if (l < 3) throw ConfigError("multipartite hood requires l >= 3");
        if (part_size < 1) throw ConfigError("multipartite hood requires part_size >= 1");
        break;
    case Model::clique_star_hood:
        if (c < 2) throw ConfigError("clique-star hood requires c >= 2");
        break;
    }
}

Graph generate(const GenSpec& spec) {
    spec.validate();
    switch (spec.model) {
    case Model::gnp: return gnp(spec.n, spec.p, spec.seed);
    case Model::ring: return ring_lattice(spec.n, spec.k);
    case Model::small_world: return small_world(spec.n, spec.k, spec.p, spec.seed);
    case Model::multipartite_hood: return multipartite_hood(spec.l, spec.part_size);
    case Model::clique_star_hood: return clique_star_hood(spec.c, spec.b);
    }
    throw ConfigError("unknown model");
}

Model parse_model(const std::string& name) {
    if (name == "gnp") return Model::gnp;
    if (name == "ring") return Model::ring;
    if (name == "sw") return Model::small_world;
    if (name == "mphood") return Model::multipartite_hood;
    if (name == "cshood") return Model::clique_star_hood;
    throw ConfigError("unknown model '" + name + "'");
}

std::string model_name(Model model) {
    switch (model) {
    case Model::gnp: return "gnp";
    case Model::ring: return "ring";
    case Model::small_world: return "sw";
    case Model::multipartite_hood: return "mphood";
    case Model::clique_star_hood: return "cshood";
    }
    return "?";
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw ConfigError("gnp requires n >= 1");
    if (n > std::size_t(UINT32_MAX)) throw ConfigError("too many nodes");
    check_probability(p);
    std::vector<Edge> edges;
    if (p == 1.0) {
        for (NodeId v = 1; v < n; ++v) {
            for (NodeId w = 0; w < v; ++w) edges.emplace_back(w, v);
        }
    } else if (p > 0.0) {
        // Pairs (w, v), w < v, in row-major order; the gap to the next edge
        // is geometric.
        Rng rng(seed);
        const double log_q = std::log1p(-p);
        std::int64_t v = 1;
        std::int64_t w = -1;
        const auto count = std::int64_t(n);
        while (v < count) {
            double r = rng.uniform();
            w += 1 + std::int64_t(std::floor(std::log1p(-r) / log_q));
            while (w >= v && v < count) {
                w -= v;
                ++v;
            }
            if (v < count) edges.emplace_back(NodeId(w), NodeId(v));
        }
    }
    return Graph::from_edges(n, edges);
}

Graph ring_lattice(std::size_t n, std::size_t k) {
    check_ring(n, k);
    std::vector<Edge> edges;
    edges.reserve(n * k);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= k; ++j) edges.emplace_back(NodeId(u), NodeId((u + j) % n));
    }
    return Graph::from_edges(n, edges);
}

Graph small_world(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
    check_ring(n, k);
    check_probability(p);
    std::vector<Edge> edges;
    edges.reserve(n * k);
    std::unordered_set<std::uint64_t> present;
    present.reserve(2 * n * k);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= k; ++j) {
            edges.emplace_back(NodeId(u), NodeId((u + j) % n));
            present.insert(key(edges.back().first, edges.back().second));
        }
    }

    Rng rng(seed);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!rng.bernoulli(p)) continue;
            Edge& e = edges[u * k + j];
            for (int attempt = 0; attempt < kMaxRewireDraws; ++attempt) {
                auto w = NodeId(rng.below(n));
                if (w == e.first || present.count(key(e.first, w))) continue;
                present.erase(key(e.first, e.second));
                present.insert(key(e.first, w));
                e.second = w;
                break;
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph multipartite_hood(unsigned l, std::size_t part_size) {
    if (l < 3) throw ConfigError("multipartite hood requires l >= 3");
    if (part_size < 1) throw ConfigError("multipartite hood requires part_size >= 1");
    const std::size_t parts = l - 1;
    const std::size_t d = parts * part_size;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d; ++i) {
        edges.emplace_back(0, NodeId(i + 1));
        for (std::size_t j = i + 1; j < d; ++j) {
            if (i / part_size != j / part_size) edges.emplace_back(NodeId(i + 1), NodeId(j + 1));
        }
    }
    return Graph::from_edges(d + 1, edges);
}

Graph clique_star_hood(std::size_t c, std::size_t b) {
    if (c < 2) throw ConfigError("clique-star hood requires c >= 2");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= c + b; ++i) edges.emplace_back(0, NodeId(i));
    for (std::size_t i = 1; i <= c; ++i) {
        for (std::size_t j = i + 1; j <= c; ++j) edges.emplace_back(NodeId(i), NodeId(j));
    }
    return Graph::from_edges(c + b + 1, edges);
}

}  // namespace hocc
