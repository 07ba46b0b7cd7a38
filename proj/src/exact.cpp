#include "hocc/exact.hpp"

#include "hocc/error.hpp"

namespace hocc::exact {

std::vector<std::optional<Rational>> local_coefficients(const Graph& g, const CliqueCounts& open,
                                                        const CliqueCounts& closing) {
    if (closing.order != open.order + 1) throw ConfigError("orders must be consecutive");
    std::vector<std::optional<Rational>> out(g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        Integer slots = Integer(g.degree(u)) - open.order + 1;
        if (slots <= 0 || open.per_node[u] == 0) continue;
        Integer num = Integer(open.order) * closing.per_node[u];
        out[u] = Rational(num, slots * open.per_node[u]);
    }
    return out;
}

std::vector<std::optional<Rational>> local_coefficients_from_wedges(
    std::span<const Count> wedges, unsigned order, const CliqueCounts& closing) {
    if (closing.order != order + 1) throw ConfigError("orders must be consecutive");
    std::vector<std::optional<Rational>> out(wedges.size());
    for (std::size_t u = 0; u < wedges.size(); ++u) {
        if (wedges[u] == 0) continue;
        out[u] = Rational(Integer(order) * closing.per_node[u], Integer(wedges[u]));
    }
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace hocc::exact
