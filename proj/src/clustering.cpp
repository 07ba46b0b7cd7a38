#include "hocc/clustering.hpp"

#include "hocc/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hocc {

namespace {

using Wide = unsigned __int128;

double ratio(Wide num, Wide den) { return double(num) / double(den); }

// d_u - l + 1, clamped at zero when u is too small to center an l-wedge.
Count open_slots(std::size_t degree, unsigned order) {
    return degree + 1 >= order ? Count(degree + 1 - order) : 0;
}

void check_pair(const CliqueCounts& open, const CliqueCounts& closing) {
    if (closing.order != open.order + 1) {
        throw ConfigError("closing counts must be one order above the wedge order");
    }
    if (closing.per_node.size() != open.per_node.size()) {
        throw ConfigError("clique count vectors differ in size");
    }
}

}  // namespace

WedgeCounts wedge_counts(const Graph& g, const CliqueCounts& counts) {
    if (counts.order < 2) throw ConfigError("wedge order must be at least 2");
    if (counts.per_node.size() != g.num_nodes()) throw ConfigError("counts do not match graph");
    WedgeCounts w;
    w.order = counts.order;
    w.per_node.resize(g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        Count slots = open_slots(g.degree(u), counts.order);
        if (__builtin_mul_overflow(counts.per_node[u], slots, &w.per_node[u]) ||
            __builtin_add_overflow(w.total, w.per_node[u], &w.total)) {
            throw OverflowError("wedge count overflow");
        }
    }
    return w;
}

Coefficient global_coefficient(const WedgeCounts& wedges, const CliqueCounts& closing) {
    if (closing.order != wedges.order + 1) {
        throw ConfigError("closing counts must be one order above the wedge order");
    }
    if (wedges.total == 0) return std::nullopt;
    const Wide l = wedges.order;
    return ratio((l * l + l) * closing.total, wedges.total);
}

std::vector<Coefficient> local_coefficients(const Graph& g, const CliqueCounts& open,
                                            const CliqueCounts& closing) {
    check_pair(open, closing);
    std::vector<Coefficient> local(g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        Wide den = Wide(open_slots(g.degree(u), open.order)) * open.per_node[u];
        if (den == 0) continue;
        local[u] = ratio(Wide(open.order) * closing.per_node[u], den);
    }
    return local;
}

std::vector<Coefficient> local_coefficients_from_wedges(const WedgeCounts& wedges,
                                                        const CliqueCounts& closing) {
    if (closing.order != wedges.order + 1) {
        throw ConfigError("closing counts must be one order above the wedge order");
    }
    std::vector<Coefficient> local(wedges.per_node.size());
    for (std::size_t u = 0; u < local.size(); ++u) {
        if (wedges.per_node[u] == 0) continue;
        local[u] = ratio(Wide(wedges.order) * closing.per_node[u], wedges.per_node[u]);
    }
    return local;
}

AverageCoefficient average_coefficient(std::span<const Coefficient> local) {
    AverageCoefficient avg;
    double sum = 0;
    for (const auto& k : local) {
        if (!k) continue;
        sum += *k;
        ++avg.defined;
    }
    if (avg.defined > 0) avg.value = sum / double(avg.defined);
    avg.wedge_fraction = local.empty() ? 0.0 : double(avg.defined) / double(local.size());
    return avg;
}

Coefficient global_hoccf(const Graph& g, unsigned order, const CliqueOptions& options) {
    if (order < 2) throw ConfigError("order must be at least 2");
    auto counts = count_cliques(g, order + 1, options);
    return global_coefficient(wedge_counts(g, counts[order - 2]), counts[order - 1]);
}

std::vector<Coefficient> local_hoccf(const Graph& g, unsigned order, const CliqueOptions& options) {
    if (order < 2) throw ConfigError("order must be at least 2");
    auto counts = count_cliques(g, order + 1, options);
    return local_coefficients(g, counts[order - 2], counts[order - 1]);
}

double er_baseline(double kappa2, unsigned order) {
    if (order < 2) throw ConfigError("order must be at least 2");
    return std::pow(kappa2, double(order - 1));
}

double kk_upper_bound(double kappa2) { return std::sqrt(kappa2); }

const OrderResult& ClusteringReport::at(unsigned order) const {
    for (const auto& r : orders) {
        if (r.order == order) return r;
    }
    throw ConfigError("order " + std::to_string(order) + " not in report");
}

ClusteringReport build_report(const Graph& g, std::span<const CliqueCounts> counts,
                              std::span<const unsigned> orders) {
    ClusteringReport report;
    report.num_nodes = g.num_nodes();
    report.num_edges = g.num_edges();
    report.degree = g.degrees();

    std::vector<unsigned> wanted(orders.begin(), orders.end());
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (unsigned l : wanted) {
        if (l < 2) throw ConfigError("order must be at least 2");
        if (l >= counts.size() + 1) {
            throw ConfigError("clique counts do not reach order " + std::to_string(l + 1));
        }
        const CliqueCounts& open = counts[l - 2];
        const CliqueCounts& closing = counts[l - 1];
        OrderResult r;
        r.order = l;
        r.wedges = wedge_counts(g, open);
        r.global = global_coefficient(r.wedges, closing);
        r.local = local_coefficients(g, open, closing);
        r.average = average_coefficient(r.local);
        report.orders.push_back(std::move(r));
    }
    return report;
}

ClusteringReport compute_clustering(const Graph& g, std::span<const unsigned> orders,
                                    const CliqueOptions& options) {
    if (orders.empty()) throw ConfigError("no orders requested");
    unsigned top = *std::max_element(orders.begin(), orders.end());
    if (top < 2) throw ConfigError("order must be at least 2");
    auto counts = count_cliques(g, top + 1, options);
    return build_report(g, counts, orders);
}

}  // namespace hocc
