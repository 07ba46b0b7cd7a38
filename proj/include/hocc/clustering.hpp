#pragma once

#include "hocc/cliques.hpp"
#include "hocc/graph.hpp"

#include <optional>
#include <vector>

namespace hocc {

// Absent means undefined: the node centers no wedge of that order.
using Coefficient = std::optional<double>;

struct WedgeCounts {
    unsigned order = 2;
    std::vector<Count> per_node;  // |W_l(u)| = |K_l(u)| * (d_u - l + 1)
    Count total = 0;              // sum of per_node
};

// Requires counts.order >= 2 and counts.per_node sized to g.
WedgeCounts wedge_counts(const Graph& g, const CliqueCounts& counts);

// Global coefficient (l^2 + l) |K_{l+1}| / |W_l| from counts at orders l and
// l + 1.
Coefficient global_coefficient(const WedgeCounts& wedges, const CliqueCounts& closing);

// Local coefficient from the clique-count ratio
// l |K_{l+1}(u)| / ((d_u - l + 1) |K_l(u)|).
std::vector<Coefficient> local_coefficients(const Graph& g, const CliqueCounts& open,
                                            const CliqueCounts& closing);

// Local coefficient as closed wedges over all wedges, l |K_{l+1}(u)| / |W_l(u)|.
std::vector<Coefficient> local_coefficients_from_wedges(const WedgeCounts& wedges,
                                                        const CliqueCounts& closing);

struct AverageCoefficient {
    Coefficient value;          // mean over defined nodes
    std::size_t defined = 0;    // |V~_l|
    double wedge_fraction = 0;  // |V~_l| / |V|
};

AverageCoefficient average_coefficient(std::span<const Coefficient> local);

// Convenience wrappers that enumerate cliques themselves.
Coefficient global_hoccf(const Graph& g, unsigned order, const CliqueOptions& options = {});
std::vector<Coefficient> local_hoccf(const Graph& g, unsigned order,
                                     const CliqueOptions& options = {});

// Expected kappa_l given kappa_2 when the neighborhood is wired at random:
// kappa2^(l - 1). The finite-degree correction is O(1/d^2) and is ignored.
double er_baseline(double kappa2, unsigned order);

// Upper bound sqrt(kappa2) on kappa_l for l >= 3.
double kk_upper_bound(double kappa2);

struct OrderResult {
    unsigned order = 2;
    Coefficient global;
    AverageCoefficient average;
    std::vector<Coefficient> local;
    WedgeCounts wedges;
};

struct ClusteringReport {
    std::size_t num_nodes = 0;
    std::size_t num_edges = 0;
    std::vector<std::size_t> degree;
    std::vector<OrderResult> orders;  // ascending by order

    const OrderResult& at(unsigned order) const;
};

// Computes every order 2..max(orders) in one enumeration pass up to clique
// order max(orders) + 1; the report holds exactly the requested orders.
ClusteringReport compute_clustering(const Graph& g, std::span<const unsigned> orders,
                                    const CliqueOptions& options = {});

// Same, reusing counts for orders 2..L from count_cliques.
ClusteringReport build_report(const Graph& g, std::span<const CliqueCounts> counts,
                              std::span<const unsigned> orders);

}  // namespace hocc
