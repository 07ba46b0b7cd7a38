#pragma once

#include "hocc/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hocc {

struct SwapStats {
    std::uint64_t attempted = 0;
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;  // would create a self-loop or a duplicate edge
};

struct CmSample {
    Graph graph;
    SwapStats swaps;
};

inline constexpr double kDefaultSwapFactor = 10.0;

// Configuration-model sample: ceil(swap_factor * m) attempted double edge
// swaps (a,b),(c,d) -> (a,d),(c,b), with the second edge's orientation drawn
// uniformly. Swaps that would create a self-loop or duplicate are skipped.
// Requires at least 2 edges.
CmSample cm_sample(const Graph& g, std::uint64_t seed, double swap_factor = kDefaultSwapFactor);

// Metropolis schedule for the clustering-preserving sampler.
//
// The energy is H = |avg_C2(sample) - avg_C2(original)|. Temperatures are per
// defined node: a move raising H by dH is accepted with probability
// exp(-|V~_2| dH / T), so T is on the scale of one node's local coefficient.
struct AnnealingSchedule {
    double initial_temperature = 0.05;
    double cooling_factor = 0.95;
    std::uint64_t steps_per_temperature = 10;  // proposals per temperature, in units of m
    double target_tolerance = 0.005;
    std::uint64_t max_sweeps = 200;            // temperature levels before giving up
    double swap_factor = kDefaultSwapFactor;   // randomizing swaps before annealing
    // Share of annealing proposals aimed at an open wedge (a, u, c): the swap
    // (a,b),(c,d) -> (a,c),(b,d) with b, d random neighbors of a and c. The
    // rest are uniform double edge swaps.
    double closing_fraction = 0.5;

    void validate() const;
};

struct MrcnSample {
    Graph graph;
    bool converged = false;
    double achieved = 0;          // final H, recomputed from scratch
    double target = 0;            // avg_C2 of the original
    std::uint64_t proposals = 0;  // annealing proposals made
    std::uint64_t sweeps = 0;     // temperature levels visited
};

// Maximally random clustered network: randomize like cm_sample, then run a
// degree-preserving double edge swap chain with Metropolis acceptance and
// geometric cooling until H <= target_tolerance or max_sweeps temperature
// levels have passed. Requires avg_C2 of g to be defined and g to have at
// least 2 edges.
MrcnSample mrcn_sample(const Graph& g, std::uint64_t seed, const AnnealingSchedule& schedule = {});

// Triangle counts and avg_C2 kept up to date under single edge insertions
// and deletions. Degrees of the swap chain never change, so the set of nodes
// with a defined coefficient is fixed.
class TriangleTracker {
public:
    explicit TriangleTracker(const Graph& g);

    bool has_edge(NodeId u, NodeId v) const;
    const std::vector<NodeId>& neighbors(NodeId u) const { return adj_[u]; }
    void add_edge(NodeId u, NodeId v);
    void remove_edge(NodeId u, NodeId v);

    // Mean local coefficient over nodes of degree >= 2.
    double average_clustering() const;
    std::size_t defined_nodes() const { return defined_; }
    std::uint64_t triangles_at(NodeId u) const { return triangles_[u]; }

    // Recomputes the coefficient sum from the triangle counts, discarding
    // accumulated rounding.
    void resync();

    Graph to_graph(const std::vector<std::string>& labels) const;

private:
    std::size_t common_into(NodeId u, NodeId v);

    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::uint64_t> triangles_;
    std::vector<double> inv_pairs_;  // 1 / C(d_u, 2), zero when d_u < 2
    std::vector<NodeId> scratch_;
    double kappa_sum_ = 0;
    std::size_t defined_ = 0;
};

enum class NullKind { cm, mrcn };

struct NullSpec {
    NullKind kind = NullKind::cm;
    double swap_factor = kDefaultSwapFactor;
    AnnealingSchedule schedule;  // mrcn only
};

enum class Significance { above, below, not_significant };

std::string significance_name(Significance s);  // above-5sigma | below-5sigma | not-significant

struct StatisticSummary {
    std::string id;                // avg_2, avg_3, ..., global_2, ...
    double original = 0;           // NaN when undefined on the original
    double mean = 0;
    double std = 0;                // sample standard deviation (n - 1)
    std::size_t n_samples = 0;     // samples on which the statistic is defined
    double z = 0;
    Significance flag = Significance::not_significant;
};

struct EnsembleStats {
    std::vector<StatisticSummary> stats;
    std::size_t requested = 0;
    std::size_t converged = 0;  // samples kept; non-converged MRCN samples are dropped
    double z_threshold = 5.0;
};

struct EnsembleOptions {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool include_global = false;
    double z_threshold = 5.0;
};

// Draws n_samples null graphs, member i seeded with derive_seed(seed, i), and
// compares avg_C_l (and optionally C_l) of g against them. Throws
// UndefinedStatisticError if every sample fails to converge.
EnsembleStats ensemble_stats(const Graph& g, const NullSpec& spec, std::size_t n_samples,
                             std::span<const unsigned> orders, const EnsembleOptions& options = {});

// z-score and flag for one statistic. A zero-spread ensemble is significant
// only when the original differs from the mean.
void classify(StatisticSummary& s, double threshold);

}  // namespace hocc
