#pragma once

#include "hocc/clustering.hpp"
#include "hocc/graph.hpp"

#include <cstdint>
#include <vector>

namespace hocc {

inline constexpr unsigned kDefaultJointBins = 40;

inline constexpr std::size_t kNoBin = std::size_t(-1);

struct JointPoint {
    double kappa2;
    double kappa_l;
    std::size_t degree;
    NodeId node;
    std::size_t bin = kNoBin;  // index into JointDistribution::bins; kNoBin when kappa2 = 0
};

struct JointBin {
    double lo, hi;        // kappa2 range [lo, hi); the last bin is closed
    double center;        // geometric midpoint
    double mean_kappa2;   // mean kappa2 of the nodes in the bin
    double mean_kappa_l;
    double std_kappa_l;   // sample std, 0 for a single node
    std::size_t count;
    double er_baseline;   // reference curves at the bin center
    double kk_bound;
};

// Scatter of (kappa2(u), kappa_l(u)) over nodes where both are defined, plus
// the mean kappa_l over logarithmic kappa2 bins spanning [min positive
// kappa2, 1]. Nodes with kappa2 = 0 are points but belong to no bin, so
// zero_kappa2 + sum of bin counts = points.size(). Only occupied bins are
// listed.
struct JointDistribution {
    unsigned order = 3;
    std::vector<JointPoint> points;
    std::vector<JointBin> bins;
    std::size_t zero_kappa2 = 0;

    bool empty() const { return points.empty(); }
};

// Requires order >= 3 and n_bins >= 2; the report must contain orders 2 and
// `order`. Throws Error if a point exceeds the sqrt(kappa2) bound.
JointDistribution joint_distribution(const ClusteringReport& report, unsigned order,
                                     unsigned n_bins = kDefaultJointBins);
JointDistribution joint_distribution(const Graph& g, unsigned order,
                                     unsigned n_bins = kDefaultJointBins,
                                     const CliqueOptions& options = {});

struct DegreeBinning {
    enum class Kind { linear, log } kind = Kind::log;
    double width = 2;  // bin width (linear) or ratio between bin edges (log)
};

struct DegreeBin {
    unsigned order;
    std::size_t lo, hi;  // degrees in [lo, hi)
    double mean;         // mean of defined kappa_l
    std::size_t count;   // nodes with defined kappa_l
};

struct DegreeBinnedProfile {
    std::vector<DegreeBin> bins;  // grouped by order, ascending degree
};

DegreeBinnedProfile degree_profile(const ClusteringReport& report, std::span<const unsigned> orders,
                                   const DegreeBinning& binning = {});

struct SweepRow {
    double p;
    unsigned order;
    double mean;             // over reps where avg_C_l is defined; NaN if none
    double std;              // sample std over the same reps
    std::size_t defined;
    std::size_t reps;
};

struct SweepOptions {
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

// For each p, draws `reps` small-world graphs (rep r of grid point i seeded
// with derive_seed(seed, i * reps + r)) and averages avg_C_l. Rows are sorted
// by grid position, then order.
std::vector<SweepRow> sweep_rewiring(std::size_t n, std::size_t k, std::span<const double> p_grid,
                                     std::size_t reps, std::span<const unsigned> orders,
                                     const SweepOptions& options = {});

// "LO:HI:log:STEPS", "LO:HI:lin:STEPS" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

}  // namespace hocc
