#pragma once

#include "hocc/analysis.hpp"
#include "hocc/clustering.hpp"
#include "hocc/null_models.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace hocc {

// Shortest round-trip decimal; "NA" for NaN or an absent value.
std::string format_number(double x);
std::string format_number(const std::optional<double>& x);

// node_label, degree, then kappa_l and wedges_l for each order. Tab separated.
void write_node_table(std::ostream& out, const Graph& g, const ClusteringReport& report);

// One header line and one row: nodes, edges, global_l..., avg_l...,
// wedge_fraction_l... Tab separated, or one JSON object with the same keys.
void write_summary(std::ostream& out, const ClusteringReport& report, bool json = false);

// statistic, original, mean, std, z, flag, n_converged. CSV or JSON array.
void write_ensemble(std::ostream& out, const EnsembleStats& stats, bool json = false);

// kind, kappa2, kappa_l, degree, count with kind one of point | bin | er | kk.
// Bin and reference rows sit at the bin's geometric center.
void write_joint(std::ostream& out, const Graph& g, const JointDistribution& jd, bool json = false);

// order, deg_lo, deg_hi, mean, count.
void write_degree_profile(std::ostream& out, const DegreeBinnedProfile& profile, bool json = false);

// p, order, mean, std, defined, reps.
void write_sweep(std::ostream& out, std::span<const SweepRow> rows, bool json = false);

}  // namespace hocc
