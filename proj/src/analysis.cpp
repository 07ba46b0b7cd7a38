#include "hocc/analysis.hpp"

#include "hocc/error.hpp"
#include "hocc/generators.hpp"
#include "hocc/parallel.hpp"
#include "hocc/random.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace hocc {

namespace {

constexpr double kBoundSlack = 1e-12;

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw ConfigError("bad number '" + s + "'");
    return v;
}

}  // namespace

JointDistribution joint_distribution(const ClusteringReport& report, unsigned order,
                                     unsigned n_bins) {
    if (order < 3) throw ConfigError("joint distribution needs order >= 3");
    if (n_bins < 2) throw ConfigError("joint distribution needs at least 2 bins");
    const OrderResult& second = report.at(2);
    const OrderResult& higher = report.at(order);

    JointDistribution jd;
    jd.order = order;
    double lo = 1.0;
    for (NodeId u = 0; u < report.num_nodes; ++u) {
        if (!second.local[u] || !higher.local[u]) continue;
        double k2 = *second.local[u];
        double kl = *higher.local[u];
        if (kl > std::sqrt(k2) + kBoundSlack) {
            throw Error("node " + std::to_string(u) + " violates kappa_l <= sqrt(kappa_2)");
        }
        jd.points.push_back({k2, kl, report.degree[u], u, kNoBin});
        if (k2 > 0) lo = std::min(lo, k2);
        else ++jd.zero_kappa2;
    }
    if (jd.points.size() == jd.zero_kappa2) return jd;

    // Bin i covers [lo * r^i, lo * r^(i+1)) with r = (1/lo)^(1/n_bins).
    const double span = std::log(1.0 / lo);
    auto edge = [&](unsigned i) {
        return i == n_bins ? 1.0 : lo * std::exp(span * double(i) / double(n_bins));
    };
    struct Acc {
        double sum_k2 = 0, sum = 0, sum_sq = 0;
        std::size_t count = 0;
    };
    std::vector<Acc> acc(n_bins);
    for (auto& p : jd.points) {
        if (p.kappa2 <= 0) continue;
        unsigned i = 0;
        if (span > 0) {
            double pos = double(n_bins) * std::log(p.kappa2 / lo) / span;
            i = unsigned(std::clamp(pos, 0.0, double(n_bins - 1)));
        }
        p.bin = i;
        acc[i].sum_k2 += p.kappa2;
        acc[i].sum += p.kappa_l;
        acc[i].sum_sq += p.kappa_l * p.kappa_l;
        ++acc[i].count;
    }
    std::vector<std::size_t> slot(n_bins, kNoBin);
    for (unsigned i = 0; i < n_bins; ++i) {
        const Acc& a = acc[i];
        if (a.count == 0) continue;
        slot[i] = jd.bins.size();
        JointBin b;
        b.lo = edge(i);
        b.hi = edge(i + 1);
        b.center = std::sqrt(b.lo * b.hi);
        b.count = a.count;
        b.mean_kappa2 = a.sum_k2 / double(a.count);
        b.mean_kappa_l = a.sum / double(a.count);
        double var = a.count > 1
                         ? (a.sum_sq - a.sum * a.sum / double(a.count)) / double(a.count - 1)
                         : 0.0;
        b.std_kappa_l = std::sqrt(std::max(var, 0.0));
        b.er_baseline = er_baseline(b.center, order);
        b.kk_bound = kk_upper_bound(b.center);
        jd.bins.push_back(b);
    }
    for (auto& p : jd.points) {
        if (p.bin != kNoBin) p.bin = slot[p.bin];
    }
    return jd;
}

JointDistribution joint_distribution(const Graph& g, unsigned order, unsigned n_bins,
                                     const CliqueOptions& options) {
    if (order < 3) throw ConfigError("joint distribution needs order >= 3");
    const unsigned orders[] = {2, order};
    return joint_distribution(compute_clustering(g, orders, options), order, n_bins);
}

DegreeBinnedProfile degree_profile(const ClusteringReport& report, std::span<const unsigned> orders,
                                   const DegreeBinning& binning) {
    if (binning.kind == DegreeBinning::Kind::linear && !(binning.width >= 1)) {
        throw ConfigError("linear degree bins need width >= 1");
    }
    if (binning.kind == DegreeBinning::Kind::log && !(binning.width > 1)) {
        throw ConfigError("log degree bins need ratio > 1");
    }

    // Bin edges as integers: [lo, hi).
    auto bin_of = [&](std::size_t d) -> std::pair<std::size_t, std::size_t> {
        if (binning.kind == DegreeBinning::Kind::linear) {
            auto w = std::size_t(binning.width);
            return {d / w * w, d / w * w + w};
        }
        if (d == 0) return {0, 1};
        std::size_t lo = 1;
        double edge = 1;
        for (;;) {
            double next = edge * binning.width;
            auto hi = std::max(lo + 1, std::size_t(std::ceil(next)));
            if (d < hi) return {lo, hi};
            lo = hi;
            edge = next;
        }
    };

    DegreeBinnedProfile profile;
    std::vector<unsigned> wanted(orders.begin(), orders.end());
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (unsigned l : wanted) {
        const OrderResult& r = report.at(l);
        std::map<std::pair<std::size_t, std::size_t>, std::pair<double, std::size_t>> bins;
        for (NodeId u = 0; u < report.num_nodes; ++u) {
            if (!r.local[u]) continue;
            auto& slot = bins[bin_of(report.degree[u])];
            slot.first += *r.local[u];
            ++slot.second;
        }
        for (const auto& [range, acc] : bins) {
            profile.bins.push_back({l, range.first, range.second,
                                    acc.first / double(acc.second), acc.second});
        }
    }
    return profile;
}

std::vector<SweepRow> sweep_rewiring(std::size_t n, std::size_t k, std::span<const double> p_grid,
                                     std::size_t reps, std::span<const unsigned> orders,
                                     const SweepOptions& options) {
    if (reps < 1) throw ConfigError("sweep needs reps >= 1");
    if (orders.empty()) throw ConfigError("no orders requested");
    for (double p : p_grid) {
        if (!(p >= 0 && p <= 1)) throw ConfigError("rewiring probabilities must lie in [0, 1]");
    }
    std::vector<unsigned> wanted(orders.begin(), orders.end());
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    const std::size_t jobs = p_grid.size() * reps;
    std::vector<std::vector<std::optional<double>>> values(jobs);
    parallel_for(jobs, options.threads, 1, [&](unsigned, std::size_t job) {
        double p = p_grid[job / reps];
        Graph g = small_world(n, k, p, derive_seed(options.seed, job));
        ClusteringReport r = compute_clustering(g, wanted);
        for (const auto& o : r.orders) values[job].push_back(o.average.value);
    });

    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        for (std::size_t o = 0; o < wanted.size(); ++o) {
            SweepRow row{p_grid[i], wanted[o], std::numeric_limits<double>::quiet_NaN(), 0, 0, reps};
            double sum = 0;
            for (std::size_t r = 0; r < reps; ++r) {
                if (const auto& v = values[i * reps + r][o]) {
                    sum += *v;
                    ++row.defined;
                }
            }
            if (row.defined > 0) {
                row.mean = sum / double(row.defined);
                double sq = 0;
                for (std::size_t r = 0; r < reps; ++r) {
                    if (const auto& v = values[i * reps + r][o]) sq += (*v - row.mean) * (*v - row.mean);
                }
                row.std = row.defined > 1 ? std::sqrt(sq / double(row.defined - 1)) : 0.0;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    char sep = text.find(':') != std::string::npos ? ':' : ',';
    while (std::getline(in, part, sep)) parts.push_back(part);

    std::vector<double> grid;
    if (sep == ',') {
        for (const auto& s : parts) grid.push_back(parse_double(s));
        if (grid.empty()) throw ConfigError("empty grid");
        return grid;
    }
    if (parts.size() != 4) throw ConfigError("grid must be LO:HI:{log|lin}:STEPS");
    double lo = parse_double(parts[0]);
    double hi = parse_double(parts[1]);
    unsigned steps = 0;
    auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), steps);
    if (ec != std::errc() || ptr != parts[3].data() + parts[3].size() || steps < 1) {
        throw ConfigError("bad step count '" + parts[3] + "'");
    }
    if (steps == 1) return {lo};
    if (parts[2] == "log") {
        if (!(lo > 0 && hi > 0)) throw ConfigError("log grid needs positive bounds");
        for (unsigned i = 0; i < steps; ++i) {
            grid.push_back(i + 1 == steps
                               ? hi
                               : lo * std::pow(hi / lo, double(i) / double(steps - 1)));
        }
    } else if (parts[2] == "lin") {
        for (unsigned i = 0; i < steps; ++i) {
            grid.push_back(i + 1 == steps ? hi : lo + (hi - lo) * double(i) / double(steps - 1));
        }
    } else {
        throw ConfigError("grid spacing must be log or lin");
    }
    return grid;
}

}  // namespace hocc
