#include "hocc/report.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>

namespace hocc {

namespace {

using json = nlohmann::ordered_json;

json number_or_null(double x) {
    if (std::isnan(x)) return nullptr;
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

json number_or_null(const std::optional<double>& x) { return x ? number_or_null(*x) : json(); }

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "NA";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string format_number(const std::optional<double>& x) {
    return x ? format_number(*x) : std::string("NA");
}

void write_node_table(std::ostream& out, const Graph& g, const ClusteringReport& report) {
    out << "node_label\tdegree";
    for (const auto& r : report.orders) out << "\tkappa_" << r.order << "\twedges_" << r.order;
    out << '\n';
    for (NodeId u = 0; u < report.num_nodes; ++u) {
        out << g.label(u) << '\t' << report.degree[u];
        for (const auto& r : report.orders) {
            out << '\t' << format_number(r.local[u]) << '\t' << r.wedges.per_node[u];
        }
        out << '\n';
    }
}

void write_summary(std::ostream& out, const ClusteringReport& report, bool json_out) {
    std::vector<std::pair<std::string, json>> fields;
    fields.emplace_back("nodes", report.num_nodes);
    fields.emplace_back("edges", report.num_edges);
    for (const auto& r : report.orders) {
        fields.emplace_back("global_" + std::to_string(r.order), number_or_null(r.global));
    }
    for (const auto& r : report.orders) {
        fields.emplace_back("avg_" + std::to_string(r.order), number_or_null(r.average.value));
    }
    for (const auto& r : report.orders) {
        fields.emplace_back("wedge_fraction_" + std::to_string(r.order), r.average.wedge_fraction);
    }

    if (json_out) {
        json doc;
        for (const auto& [k, v] : fields) doc[k] = v;
        out << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "\t" : "") << fields[i].first;
    out << '\n';
    out << report.num_nodes << '\t' << report.num_edges;
    for (const auto& r : report.orders) out << '\t' << format_number(r.global);
    for (const auto& r : report.orders) out << '\t' << format_number(r.average.value);
    for (const auto& r : report.orders) out << '\t' << format_number(r.average.wedge_fraction);
    out << '\n';
}

void write_ensemble(std::ostream& out, const EnsembleStats& stats, bool json_out) {
    if (json_out) {
        json doc = json::array();
        for (const auto& s : stats.stats) {
            json row;
            row["statistic"] = s.id;
            row["original"] = number_or_null(s.original);
            row["mean"] = number_or_null(s.mean);
            row["std"] = number_or_null(s.std);
            row["z"] = number_or_null(s.z);
            row["flag"] = significance_name(s.flag);
            row["n_converged"] = stats.converged;
            doc.push_back(row);
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << "statistic,original,mean,std,z,flag,n_converged\n";
    for (const auto& s : stats.stats) {
        out << s.id << ',' << format_number(s.original) << ',' << format_number(s.mean) << ','
            << format_number(s.std) << ',' << format_number(s.z) << ','
            << significance_name(s.flag) << ',' << stats.converged << '\n';
    }
}

void write_joint(std::ostream& out, const Graph& g, const JointDistribution& jd, bool json_out) {
    if (json_out) {
        json doc;
        doc["order"] = jd.order;
        doc["zero_kappa2"] = jd.zero_kappa2;
        doc["points"] = json::array();
        for (const auto& p : jd.points) {
            doc["points"].push_back({{"node_label", g.label(p.node)},
                                     {"kappa2", p.kappa2},
                                     {"kappa_l", p.kappa_l},
                                     {"degree", p.degree}});
        }
        doc["bins"] = json::array();
        for (const auto& b : jd.bins) {
            doc["bins"].push_back({{"lo", b.lo},
                                   {"hi", b.hi},
                                   {"center", b.center},
                                   {"mean_kappa2", b.mean_kappa2},
                                   {"mean_kappa_l", b.mean_kappa_l},
                                   {"std_kappa_l", b.std_kappa_l},
                                   {"count", b.count},
                                   {"er_baseline", b.er_baseline},
                                   {"kk_bound", b.kk_bound}});
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << "kind,kappa2,kappa_l,degree,count\n";
    for (const auto& p : jd.points) {
        out << "point," << format_number(p.kappa2) << ',' << format_number(p.kappa_l) << ','
            << p.degree << ",1\n";
    }
    for (const auto& b : jd.bins) {
        out << "bin," << format_number(b.center) << ',' << format_number(b.mean_kappa_l) << ",,"
            << b.count << '\n';
    }
    for (const auto& b : jd.bins) {
        out << "er," << format_number(b.center) << ',' << format_number(b.er_baseline) << ",,\n";
    }
    for (const auto& b : jd.bins) {
        out << "kk," << format_number(b.center) << ',' << format_number(b.kk_bound) << ",,\n";
    }
}

void write_degree_profile(std::ostream& out, const DegreeBinnedProfile& profile, bool json_out) {
    if (json_out) {
        json doc = json::array();
        for (const auto& b : profile.bins) {
            doc.push_back({{"order", b.order},
                           {"deg_lo", b.lo},
                           {"deg_hi", b.hi},
                           {"mean", b.mean},
                           {"count", b.count}});
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << "order,deg_lo,deg_hi,mean,count\n";
    for (const auto& b : profile.bins) {
        out << b.order << ',' << b.lo << ',' << b.hi << ',' << format_number(b.mean) << ','
            << b.count << '\n';
    }
}

void write_sweep(std::ostream& out, std::span<const SweepRow> rows, bool json_out) {
    if (json_out) {
        json doc = json::array();
        for (const auto& r : rows) {
            doc.push_back({{"p", r.p},
                           {"order", r.order},
                           {"mean", number_or_null(r.mean)},
                           {"std", number_or_null(r.std)},
                           {"defined", r.defined},
                           {"reps", r.reps}});
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << "p,order,mean,std,defined,reps\n";
    for (const auto& r : rows) {
        out << format_number(r.p) << ',' << r.order << ',' << format_number(r.mean) << ','
            << format_number(r.std) << ',' << r.defined << ',' << r.reps << '\n';
    }
}

}  // namespace hocc
