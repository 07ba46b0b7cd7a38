#include "hocc/cli.hpp"

#include "hocc/analysis.hpp"
#include "hocc/error.hpp"
#include "hocc/generators.hpp"
#include "hocc/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace hocc::cli {

namespace {

std::vector<unsigned> parse_orders(const std::string& text) {
    std::vector<unsigned> orders;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size() || v < 2) {
            throw ConfigError("bad order '" + part + "' (orders are integers >= 2)");
        }
        orders.push_back(unsigned(v));
    }
    if (orders.empty()) throw ConfigError("no orders given");
    return orders;
}

// Writes through `path`, or to `fallback` when the path is empty.
void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path + " for writing");
    body(file);
    if (!file) throw Error("write failed: " + path);
}

struct ComputeArgs {
    std::string input, orders = "2,3,4", out;
    unsigned threads = 1;
    double budget = 0;
};

struct GenArgs {
    std::string model, out;
    std::size_t n = 0, k = 0, c = 2, b = 0, part_size = 0;
    double p = 0;
    unsigned l = 3;
    std::uint64_t seed = 0;
};

struct NullArgs {
    std::string kind, input, orders = "2,3", out;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool global = false;
    double z = 5.0;
    NullSpec spec;
};

struct AnalyzeArgs {
    std::string kind, input, out, binning = "log";
    unsigned order = 3, bins = kDefaultJointBins, threads = 1;
    double width = 2;
};

struct SweepArgs {
    std::string model, pgrid, orders = "2,3,4", out;
    std::size_t n = 20000, k = 5, reps = 1;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Higher-order clustering coefficients"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Structured summary output");

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Clustering coefficients of an edge list");
    compute->add_option("--input", ca.input, "Edge-list file")->required();
    compute->add_option("--orders", ca.orders, "Comma-separated orders");
    compute->add_option("--out", ca.out, "Per-node TSV output");
    compute->add_option("--threads", ca.threads, "Worker threads (0 = all cores)");
    compute->add_option("--budget", ca.budget, "Refuse when estimated work exceeds OPS");
    compute->add_flag("--json", json, "JSON summary");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("model", ga.model, "gnp | ring | sw | mphood | cshood")
        ->required()
        ->check(CLI::IsMember({"gnp", "ring", "sw", "mphood", "cshood"}));
    gen->add_option("--n", ga.n, "Node count (mphood: part size when --part-size is absent)");
    gen->add_option("--p", ga.p, "Edge or rewiring probability");
    gen->add_option("--k", ga.k, "Ring half-degree");
    gen->add_option("--c", ga.c, "Clique size (cshood)");
    gen->add_option("--b", ga.b, "Pendant count (cshood)");
    gen->add_option("--l", ga.l, "Order (mphood)");
    gen->add_option("--part-size", ga.part_size, "Part size (mphood)");
    gen->add_option("--seed", ga.seed, "RNG seed");
    gen->add_option("--out", ga.out, "Edge-list output")->required();

    NullArgs na;
    auto* null = app.add_subcommand("null", "Compare against a null-model ensemble");
    null->add_option("kind", na.kind, "cm | mrcn")->required()->check(CLI::IsMember({"cm", "mrcn"}));
    null->add_option("--input", na.input, "Edge-list file")->required();
    null->add_option("--samples", na.samples, "Ensemble size");
    null->add_option("--orders", na.orders, "Comma-separated orders");
    null->add_option("--seed", na.seed, "Base seed");
    null->add_option("--swap-factor", na.spec.swap_factor, "Attempted swaps per edge");
    null->add_option("--t0", na.spec.schedule.initial_temperature, "Initial temperature (mrcn)");
    null->add_option("--cool", na.spec.schedule.cooling_factor, "Cooling factor (mrcn)");
    null->add_option("--tol", na.spec.schedule.target_tolerance, "Target tolerance on avg C2 (mrcn)");
    null->add_option("--steps", na.spec.schedule.steps_per_temperature,
                     "Proposals per temperature, in units of m (mrcn)");
    null->add_option("--max-sweeps", na.spec.schedule.max_sweeps, "Temperature levels (mrcn)");
    null->add_option("--closing", na.spec.schedule.closing_fraction,
                     "Share of proposals aimed at open wedges (mrcn)");
    null->add_option("--z", na.z, "Significance threshold in standard deviations");
    null->add_flag("--global", na.global, "Also compare global coefficients");
    null->add_option("--threads", na.threads, "Worker threads (0 = all cores)");
    null->add_option("--out", na.out, "CSV output");
    null->add_flag("--json", json, "JSON output");

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "Joint distribution or degree profile");
    analyze->add_option("kind", aa.kind, "joint | degree")
        ->required()
        ->check(CLI::IsMember({"joint", "degree"}));
    analyze->add_option("--input", aa.input, "Edge-list file")->required();
    analyze->add_option("--order", aa.order, "joint: kappa_L against kappa_2; degree: orders 2..L");
    analyze->add_option("--bins", aa.bins, "Logarithmic kappa_2 bins (joint)");
    analyze->add_option("--binning", aa.binning, "Degree bins (degree)")
        ->check(CLI::IsMember({"log", "linear"}));
    analyze->add_option("--width", aa.width, "Degree bin width or ratio (degree)");
    analyze->add_option("--threads", aa.threads, "Worker threads (0 = all cores)");
    analyze->add_option("--out", aa.out, "CSV output");
    analyze->add_flag("--json", json, "JSON output");

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Small-world rewiring sweep");
    sweep->add_option("model", sa.model, "sw")->required()->check(CLI::IsMember({"sw"}));
    sweep->add_option("--n", sa.n, "Node count");
    sweep->add_option("--k", sa.k, "Ring half-degree");
    sweep->add_option("--pgrid", sa.pgrid, "LO:HI:log:STEPS, LO:HI:lin:STEPS or a list")->required();
    sweep->add_option("--reps", sa.reps, "Graphs per p");
    sweep->add_option("--orders", sa.orders, "Comma-separated orders");
    sweep->add_option("--seed", sa.seed, "Base seed");
    sweep->add_option("--threads", sa.threads, "Worker threads (0 = all cores)");
    sweep->add_option("--out", sa.out, "CSV output");
    sweep->add_flag("--json", json, "JSON output");

    std::string cq_input, cq_out;
    unsigned cq_order = 3;
    auto* cliques = app.add_subcommand("cliques", "Stream every clique of one order");
    cliques->add_option("--input", cq_input, "Edge-list file")->required();
    cliques->add_option("--order", cq_order, "Clique size");
    cliques->add_option("--out", cq_out, "One clique per line, sorted internal ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "hocc: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*compute) {
            auto orders = parse_orders(ca.orders);
            Graph g = load_edge_list_file(ca.input);
            CliqueOptions opts;
            opts.threads = ca.threads;
            opts.work_budget = ca.budget;
            ClusteringReport report = compute_clustering(g, orders, opts);
            if (!ca.out.empty()) {
                with_output(ca.out, out, [&](std::ostream& o) { write_node_table(o, g, report); });
            }
            write_summary(out, report, json);
            for (const auto& r : report.orders) {
                if (!r.global) {
                    err << "hocc: no " << r.order << "-wedges; coefficients undefined\n";
                    return kUndefined;
                }
            }
        } else if (*gen) {
            GenSpec spec;
            spec.model = parse_model(ga.model);
            spec.n = ga.n;
            spec.p = ga.p;
            spec.k = ga.k;
            spec.c = ga.c;
            spec.b = ga.b;
            spec.l = ga.l;
            spec.part_size = ga.part_size != 0 ? ga.part_size : ga.n;
            spec.seed = ga.seed;
            Graph g = generate(spec);
            write_edge_list_file(g, ga.out);
        } else if (*null) {
            na.spec.kind = na.kind == "cm" ? NullKind::cm : NullKind::mrcn;
            na.spec.schedule.swap_factor = na.spec.swap_factor;
            auto orders = parse_orders(na.orders);
            Graph g = load_edge_list_file(na.input);
            EnsembleOptions opts;
            opts.seed = na.seed;
            opts.threads = na.threads;
            opts.include_global = na.global;
            opts.z_threshold = na.z;
            EnsembleStats stats = ensemble_stats(g, na.spec, na.samples, orders, opts);
            with_output(na.out, out, [&](std::ostream& o) { write_ensemble(o, stats, json); });
            if (stats.converged < stats.requested) {
                err << "hocc: " << stats.requested - stats.converged
                    << " samples did not converge and were dropped\n";
            }
        } else if (*analyze) {
            Graph g = load_edge_list_file(aa.input);
            CliqueOptions opts;
            opts.threads = aa.threads;
            if (aa.kind == "joint") {
                JointDistribution jd = joint_distribution(g, aa.order, aa.bins, opts);
                with_output(aa.out, out, [&](std::ostream& o) { write_joint(o, g, jd, json); });
                if (jd.empty()) {
                    err << "hocc: no node has both kappa_2 and kappa_" << aa.order << " defined\n";
                    return kUndefined;
                }
            } else {
                if (aa.order < 2) throw ConfigError("order must be at least 2");
                std::vector<unsigned> orders;
                for (unsigned l = 2; l <= aa.order; ++l) orders.push_back(l);
                DegreeBinning binning;
                binning.kind = aa.binning == "linear" ? DegreeBinning::Kind::linear
                                                      : DegreeBinning::Kind::log;
                binning.width = aa.width;
                ClusteringReport report = compute_clustering(g, orders, opts);
                DegreeBinnedProfile profile = degree_profile(report, orders, binning);
                with_output(aa.out, out,
                            [&](std::ostream& o) { write_degree_profile(o, profile, json); });
            }
        } else if (*cliques) {
            if (cq_order < 2 || cq_order > kDefaultOrderCap) {
                throw ConfigError("clique order must lie in [2, " +
                                  std::to_string(kDefaultOrderCap) + "]");
            }
            Graph g = load_edge_list_file(cq_input);
            with_output(cq_out, out, [&](std::ostream& o) {
                for_each_clique(g, cq_order, [&](std::span<const NodeId> c) {
                    for (std::size_t i = 0; i < c.size(); ++i) o << (i ? " " : "") << c[i];
                    o << '\n';
                });
            });
        } else if (*sweep) {
            auto grid = parse_grid(sa.pgrid);
            auto orders = parse_orders(sa.orders);
            SweepOptions opts;
            opts.seed = sa.seed;
            opts.threads = sa.threads;
            auto rows = sweep_rewiring(sa.n, sa.k, grid, sa.reps, orders, opts);
            with_output(sa.out, out, [&](std::ostream& o) { write_sweep(o, rows, json); });
        }
    } catch (const ConfigError& e) {
        err << "hocc: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetError& e) {
        err << "hocc: refusing to run: " << e.what() << '\n';
        return kBudget;
    } catch (const UndefinedStatisticError& e) {
        err << "hocc: " << e.what() << '\n';
        return kUndefined;
    } catch (const Error& e) {
        err << "hocc: " << e.what() << '\n';
        return kInput;
    }
    return kSuccess;
}

}  // namespace hocc::cli
