#include "hocc/null_models.hpp"

#include "hocc/clustering.hpp"
#include "hocc/error.hpp"
#include "hocc/parallel.hpp"
#include "hocc/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace hocc {

namespace {

using Edge = std::pair<NodeId, NodeId>;

std::uint64_t key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t(u) << 32) | v;
}

// Draws a swap candidate: two distinct edge slots and the rewired endpoints.
struct Proposal {
    std::size_t i, j;
    NodeId a, b, c, d;  // (a,b),(c,d) -> (a,d),(c,b)
};

std::optional<Proposal> propose(const std::vector<Edge>& edges, Rng& rng) {
    Proposal s;
    s.i = rng.below(edges.size());
    s.j = rng.below(edges.size());
    std::tie(s.a, s.b) = edges[s.i];
    std::tie(s.c, s.d) = edges[s.j];
    if (rng.bernoulli(0.5)) std::swap(s.c, s.d);
    if (s.i == s.j || s.a == s.d || s.c == s.b) return std::nullopt;
    return s;
}

void randomize(std::vector<Edge>& edges, Rng& rng, double swap_factor, SwapStats& stats) {
    std::unordered_set<std::uint64_t> present;
    present.reserve(2 * edges.size());
    for (auto [u, v] : edges) present.insert(key(u, v));

    auto attempts = std::uint64_t(std::ceil(swap_factor * double(edges.size())));
    for (std::uint64_t t = 0; t < attempts; ++t) {
        ++stats.attempted;
        auto s = propose(edges, rng);
        if (!s || present.count(key(s->a, s->d)) || present.count(key(s->c, s->b))) {
            ++stats.rejected;
            continue;
        }
        present.erase(key(s->a, s->b));
        present.erase(key(s->c, s->d));
        present.insert(key(s->a, s->d));
        present.insert(key(s->c, s->b));
        edges[s->i] = {s->a, s->d};
        edges[s->j] = {s->c, s->b};
        ++stats.accepted;
    }
}

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
    return v[rng.below(v.size())];
}

// Swap that closes an open wedge (a, u, c), expressed in Proposal form:
// (a,b),(d',c) -> (a,c),(d',b) with d' stored in `c` and c stored in `d`.
std::optional<Proposal> propose_closing(const std::vector<Edge>& edges,
                                        const std::unordered_map<std::uint64_t, std::size_t>& slot,
                                        const TriangleTracker& t, Rng& rng) {
    auto [u, a] = pick(edges, rng);
    if (rng.bernoulli(0.5)) std::swap(u, a);
    NodeId c = pick(t.neighbors(u), rng);
    if (c == a || t.has_edge(a, c)) return std::nullopt;
    NodeId b = pick(t.neighbors(a), rng);
    NodeId d = pick(t.neighbors(c), rng);
    if (b == u || b == c || d == u || d == a || d == b || t.has_edge(b, d)) return std::nullopt;
    return Proposal{slot.at(key(a, b)), slot.at(key(d, c)), a, b, d, c};
}

double average_c2(const Graph& g) {
    auto counts = count_cliques(g, 3);
    auto avg = average_coefficient(local_coefficients(g, counts[0], counts[1]));
    if (!avg.value) throw UndefinedStatisticError("average clustering undefined: no wedges");
    return *avg.value;
}

}  // namespace

CmSample cm_sample(const Graph& g, std::uint64_t seed, double swap_factor) {
    if (g.num_edges() < 2) throw ConfigError("configuration model needs at least 2 edges");
    if (!(swap_factor > 0)) throw ConfigError("swap factor must be positive");
    Rng rng(seed);
    CmSample out;
    auto edges = g.edge_list();
    randomize(edges, rng, swap_factor, out.swaps);
    out.graph = Graph::from_edges(g.num_nodes(), edges, g.labels());
    return out;
}

void AnnealingSchedule::validate() const {
    if (!(initial_temperature > 0)) throw ConfigError("initial temperature must be positive");
    if (!(cooling_factor > 0 && cooling_factor < 1)) {
        throw ConfigError("cooling factor must lie in (0, 1)");
    }
    if (steps_per_temperature == 0) throw ConfigError("steps per temperature must be positive");
    if (!(target_tolerance >= 0)) throw ConfigError("tolerance must be non-negative");
    if (max_sweeps == 0) throw ConfigError("max sweeps must be positive");
    if (!(swap_factor >= 0)) throw ConfigError("swap factor must be non-negative");
    if (!(closing_fraction >= 0 && closing_fraction <= 1)) {
        throw ConfigError("closing fraction must lie in [0, 1]");
    }
}

TriangleTracker::TriangleTracker(const Graph& g)
    : adj_(g.num_nodes()), triangles_(g.num_nodes(), 0), inv_pairs_(g.num_nodes(), 0) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        auto nb = g.neighbors(u);
        adj_[u].assign(nb.begin(), nb.end());
        double d = double(nb.size());
        if (nb.size() >= 2) {
            inv_pairs_[u] = 2.0 / (d * (d - 1));
            ++defined_;
        }
    }
    auto counts = count_cliques(g, 3);
    triangles_ = counts[1].per_node;
    for (NodeId u = 0; u < g.num_nodes(); ++u) kappa_sum_ += double(triangles_[u]) * inv_pairs_[u];
}

bool TriangleTracker::has_edge(NodeId u, NodeId v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    NodeId x = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), x);
}

std::size_t TriangleTracker::common_into(NodeId u, NodeId v) {
    scratch_.clear();
    std::set_intersection(adj_[u].begin(), adj_[u].end(), adj_[v].begin(), adj_[v].end(),
                          std::back_inserter(scratch_));
    return scratch_.size();
}

void TriangleTracker::add_edge(NodeId u, NodeId v) {
    std::size_t shared = common_into(u, v);
    triangles_[u] += shared;
    triangles_[v] += shared;
    double delta = double(shared) * (inv_pairs_[u] + inv_pairs_[v]);
    for (NodeId w : scratch_) {
        ++triangles_[w];
        delta += inv_pairs_[w];
    }
    kappa_sum_ += delta;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void TriangleTracker::remove_edge(NodeId u, NodeId v) {
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    std::size_t shared = common_into(u, v);
    triangles_[u] -= shared;
    triangles_[v] -= shared;
    double delta = double(shared) * (inv_pairs_[u] + inv_pairs_[v]);
    for (NodeId w : scratch_) {
        --triangles_[w];
        delta += inv_pairs_[w];
    }
    kappa_sum_ -= delta;
}

double TriangleTracker::average_clustering() const {
    return defined_ == 0 ? 0.0 : kappa_sum_ / double(defined_);
}

void TriangleTracker::resync() {
    kappa_sum_ = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        kappa_sum_ += double(triangles_[u]) * inv_pairs_[u];
    }
}

Graph TriangleTracker::to_graph(const std::vector<std::string>& labels) const {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < adj_.size(); ++u) {
        for (NodeId v : adj_[u]) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(adj_.size(), edges, labels);
}

MrcnSample mrcn_sample(const Graph& g, std::uint64_t seed, const AnnealingSchedule& schedule) {
    schedule.validate();
    if (g.num_edges() < 2) throw ConfigError("MRCN sampling needs at least 2 edges");
    MrcnSample out;
    out.target = average_c2(g);

    Rng rng(seed);
    auto edges = g.edge_list();
    SwapStats warmup;
    if (schedule.swap_factor > 0) randomize(edges, rng, schedule.swap_factor, warmup);
    TriangleTracker tracker(Graph::from_edges(g.num_nodes(), edges));
    std::unordered_map<std::uint64_t, std::size_t> slot;
    slot.reserve(2 * edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) slot[key(edges[i].first, edges[i].second)] = i;

    const double nodes = double(tracker.defined_nodes());
    const double tol = schedule.target_tolerance;
    double energy = std::abs(tracker.average_clustering() - out.target);
    auto reached = [&] {
        if (energy > tol) return false;
        tracker.resync();
        energy = std::abs(tracker.average_clustering() - out.target);
        return energy <= tol;
    };

    bool done = reached();
    double temperature = schedule.initial_temperature;
    const std::uint64_t steps = schedule.steps_per_temperature * edges.size();
    for (std::uint64_t sweep = 0; sweep < schedule.max_sweeps && !done; ++sweep) {
        ++out.sweeps;
        for (std::uint64_t step = 0; step < steps && !done; ++step) {
            ++out.proposals;
            auto s = rng.bernoulli(schedule.closing_fraction)
                         ? propose_closing(edges, slot, tracker, rng)
                         : propose(edges, rng);
            if (!s || tracker.has_edge(s->a, s->d) || tracker.has_edge(s->c, s->b)) continue;

            tracker.remove_edge(s->a, s->b);
            tracker.remove_edge(s->c, s->d);
            tracker.add_edge(s->a, s->d);
            tracker.add_edge(s->c, s->b);
            double next = std::abs(tracker.average_clustering() - out.target);
            double rise = next - energy;
            if (rise <= 0 || rng.uniform() < std::exp(-nodes * rise / temperature)) {
                slot.erase(key(s->a, s->b));
                slot.erase(key(s->c, s->d));
                edges[s->i] = {s->a, s->d};
                edges[s->j] = {s->c, s->b};
                slot[key(s->a, s->d)] = s->i;
                slot[key(s->c, s->b)] = s->j;
                energy = next;
                done = reached();
            } else {
                tracker.remove_edge(s->a, s->d);
                tracker.remove_edge(s->c, s->b);
                tracker.add_edge(s->a, s->b);
                tracker.add_edge(s->c, s->d);
            }
        }
        temperature *= schedule.cooling_factor;
    }

    out.graph = tracker.to_graph(g.labels());
    out.achieved = std::abs(average_c2(out.graph) - out.target);
    out.converged = out.achieved <= tol;
    return out;
}

std::string significance_name(Significance s) {
    switch (s) {
    case Significance::above: return "above-5sigma";
    case Significance::below: return "below-5sigma";
    case Significance::not_significant: return "not-significant";
    }
    return "?";
}

void classify(StatisticSummary& s, double threshold) {
    s.flag = Significance::not_significant;
    s.z = 0;
    if (std::isnan(s.original) || s.n_samples == 0) {
        s.z = std::numeric_limits<double>::quiet_NaN();
        return;
    }
    double diff = s.original - s.mean;
    if (s.std > 0) {
        s.z = diff / s.std;
    } else if (diff != 0) {
        s.z = diff > 0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
    }
    if (s.z >= threshold) s.flag = Significance::above;
    if (s.z <= -threshold) s.flag = Significance::below;
}

EnsembleStats ensemble_stats(const Graph& g, const NullSpec& spec, std::size_t n_samples,
                             std::span<const unsigned> orders, const EnsembleOptions& options) {
    if (n_samples < 2) throw ConfigError("ensemble needs at least 2 samples");
    if (orders.empty()) throw ConfigError("no orders requested");
    if (spec.kind == NullKind::mrcn) spec.schedule.validate();

    std::vector<unsigned> wanted(orders.begin(), orders.end());
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    // Statistic vector: avg per order, then global per order if requested.
    auto extract = [&](const Graph& h) {
        ClusteringReport r = compute_clustering(h, wanted);
        std::vector<std::optional<double>> v;
        for (const auto& o : r.orders) v.push_back(o.average.value);
        if (options.include_global) {
            for (const auto& o : r.orders) v.push_back(o.global);
        }
        return v;
    };

    auto original = extract(g);
    std::vector<std::optional<std::vector<std::optional<double>>>> samples(n_samples);
    parallel_for(n_samples, options.threads, 1, [&](unsigned, std::size_t i) {
        std::uint64_t seed = derive_seed(options.seed, i);
        if (spec.kind == NullKind::cm) {
            samples[i] = extract(cm_sample(g, seed, spec.swap_factor).graph);
        } else {
            MrcnSample s = mrcn_sample(g, seed, spec.schedule);
            if (s.converged) samples[i] = extract(s.graph);
        }
    });

    EnsembleStats out;
    out.requested = n_samples;
    out.z_threshold = options.z_threshold;
    for (const auto& s : samples) out.converged += s.has_value();
    if (out.converged == 0) throw UndefinedStatisticError("no null sample converged");

    std::vector<std::string> ids;
    for (unsigned l : wanted) ids.push_back("avg_" + std::to_string(l));
    if (options.include_global) {
        for (unsigned l : wanted) ids.push_back("global_" + std::to_string(l));
    }
    for (std::size_t k = 0; k < ids.size(); ++k) {
        StatisticSummary st;
        st.id = ids[k];
        st.original = original[k].value_or(std::numeric_limits<double>::quiet_NaN());
        double sum = 0;
        for (const auto& s : samples) {
            if (s && (*s)[k]) {
                sum += *(*s)[k];
                ++st.n_samples;
            }
        }
        if (st.n_samples > 0) st.mean = sum / double(st.n_samples);
        double sq = 0;
        for (const auto& s : samples) {
            if (s && (*s)[k]) sq += (*(*s)[k] - st.mean) * (*(*s)[k] - st.mean);
        }
        st.std = st.n_samples > 1 ? std::sqrt(sq / double(st.n_samples - 1)) : 0.0;
        classify(st, options.z_threshold);
        out.stats.push_back(std::move(st));
    }
    return out;
}

}  // namespace hocc
