#include "hocc/cliques.hpp"

#include "hocc/error.hpp"
#include "hocc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <string>

namespace hocc {

namespace {

// Degeneracy-oriented graph in rank space: rank r's out-list holds the ranks
// of its later neighbors, ascending.
struct OrientedGraph {
    std::vector<NodeId> node_of_rank;
    std::vector<std::uint64_t> offsets;
    std::vector<NodeId> out;

    std::size_t size() const { return node_of_rank.size(); }
    std::span<const NodeId> successors(NodeId r) const {
        return {out.data() + offsets[r], out.data() + offsets[r + 1]};
    }
};

OrientedGraph orient(const Graph& g) {
    VertexOrdering ord = degeneracy_order(g);
    OrientedGraph dag;
    const std::size_t n = g.num_nodes();
    dag.node_of_rank = ord.order;
    dag.offsets.assign(n + 1, 0);
    dag.out.reserve(g.num_edges());
    for (NodeId r = 0; r < n; ++r) {
        NodeId u = ord.order[r];
        std::size_t first = dag.out.size();
        for (NodeId v : g.neighbors(u)) {
            if (ord.position[v] > r) dag.out.push_back(ord.position[v]);
        }
        std::sort(dag.out.begin() + std::ptrdiff_t(first), dag.out.end());
        dag.offsets[r + 1] = dag.out.size();
    }
    return dag;
}

double binomial(double n, unsigned k) {
    if (k > n) return 0;
    double r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

void checked_add(Count& acc, Count x) {
    if (__builtin_add_overflow(acc, x, &acc)) throw OverflowError("clique count overflow");
}

// Per-order counters for local nodes where each +1 to a whole candidate set
// costs O(words) instead of O(|set|): counters are stored as bit planes and
// added with ripple carry.
class BitSlicedCounters {
public:
    void reset(std::size_t words) {
        words_ = words;
        planes_.assign(64 * words, 0);
        used_ = 0;
    }

    void add(const std::uint64_t* set) {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t carry = set[w];
            for (unsigned p = 0; carry != 0; ++p) {
                if (p == 64) throw OverflowError("clique count overflow");
                std::uint64_t& plane = planes_[p * words_ + w];
                std::uint64_t next = plane & carry;
                plane ^= carry;
                carry = next;
                if (p >= used_) used_ = p + 1;
            }
        }
    }

    // Adds plane values into out[i] and clears the planes.
    void drain(std::span<Count> out) {
        for (unsigned p = 0; p < used_; ++p) {
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t& plane = planes_[p * words_ + w];
                for (std::uint64_t bits = plane; bits != 0; bits &= bits - 1) {
                    std::size_t i = w * 64 + std::size_t(std::countr_zero(bits));
                    checked_add(out[i], Count{1} << p);
                }
                plane = 0;
            }
        }
        used_ = 0;
    }

private:
    std::size_t words_ = 0;
    std::vector<std::uint64_t> planes_;
    unsigned used_ = 0;
};

class RootCounter {
public:
    RootCounter(const OrientedGraph& dag, unsigned max_order)
        : dag_(dag), max_order_(max_order), local_of_rank_(dag.size(), -1),
          totals_(max_order + 1, 0), sliced_(max_order + 1), root_counts_(max_order + 1, 0),
          stack_(max_order, 0) {}

    const std::vector<Count>& totals() const { return totals_; }

    // Counts every clique whose earliest member is `root`; per-node credits
    // go to sink(order, node, count).
    template <typename Sink>
    void run(NodeId root, Sink&& sink) {
        auto succ = dag_.successors(root);
        const std::size_t d = succ.size();
        if (d == 0) return;
        local_count_ = d;
        words_ = (d + 63) / 64;

        // Local adjacency among the successors as bit rows: rows_ keeps only
        // later neighbors, both_ keeps all of them.
        for (std::size_t i = 0; i < d; ++i) local_of_rank_[succ[i]] = std::int32_t(i);
        rows_.assign(d * words_, 0);
        both_.assign(d * words_, 0);
        for (std::size_t i = 0; i < d; ++i) {
            std::uint64_t* row = rows_.data() + i * words_;
            for (NodeId r : dag_.successors(succ[i])) {
                std::int32_t j = local_of_rank_[r];
                if (j < 0) continue;
                row[std::size_t(j) / 64] |= std::uint64_t{1} << (std::size_t(j) % 64);
                both_[i * words_ + std::size_t(j) / 64] |= std::uint64_t{1} << (std::size_t(j) % 64);
                both_[std::size_t(j) * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
        for (std::size_t i = 0; i < d; ++i) local_of_rank_[succ[i]] = -1;

        direct_.assign((max_order_ + 1) * d, 0);
        for (unsigned o = 3; o < max_order_; ++o) sliced_[o].reset(words_);
        std::fill(root_counts_.begin(), root_counts_.end(), 0);
        sets_.assign(max_order_ * words_, 0);

        std::uint64_t* all = sets_.data() + words_;
        for (std::size_t i = 0; i < d; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
        extend(1, all);

        for (unsigned o = 3; o < max_order_; ++o) {
            sliced_[o].drain(std::span<Count>(direct_.data() + o * d, d));
        }
        for (unsigned o = 2; o <= max_order_; ++o) {
            sink(o, dag_.node_of_rank[root], root_counts_[o]);
            for (std::size_t i = 0; i < d; ++i) {
                Count c = direct_[o * d + i];
                if (c != 0) sink(o, dag_.node_of_rank[succ[i]], c);
            }
        }
    }

private:
    // `set` holds the common later neighbors of the current clique, which has
    // `size` members: the root plus stack_[0..size-2].
    void extend(unsigned size, const std::uint64_t* set) {
        Count found = 0;
        for (std::size_t w = 0; w < words_; ++w) found += Count(std::popcount(set[w]));
        if (found == 0) return;

        const unsigned order = size + 1;
        const std::size_t d = local_count_;
        checked_add(totals_[order], found);
        checked_add(root_counts_[order], found);
        for (unsigned k = 0; k + 1 < size; ++k) checked_add(direct_[order * d + stack_[k]], found);
        if (order == 2) {
            for (std::size_t i = 0; i < d; ++i) direct_[2 * d + i] += 1;
        } else {
            sliced_[order].add(set);
        }
        if (order == max_order_) return;
        if (order + 1 == max_order_) {
            close_last(size, set);
            return;
        }

        std::uint64_t* next = sets_.data() + order * words_;
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t bits = set[w]; bits != 0; bits &= bits - 1) {
                std::size_t v = w * 64 + std::size_t(std::countr_zero(bits));
                const std::uint64_t* row = rows_.data() + v * words_;
                std::uint64_t any = 0;
                for (std::size_t x = 0; x < words_; ++x) {
                    next[x] = set[x] & row[x];
                    any |= next[x];
                }
                if (any == 0) continue;
                stack_[size - 1] = NodeId(v);
                extend(order, next);
            }
        }
    }

    // The cliques of the last order through the current clique are the edges
    // inside `set`. Node x in the set lies in popcount(set & N(x)) of them and
    // every clique member lies in all of them.
    void close_last(unsigned size, const std::uint64_t* set) {
        const std::size_t d = local_count_;
        Count* credit = direct_.data() + max_order_ * d;
        Count ends = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t bits = set[w]; bits != 0; bits &= bits - 1) {
                std::size_t x = w * 64 + std::size_t(std::countr_zero(bits));
                const std::uint64_t* row = both_.data() + x * words_;
                Count c = 0;
                for (std::size_t y = 0; y < words_; ++y) c += Count(std::popcount(set[y] & row[y]));
                checked_add(credit[x], c);
                ends += c;
            }
        }
        const Count found = ends / 2;
        if (found == 0) return;
        checked_add(totals_[max_order_], found);
        checked_add(root_counts_[max_order_], found);
        for (unsigned k = 0; k + 1 < size; ++k) checked_add(credit[stack_[k]], found);
    }

    const OrientedGraph& dag_;
    unsigned max_order_;
    std::vector<std::int32_t> local_of_rank_;
    std::vector<Count> totals_;
    std::vector<BitSlicedCounters> sliced_;
    std::vector<Count> root_counts_;
    std::vector<NodeId> stack_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> both_;
    std::vector<std::uint64_t> sets_;
    std::vector<Count> direct_;
    std::size_t local_count_ = 0;
    std::size_t words_ = 1;
};

void check_order(unsigned max_order, unsigned cap) {
    if (max_order < 2) throw ConfigError("clique order must be at least 2");
    if (max_order > cap) {
        throw ConfigError("clique order " + std::to_string(max_order) + " exceeds cap " +
                          std::to_string(cap));
    }
}

double estimate_work(const OrientedGraph& dag, unsigned max_order) {
    double work = 0;
    for (NodeId r = 0; r < dag.size(); ++r) {
        double d = double(dag.offsets[r + 1] - dag.offsets[r]);
        work += binomial(d, max_order - 2) * std::ceil(std::max(d, 1.0) / 64.0);
    }
    return work;
}

}  // namespace

double estimate_clique_work(const Graph& g, unsigned max_order) {
    if (max_order < 2) throw ConfigError("clique order must be at least 2");
    return estimate_work(orient(g), max_order);
}

std::vector<CliqueCounts> count_cliques(const Graph& g, unsigned max_order,
                                        const CliqueOptions& options) {
    check_order(max_order, options.order_cap);
    const std::size_t n = g.num_nodes();
    OrientedGraph dag = orient(g);
    if (options.work_budget > 0) {
        double estimate = estimate_work(dag, max_order);
        if (estimate > options.work_budget) throw BudgetError(estimate, options.work_budget);
    }

    std::vector<std::vector<Count>> per_node(max_order + 1, std::vector<Count>(n, 0));
    const unsigned threads = resolve_threads(options.threads);
    std::vector<RootCounter> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(dag, max_order);

    std::atomic<bool> overflow{false};
    auto sink_for = [&](bool shared) {
        return [&, shared](unsigned order, NodeId node, Count c) {
            Count& slot = per_node[order][node];
            Count old;
            if (shared) {
                old = std::atomic_ref<Count>(slot).fetch_add(c, std::memory_order_relaxed);
            } else {
                old = slot;
                slot += c;
            }
            if (old + c < old) overflow.store(true, std::memory_order_relaxed);
        };
    };
    parallel_for(n, threads, 64, [&](unsigned worker, std::size_t root) {
        workers[worker].run(NodeId(root), sink_for(threads > 1));
    });
    if (overflow.load()) throw OverflowError("per-node clique count overflow");

    std::vector<CliqueCounts> result;
    for (unsigned o = 2; o <= max_order; ++o) {
        CliqueCounts c;
        c.order = o;
        for (const auto& w : workers) checked_add(c.total, w.totals()[o]);
        c.per_node = std::move(per_node[o]);
        result.push_back(std::move(c));
    }
    return result;
}

CliqueCounts brute_force_clique_counts(const Graph& g, unsigned order) {
    const std::size_t n = g.num_nodes();
    if (n > 40) throw ConfigError("brute force clique counting limited to n <= 40");
    if (order < 1) throw ConfigError("clique order must be positive");

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edge_list()) adj[u][v] = adj[v][u] = 1;

    CliqueCounts counts;
    counts.order = order;
    counts.per_node.assign(n, 0);
    if (order > n) return counts;

    std::vector<NodeId> pick(order);
    for (unsigned i = 0; i < order; ++i) pick[i] = NodeId(i);
    for (;;) {
        bool clique = true;
        for (unsigned i = 0; i < order && clique; ++i) {
            for (unsigned j = i + 1; j < order; ++j) {
                if (!adj[pick[i]][pick[j]]) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) {
            ++counts.total;
            for (NodeId u : pick) ++counts.per_node[u];
        }
        // Next combination in lexicographic order.
        int i = int(order) - 1;
        while (i >= 0 && pick[std::size_t(i)] == n - order + std::size_t(i)) --i;
        if (i < 0) break;
        ++pick[std::size_t(i)];
        for (std::size_t j = std::size_t(i) + 1; j < order; ++j) pick[j] = pick[j - 1] + 1;
    }
    return counts;
}

void for_each_clique(const Graph& g, unsigned order,
                     const std::function<void(std::span<const NodeId>)>& sink) {
    if (order < 1) throw ConfigError("clique order must be positive");
    if (order == 1) {
        for (NodeId u = 0; u < g.num_nodes(); ++u) sink(std::span<const NodeId>(&u, 1));
        return;
    }
    OrientedGraph dag = orient(g);
    std::vector<NodeId> members;
    std::vector<NodeId> sorted(order);
    std::vector<std::vector<NodeId>> candidates(order);

    std::function<void(unsigned)> grow = [&](unsigned depth) {
        const auto& cand = candidates[depth];
        for (NodeId r : cand) {
            members.push_back(r);
            if (depth + 2 == order) {
                for (unsigned i = 0; i < order; ++i) sorted[i] = dag.node_of_rank[members[i]];
                std::sort(sorted.begin(), sorted.end());
                sink(sorted);
            } else {
                auto succ = dag.successors(r);
                auto& next = candidates[depth + 1];
                next.clear();
                std::set_intersection(cand.begin(), cand.end(), succ.begin(), succ.end(),
                                      std::back_inserter(next));
                if (next.size() + depth + 2 >= order) grow(depth + 1);
            }
            members.pop_back();
        }
    };

    for (NodeId r = 0; r < dag.size(); ++r) {
        auto succ = dag.successors(r);
        if (succ.size() + 1 < order) continue;
        members.assign(1, r);
        candidates[0].assign(succ.begin(), succ.end());
        grow(0);
    }
}

}  // namespace hocc
