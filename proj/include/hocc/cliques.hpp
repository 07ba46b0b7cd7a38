#pragma once

#include "hocc/graph.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hocc {

using Count = std::uint64_t;

// Counts of cliques of one order: |K_l(u)| per node and |K_l| overall.
struct CliqueCounts {
    unsigned order = 2;
    std::vector<Count> per_node;
    Count total = 0;

    friend bool operator==(const CliqueCounts&, const CliqueCounts&) = default;
};

inline constexpr unsigned kDefaultOrderCap = 8;

struct CliqueOptions {
    unsigned threads = 1;          // 0: hardware concurrency
    double work_budget = 0;        // 0: unlimited; see estimate_clique_work
    unsigned order_cap = kDefaultOrderCap;
};

// Upper bound on the candidate-set operations needed to count cliques up to
// max_order: sum over nodes v of C(d+(v), max_order - 2) * ceil(d+(v) / 64),
// where d+ is the out-degree in the degeneracy orientation.
double estimate_clique_work(const Graph& g, unsigned max_order);

// Exact counts for every order 2..max_order from one enumeration pass.
// Edges are oriented along the degeneracy order and cliques are grown only
// toward later nodes, so each clique is found once from its earliest member.
// Results do not depend on the thread count.
//
// Throws ConfigError if max_order < 2 or above options.order_cap, BudgetError
// if the work estimate exceeds a nonzero budget, OverflowError if a count
// does not fit in 64 bits.
std::vector<CliqueCounts> count_cliques(const Graph& g, unsigned max_order,
                                        const CliqueOptions& options = {});

// Test oracle: checks every node subset of size `order`. Refuses n > 40.
CliqueCounts brute_force_clique_counts(const Graph& g, unsigned order);

// Calls sink once per clique of exactly `order` nodes, members sorted by
// internal id. Single-threaded; enumeration order is deterministic.
void for_each_clique(const Graph& g, unsigned order,
                     const std::function<void(std::span<const NodeId>)>& sink);

}  // namespace hocc
