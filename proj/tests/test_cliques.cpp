#include "helpers.hpp"

#include "hocc/cliques.hpp"
#include "hocc/error.hpp"
#include "hocc/generators.hpp"

#include <doctest.h>

#include <set>

using namespace hocc;
using namespace testing;

namespace {

Count choose(Count n, Count k) {
    if (k > n) return 0;
    Count r = 1;
    for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const CliqueCounts& at(const std::vector<CliqueCounts>& v, unsigned order) {
    REQUIRE(order >= 2);
    REQUIRE(order - 2 < v.size());
    return v[order - 2];
}

}  // namespace

TEST_CASE("K5 counts are binomials") {
    auto c = count_cliques(complete(5), 5);
    REQUIRE(c.size() == 4);
    for (unsigned l = 2; l <= 5; ++l) {
        CHECK(at(c, l).order == l);
        CHECK(at(c, l).total == choose(5, l));
        for (Count x : at(c, l).per_node) CHECK(x == choose(4, l - 1));
    }
}

TEST_CASE("Petersen graph is triangle free") {
    auto c = count_cliques(petersen(), 4);
    CHECK(at(c, 2).total == 15);
    CHECK(at(c, 3).total == 0);
    CHECK(at(c, 4).total == 0);
}

TEST_CASE("brute force oracle examples") {
    CHECK(brute_force_clique_counts(triangle(), 3).total == 1);
    CHECK(brute_force_clique_counts(diamond(), 4).total == 0);
    CHECK(brute_force_clique_counts(diamond(), 3).total == 2);
    auto ring = brute_force_clique_counts(ring_lattice(21, 5), 3);
    for (Count x : ring.per_node) CHECK(x == 3 * 5 * 4 / 2);
    CHECK_THROWS_AS(brute_force_clique_counts(complete(41), 3), ConfigError);
}

TEST_CASE("gnp(30, 0.5, 1) matches the oracle") {
    Graph g = gnp(30, 0.5, 1);
    auto c = count_cliques(g, 5);
    for (unsigned l = 2; l <= 5; ++l) CHECK(at(c, l) == brute_force_clique_counts(g, l));
}

TEST_CASE("oracle equivalence on 200 random graphs") {
    const double ps[] = {0.2, 0.5, 0.8};
    int checked = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        std::size_t n = 5 + i % 26;
        Graph g = gnp(n, ps[i % 3], 1000 + i);
        auto c = count_cliques(g, 5);
        for (unsigned l = 2; l <= 5; ++l) {
            if (at(c, l) != brute_force_clique_counts(g, l)) {
                FAIL("mismatch on graph " << i << " order " << l);
            }
            ++checked;
        }
    }
    CHECK(checked == 800);
}

TEST_CASE("count invariants") {
    Graph g = gnp(60, 0.4, 9);
    auto c = count_cliques(g, 6);
    for (const auto& cc : c) {
        Count sum = 0;
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            sum += cc.per_node[u];
            CHECK(cc.per_node[u] <= choose(g.degree(u), cc.order - 1));
        }
        CHECK(sum == cc.order * cc.total);
    }
}

TEST_CASE("neighborhood correspondence") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gnp(30, 0.5, 50 + seed);
        auto c = count_cliques(g, 5);
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            Graph h = neighborhood_subgraph(g, u);
            for (unsigned l = 2; l <= 4; ++l) {
                Count in_hood = h.num_nodes() >= l ? brute_force_clique_counts(h, l).total : 0;
                CHECK(at(c, l + 1).per_node[u] == in_hood);
            }
        }
    }
}

TEST_CASE("thread count does not change results") {
    Graph g = gnp(400, 0.1, 4);
    auto one = count_cliques(g, 5, {.threads = 1});
    CHECK(count_cliques(g, 5, {.threads = 2}) == one);
    CHECK(count_cliques(g, 5, {.threads = 8}) == one);
}

TEST_CASE("wide neighborhoods cross word boundaries") {
    // Degrees above 64 and 128 exercise multi-word candidate sets.
    Graph g = gnp(200, 0.8, 21);
    auto c = count_cliques(g, 4);
    Graph small = gnp(40, 0.9, 21);
    auto cs = count_cliques(small, 6);
    for (unsigned l = 2; l <= 6; ++l) CHECK(at(cs, l) == brute_force_clique_counts(small, l));
    Count sum = 0;
    for (Count x : at(c, 3).per_node) sum += x;
    CHECK(sum == 3 * at(c, 3).total);
    CHECK(at(c, 2).total == g.num_edges());
}

TEST_CASE("complete graph beyond one word") {
    auto c = count_cliques(complete(130), 4);
    CHECK(at(c, 4).total == choose(130, 4));
    for (Count x : at(c, 4).per_node) CHECK(x == choose(129, 3));
}

TEST_CASE("configuration errors") {
    Graph g = triangle();
    CHECK_THROWS_AS(count_cliques(g, 1), ConfigError);
    CHECK_THROWS_AS(count_cliques(g, 9), ConfigError);
    CHECK_NOTHROW(count_cliques(g, 9, {.order_cap = 9}));
}

TEST_CASE("budget refusal carries the estimate") {
    Graph g = gnp(300, 0.3, 2);
    double est = estimate_clique_work(g, 5);
    CHECK(est > 0);
    try {
        count_cliques(g, 5, {.work_budget = est / 2});
        FAIL("expected a budget refusal");
    } catch (const BudgetError& e) {
        CHECK(e.estimate() == doctest::Approx(est));
    }
    CHECK_NOTHROW(count_cliques(g, 5, {.work_budget = est * 2}));
}

TEST_CASE("clique stream") {
    Graph g = gnp(25, 0.6, 8);
    for (unsigned l = 2; l <= 5; ++l) {
        std::set<std::vector<NodeId>> seen;
        Count n = 0;
        for_each_clique(g, l, [&](std::span<const NodeId> c) {
            std::vector<NodeId> v(c.begin(), c.end());
            CHECK(v.size() == l);
            CHECK(std::is_sorted(v.begin(), v.end()));
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j) CHECK(g.has_edge(v[i], v[j]));
            seen.insert(v);
            ++n;
        });
        CHECK(seen.size() == n);
        CHECK(n == brute_force_clique_counts(g, l).total);
    }
}

TEST_CASE("isolated and tiny graphs") {
    Graph g = make(5, {{0, 1}});
    auto c = count_cliques(g, 4);
    CHECK(at(c, 2).total == 1);
    CHECK(at(c, 3).total == 0);
    CHECK(at(c, 4).per_node == std::vector<Count>(5, 0));
}
