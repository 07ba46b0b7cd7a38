#include "helpers.hpp"
#include "oracles.hpp"

#include "hocc/clustering.hpp"
#include "hocc/error.hpp"
#include "hocc/exact.hpp"
#include "hocc/generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace hocc;
using namespace testing;
using exact::Rational;

namespace {

std::vector<CliqueCounts> counts_of(const Graph& g, unsigned max_order) {
    return count_cliques(g, max_order);
}

}  // namespace

TEST_CASE("wedge count examples") {
    auto t = counts_of(triangle(), 3);
    auto w = wedge_counts(triangle(), t[0]);
    for (Count x : w.per_node) CHECK(x == 2);
    CHECK(w.total == 6);

    auto s = counts_of(star(5), 3);
    CHECK(wedge_counts(star(5), s[0]).per_node[0] == 20);

    Graph ring = ring_lattice(21, 5);
    auto r = counts_of(ring, 4);
    for (Count x : wedge_counts(ring, r[1]).per_node) CHECK(x == 240);
}

TEST_CASE("global coefficient examples") {
    for (unsigned l = 2; l <= 5; ++l) {
        auto c = global_hoccf(complete(l + 3), l);
        REQUIRE(c);
        CHECK(*c == 1.0);
    }
    auto s = global_hoccf(star(5), 2);
    REQUIRE(s);
    CHECK(*s == 0.0);
    CHECK_FALSE(global_hoccf(path(2), 2).has_value());
    CHECK_FALSE(global_hoccf(petersen(), 3).has_value());
}

TEST_CASE("classical reduction at order 2") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gnp(30, 0.3, 300 + seed);
        auto c = counts_of(g, 3);
        auto w = wedge_counts(g, c[0]);
        auto local = local_coefficients(g, c[0], c[1]);
        Count paths = 0, closed = 0;
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            // Ordered neighbor pairs, closed when the pair is adjacent.
            Count pu = 0, cu = 0;
            for (NodeId a : g.neighbors(u))
                for (NodeId b : g.neighbors(u))
                    if (a != b) {
                        ++pu;
                        if (g.has_edge(a, b)) ++cu;
                    }
            paths += pu;
            closed += cu;
            CHECK(w.per_node[u] == pu);
            if (pu == 0) {
                CHECK_FALSE(local[u].has_value());
            } else {
                REQUIRE(local[u]);
                CHECK(*local[u] == double(cu) / double(pu));
                CHECK(*local[u] == double(2 * c[1].per_node[u]) / double(w.per_node[u]));
            }
        }
        auto glob = global_coefficient(w, c[1]);
        REQUIRE(glob);
        CHECK(*glob == doctest::Approx(double(6 * c[1].total) / double(w.total)).epsilon(1e-15));
        CHECK(*glob == doctest::Approx(double(closed) / double(paths)).epsilon(1e-15));
    }
}

TEST_CASE("higher-order wedges match direct enumeration") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = gnp(22, 0.5, 700 + seed);
        auto c = counts_of(g, 6);
        for (unsigned l = 2; l <= 5; ++l) {
            auto w = wedge_counts(g, c[l - 2]);
            auto q = exact::local_coefficients(g, c[l - 2], c[l - 1]);
            for (NodeId u = 0; u < g.num_nodes(); ++u) {
                WedgeTally t = enumerate_wedges(g, u, l);
                CHECK(w.per_node[u] == t.all);
                if (t.all == 0) {
                    CHECK_FALSE(q[u].has_value());
                } else {
                    REQUIRE(q[u]);
                    CHECK(*q[u] == Rational(t.closed, t.all));
                }
            }
        }
    }
}

TEST_CASE("both local forms agree exactly") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gnp(30, 0.2 + 0.03 * double(seed), 900 + seed);
        auto c = counts_of(g, 6);
        for (unsigned l = 2; l <= 5; ++l) {
            auto w = wedge_counts(g, c[l - 2]);
            CHECK(exact::local_coefficients(g, c[l - 2], c[l - 1]) ==
                  exact::local_coefficients_from_wedges(w.per_node, l, c[l - 1]));
            auto a = local_coefficients(g, c[l - 2], c[l - 1]);
            auto b = local_coefficients_from_wedges(w, c[l - 1]);
            CHECK(a == b);
        }
    }
}

TEST_CASE("product identity, exact") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gnp(30, 0.6, 1100 + seed);
        auto c = counts_of(g, 6);
        std::vector<std::vector<std::optional<Rational>>> k(6);
        for (unsigned l = 2; l <= 5; ++l) k[l] = exact::local_coefficients(g, c[l - 2], c[l - 1]);
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            Rational prod = 1;
            for (unsigned l = 2; l <= 5; ++l) {
                if (!k[l][u]) break;
                prod *= *k[l][u];
                Rational density(exact::Integer(c[l - 1].per_node[u]),
                                 exact::binomial(unsigned(g.degree(u)), l));
                CHECK(prod == density);
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("bound and range suite") {
    std::vector<Graph> graphs;
    for (std::uint64_t s = 0; s < 10; ++s) graphs.push_back(gnp(30, 0.1 * double(s), s));
    graphs.push_back(clique_star_hood(12, 7));
    graphs.push_back(multipartite_hood(4, 5));
    graphs.push_back(small_world(200, 4, 0.2, 2));
    for (const Graph& g : graphs) {
        const unsigned orders[] = {2, 3, 4, 5};
        auto r = compute_clustering(g, orders);
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            for (unsigned l = 2; l <= 5; ++l) {
                const auto& x = r.at(l).local[u];
                CHECK(x.has_value() == (r.at(l).wedges.per_node[u] > 0));
                if (!x) continue;
                CHECK(*x >= 0.0);
                CHECK(*x <= 1.0);
                if (l >= 3) {
                    REQUIRE(r.at(2).local[u]);
                    CHECK(*x <= std::sqrt(*r.at(2).local[u]) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("complete graph locals are one") {
    const unsigned orders[] = {2, 3, 4};
    auto r = compute_clustering(complete(10), orders);
    for (unsigned l = 2; l <= 4; ++l) {
        for (const auto& x : r.at(l).local) CHECK(x == 1.0);
        CHECK(r.at(l).average.value == 1.0);
        CHECK(r.at(l).average.wedge_fraction == 1.0);
    }
}

TEST_CASE("extremal neighborhoods") {
    SUBCASE("complete bipartite neighborhood") {
        for (std::size_t half : {3, 10, 25}) {
            double d = double(2 * half);
            auto k2 = local_hoccf(multipartite_hood(3, half), 2);
            auto k3 = local_hoccf(multipartite_hood(3, half), 3);
            CHECK(*k2[0] == doctest::Approx(d / (2 * (d - 1))).epsilon(1e-14));
            CHECK(*k3[0] == 0.0);
        }
    }
    SUBCASE("clique plus star neighborhood") {
        for (std::size_t half : {3, 10, 25}) {
            double d = double(2 * half);
            Graph g = clique_star_hood(half, half);
            CHECK(*local_hoccf(g, 2)[0] == doctest::Approx((d - 2) / (4 * d - 4)).epsilon(1e-14));
            CHECK(*local_hoccf(g, 3)[0] == doctest::Approx((d - 4) / (2 * d - 4)).epsilon(1e-14));
        }
    }
}

TEST_CASE("average skips undefined nodes") {
    // Triangle with a pendant: node 3 has degree 1 and no 2-wedge.
    Graph g = make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    const unsigned orders[] = {2};
    auto r = compute_clustering(g, orders);
    const auto& o = r.at(2);
    CHECK_FALSE(o.local[3].has_value());
    CHECK(o.average.defined == 3);
    CHECK(o.average.wedge_fraction == 0.75);
    CHECK(*o.average.value == doctest::Approx((1.0 + 1.0 + 1.0 / 3.0) / 3.0));

    std::vector<Coefficient> none(4);
    auto a = average_coefficient(none);
    CHECK_FALSE(a.value.has_value());
    CHECK(a.defined == 0);
    CHECK(a.wedge_fraction == 0.0);
}

TEST_CASE("reference curves") {
    CHECK(er_baseline(0.2, 3) == doctest::Approx(0.04));
    CHECK(er_baseline(1.0, 5) == 1.0);
    CHECK(er_baseline(0.0, 4) == 0.0);
    CHECK(kk_upper_bound(0.25) == 0.5);
    CHECK(kk_upper_bound(1.0) == 1.0);
    CHECK_THROWS_AS(er_baseline(0.5, 1), ConfigError);
}

TEST_CASE("clique plus star approaches the bound") {
    double prev_gap = 1;
    for (std::size_t c : {10, 50, 200}) {
        Graph g = clique_star_hood(c, c);
        double k2 = *local_hoccf(g, 2)[0];
        double k3 = *local_hoccf(g, 3)[0];
        double gap = std::sqrt(k2) - k3;
        CHECK(gap >= 0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.0025);
}

TEST_CASE("gnp expectation over 20 seeds") {
    const double p = 0.3;
    const unsigned orders[] = {2, 3, 4};
    std::vector<std::vector<double>> values(5);
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto r = compute_clustering(gnp(500, p, 5000 + s), orders);
        for (unsigned l = 2; l <= 4; ++l) values[l].push_back(*r.at(l).global);
    }
    for (unsigned l = 2; l <= 4; ++l) {
        double mean = 0, sq = 0;
        for (double v : values[l]) mean += v;
        mean /= 20;
        for (double v : values[l]) sq += (v - mean) * (v - mean);
        double se = std::sqrt(sq / 19) / std::sqrt(20.0);
        CHECK(std::abs(mean - std::pow(p, l - 1)) <= 5 * se);
    }
}

TEST_CASE("report bookkeeping") {
    const unsigned orders[] = {4, 2, 2};
    auto r = compute_clustering(gnp(40, 0.4, 1), orders);
    REQUIRE(r.orders.size() == 2);
    CHECK(r.orders[0].order == 2);
    CHECK(r.orders[1].order == 4);
    CHECK_THROWS_AS(r.at(3), ConfigError);
    const unsigned bad[] = {1};
    CHECK_THROWS_AS(compute_clustering(triangle(), bad), ConfigError);
    CHECK_THROWS_AS(compute_clustering(triangle(), std::span<const unsigned>{}), ConfigError);
}
