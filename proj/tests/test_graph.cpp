#include "helpers.hpp"

#include "hocc/error.hpp"
#include "hocc/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hocc;
using namespace testing;

namespace {

// Core number of every node by repeated peeling, straight from the definition.
std::size_t peel_degeneracy(const Graph& g) {
    std::size_t n = g.num_nodes(), best = 0;
    std::vector<bool> gone(n, false);
    std::vector<std::size_t> deg = g.degrees();
    for (std::size_t k = 0; k <= n; ++k) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId u = 0; u < n; ++u) {
                if (gone[u] || deg[u] >= k) continue;
                gone[u] = true;
                changed = true;
                for (NodeId v : g.neighbors(u)) if (!gone[v]) --deg[v];
            }
        }
        if (std::count(gone.begin(), gone.end(), false) == 0) break;
        best = k;
    }
    return best;
}

std::multiset<std::size_t> degree_multiset(const Graph& g) {
    auto d = g.degrees();
    return {d.begin(), d.end()};
}

}  // namespace

TEST_CASE("load: triangle") {
    Graph g = parse("0 1\n1 2\n2 0\n");
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 3);
    for (NodeId u = 0; u < 3; ++u) CHECK(g.degree(u) == 2);
}

TEST_CASE("load: duplicates and self-loops are dropped") {
    Graph g = parse("a b\nb a\na a\n");
    CHECK(g.num_nodes() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "b");
}

TEST_CASE("load: path degrees") {
    Graph g = parse("0 1\n1 2\n");
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("load: comments, blanks and CRLF") {
    Graph g = parse("# header\n% other\n\n10 20\r\n20   30\n");
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.label(2) == "30");
}

TEST_CASE("load: self-loop only node survives with degree 0") {
    Graph g = parse("0 1\n7 7\n");
    CHECK(g.num_nodes() == 3);
    CHECK(g.degree(2) == 0);
}

TEST_CASE("load: malformed line reports its number") {
    try {
        parse("0 1\n1 2 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse("0 1\nlonely\n"), ParseError);
}

TEST_CASE("load: no edges is an error") {
    CHECK_THROWS_AS(parse(""), EmptyGraphError);
    CHECK_THROWS_AS(parse("# only comments\n"), EmptyGraphError);
}

TEST_CASE("load: strict options") {
    std::istringstream dup("0 1\n1 0\n");
    CHECK_THROWS_AS(load_edge_list(dup, {.dedupe = false}), ParseError);
    std::istringstream loop("0 1\n1 1\n");
    CHECK_THROWS_AS(load_edge_list(loop, {.drop_self_loops = false}), ParseError);
}

TEST_CASE("graph invariants hold") {
    Graph g = gnp(60, 0.2, 3);
    std::size_t sum = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        auto nb = g.neighbors(u);
        CHECK(std::adjacent_find(nb.begin(), nb.end(), std::greater_equal<>()) == nb.end());
        for (NodeId v : nb) {
            CHECK(v != u);
            CHECK(g.has_edge(v, u));
        }
        sum += nb.size();
    }
    CHECK(sum == 2 * g.num_edges());
}

TEST_CASE("round trip preserves the graph") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = gnp(80, 0.05, seed);
        std::ostringstream out;
        write_edge_list(g, out);
        Graph h = parse(out.str());
        CHECK(h.num_nodes() == g.num_nodes());
        CHECK(h.num_edges() == g.num_edges());
        CHECK(degree_multiset(h) == degree_multiset(g));
    }
}

TEST_CASE("writer output is sorted by internal id with labels") {
    Graph g = parse("x y\ny z\n");
    std::ostringstream out;
    write_edge_list(g, out);
    CHECK(out.str() == "x y\ny z\n");
}

TEST_CASE("neighborhood subgraph") {
    SUBCASE("K4 gives a triangle") {
        for (NodeId u = 0; u < 4; ++u) {
            Graph h = neighborhood_subgraph(complete(4), u);
            CHECK(h.num_nodes() == 3);
            CHECK(h.num_edges() == 3);
        }
    }
    SUBCASE("star center gives isolated nodes") {
        Graph h = neighborhood_subgraph(star(5), 0);
        CHECK(h.num_nodes() == 5);
        CHECK(h.num_edges() == 0);
    }
    SUBCASE("triangle gives one edge") {
        Graph h = neighborhood_subgraph(triangle(), 0);
        CHECK(h.num_nodes() == 2);
        CHECK(h.num_edges() == 1);
        CHECK(h.label(0) == "1");
    }
    SUBCASE("size equals degree") {
        Graph g = gnp(40, 0.3, 11);
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            CHECK(neighborhood_subgraph(g, u).num_nodes() == g.degree(u));
        }
    }
}

TEST_CASE("disjoint union") {
    Graph u = disjoint_union(triangle(), star(2));
    CHECK(u.num_nodes() == 6);
    CHECK(u.num_edges() == 5);
    CHECK(u.has_edge(3, 4));
    CHECK(!u.has_edge(2, 3));
    CHECK(u.label(3) == "b0");
}

TEST_CASE("degeneracy order") {
    CHECK(degeneracy_order(complete(4)).degeneracy == 3);

    auto p = degeneracy_order(path(3));
    CHECK(p.degeneracy == 1);
    CHECK(p.order[0] == 0);  // a leaf goes first; ties by smallest id

    Graph ring = ring_lattice(100, 5);
    auto r = degeneracy_order(ring);
    CHECK(r.degeneracy == peel_degeneracy(ring));
    CHECK(r.degeneracy <= 10);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gnp(50, 0.15, seed);
        auto o = degeneracy_order(g);
        CHECK(o.degeneracy == peel_degeneracy(g));
        CHECK(o.order == degeneracy_order(g).order);
        for (NodeId i = 0; i < g.num_nodes(); ++i) CHECK(o.position[o.order[i]] == i);
    }
}

TEST_CASE("other orderings are permutations") {
    Graph g = gnp(30, 0.2, 5);
    for (const auto& o : {degree_order(g), input_order(g)}) {
        std::vector<NodeId> sorted = o.order;
        std::sort(sorted.begin(), sorted.end());
        for (NodeId i = 0; i < g.num_nodes(); ++i) CHECK(sorted[i] == i);
    }
    auto d = degree_order(g);
    for (std::size_t i = 1; i < d.order.size(); ++i) {
        CHECK(g.degree(d.order[i - 1]) <= g.degree(d.order[i]));
    }
}
