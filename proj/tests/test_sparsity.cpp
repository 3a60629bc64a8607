#include <doctest.h>

#include "pcf/errors.hpp"
#include "pcf/gen.hpp"
#include "pcf/rational.hpp"
#include "pcf/sparsity.hpp"

using namespace pcf;

namespace {

// Independent oracle: maximum of 2e(S)/|S| by full subset enumeration.
Rational mad_oracle(const Graph& g) {
    auto verts = g.vertices();
    int n = static_cast<int>(verts.size());
    REQUIRE(n <= 20);
    Rational best(-1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(verts[i]);
        Rational d = induced_density(g, s);
        if (d > best) best = d;
    }
    return best;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(10, 3) > Rational(3));
    CHECK(Rational(18, 7) < Rational(10, 3));
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(7, 2) - Rational(3)) == Rational(1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational::parse("10/3") == Rational(10, 3));
    CHECK(Rational::parse("3") == Rational(3));
}

TEST_CASE("mad spot values") {
    CHECK(mad_exact(complete_graph(4)).density == Rational(3));
    CHECK(mad_exact(cycle_graph(5)).density == Rational(2));
    CHECK(mad_exact(named_graph("petersen")).density == Rational(3));

    // K4 plus a pendant vertex: the witness is the K4 itself.
    Graph g = Graph::parse("5 7\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n");
    auto w = mad_exact(g);
    CHECK(w.density == Rational(3));
    CHECK(w.subgraph_vertices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("mad matches the subset oracle on small random graphs") {
    Rng rng(4242);
    for (int it = 0; it < 60; ++it) {
        int n = rng.range(1, 12);
        Graph g = random_graph_nm(n, rng.range(0, n * (n - 1) / 2), rng);
        if (g.num_vertices() == 0) continue;
        auto w = mad_exact(g);
        CHECK(w.density == mad_oracle(g));
        CHECK(induced_density(g, w.subgraph_vertices) == w.density);
    }
}

TEST_CASE("parametric search agrees with the oracle above the fast path") {
    Rng rng(31337);
    for (int it = 0; it < 25; ++it) {
        int n = rng.range(13, 17);  // forces the max-flow route
        Graph g = random_graph_nm(n, rng.range(n, 3 * n), rng);
        auto w = mad_exact(g);
        CHECK(w.density == mad_oracle(g));
        CHECK(induced_density(g, w.subgraph_vertices) == w.density);
    }
}

TEST_CASE("mad on larger corpora stays exact") {
    // Subdivided dodecahedron: 80 vertices, every edge split once.
    Graph g = subdivide(named_graph("dodecahedron"), 1);
    auto w = mad_exact(g);
    CHECK(w.density == Rational(12, 5));  // the whole graph: 2*60/50
    CHECK(induced_density(g, w.subgraph_vertices) == w.density);

    Graph empty_edges(40);
    CHECK(mad_exact(empty_edges).density == Rational(0));
}

TEST_CASE("mad_below") {
    CHECK(mad_below(cycle_graph(5), Rational(18, 7)).below);
    CHECK(mad_below(complete_graph(4), Rational(10, 3)).below);  // 3 < 10/3
    auto res = mad_below(complete_graph(5), Rational(10, 3));
    CHECK_FALSE(res.below);
    CHECK(res.witness.density == Rational(4));
    CHECK_THROWS_AS(mad_exact(Graph(0)), PreconditionError);
}

TEST_CASE("degeneracy") {
    Rng rng(7);
    CHECK(degeneracy(random_tree(9, rng)).d == 1);
    CHECK(degeneracy(cycle_graph(5)).d == 2);
    CHECK(degeneracy(complete_graph(4)).d == 3);

    auto order = degeneracy(complete_graph(4)).elimination_order;
    CHECK(order.size() == 4);
}

TEST_CASE("sparsity implies degeneracy bounds") {
    // mad < 10/3 implies 3-degenerate; mad < 18/7 implies 2-degenerate.
    Rng rng(99);
    int checked10 = 0, checked18 = 0;
    for (int it = 0; it < 120; ++it) {
        int n = rng.range(2, 12);
        Graph g = random_graph_nm(n, rng.range(0, 2 * n), rng);
        if (g.num_vertices() == 0) continue;
        auto w = mad_exact(g);
        if (w.density < Rational(10, 3)) {
            CHECK(degeneracy(g).d <= 3);
            ++checked10;
        }
        if (w.density < Rational(18, 7)) {
            CHECK(degeneracy(g).d <= 2);
            ++checked18;
        }
    }
    CHECK(checked10 > 20);
    CHECK(checked18 > 10);
}

TEST_CASE("removing a vertex never increases mad") {
    Rng rng(1234);
    for (int it = 0; it < 30; ++it) {
        int n = rng.range(2, 11);
        Graph g = random_graph_nm(n, rng.range(1, n * (n - 1) / 2), rng);
        auto w = mad_exact(g);
        int v = g.vertices()[rng.below(g.num_vertices())];
        Graph h = g.delete_vertices({v});
        if (h.num_vertices() == 0) continue;
        CHECK(mad_exact(h).density <= w.density);
    }
}
