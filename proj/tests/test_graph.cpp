#include <doctest.h>

#include <algorithm>
#include <set>

#include "pcf/errors.hpp"
#include "pcf/gen.hpp"
#include "pcf/graph.hpp"

using namespace pcf;

TEST_CASE("parse basic graphs") {
    Graph k2 = Graph::parse("2 1\n0 1\n");
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.num_edges() == 1);
    CHECK(k2.adjacent(0, 1));

    Graph c5 = Graph::parse("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(c5.num_edges() == 5);
    for (int v : c5.vertices()) CHECK(c5.degree(v) == 2);

    Graph k4 = Graph::parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    for (int v : k4.vertices()) CHECK(k4.degree(v) == 3);
}

TEST_CASE("parse rejects each malformed input distinctly") {
    auto code_of = [](const std::string& text) {
        try {
            Graph::parse(text);
        } catch (const ParseError& e) {
            return e.code();
        }
        FAIL("expected a parse error");
        return ParseError::Code::MalformedLine;
    };
    CHECK(code_of("2 1\n0 x\n") == ParseError::Code::MalformedLine);
    CHECK(code_of("2 1\n0 5\n") == ParseError::Code::OutOfRangeId);
    CHECK(code_of("2 1\n1 1\n") == ParseError::Code::SelfLoop);
    CHECK(code_of("2 2\n0 1\n1 0\n") == ParseError::Code::DuplicateEdge);
    CHECK(code_of("2 3\n0 1\n") == ParseError::Code::MalformedLine);
}

TEST_CASE("writer round-trips and sorts edges") {
    Graph g = Graph::parse("4 3\n2 3\n0 3\n0 1\n");
    CHECK(g.write() == "4 3\n0 1\n0 3\n2 3\n");
    Graph again = Graph::parse(g.write());
    CHECK(again.write() == g.write());
}

TEST_CASE("delete_vertices keeps ids stable") {
    Graph c5 = cycle_graph(5);
    Graph p4 = c5.delete_vertices({0});
    CHECK(p4.num_vertices() == 4);
    CHECK(p4.num_edges() == 3);
    CHECK_FALSE(p4.has_vertex(0));
    CHECK(p4.degree(1) == 1);
    CHECK(p4.degree(2) == 2);
    CHECK_THROWS_AS(p4.degree(0), UnknownVertexError);
    CHECK_THROWS_AS(c5.delete_vertices({9}), UnknownVertexError);

    Graph k4 = complete_graph(4);
    Graph k2 = k4.delete_vertices({1, 2});
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.num_edges() == 1);
    CHECK(k2.adjacent(0, 3));

    // P4 minus the interior leaves two isolated vertices.
    Graph p4b = Graph::parse("4 3\n0 1\n1 2\n2 3\n");
    Graph iso = p4b.delete_vertices({1, 2});
    CHECK(iso.num_vertices() == 2);
    CHECK(iso.num_edges() == 0);
}

TEST_CASE("handshake and deletion degree consistency on random graphs") {
    Rng rng(77);
    for (int it = 0; it < 50; ++it) {
        int n = rng.range(2, 14);
        int max_m = n * (n - 1) / 2;
        Graph g = random_graph_nm(n, rng.range(0, max_m), rng);
        int sum = 0;
        for (int v : g.vertices()) sum += g.degree(v);
        CHECK(sum == 2 * g.num_edges());

        std::vector<int> drop;
        for (int v : g.vertices())
            if (rng.below(3) == 0) drop.push_back(v);
        Graph h = g.delete_vertices(drop);
        std::set<int> dropped(drop.begin(), drop.end());
        for (int v : h.vertices()) {
            int expect = 0;
            for (int w : g.neighbors(v))
                if (!dropped.count(w)) ++expect;
            CHECK(h.degree(v) == expect);
        }
    }
}

TEST_CASE("maximal threads on paths, cycles and cliques") {
    // P6: one thread of the four interior vertices.
    Graph p6 = Graph::parse("6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    auto ts = maximal_threads(p6);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].path == std::vector<int>{1, 2, 3, 4});
    CHECK(ts[0].attach_front == 0);
    CHECK(ts[0].attach_back == 5);

    // C5 plus a pendant edge at vertex 0: thread 1 2 3 4, both ends at 0.
    Graph c5p = Graph::parse("6 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n");
    ts = maximal_threads(c5p);
    REQUIRE(ts.size() == 1);  // the pendant neighbor 5 is not degree 2
    CHECK(ts[0].path == std::vector<int>{1, 2, 3, 4});
    CHECK(ts[0].attach_front == 0);
    CHECK(ts[0].attach_back == 0);

    CHECK(maximal_threads(complete_graph(4)).empty());
    // A pure cycle is not reported as a thread.
    CHECK(maximal_threads(cycle_graph(6)).empty());
}

TEST_CASE("threads partition the degree-2 vertices") {
    Rng rng(5150);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_connected(rng.range(3, 18), rng.range(0, 3), rng);
        auto ts = maximal_threads(g);
        std::set<int> seen;
        for (const auto& t : ts) {
            for (int v : t.path) {
                CHECK(g.degree(v) == 2);
                CHECK_FALSE(seen.count(v));
                seen.insert(v);
            }
            REQUIRE(t.attach_front >= 0);
            REQUIRE(t.attach_back >= 0);
            CHECK(g.adjacent(t.attach_front, t.path.front()));
            CHECK(g.adjacent(t.attach_back, t.path.back()));
        }
        // every degree-2 vertex outside a full cycle component is covered
        for (const auto& comp : g.components()) {
            bool cycle = cycle_order(g, comp).has_value();
            for (int v : comp)
                if (g.degree(v) == 2 && !cycle) CHECK(seen.count(v));
        }
    }
}

TEST_CASE("girth") {
    CHECK(complete_graph(4).girth() == 3);
    CHECK(cycle_graph(5).girth() == 5);
    Rng rng(9);
    CHECK_FALSE(random_tree(12, rng).girth().has_value());
    CHECK(generalized_petersen(10, 2).girth() == 5);  // dodecahedron
    CHECK(subdivide(complete_graph(4), 1).girth() == 6);
    CHECK(subdivide(complete_graph(4), 2).girth() == 9);
    CHECK_FALSE(subdivide(random_tree(8, rng), 3).girth().has_value());
}

TEST_CASE("component classification") {
    Graph c5 = cycle_graph(5);
    auto comp = classify_component(c5, c5.vertices());
    CHECK(comp.is_c5());
    CHECK(comp.is_cycle());

    // K_{2,3}
    Graph k23 = Graph::parse("5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    comp = classify_component(k23, k23.vertices());
    CHECK(comp.is_k2r());
    CHECK(comp.k2r_r == 3);

    // Two adjacent hubs plus two length-2 paths: theta (2, 0, 0).
    Graph th = Graph::parse("4 5\n0 1\n0 2\n1 2\n0 3\n1 3\n");
    comp = classify_component(th, th.vertices());
    CHECK(comp.is_theta());
    CHECK(comp.theta.r == 2);
    CHECK(comp.theta.s == 0);
    CHECK(comp.theta.t == 0);

    // K_{2,1} is also P3; precedence classifies it as K_{2,r}.
    Graph p3 = Graph::parse("3 2\n0 2\n1 2\n");
    comp = classify_component(p3, p3.vertices());
    CHECK(comp.is_k2r());
    CHECK(comp.k2r_r == 1);

    Graph c7 = cycle_graph(7);
    comp = classify_component(c7, c7.vertices());
    CHECK(comp.is_cycle());
    CHECK_FALSE(comp.is_c5());

    comp = classify_component(complete_graph(4),
                              complete_graph(4).vertices());
    CHECK_FALSE(comp.is_cycle());
    CHECK_FALSE(comp.is_k2r());
    CHECK_FALSE(comp.is_theta());

    // Theta with a length-3 and a length-4 path: (0, 1, 1).
    Graph t2 = Graph::parse("7 8\n0 1\n0 2\n2 3\n3 1\n0 4\n4 5\n5 6\n6 1\n");
    comp = classify_component(t2, t2.vertices());
    CHECK(comp.is_theta());
    CHECK(comp.theta.r == 0);
    CHECK(comp.theta.s == 1);
    CHECK(comp.theta.t == 1);
}

TEST_CASE("components") {
    Graph g = Graph::parse("6 4\n0 1\n1 2\n3 4\n4 5\n");
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4, 5});
}
