#include <doctest.h>

#include "pcf/coloring.hpp"
#include "pcf/errors.hpp"
#include "pcf/gen.hpp"
#include "pcf/graph.hpp"

using namespace pcf;

namespace {

Coloring make_coloring(const std::vector<int>& colors) {
    Coloring phi(static_cast<int>(colors.size()));
    for (std::size_t v = 0; v < colors.size(); ++v)
        phi.set(static_cast<int>(v), colors[v]);
    return phi;
}

ListAssignment uniform_lists(const Graph& g, std::vector<int> colors) {
    ListAssignment l(g.universe());
    for (int v : g.vertices()) l.set(v, colors);
    return l;
}

}  // namespace

TEST_CASE("unique_colors on the C5 example") {
    Graph c5 = cycle_graph(5);
    Coloring phi = make_coloring({1, 2, 1, 2, 3});
    CHECK(unique_colors(c5, phi, 2).empty());           // neighbors 2, 2
    CHECK(unique_colors(c5, phi, 0) == std::vector<int>{2, 3});

    // Star K_{1,3}: center 0, leaves colored 1, 1, 2.
    Graph star = Graph::parse("4 3\n0 1\n0 2\n0 3\n");
    Coloring leaf = make_coloring({9, 1, 1, 2});
    CHECK(unique_colors(star, leaf, 0) == std::vector<int>{2});

    // Uncolored neighbors are ignored.
    Coloring partial(5);
    partial.set(1, 4);
    CHECK(unique_colors(c5, partial, 0) == std::vector<int>{4});
    CHECK_THROWS_AS(unique_colors(c5, phi, 77), UnknownVertexError);
}

TEST_CASE("verify_pcf flags each violation type") {
    Graph c5 = cycle_graph(5);
    auto lists = uniform_lists(c5, {1, 2, 3, 4, 5});

    auto rep = verify_pcf(c5, lists, make_coloring({1, 2, 1, 2, 3}));
    CHECK(rep.proper_violations.empty());
    CHECK(rep.conflict_violations == std::vector<int>{2});

    rep = verify_pcf(c5, lists, make_coloring({1, 2, 3, 1, 2}));
    CHECK(rep.conflict_violations == std::vector<int>{0});

    Graph k2 = Graph::parse("2 1\n0 1\n");
    rep = verify_pcf(k2, uniform_lists(k2, {1, 2, 3}),
                     make_coloring({1, 1}));
    REQUIRE(rep.proper_violations.size() == 1);
    CHECK(rep.proper_violations[0] == std::pair<int, int>{0, 1});

    rep = verify_pcf(k2, uniform_lists(k2, {1, 2, 3}), make_coloring({1, 9}));
    CHECK(rep.list_violations == std::vector<int>{1});

    // Isolated vertices are exempt from the conflict condition.
    Graph lone(1);
    rep = verify_pcf(lone, uniform_lists(lone, {7}), make_coloring({7}));
    CHECK(rep.empty());

    Coloring partial(5);
    partial.set(0, 1);
    CHECK_THROWS_AS(verify_pcf(c5, lists, partial), PreconditionError);
}

TEST_CASE("unique colors recount property") {
    Rng rng(52);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_connected(rng.range(2, 12), rng.range(0, 3), rng);
        Coloring phi(g.universe());
        for (int v : g.vertices()) phi.set(v, rng.range(1, 5));
        for (int v : g.vertices()) {
            for (int c : unique_colors(g, phi, v)) {
                int count = 0;
                bool seen_on_neighbor = false;
                for (int w : g.neighbors(v))
                    if (phi.color(w) == c) {
                        ++count;
                        seen_on_neighbor = true;
                    }
                CHECK(count == 1);
                CHECK(seen_on_neighbor);
            }
        }
    }
}

TEST_CASE("validate_slack") {
    Graph c5 = cycle_graph(5);
    CHECK(validate_slack(c5, uniform_lists(c5, {1, 2, 3, 4}), 2).ok);

    Graph k2 = Graph::parse("2 1\n0 1\n");
    auto rep = validate_slack(k2, uniform_lists(k2, {1, 2}), 2);
    CHECK_FALSE(rep.ok);
    CHECK(rep.deficient == std::vector<int>{0, 1});

    Graph lone(1);
    CHECK(validate_slack(lone, uniform_lists(lone, {1}), 0).ok);
}

TEST_CASE("list and coloring file formats") {
    auto l = ListAssignment::parse("0: 3 1 2\n2: 5 5 7\n");
    CHECK(l.list(0) == std::vector<int>{1, 2, 3});
    CHECK(l.list(2) == std::vector<int>{5, 7});
    CHECK_FALSE(l.has(1));
    CHECK(l.write() == "0: 1 2 3\n2: 5 7\n");
    CHECK(ListAssignment::parse(l.write()).write() == l.write());

    CHECK_THROWS_AS(ListAssignment::parse("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(ListAssignment::parse("0:\n"), ParseError);
    CHECK_THROWS_AS(ListAssignment::parse("0: 1\n0: 2\n"), ParseError);

    auto phi = Coloring::parse("0 4\n3 1\n");
    CHECK(phi.color(0) == 4);
    CHECK(phi.color(3) == 1);
    CHECK_FALSE(phi.is_colored(1));
    CHECK(Coloring::parse(phi.write()).write() == phi.write());
    CHECK_THROWS_AS(Coloring::parse("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(Coloring::parse("0 1\n0 2\n"), ParseError);
}

TEST_CASE("random list assignments respect slack and palette") {
    Rng rng(8);
    Graph g = random_connected(9, 2, rng);
    auto l = random_lists(g, 2, 9, 333);
    for (int v : g.vertices()) {
        CHECK(static_cast<int>(l.list(v).size()) == g.degree(v) + 2);
        for (int c : l.list(v)) {
            CHECK(c >= 1);
            CHECK(c <= 9);
        }
    }
    // Same seed, same lists; different seed, different lists somewhere.
    CHECK(random_lists(g, 2, 9, 333).write() == l.write());
    CHECK(random_lists(g, 2, 9, 334).write() != l.write());

    // Forced lists: palette equals degree + slack everywhere on C5.
    auto forced = random_lists(cycle_graph(5), 2, 4, 1);
    for (int v = 0; v < 5; ++v)
        CHECK(forced.list(v) == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(random_lists(cycle_graph(5), 2, 3, 1), PreconditionError);
}
