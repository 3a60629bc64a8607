#include <doctest.h>

#include <array>

#include "pcf/errors.hpp"
#include "pcf/exact.hpp"
#include "pcf/gen.hpp"
#include "pcf/graph.hpp"

using namespace pcf;

namespace {

ListAssignment uniform_lists(const Graph& g, std::vector<int> colors) {
    ListAssignment l(g.universe());
    for (int v : g.vertices()) l.set(v, colors);
    return l;
}

// Relabel graph and lists by a permutation; SAT/UNSAT must not change.
std::pair<Graph, ListAssignment> relabel(const Graph& g,
                                         const ListAssignment& l,
                                         const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (int v : g.vertices())
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(perm[v], perm[w]);
    Graph h = Graph::from_edges(g.universe(), edges);
    ListAssignment m(g.universe());
    for (int v : g.vertices()) m.set(perm[v], l.list(v));
    return {h, m};
}

}  // namespace

TEST_CASE("C5 with equal 4-lists is the unsatisfiable case") {
    Graph c5 = cycle_graph(5);
    CHECK_FALSE(solve_exact(c5, uniform_lists(c5, {1, 2, 3, 4})).has_value());
    CHECK(count_pcf(c5, uniform_lists(c5, {1, 2, 3, 4})) == 0);

    // Changing one list restores colorability.
    auto l = uniform_lists(c5, {1, 2, 3, 4});
    l.set(0, {1, 2, 3, 5});
    auto res = solve_exact(c5, l);
    REQUIRE(res.has_value());
    CHECK(verify_pcf(c5, l, *res).empty());

    CHECK(solve_exact(c5, uniform_lists(c5, {1, 2, 3, 4, 5})).has_value());
}

TEST_CASE("count examples") {
    Graph k2 = Graph::parse("2 1\n0 1\n");
    CHECK(count_pcf(k2, uniform_lists(k2, {1, 2})) == 2);

    Graph lone(1);
    CHECK(count_pcf(lone, uniform_lists(lone, {7})) == 1);

    Graph k2big = Graph::parse("2 1\n0 1\n");
    auto res = solve_exact(k2big, uniform_lists(k2big, {1, 2, 3}));
    REQUIRE(res.has_value());
    CHECK(res->color(0) != res->color(1));
}

TEST_CASE("solver cap") {
    Rng rng(3);
    Graph big = random_tree(17, rng);
    auto l = random_lists(big, 3, 12, 5);
    CHECK_THROWS_AS(solve_exact(big, l), PreconditionError);
    SolveOptions opt;
    opt.override_cap = true;
    CHECK(solve_exact(big, l, opt).has_value());
}

TEST_CASE("sat iff count positive, and witnesses verify") {
    Rng rng(1001);
    for (int it = 0; it < 40; ++it) {
        int n = rng.range(2, 7);
        Graph g = random_graph_nm(n, rng.range(0, n * (n - 1) / 2), rng);
        ListAssignment l(g.universe());
        for (int v : g.vertices())
            l.set(v, rng.subset(rng.range(2, 4), 5));
        auto res = solve_exact(g, l);
        auto cnt = count_pcf(g, l);
        CHECK(res.has_value() == (cnt > 0));
        if (res) CHECK(verify_pcf(g, l, *res).empty());
    }
}

TEST_CASE("verdicts stable under relabeling") {
    Rng rng(2024);
    for (int it = 0; it < 25; ++it) {
        int n = rng.range(3, 7);
        Graph g = random_connected(n, rng.range(0, 2), rng);
        ListAssignment l(g.universe());
        for (int v : g.vertices())
            l.set(v, rng.subset(rng.range(2, 4), 5));
        bool sat = solve_exact(g, l).has_value();
        auto cnt = count_pcf(g, l);

        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        rng.shuffle(perm);
        auto [h, m] = relabel(g, l, perm);
        CHECK(solve_exact(h, m).has_value() == sat);
        CHECK(count_pcf(h, m) == cnt);
    }
}

TEST_CASE("near-pcf coloring of C5") {
    std::array<std::vector<int>, 5> equal;
    equal.fill({1, 2, 3, 4});
    auto res = color_c5_near_pcf(equal);
    REQUIRE(res.deficient.has_value());  // zero deficiency is impossible
    for (int i = 0; i < 5; ++i) {
        CHECK(res.colors[i] != res.colors[(i + 1) % 5]);
        if (i != *res.deficient)
            CHECK(res.colors[(i + 4) % 5] != res.colors[(i + 1) % 5]);
    }

    // The deficient spot can be steered to any requested position.
    for (int want = 0; want < 5; ++want) {
        auto steered = color_c5_near_pcf(equal, {want});
        REQUIRE(steered.deficient.has_value());
        CHECK(*steered.deficient == want);
    }

    // Non-equal size-4 lists admit a fully conflict-free coloring.
    std::array<std::vector<int>, 5> mixed = equal;
    mixed[2] = {1, 2, 3, 5};
    CHECK_FALSE(color_c5_near_pcf(mixed).deficient.has_value());

    std::array<std::vector<int>, 5> five;
    five.fill({1, 2, 3, 4, 5});
    CHECK_FALSE(color_c5_near_pcf(five).deficient.has_value());
}
