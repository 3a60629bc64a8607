#include "pcf/exact.hpp"

#include <algorithm>
#include <map>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

struct Searcher {
    const Graph& g;
    const ListAssignment& l;
    std::vector<int> order;        // vertices, descending degree
    std::vector<int> rank;         // position in order, by vertex id
    Coloring phi;
    std::uint64_t count = 0;
    bool stop_at_first = false;
    std::optional<Coloring> found;

    Searcher(const Graph& g_, const ListAssignment& l_)
        : g(g_), l(l_), phi(g_.universe()) {
        order = g.vertices();
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
        rank.assign(g.universe(), -1);
        for (int i = 0; i < static_cast<int>(order.size()); ++i)
            rank[order[i]] = i;
    }

    // All neighbors of w colored so far?  (True once every neighbor has
    // rank <= the current depth; we just test the coloring directly.)
    bool neighborhood_done(int w) const {
        for (int x : g.neighbors(w))
            if (!phi.is_colored(x)) return false;
        return true;
    }

    bool conflict_ok_if_done(int w) {
        if (g.degree(w) == 0) return true;
        if (!neighborhood_done(w)) return true;
        return !unique_colors(g, phi, w).empty();
    }

    void dfs(std::size_t depth) {
        if (stop_at_first && found) return;
        if (depth == order.size()) {
            ++count;
            if (stop_at_first) found = phi;
            return;
        }
        int v = order[depth];
        for (int c : l.list(v)) {
            bool proper = true;
            for (int w : g.neighbors(v)) {
                if (phi.is_colored(w) && phi.color(w) == c) {
                    proper = false;
                    break;
                }
            }
            if (!proper) continue;
            phi.set(v, c);
            // Coloring v may complete the neighborhood of v's neighbors
            // (or of v itself); those conflict checks are now final.
            bool ok = conflict_ok_if_done(v);
            if (ok) {
                for (int w : g.neighbors(v)) {
                    if (!conflict_ok_if_done(w)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) dfs(depth + 1);
            phi.unset(v);
            if (stop_at_first && found) return;
        }
    }
};

void check_cap(const Graph& g, const ListAssignment& l,
               const SolveOptions& opt) {
    if (!opt.override_cap && g.num_vertices() > opt.cap)
        throw PreconditionError("exact solver cap exceeded: " +
                                std::to_string(g.num_vertices()) + " > " +
                                std::to_string(opt.cap));
    for (int v : g.vertices())
        if (!l.has(v)) throw PreconditionError("missing list for vertex " +
                                               std::to_string(v));
}

}  // namespace

std::optional<Coloring> solve_exact(const Graph& g, const ListAssignment& l,
                                    const SolveOptions& opt) {
    check_cap(g, l, opt);
    Searcher s(g, l);
    s.stop_at_first = true;
    s.dfs(0);
    return s.found;
}

std::uint64_t count_pcf(const Graph& g, const ListAssignment& l,
                        const SolveOptions& opt) {
    check_cap(g, l, opt);
    Searcher s(g, l);
    s.dfs(0);
    return s.count;
}

NearPcfC5 color_c5_near_pcf(const std::array<std::vector<int>, 5>& lists,
                            const std::vector<int>& prefer_deficient) {
    for (const auto& lv : lists)
        PCF_CHECK(lv.size() >= 3, "c5 lists must have at least 3 colors");

    auto deficient_at = [](const std::array<int, 5>& c, int i) {
        // Two cycle neighbors: a unique color exists iff they differ.
        return c[(i + 4) % 5] == c[(i + 1) % 5];
    };

    std::optional<NearPcfC5> best;
    int best_score = 6;
    std::array<int, 5> cur{};
    auto consider = [&]() {
        std::optional<int> bad;
        int bads = 0;
        for (int i = 0; i < 5; ++i) {
            if (deficient_at(cur, i)) {
                ++bads;
                bad = i;
            }
        }
        if (bads > 1) return;
        // Score: zero-deficiency first, then a preferred deficient spot.
        int score = bads == 0 ? 0
                    : (std::find(prefer_deficient.begin(),
                                 prefer_deficient.end(),
                                 *bad) != prefer_deficient.end()
                           ? 1
                           : 2);
        if (score < best_score) {
            best_score = score;
            best = NearPcfC5{cur, bad};
        }
    };

    // Exhaustive proper colorings of the cycle.
    auto rec = [&](auto&& self, int i) -> void {
        if (best_score == 0) return;
        if (i == 5) {
            if (cur[4] != cur[0]) consider();
            return;
        }
        for (int c : lists[i]) {
            if (i > 0 && c == cur[i - 1]) continue;
            cur[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    PCF_CHECK(best.has_value(), "no proper coloring of C5 found");
    return *best;
}

}  // namespace pcf
