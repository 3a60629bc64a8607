#include "pcf/gen.hpp"

#include <algorithm>
#include <set>

#include "pcf/errors.hpp"

namespace pcf {

std::uint64_t Rng::below(std::uint64_t n) {
    PCF_CHECK(n > 0, "Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

int Rng::range(int lo, int hi) {
    PCF_CHECK(lo <= hi, "bad Rng::range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::vector<int> Rng::subset(int k, int palette) {
    PCF_CHECK(k <= palette, "subset larger than palette");
    std::vector<int> pool(palette);
    for (int i = 0; i < palette; ++i) pool[i] = i + 1;
    for (int i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + below(palette - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph generalized_petersen(int n, int k) {
    PCF_CHECK(n >= 3 && k >= 1 && k < n, "bad generalized Petersen parameters");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);          // outer cycle
        g.add_edge(i, n + i);                // spoke
    }
    std::set<std::pair<int, int>> inner;
    for (int i = 0; i < n; ++i) {
        int a = n + i, b = n + (i + k) % n;
        auto e = std::minmax(a, b);
        if (inner.insert({e.first, e.second}).second) g.add_edge(a, b);
    }
    return g;
}

Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

Graph cycle_graph(int n) {
    PCF_CHECK(n >= 3, "cycle too short");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

namespace {

// K_{2,2,2}: 4-regular, planar, girth 3.  Antipodal pairs differ by 3.
Graph octahedron() {
    Graph g(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j - i != 3) g.add_edge(i, j);
    return g;
}

}  // namespace

Graph named_graph(const std::string& name) {
    if (name == "k4") return complete_graph(4);
    if (name == "octahedron") return octahedron();
    if (name == "prism3") return generalized_petersen(3, 1);
    if (name == "cube") return generalized_petersen(4, 1);
    if (name == "pentaprism") return generalized_petersen(5, 1);
    if (name == "hexprism") return generalized_petersen(6, 1);
    if (name == "dodecahedron") return generalized_petersen(10, 2);
    if (name == "petersen") return generalized_petersen(5, 2);
    if (name == "grid3x3") return grid_graph(3, 3);
    if (name == "grid3x4") return grid_graph(3, 4);
    if (name == "grid4x4") return grid_graph(4, 4);
    if (name == "c5") return cycle_graph(5);
    if (name == "c7") return cycle_graph(7);
    throw PreconditionError("unknown base graph: " + name);
}

std::vector<std::string> named_graph_list() {
    return {"k4",       "octahedron",   "prism3",   "cube",
            "pentaprism", "hexprism",   "dodecahedron", "petersen",
            "grid3x3",  "grid3x4",      "grid4x4",  "c5",
            "c7"};
}

namespace {

Graph subdivide_with(const Graph& g, const std::vector<int>& ts) {
    std::vector<std::pair<int, int>> edges;
    for (int v : g.vertices())
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(v, w);
    int extra = 0;
    for (int t : ts) extra += t;
    Graph out(g.universe() + extra);
    int next = g.universe();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int prev = edges[e].first;
        for (int i = 0; i < ts[e]; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, edges[e].second);
    }
    return out;
}

}  // namespace

Graph subdivide(const Graph& g, int t) {
    PCF_CHECK(t >= 0, "negative subdivision factor");
    std::vector<int> ts(g.num_edges(), t);
    return subdivide_with(g, ts);
}

Graph subdivide_mixed(const Graph& g, int tmin, int tmax, Rng& rng) {
    PCF_CHECK(0 <= tmin && tmin <= tmax, "bad subdivision range");
    std::vector<int> ts(g.num_edges());
    for (auto& t : ts) t = rng.range(tmin, tmax);
    return subdivide_with(g, ts);
}

Graph random_tree(int n, Rng& rng) {
    PCF_CHECK(n >= 1, "empty tree");
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng.below(v)));
    return g;
}

Graph random_connected(int n, int extra, Rng& rng) {
    Graph g = random_tree(n, rng);
    std::vector<std::pair<int, int>> free;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) free.emplace_back(u, v);
    rng.shuffle(free);
    for (int i = 0; i < extra && i < static_cast<int>(free.size()); ++i)
        g.add_edge(free[i].first, free[i].second);
    return g;
}

Graph random_graph_nm(int n, int m, Rng& rng) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    PCF_CHECK(m <= static_cast<int>(all.size()), "too many edges requested");
    rng.shuffle(all);
    all.resize(m);
    return Graph::from_edges(n, all);
}

Graph random_grid_subgraph(int rows, int cols, int keep, Rng& rng) {
    Graph grid = grid_graph(rows, cols);
    int total = rows * cols;
    PCF_CHECK(keep >= 1 && keep <= total, "bad grid subgraph size");
    // Random connected vertex subset grown from a random start.
    std::vector<int> chosen{rng.range(0, total - 1)};
    std::set<int> in(chosen.begin(), chosen.end());
    std::vector<int> frontier;
    auto refresh = [&]() {
        frontier.clear();
        for (int v : chosen)
            for (int w : grid.neighbors(v))
                if (!in.count(w)) frontier.push_back(w);
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()),
                       frontier.end());
    };
    while (static_cast<int>(chosen.size()) < keep) {
        refresh();
        PCF_CHECK(!frontier.empty(), "grid frontier exhausted");
        int v = frontier[rng.below(frontier.size())];
        chosen.push_back(v);
        in.insert(v);
    }
    // Compact to dense ids so corpora carry no absent slots.
    std::sort(chosen.begin(), chosen.end());
    std::vector<int> remap(total, -1);
    for (std::size_t i = 0; i < chosen.size(); ++i)
        remap[chosen[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : chosen)
        for (int w : grid.neighbors(v))
            if (v < w && in.count(w)) edges.emplace_back(remap[v], remap[w]);
    return Graph::from_edges(static_cast<int>(chosen.size()), edges);
}

ListAssignment random_lists(const Graph& g, int slack, int palette,
                            std::uint64_t seed) {
    int need = 0;
    for (int v : g.vertices()) need = std::max(need, g.degree(v) + slack);
    if (palette < need)
        throw PreconditionError("palette " + std::to_string(palette) +
                                " smaller than max degree + slack = " +
                                std::to_string(need));
    Rng rng(seed);
    ListAssignment l(g.universe());
    for (int v : g.vertices())
        l.set(v, rng.subset(g.degree(v) + slack, palette));
    return l;
}

}  // namespace pcf
