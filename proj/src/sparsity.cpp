#include "pcf/sparsity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

// Dinic max-flow on a small network; capacities are exact integers.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

    void add_edge(int from, int to, i64 cap) {
        edges_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(edges_.size()) - 1;
    }

    i64 run(int s, int t) {
        i64 flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            i64 f;
            while ((f = dfs(s, t, std::numeric_limits<i64>::max())) > 0)
                flow += f;
        }
        return flow;
    }

    // Source side of the min cut; valid after run().
    std::vector<char> source_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e >= 0; e = edges_[e].next) {
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = 1;
                    q.push(edges_[e].to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        int next;
        i64 cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e >= 0; e = edges_[e].next) {
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[v] + 1;
                    q.push(edges_[e].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    i64 dfs(int v, int t, i64 limit) {
        if (v == t) return limit;
        for (int& e = iter_[v]; e >= 0; e = edges_[e].next) {
            Edge& fwd = edges_[e];
            if (fwd.cap > 0 && level_[fwd.to] == level_[v] + 1) {
                i64 f = dfs(fwd.to, t, std::min(limit, fwd.cap));
                if (f > 0) {
                    fwd.cap -= f;
                    edges_[e ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<Edge> edges_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

struct Frac {
    i64 num;
    i64 den;
};

bool frac_le(const Frac& a, const Frac& b) {
    return (i128)a.num * b.den <= (i128)b.num * a.den;
}
bool frac_lt(const Frac& a, const Frac& b) {
    return (i128)a.num * b.den < (i128)b.num * a.den;
}

// Fraction with the smallest denominator in the half-open interval
// (lo, hi]: a Stern-Brocot descent.  Both bounds are nonnegative and the
// answer is known to exist with small denominator, so the walk is short.
Frac simplest_in(const Frac& lo, const Frac& hi) {
    Frac left{0, 1}, right{1, 0};
    while (true) {
        Frac med{left.num + right.num, left.den + right.den};
        if (frac_le(med, lo)) {
            left = med;
        } else if (frac_lt(hi, med)) {
            right = med;
        } else {
            return med;
        }
    }
}

// Feasibility test for the parametric search: is there a nonempty S with
// e(S)/|S| > p/q?  Classical bipartite edge/vertex network: cutting
// costs q per edge outside S plus p per vertex inside S, so
// maxflow < q*m iff some S has q*e(S) - p*|S| > 0.  Returns the witness
// vertex set on success.
std::optional<std::vector<int>> denser_than(
    const Graph& g, const std::vector<int>& verts,
    const std::vector<std::pair<int, int>>& edges, i64 p, i64 q) {
    int n = static_cast<int>(verts.size());
    int m = static_cast<int>(edges.size());
    std::vector<int> pos(g.universe(), -1);
    for (int i = 0; i < n; ++i) pos[verts[i]] = i;

    int source = 0, sink = 1 + m + n;
    MaxFlow net(m + n + 2);
    const i64 inf = std::numeric_limits<i64>::max() / 4;
    for (int e = 0; e < m; ++e) {
        net.add_edge(source, 1 + e, q);
        net.add_edge(1 + e, 1 + m + pos[edges[e].first], inf);
        net.add_edge(1 + e, 1 + m + pos[edges[e].second], inf);
    }
    for (int i = 0; i < n; ++i) net.add_edge(1 + m + i, sink, p);

    i64 flow = net.run(source, sink);
    if (flow >= (i64)m * q) return std::nullopt;
    auto side = net.source_side(source);
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (side[1 + m + i]) s.push_back(verts[i]);
    PCF_CHECK(!s.empty(), "empty witness from feasible density cut");
    return s;
}

DensityWitness brute_force_mad(const Graph& g) {
    auto verts = g.vertices();
    int n = static_cast<int>(verts.size());
    Rational best(-1);
    std::vector<int> best_set;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(verts[i]);
        Rational d = induced_density(g, s);
        if (d > best) {
            best = d;
            best_set = std::move(s);
        }
    }
    return {best_set, best};
}

}  // namespace

Rational induced_density(const Graph& g, const std::vector<int>& s) {
    PCF_CHECK(!s.empty(), "density of empty set");
    std::vector<char> in(g.universe(), 0);
    for (int v : s) in[v] = 1;
    i64 edges = 0;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && in[w]) ++edges;
    return Rational(2 * edges, static_cast<i64>(s.size()));
}

DensityWitness mad_exact(const Graph& g) {
    if (g.num_vertices() == 0)
        throw PreconditionError("mad of an empty graph");
    if (g.num_vertices() <= 12) return brute_force_mad(g);

    auto verts = g.vertices();
    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(v, w);
    i64 n = static_cast<i64>(verts.size());
    i64 m = static_cast<i64>(edges.size());
    if (m == 0) return {{verts.front()}, Rational(0)};

    // Bisect on rho = e(S)/|S|.  Candidate values are fractions with
    // denominator <= n, so once hi - lo <= 1/n^2 the half-open interval
    // (lo, hi] holds exactly one candidate: the maximum, recovered by the
    // Stern-Brocot walk.  Invariant: some S beats lo; nothing beats hi.
    // Both bounds share the denominator den, doubled per step.
    i64 lo = 0, hi = m, den = 1;
    std::vector<int> witness;
    while ((i128)(hi - lo) * n * n > den) {
        i64 mid = lo + hi;  // over 2*den
        if (auto s = denser_than(g, verts, edges, mid, 2 * den)) {
            lo = mid;
            hi *= 2;
            witness = std::move(*s);
        } else {
            hi = mid;
            lo *= 2;
        }
        den *= 2;
    }
    Frac rho = simplest_in(Frac{lo, den}, Frac{hi, den});
    PCF_CHECK(!witness.empty(), "density search found no feasible test");
    std::sort(witness.begin(), witness.end());
    Rational mad = Rational(2 * rho.num, rho.den);
    PCF_CHECK(induced_density(g, witness) == mad,
              "density witness disagrees with bisection result");
    return {witness, mad};
}

MadBelow mad_below(const Graph& g, const Rational& bound) {
    PCF_CHECK(bound > Rational(0), "nonpositive density bound");
    auto w = mad_exact(g);
    MadBelow out;
    out.below = w.density < bound;
    if (!out.below) out.witness = w;
    return out;
}

Degeneracy degeneracy(const Graph& g) {
    Degeneracy out;
    std::vector<int> deg(g.universe(), -1);
    int maxdeg = 0;
    for (int v : g.vertices()) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<std::vector<int>> bucket(maxdeg + 1);
    for (int v : g.vertices()) bucket[deg[v]].push_back(v);
    std::vector<char> removed(g.universe(), 1);
    for (int v : g.vertices()) removed[v] = 0;

    int remaining = g.num_vertices();
    int cur = 0;
    while (remaining > 0) {
        while (cur > 0 && !bucket[cur - 1].empty()) --cur;
        while (cur <= maxdeg && bucket[cur].empty()) ++cur;
        int v = bucket[cur].back();
        bucket[cur].pop_back();
        if (removed[v] || deg[v] != cur) continue;  // stale entry
        removed[v] = 1;
        --remaining;
        out.d = std::max(out.d, cur);
        out.elimination_order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            bucket[--deg[w]].push_back(w);
        }
    }
    return out;
}

}  // namespace pcf
