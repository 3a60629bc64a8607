#include "pcf/reduce_d2.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pcf/errors.hpp"
#include "pcf/exact.hpp"
#include "pcf/rational.hpp"
#include "pcf/sparsity.hpp"
#include "pick.hpp"

namespace pcf {

using detail::contains;
using detail::filtered;
using detail::keep_smallest;
using detail::pick_min;
using detail::pick_unique;

namespace {

int other_neighbor(const Graph& g, int v, int excluded) {
    for (int w : g.neighbors(v))
        if (w != excluded) return w;
    throw InternalError("vertex " + std::to_string(v) +
                        " has no neighbor besides " + std::to_string(excluded));
}

// Number of degree-2 vertices on the path leaving `from` through its
// neighbor `n`, capped at `cap`; a walk that returns to `from` stops.
int thread_run(const Graph& g, int from, int n, int cap = 4) {
    int len = 0;
    int prev = from, cur = n;
    while (len < cap && cur != from && g.degree(cur) == 2) {
        ++len;
        int next = other_neighbor(g, cur, prev);
        prev = cur;
        cur = next;
    }
    return len;
}

int step(const Graph& g, int prev, int cur) {
    return other_neighbor(g, cur, prev);
}

}  // namespace

std::vector<int> ConfigD2::deletable() const {
    switch (kind) {
        case Kind::Pendant1Vertex:
            return {u0};
        case Kind::ThreeVertexWith2Thread:
            return us;  // the two thread vertices
        case Kind::FourThread:
            return us;
        case Kind::PendantCycle:
            return cyc;
        case Kind::AllDeg2Neighbors: {
            std::vector<int> out{u0};
            out.insert(out.end(), us.begin(), us.end());
            return out;
        }
        case Kind::TooMany3Threads: {
            std::vector<int> out{u0};
            int m = static_cast<int>(vs.size());
            out.insert(out.end(), us.begin(), us.begin() + m);
            out.insert(out.end(), vs.begin(), vs.end());
            out.insert(out.end(), ws.begin(), ws.end());
            return out;
        }
        case Kind::Deg2Heavy3Threads: {
            int m = static_cast<int>(ws.size());
            std::vector<int> out{u0, us[m], us[m + 1]};
            out.insert(out.end(), us.begin(), us.begin() + m);
            out.insert(out.end(), vs.begin(), vs.begin() + m);
            out.insert(out.end(), ws.begin(), ws.end());
            return out;
        }
        case Kind::Bad3VertexNeighbors:
            return {u0, us[0], us[1]};
        case Kind::TooMany2Threads: {
            std::vector<int> out{u0};
            out.insert(out.end(), us.begin(), us.end() - 1);
            out.insert(out.end(), vs.begin(), vs.end());
            return out;
        }
        case Kind::FourVertex2ThreadNeighbor:
            return {u0, us[0], us[1], us[2], vs[0], vs[1]};
    }
    return {};
}

std::string ConfigD2::name() const {
    switch (kind) {
        case Kind::Pendant1Vertex: return "Pendant1Vertex";
        case Kind::ThreeVertexWith2Thread: return "ThreeVertexWith2Thread";
        case Kind::FourThread: return "FourThread";
        case Kind::PendantCycle: return "PendantCycle";
        case Kind::AllDeg2Neighbors: return "AllDeg2Neighbors";
        case Kind::TooMany3Threads: return "TooMany3Threads";
        case Kind::Deg2Heavy3Threads: return "Deg2Heavy3Threads";
        case Kind::Bad3VertexNeighbors: return "Bad3VertexNeighbors";
        case Kind::TooMany2Threads: return "TooMany2Threads";
        case Kind::FourVertex2ThreadNeighbor:
            return "FourVertex2ThreadNeighbor";
    }
    return "?";
}

std::optional<ConfigD2> find_config_d2(const Graph& g) {
    auto verts = g.vertices();

    // Pendant1Vertex
    for (int v : verts) {
        if (g.degree(v) <= 1) {
            ConfigD2 cfg;
            cfg.kind = ConfigD2::Kind::Pendant1Vertex;
            cfg.u0 = v;
            return cfg;
        }
    }

    // ThreeVertexWith2Thread
    for (int u : verts) {
        if (g.degree(u) != 3) continue;
        for (int n : g.neighbors(u)) {
            if (thread_run(g, u, n) >= 2) {
                int v2 = step(g, u, n);
                ConfigD2 cfg;
                cfg.kind = ConfigD2::Kind::ThreeVertexWith2Thread;
                cfg.u0 = u;
                cfg.us = {n, v2};
                cfg.xs = {other_neighbor(g, v2, n)};
                return cfg;
            }
        }
    }

    // FourThread
    for (const auto& t : maximal_threads(g)) {
        if (t.length() < 4) continue;
        ConfigD2 cfg;
        cfg.kind = ConfigD2::Kind::FourThread;
        cfg.u0 = t.path[0];
        cfg.us = {t.path[0], t.path[1], t.path[2], t.path[3]};
        cfg.xs = {t.attach_front,
                  t.length() > 4 ? t.path[4] : t.attach_back};
        return cfg;
    }

    // PendantCycle (after FourThread, so the cycle has length 3 or 4)
    for (const auto& t : maximal_threads(g)) {
        if (t.attach_front != t.attach_back) continue;
        PCF_CHECK(t.length() >= 2 && t.length() <= 3,
                  "pendant cycle thread of unexpected length");
        ConfigD2 cfg;
        cfg.kind = ConfigD2::Kind::PendantCycle;
        cfg.u0 = t.attach_front;
        cfg.cyc = t.path;
        return cfg;
    }

    // AllDeg2Neighbors, minimizing the anchor degree as the proof does.
    {
        int best = -1, best_k = 0;
        for (int u : verts) {
            int k = g.degree(u);
            if (k < 3) continue;
            bool all2 = true;
            for (int w : g.neighbors(u))
                if (g.degree(w) != 2) {
                    all2 = false;
                    break;
                }
            if (all2 && (best < 0 || k < best_k)) {
                best = u;
                best_k = k;
            }
        }
        if (best >= 0) {
            ConfigD2 cfg;
            cfg.kind = ConfigD2::Kind::AllDeg2Neighbors;
            cfg.u0 = best;
            cfg.us = g.neighbors(best);
            for (int w : cfg.us)
                cfg.vs.push_back(other_neighbor(g, w, best));
            return cfg;
        }
    }

    // TooMany3Threads, minimal degree first.
    {
        int best = -1, best_k = 0;
        for (int u : verts) {
            int k = g.degree(u);
            if (k < 4) continue;
            int count = 0;
            for (int n : g.neighbors(u))
                if (thread_run(g, u, n, 3) >= 3) ++count;
            if (count >= k - 2 && (best < 0 || k < best_k)) {
                best = u;
                best_k = k;
            }
        }
        if (best >= 0) {
            ConfigD2 cfg;
            cfg.kind = ConfigD2::Kind::TooMany3Threads;
            cfg.u0 = best;
            std::vector<int> threaded, rest;
            for (int n : g.neighbors(best))
                (thread_run(g, best, n, 3) >= 3 ? threaded : rest).push_back(n);
            while (static_cast<int>(threaded.size()) > best_k - 2) {
                rest.push_back(threaded.back());
                threaded.pop_back();
            }
            std::sort(rest.begin(), rest.end());
            for (int n : threaded) {
                int v = step(g, best, n);
                int w = step(g, n, v);
                cfg.us.push_back(n);
                cfg.vs.push_back(v);
                cfg.ws.push_back(w);
                cfg.xs.push_back(step(g, v, w));
            }
            cfg.us.insert(cfg.us.end(), rest.begin(), rest.end());
            return cfg;
        }
    }

    // Deg2Heavy3Threads, minimal degree first.
    {
        int best = -1, best_k = 0;
        for (int u : verts) {
            int k = g.degree(u);
            if (k < 4) continue;
            std::vector<int> twos;
            for (int w : g.neighbors(u))
                if (g.degree(w) == 2) twos.push_back(w);
            if (static_cast<int>(twos.size()) != k - 1) continue;
            int threaded = 0;
            for (int n : twos)
                if (thread_run(g, u, n, 3) >= 3) ++threaded;
            if (threaded >= k - 3 && (best < 0 || k < best_k)) {
                best = u;
                best_k = k;
            }
        }
        if (best >= 0) {
            ConfigD2 cfg;
            cfg.kind = ConfigD2::Kind::Deg2Heavy3Threads;
            cfg.u0 = best;
            std::vector<int> threaded, plain, high;
            for (int n : g.neighbors(best)) {
                if (g.degree(n) != 2)
                    high.push_back(n);
                else if (thread_run(g, best, n, 3) >= 3)
                    threaded.push_back(n);
                else
                    plain.push_back(n);
            }
            while (static_cast<int>(threaded.size()) > best_k - 3) {
                plain.push_back(threaded.back());
                threaded.pop_back();
            }
            std::sort(plain.begin(), plain.end());
            PCF_CHECK(high.size() == 1 && plain.size() == 2,
                      "Deg2Heavy3Threads neighbor split mismatch");
            for (int n : threaded) {
                int v = step(g, best, n);
                int w = step(g, n, v);
                cfg.us.push_back(n);
                cfg.vs.push_back(v);
                cfg.ws.push_back(w);
                cfg.xs.push_back(step(g, v, w));
            }
            for (int n : plain) {
                cfg.us.push_back(n);
                cfg.vs.push_back(other_neighbor(g, n, best));
            }
            cfg.us.push_back(high[0]);
            return cfg;
        }
    }

    // Bad3VertexNeighbors
    for (int u : verts) {
        if (g.degree(u) != 3) continue;
        std::vector<int> twos, high;
        for (int w : g.neighbors(u))
            (g.degree(w) == 2 ? twos : high).push_back(w);
        if (twos.size() != 2 || high.size() != 1) continue;
        for (int first : {0, 1}) {
            int u1 = twos[first];
            int v1 = other_neighbor(g, u1, u);
            if (g.degree(v1) != 3) continue;
            int u2 = twos[1 - first];
            ConfigD2 cfg;
            cfg.kind = ConfigD2::Kind::Bad3VertexNeighbors;
            cfg.u0 = u;
            cfg.us = {u1, u2};
            cfg.vs = {v1, other_neighbor(g, u2, u)};
            cfg.xs = {high[0]};
            return cfg;
        }
    }

    // TooMany2Threads, minimal degree first.
    {
        int best = -1, best_k = 0;
        for (int u : verts) {
            int k = g.degree(u);
            if (k != 4 && k != 5) continue;
            int count = 0;
            for (int n : g.neighbors(u))
                if (thread_run(g, u, n, 2) >= 2) ++count;
            if (count >= k - 1 && (best < 0 || k < best_k)) {
                best = u;
                best_k = k;
            }
        }
        if (best >= 0) {
            ConfigD2 cfg;
            cfg.kind = ConfigD2::Kind::TooMany2Threads;
            cfg.u0 = best;
            std::vector<int> threaded, rest;
            for (int n : g.neighbors(best))
                (thread_run(g, best, n, 2) >= 2 ? threaded : rest).push_back(n);
            while (static_cast<int>(threaded.size()) > best_k - 1) {
                rest.push_back(threaded.back());
                threaded.pop_back();
            }
            std::sort(rest.begin(), rest.end());
            PCF_CHECK(rest.size() == 1, "TooMany2Threads without a spare neighbor");
            for (int n : threaded) {
                int v = step(g, best, n);
                cfg.us.push_back(n);
                cfg.vs.push_back(v);
                cfg.ws.push_back(step(g, n, v));
            }
            cfg.us.push_back(rest[0]);
            return cfg;
        }
    }

    // FourVertex2ThreadNeighbor
    for (int u : verts) {
        if (g.degree(u) != 4) continue;
        std::vector<int> threaded, plain, high;
        for (int n : g.neighbors(u)) {
            if (g.degree(n) != 2)
                high.push_back(n);
            else if (thread_run(g, u, n, 2) >= 2)
                threaded.push_back(n);
            else
                plain.push_back(n);
        }
        if (threaded.size() != 2 || plain.size() != 1 || high.size() != 1)
            continue;
        int u3 = plain[0];
        int v3 = other_neighbor(g, u3, u);
        if (g.degree(v3) != 3) continue;
        ConfigD2 cfg;
        cfg.kind = ConfigD2::Kind::FourVertex2ThreadNeighbor;
        cfg.u0 = u;
        cfg.us = {threaded[0], threaded[1], u3, high[0]};
        int va = step(g, u, threaded[0]);
        int vb = step(g, u, threaded[1]);
        cfg.vs = {va, vb, v3};
        cfg.ws = {step(g, threaded[0], va), step(g, threaded[1], vb)};
        return cfg;
    }

    return std::nullopt;
}

ThetaSpec ThetaSpec::from_structure(const ThetaStructure& st) {
    ThetaSpec spec;
    spec.x = st.x;
    spec.y = st.y;
    spec.r = st.r;
    spec.s = st.s;
    spec.t = st.t;
    spec.paths = st.paths;
    return spec;
}

// ---------------------------------------------------------------------------
// Family colorers

std::optional<Coloring> color_cycle(const Graph& g,
                                    const std::vector<int>& order,
                                    const ListAssignment& l) {
    int n = static_cast<int>(order.size());
    PCF_CHECK(n >= 3, "cycle too short");
    std::vector<std::vector<int>> lists;
    for (int v : order) lists.push_back(l.list(v));

    auto emit = [&](const std::vector<int>& seq) {
        Coloring phi(g.universe());
        for (int i = 0; i < n; ++i) phi.set(order[i], seq[i]);
        return phi;
    };

    if (n == 3) {
        // Any proper coloring works: each vertex sees two distinct colors.
        for (int a : lists[0])
            for (int b : lists[1]) {
                if (b == a) continue;
                for (int c : lists[2])
                    if (c != a && c != b) return emit({a, b, c});
            }
        return std::nullopt;
    }

    // Proper + conflict-free on a cycle means seq[i] != seq[i+1] and
    // seq[i] != seq[i+2] (indices mod n).  Depth-first with memoized dead
    // (position, prev2, prev1) states per choice of the first two colors;
    // ascending loops make the first hit lexicographically least.
    std::vector<int> seq(n);
    for (int c0 : lists[0]) {
        for (int c1 : lists[1]) {
            if (c1 == c0) continue;
            seq[0] = c0;
            seq[1] = c1;
            std::set<std::tuple<int, int, int>> dead;
            auto rec = [&](auto&& self, int i) -> bool {
                if (i == n) return true;
                if (dead.count({i, seq[i - 2], seq[i - 1]})) return false;
                for (int c : lists[i]) {
                    if (c == seq[i - 1] || c == seq[i - 2]) continue;
                    if (i == n - 2 && c == seq[0]) continue;
                    if (i == n - 1 && (c == seq[0] || c == seq[1])) continue;
                    seq[i] = c;
                    if (self(self, i + 1)) return true;
                }
                dead.insert({i, seq[i - 2], seq[i - 1]});
                return false;
            };
            if (rec(rec, 2)) return emit(seq);
        }
    }
    return std::nullopt;
}

D2Result color_c5(const Graph& g, const std::vector<int>& comp,
                  const ListAssignment& l) {
    auto order = cycle_order(g, comp);
    PCF_CHECK(order.has_value() && comp.size() == 5, "component is not a C5");
    for (int v : comp)
        if (l.list(v).size() < 4)
            throw PreconditionError("C5 colorer needs lists of size >= 4");
    bool all_equal_4 = l.list(comp[0]).size() == 4;
    for (std::size_t i = 1; all_equal_4 && i < comp.size(); ++i)
        all_equal_4 = l.list(comp[i]) == l.list(comp[0]);
    if (all_equal_4) return ExceptionalC5{comp};
    auto phi = color_cycle(g, *order, l);
    PCF_CHECK(phi.has_value(), "non-exceptional C5 must be colorable");
    return *phi;
}

Coloring color_k2r(const Graph& g, const K2rStructure& k2r,
                   const ListAssignment& l) {
    // Three distinct colors on x, y and the first leg; every other leg
    // avoids all three, which keeps the first leg's color uniquely seen
    // from both hubs.
    Coloring phi(g.universe());
    int x = k2r.x, y = k2r.y, u1 = k2r.legs[0];
    phi.set(x, pick_min(l.list(x), {}));
    phi.set(y, pick_min(l.list(y), {phi.color(x)}));
    phi.set(u1, pick_min(l.list(u1), {phi.color(x), phi.color(y)}));
    for (std::size_t i = 1; i < k2r.legs.size(); ++i)
        phi.set(k2r.legs[i],
                pick_min(l.list(k2r.legs[i]),
                         {phi.color(x), phi.color(y), phi.color(u1)}));
    return phi;
}

Coloring color_theta(const Graph& g, const ThetaSpec& spec,
                     const ListAssignment& l) {
    PCF_CHECK(spec.colorable_family(),
              "theta colorer needs r+s >= 1 and r+s+t >= 2");
    int hub_size = spec.r + spec.s + spec.t + 3;
    std::vector<int> lx = keep_smallest(l.list(spec.x), hub_size);
    std::vector<int> ly = keep_smallest(l.list(spec.y), hub_size);
    std::map<int, std::vector<int>> l4;
    for (const auto& p : spec.paths)
        for (int v : p) l4[v] = keep_smallest(l.list(v), 4);

    // Middle vertices of the length-4 paths; a hub pair {alpha, beta} is
    // usable when no middle list contains both.  Counting over all pairs
    // shows one always exists.
    std::vector<const std::vector<int>*> middles;
    for (const auto& p : spec.paths)
        if (p.size() == 3) middles.push_back(&l4.at(p[1]));

    int alpha = -1, beta = -1;
    for (int a : lx) {
        for (int b : ly) {
            if (a == b) continue;
            bool blocked = false;
            for (const auto* mid : middles)
                if (contains(*mid, a) && contains(*mid, b)) {
                    blocked = true;
                    break;
                }
            if (!blocked) {
                alpha = a;
                beta = b;
                break;
            }
        }
        if (alpha >= 0) break;
    }
    PCF_CHECK(alpha >= 0, "no usable hub pair in theta colorer");

    Coloring phi(g.universe());
    phi.set(spec.x, alpha);
    phi.set(spec.y, beta);
    for (const auto& p : spec.paths) {
        if (p.size() == 1) {
            phi.set(p[0], pick_min(l4.at(p[0]), {alpha, beta}));
        } else if (p.size() == 2) {
            phi.set(p[0], pick_min(l4.at(p[0]), {alpha, beta}));
            phi.set(p[1], pick_min(l4.at(p[1]),
                                   {alpha, beta, phi.color(p[0])}));
        } else {
            phi.set(p[0], pick_min(l4.at(p[0]), {alpha, beta}));
            phi.set(p[2], pick_min(l4.at(p[2]),
                                   {alpha, beta, phi.color(p[0])}));
            phi.set(p[1], pick_min(l4.at(p[1]),
                                   {alpha, beta, phi.color(p[0]),
                                    phi.color(p[2])}));
        }
    }
    return phi;
}

// ---------------------------------------------------------------------------
// Reduction engine

namespace {

Graph induced(const Graph& g, const std::vector<int>& comp) {
    std::set<int> keep(comp.begin(), comp.end());
    std::vector<int> drop;
    for (int v : g.vertices())
        if (!keep.count(v)) drop.push_back(v);
    return g.delete_vertices(drop);
}

std::optional<ExceptionalC5> color_component_d2(const Graph& h,
                                                const ListAssignment& l,
                                                Coloring& phi);

// Claim machinery for a vertex all of whose neighbors have degree 2:
// remove alpha from the lists of the outer neighbors, color the reduced
// graph under those lists (exceptional C5 components get a near-PCF
// coloring whose deficient vertex is one of the outer neighbors), then
// recolor the star around u0 so that alpha is uniquely seen at every
// deleted neighbor and beta at u0 itself.
void extend_all_deg2(const Graph& h, const Graph& reduced,
                     const ListAssignment& l, const ConfigD2& cfg,
                     Coloring& phi) {
    int k = static_cast<int>(cfg.us.size());
    for (int v : reduced.vertices())
        PCF_CHECK(reduced.degree(v) > 0,
                  "isolated vertex after AllDeg2Neighbors deletion");

    std::vector<std::vector<int>> lu;
    for (int u : cfg.us) lu.push_back(keep_smallest(l.list(u), 4));

    int alpha = -1;
    if (k == 3) {
        alpha = pick_min(l.list(cfg.u0), lu[0]);
    } else {
        for (int c : l.list(cfg.u0)) {
            int members = 0;
            for (const auto& lst : lu)
                if (contains(lst, c)) ++members;
            if (members <= 3) {
                alpha = c;
                break;
            }
        }
    }
    PCF_CHECK(alpha >= 0, "no low-multiplicity color for the star center");

    std::vector<int> in_alpha;
    int u1 = -1;
    for (int i = 0; i < k; ++i) {
        if (contains(lu[i], alpha))
            in_alpha.push_back(i);
        else if (u1 < 0)
            u1 = i;
    }
    PCF_CHECK(u1 >= 0, "every neighbor list contains alpha");

    ListAssignment lprime = l;
    {
        std::set<int> outer(cfg.vs.begin(), cfg.vs.end());
        for (int v : outer) lprime.set(v, filtered(l.list(v), {alpha}));
    }

    std::set<int> outer_set(cfg.vs.begin(), cfg.vs.end());
    std::map<int, int> forced_c;  // deficient outer vertex -> repeated color
    for (const auto& comp : reduced.components()) {
        Graph sub = induced(reduced, comp);
        auto res = color_component_d2(sub, lprime, phi);
        if (!res) continue;
        // Bad component: a C5 whose trimmed lists are all equal of size
        // four.  Color it properly with the single conflict placed on an
        // outer neighbor; rotational symmetry of equal lists makes that
        // possible.
        auto order = cycle_order(sub, comp);
        PCF_CHECK(order.has_value(), "exceptional component is not a cycle");
        std::array<std::vector<int>, 5> lists;
        std::vector<int> prefer;
        for (int i = 0; i < 5; ++i) {
            lists[i] = lprime.list((*order)[i]);
            if (outer_set.count((*order)[i])) prefer.push_back(i);
        }
        PCF_CHECK(!prefer.empty(), "bad component without outer neighbors");
        auto near = color_c5_near_pcf(lists, prefer);
        for (int i = 0; i < 5; ++i) phi.set((*order)[i], near.colors[i]);
        PCF_CHECK(near.deficient.has_value(),
                  "exceptional C5 colored without a deficiency");
        int bad = (*order)[*near.deficient];
        PCF_CHECK(outer_set.count(bad),
                  "deficient vertex is not an outer neighbor");
        int rep = near.colors[(*near.deficient + 1) % 5];
        PCF_CHECK(rep == near.colors[(*near.deficient + 4) % 5],
                  "deficient vertex does not see a repeated color");
        forced_c[bad] = rep;
    }

    // c_i: a color to keep uniquely seen at each outer neighbor.
    std::vector<int> cs(k, -1);
    for (int i = 0; i < k; ++i) {
        auto uc = unique_colors(reduced, phi, cfg.vs[i]);
        if (!uc.empty()) {
            cs[i] = uc.front();
        } else {
            auto it = forced_c.find(cfg.vs[i]);
            PCF_CHECK(it != forced_c.end(),
                      "conflicted outer neighbor is not a known deficiency");
            cs[i] = it->second;
        }
    }

    phi.set(cfg.u0, alpha);
    for (int i : in_alpha)
        phi.set(cfg.us[i],
                pick_min(lu[i], {phi.color(cfg.vs[i]), cs[i], alpha}));

    int beta;
    if (in_alpha.empty()) {
        beta = pick_min(lu[u1], {phi.color(cfg.vs[u1]), cs[u1], alpha});
        phi.set(cfg.us[u1], beta);
    } else {
        std::vector<int> used;
        for (int i : in_alpha) used.push_back(phi.color(cfg.us[i]));
        std::sort(used.begin(), used.end());
        auto distinct = std::unique(used.begin(), used.end()) - used.begin();
        if (distinct == 1) {
            std::vector<int> avoid{phi.color(cfg.vs[u1]), cs[u1], alpha,
                                   used.front()};
            beta = pick_min(lu[u1], avoid);
            phi.set(cfg.us[u1], beta);
        } else {
            beta = -1;
            for (int i : in_alpha) {
                int c = phi.color(cfg.us[i]);
                int cnt = 0;
                for (int j : in_alpha)
                    if (phi.color(cfg.us[j]) == c) ++cnt;
                if (cnt == 1 && (beta < 0 || c < beta)) beta = c;
            }
            PCF_CHECK(beta >= 0, "no singleton color among alpha-list stars");
        }
    }

    for (int i = 0; i < k; ++i) {
        if (phi.is_colored(cfg.us[i])) continue;
        phi.set(cfg.us[i],
                pick_min(lu[i], {phi.color(cfg.vs[i]), cs[i], alpha, beta}));
    }
}

void extend_pendant(const Graph& h, const Graph& reduced,
                    const ListAssignment& l, const ConfigD2& cfg,
                    Coloring& phi) {
    if (h.degree(cfg.u0) == 0) {
        phi.set(cfg.u0, l.list(cfg.u0).front());
        return;
    }
    int w = h.neighbors(cfg.u0)[0];
    std::vector<int> avoid{phi.color(w)};
    if (reduced.degree(w) >= 1) avoid.push_back(pick_unique(reduced, phi, w));
    phi.set(cfg.u0, pick_min(l.list(cfg.u0), avoid));
}

void extend_three_vertex_2thread(const Graph& h, const Graph& reduced,
                                 const ListAssignment& l, const ConfigD2& cfg,
                                 Coloring& phi) {
    int v1 = cfg.us[0], v2 = cfg.us[1], v = cfg.xs[0];
    int cv = pick_unique(reduced, phi, v);
    phi.set(v2, pick_min(l.list(v2), {phi.color(cfg.u0), phi.color(v), cv}));
    phi.set(v1, pick_min(l.list(v1),
                         {phi.color(v2), phi.color(cfg.u0), phi.color(v)}));
}

void extend_four_thread(const Graph& h, const Graph& reduced,
                        const ListAssignment& l, const ConfigD2& cfg,
                        Coloring& phi) {
    int u = cfg.xs[0], v = cfg.xs[1];
    int cu = pick_unique(reduced, phi, u);
    int cv = (v == u) ? cu : pick_unique(reduced, phi, v);
    auto l1 = keep_smallest(filtered(l.list(cfg.us[0]), {cu, phi.color(u)}), 2);
    auto l2 = filtered(l.list(cfg.us[1]), {phi.color(u)});
    auto l3 = filtered(l.list(cfg.us[2]), {phi.color(v)});
    auto l4 = filtered(l.list(cfg.us[3]), {cv, phi.color(v)});
    phi.set(cfg.us[1], pick_min(filtered(l2, l1), {}));
    phi.set(cfg.us[3], pick_min(l4, {phi.color(cfg.us[1])}));
    phi.set(cfg.us[2],
            pick_min(l3, {phi.color(cfg.us[1]), phi.color(cfg.us[3])}));
    phi.set(cfg.us[0], pick_min(l1, {phi.color(cfg.us[2])}));
}

void extend_pendant_cycle(const Graph& h, const Graph& reduced,
                          const ListAssignment& l, const ConfigD2& cfg,
                          Coloring& phi) {
    int anchor = cfg.u0;
    int c = pick_unique(reduced, phi, anchor);
    int a = phi.color(anchor);
    if (cfg.cyc.size() == 2) {
        int u2 = cfg.cyc[0], u3 = cfg.cyc[1];
        phi.set(u2, pick_min(l.list(u2), {a, c}));
        phi.set(u3, pick_min(l.list(u3), {a, phi.color(u2), c}));
    } else {
        int u2 = cfg.cyc[0], u3 = cfg.cyc[1], u4 = cfg.cyc[2];
        phi.set(u2, pick_min(l.list(u2), {a, c}));
        phi.set(u4, pick_min(l.list(u4), {a, phi.color(u2), c}));
        phi.set(u3, pick_min(l.list(u3), {a, phi.color(u2), phi.color(u4)}));
    }
}

struct ThreadLists {
    std::vector<std::vector<int>> lu, lv, lw, c2;
};

// L* lists and the two-color sets C(u_i) for the 3-thread claims.
ThreadLists thread_lists(const ListAssignment& l, const ConfigD2& cfg,
                         const Coloring& phi, const std::map<int, int>& cw,
                         int m) {
    ThreadLists t;
    for (int i = 0; i < m; ++i) {
        int xi = cfg.xs[i];
        t.lu.push_back(keep_smallest(l.list(cfg.us[i]), 4));
        t.lv.push_back(
            keep_smallest(filtered(l.list(cfg.vs[i]), {phi.color(xi)}), 3));
        t.lw.push_back(keep_smallest(
            filtered(l.list(cfg.ws[i]), {phi.color(xi), cw.at(xi)}), 2));
        auto choice = filtered(t.lu[i], t.lw[i]);
        t.c2.push_back(keep_smallest(choice, 2));
    }
    return t;
}

void color_thread_interiors(const ConfigD2& cfg, const ThreadLists& t, int m,
                            Coloring& phi) {
    for (int i = 0; i < m; ++i) {
        phi.set(cfg.vs[i],
                pick_min(t.lv[i], {phi.color(cfg.u0), phi.color(cfg.us[i])}));
        phi.set(cfg.ws[i], pick_min(t.lw[i], {phi.color(cfg.vs[i])}));
    }
}

void extend_toomany_3threads(const Graph& h, const Graph& reduced,
                             const ListAssignment& l, const ConfigD2& cfg,
                             Coloring& phi) {
    int m = static_cast<int>(cfg.ws.size());
    int ukm1 = cfg.us[m], uk = cfg.us[m + 1];
    std::map<int, int> cw;
    for (int w : {ukm1, uk}) cw.emplace(w, pick_unique(reduced, phi, w));
    for (int x : cfg.xs) cw.emplace(x, pick_unique(reduced, phi, x));

    auto lists = thread_lists(l, cfg, phi, cw, m);
    auto lstar0 = filtered(l.list(cfg.u0), {phi.color(ukm1), phi.color(uk),
                                            cw.at(ukm1), cw.at(uk)});

    if (phi.color(ukm1) == phi.color(uk)) {
        int a = phi.color(uk);
        phi.set(cfg.us[0], pick_min(lists.c2[0], {a}));
        for (int i = 1; i < m; ++i)
            phi.set(cfg.us[i], pick_min(lists.c2[i], {phi.color(cfg.us[0])}));
        std::vector<int> avoid;
        for (int i = 0; i < m; ++i) avoid.push_back(phi.color(cfg.us[i]));
        phi.set(cfg.u0, pick_min(lstar0, avoid));
    } else {
        PCF_CHECK(!lstar0.empty(), "empty trimmed center list");
        int alpha = lstar0.front();
        std::vector<int> in_alpha;
        for (int i = 0; i < m; ++i)
            if (contains(lists.c2[i], alpha)) in_alpha.push_back(i);

        if (in_alpha.size() >= 2) {
            for (int i : in_alpha) phi.set(cfg.us[i], alpha);
            for (int i = 0; i < m; ++i)
                if (!phi.is_colored(cfg.us[i]))
                    phi.set(cfg.us[i],
                            pick_min(lists.c2[i], {phi.color(uk)}));
            std::vector<int> avoid;
            for (int i = 0; i < m; ++i) avoid.push_back(phi.color(cfg.us[i]));
            phi.set(cfg.u0, pick_min(lstar0, avoid));
        } else {
            phi.set(cfg.u0, alpha);
            for (int i : in_alpha)
                phi.set(cfg.us[i], pick_min(lists.c2[i], {alpha}));
            // One of the two outer colors now appears exactly once among
            // the colored neighbors of u0; protect it.
            auto count_at_u0 = [&](int c) {
                int cnt = 0;
                for (int w : {ukm1, uk})
                    if (phi.color(w) == c) ++cnt;
                for (int i : in_alpha)
                    if (phi.color(cfg.us[i]) == c) ++cnt;
                return cnt;
            };
            int gamma = count_at_u0(phi.color(uk)) == 1 ? phi.color(uk)
                                                        : phi.color(ukm1);
            PCF_CHECK(count_at_u0(gamma) == 1, "no protected color at center");
            for (int i = 0; i < m; ++i)
                if (!phi.is_colored(cfg.us[i]))
                    phi.set(cfg.us[i], pick_min(lists.c2[i], {gamma, alpha}));
        }
    }
    color_thread_interiors(cfg, lists, m, phi);
}

void extend_deg2heavy_3threads(const Graph& h, const Graph& reduced,
                               const ListAssignment& l, const ConfigD2& cfg,
                               Coloring& phi) {
    int m = static_cast<int>(cfg.ws.size());
    int uk = cfg.us[m + 2];
    std::map<int, int> cw;
    for (int w : {uk, cfg.vs[m], cfg.vs[m + 1]})
        cw.emplace(w, pick_unique(reduced, phi, w));
    for (int x : cfg.xs) cw.emplace(x, pick_unique(reduced, phi, x));

    auto lists = thread_lists(l, cfg, phi, cw, m);
    // The two plain 2-neighbors also get trimmed two-color sets.
    for (int j = m; j < m + 2; ++j) {
        auto lj = keep_smallest(
            filtered(l.list(cfg.us[j]),
                     {phi.color(cfg.vs[j]), cw.at(cfg.vs[j])}),
            2);
        lists.lu.push_back(lj);
        lists.c2.push_back(lj);
    }
    auto lstar0 =
        filtered(l.list(cfg.u0), {phi.color(uk), phi.color(cfg.vs[m]),
                                  phi.color(cfg.vs[m + 1]), cw.at(uk)});
    PCF_CHECK(!lstar0.empty(), "empty trimmed center list");
    int alpha = lstar0.front();
    PCF_CHECK(alpha != phi.color(uk), "alpha collides with the outer color");

    int total = m + 2;  // the degree-2 neighbors u_1..u_{k-1}
    std::vector<int> in_alpha;
    for (int i = 0; i < total; ++i)
        if (contains(lists.c2[i], alpha)) in_alpha.push_back(i);

    if (static_cast<int>(in_alpha.size()) >= 3) {
        for (int i : in_alpha) phi.set(cfg.us[i], alpha);
        for (int i = 0; i < total; ++i)
            if (!phi.is_colored(cfg.us[i]))
                phi.set(cfg.us[i], pick_min(lists.c2[i], {phi.color(uk)}));
        std::vector<int> avoid;
        for (int i = 0; i < total; ++i) avoid.push_back(phi.color(cfg.us[i]));
        phi.set(cfg.u0, pick_min(lstar0, avoid));
    } else {
        phi.set(cfg.u0, alpha);
        for (int i : in_alpha)
            phi.set(cfg.us[i], pick_min(lists.c2[i], {alpha}));
        std::vector<int> group{phi.color(uk)};
        for (int i : in_alpha) group.push_back(phi.color(cfg.us[i]));
        bool all_same =
            std::all_of(group.begin(), group.end(),
                        [&](int c) { return c == group.front(); });
        if (all_same) {
            int beta = group.front();
            int i0 = -1;
            for (int i = 0; i < total; ++i)
                if (!phi.is_colored(cfg.us[i])) {
                    i0 = i;
                    break;
                }
            PCF_CHECK(i0 >= 0, "no free neighbor to protect");
            phi.set(cfg.us[i0], pick_min(lists.c2[i0], {beta}));
            for (int i = 0; i < total; ++i)
                if (!phi.is_colored(cfg.us[i]))
                    phi.set(cfg.us[i],
                            pick_min(lists.c2[i], {phi.color(cfg.us[i0])}));
        } else {
            int gamma = -1;
            for (int c : group)
                if (std::count(group.begin(), group.end(), c) == 1 &&
                    (gamma < 0 || c < gamma))
                    gamma = c;
            PCF_CHECK(gamma >= 0, "no singleton color in the outer group");
            for (int i = 0; i < total; ++i)
                if (!phi.is_colored(cfg.us[i]))
                    phi.set(cfg.us[i], pick_min(lists.c2[i], {gamma}));
        }
    }
    color_thread_interiors(cfg, lists, m, phi);
}

void extend_bad3vertex(const Graph& h, const Graph& reduced,
                       const ListAssignment& l, const ConfigD2& cfg,
                       Coloring& phi) {
    int u1 = cfg.us[0], u2 = cfg.us[1];
    int v1 = cfg.vs[0], v2 = cfg.vs[1];
    int u3 = cfg.xs[0];
    std::map<int, int> cw;
    for (int w : {u3, v2}) cw.emplace(w, pick_unique(reduced, phi, w));

    auto l0 = keep_smallest(l.list(cfg.u0), 5);
    auto la = keep_smallest(l.list(u1), 4);
    auto lb = keep_smallest(l.list(u2), 4);
    phi.set(cfg.u0, pick_min(l0, {phi.color(u3), cw.at(u3), phi.color(v1),
                                  phi.color(v2)}));
    phi.set(u2, pick_min(lb, {phi.color(cfg.u0), phi.color(v2), cw.at(v2)}));
    phi.set(u1, pick_min(la, {phi.color(cfg.u0), phi.color(v1),
                              phi.color(u2)}));
}

void extend_toomany_2threads(const Graph& h, const Graph& reduced,
                             const ListAssignment& l, const ConfigD2& cfg,
                             Coloring& phi) {
    int k = h.degree(cfg.u0);
    int m = k - 1;  // thread starts
    int uk = cfg.us[m];
    std::map<int, int> cw;
    cw.emplace(uk, pick_unique(reduced, phi, uk));
    for (int w : cfg.ws) cw.emplace(w, pick_unique(reduced, phi, w));

    auto lstar0 =
        keep_smallest(filtered(l.list(cfg.u0), {phi.color(uk), cw.at(uk)}), k);
    std::vector<std::vector<int>> lu, lv;
    for (int i = 0; i < m; ++i) {
        int wi = cfg.ws[i];
        lu.push_back(
            keep_smallest(filtered(l.list(cfg.us[i]), {phi.color(wi)}), 3));
        lv.push_back(keep_smallest(
            filtered(l.list(cfg.vs[i]), {phi.color(wi), cw.at(wi)}), 2));
    }

    for (int i = 0; i < m - 1; ++i)
        phi.set(cfg.us[i], pick_min(filtered(lu[i], lv[i]), {}));

    std::vector<int> seen{phi.color(uk)};
    for (int i = 0; i < m - 1; ++i) seen.push_back(phi.color(cfg.us[i]));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

    if (static_cast<int>(seen.size()) >= 3) {
        std::vector<int> avoid;
        for (int i = 0; i < m - 1; ++i) avoid.push_back(phi.color(cfg.us[i]));
        phi.set(cfg.u0, pick_min(lstar0, avoid));
        phi.set(cfg.vs[m - 1], pick_min(lv[m - 1], {phi.color(cfg.u0)}));
        phi.set(cfg.us[m - 1],
                pick_min(lu[m - 1],
                         {phi.color(cfg.u0), phi.color(cfg.vs[m - 1])}));
    } else {
        phi.set(cfg.us[m - 1], pick_min(lu[m - 1], seen));
        phi.set(cfg.vs[m - 1],
                pick_min(lv[m - 1], {phi.color(cfg.us[m - 1])}));
        std::vector<int> avoid = seen;
        avoid.push_back(phi.color(cfg.us[m - 1]));
        avoid.push_back(phi.color(cfg.vs[m - 1]));
        phi.set(cfg.u0, pick_min(lstar0, avoid));
    }
    for (int i = 0; i < m - 1; ++i)
        phi.set(cfg.vs[i], pick_min(lv[i], {phi.color(cfg.u0)}));
}

void extend_fourvertex_2thread(const Graph& h, const Graph& reduced,
                               const ListAssignment& l, const ConfigD2& cfg,
                               Coloring& phi) {
    int u1 = cfg.us[0], u2 = cfg.us[1], u3 = cfg.us[2], u4 = cfg.us[3];
    int v3 = cfg.vs[2];
    std::map<int, int> cw;
    cw.emplace(u4, pick_unique(reduced, phi, u4));
    for (int w : cfg.ws) cw.emplace(w, pick_unique(reduced, phi, w));

    auto l0 = keep_smallest(
        filtered(l.list(cfg.u0), {phi.color(u4), phi.color(v3), cw.at(u4)}),
        3);
    std::vector<std::vector<int>> lu, lv;
    for (int i = 0; i < 2; ++i) {
        int wi = cfg.ws[i];
        lu.push_back(
            keep_smallest(filtered(l.list(cfg.us[i]), {phi.color(wi)}), 3));
        lv.push_back(keep_smallest(
            filtered(l.list(cfg.vs[i]), {phi.color(wi), cw.at(wi)}), 2));
    }
    auto l3 = keep_smallest(filtered(l.list(u3), {phi.color(v3)}), 3);

    phi.set(u1, pick_min(filtered(lu[0], lv[0]), {}));
    phi.set(u2, pick_min(filtered(lu[1], lv[1]), {}));
    phi.set(cfg.u0, pick_min(l0, {phi.color(u1), phi.color(u2)}));

    std::vector<int> trio{phi.color(u1), phi.color(u2), phi.color(u4)};
    if (trio[0] == trio[1] && trio[1] == trio[2]) {
        phi.set(u3, pick_min(l3, {phi.color(cfg.u0), trio[0]}));
    } else {
        int beta = -1;
        for (int c : trio)
            if (std::count(trio.begin(), trio.end(), c) == 1 &&
                (beta < 0 || c < beta))
                beta = c;
        PCF_CHECK(beta >= 0, "no singleton among the colored neighbors");
        phi.set(u3, pick_min(l3, {phi.color(cfg.u0), beta}));
    }
    for (int i = 0; i < 2; ++i)
        phi.set(cfg.vs[i], pick_min(lv[i], {phi.color(cfg.u0)}));
}

void extend_d2(const Graph& h, const Graph& reduced, const ListAssignment& l,
               const ConfigD2& cfg, Coloring& phi) {
    switch (cfg.kind) {
        case ConfigD2::Kind::Pendant1Vertex:
            extend_pendant(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::ThreeVertexWith2Thread:
            extend_three_vertex_2thread(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::FourThread:
            extend_four_thread(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::PendantCycle:
            extend_pendant_cycle(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::AllDeg2Neighbors:
            extend_all_deg2(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::TooMany3Threads:
            extend_toomany_3threads(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::Deg2Heavy3Threads:
            extend_deg2heavy_3threads(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::Bad3VertexNeighbors:
            extend_bad3vertex(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::TooMany2Threads:
            extend_toomany_2threads(h, reduced, l, cfg, phi);
            break;
        case ConfigD2::Kind::FourVertex2ThreadNeighbor:
            extend_fourvertex_2thread(h, reduced, l, cfg, phi);
            break;
    }
}

std::optional<ExceptionalC5> color_component_d2(const Graph& h,
                                                const ListAssignment& l,
                                                Coloring& phi) {
    if (h.num_vertices() == 0) return std::nullopt;
    auto comp = h.vertices();
    if (comp.size() == 1) {
        phi.set(comp[0], l.list(comp[0]).front());
        return std::nullopt;
    }

    if (auto order = cycle_order(h, comp)) {
        if (comp.size() == 5) {
            auto res = color_c5(h, comp, l);
            if (auto* exc = std::get_if<ExceptionalC5>(&res)) return *exc;
            phi.merge(std::get<Coloring>(res));
            return std::nullopt;
        }
        auto col = color_cycle(h, *order, l);
        PCF_CHECK(col.has_value(), "cycle of length != 5 must be colorable");
        phi.merge(*col);
        return std::nullopt;
    }
    if (auto k2r = match_k2r(h, comp)) {
        phi.merge(color_k2r(h, *k2r, l));
        return std::nullopt;
    }
    if (auto th = match_theta(h, comp)) {
        auto spec = ThetaSpec::from_structure(*th);
        if (spec.colorable_family()) {
            phi.merge(color_theta(h, spec, l));
            return std::nullopt;
        }
    }

    auto cfg = find_config_d2(h);
    PCF_CHECK(cfg.has_value(),
              "no reducible configuration in a graph with mad < 18/7");
    Graph reduced = h.delete_vertices(cfg->deletable());
    if (cfg->kind == ConfigD2::Kind::AllDeg2Neighbors) {
        // Does its own recursion under the alpha-restricted lists.
        extend_all_deg2(h, reduced, l, *cfg, phi);
    } else {
        for (const auto& sub : reduced.components()) {
            auto res = color_component_d2(induced(reduced, sub), l, phi);
            // Any C5 component of the reduction has a vertex that lost a
            // neighbor and so carries at least five colors.
            PCF_CHECK(!res.has_value(),
                      "exceptional C5 inside a reduction step");
        }
        extend_d2(h, reduced, l, *cfg, phi);
    }
#ifndef NDEBUG
    auto report = verify_pcf(h, l, phi);
    PCF_CHECK(report.empty(),
              cfg->name() + " extension violated: " + report.describe());
#endif
    return std::nullopt;
}

}  // namespace

D2Result color_degree_plus_2(const Graph& g, const ListAssignment& l) {
    auto slack = validate_slack(g, l, 2);
    if (!slack.ok) {
        std::string msg = "lists below degree+2 at:";
        for (int v : slack.deficient) msg += " " + std::to_string(v);
        throw PreconditionError(msg);
    }
    if (g.num_vertices() > 0) {
        auto gate = mad_below(g, Rational(18, 7));
        if (!gate.below) {
            std::string msg =
                "mad(G) = " + gate.witness.density.str() + " >= 18/7, witness:";
            for (int v : gate.witness.subgraph_vertices)
                msg += " " + std::to_string(v);
            throw PreconditionError(msg);
        }
    }
    Coloring phi(g.universe());
    for (const auto& comp : g.components()) {
        auto res = color_component_d2(induced(g, comp), l, phi);
        if (res) return *res;
    }
    auto report = verify_pcf(g, l, phi);
    PCF_CHECK(report.empty(),
              "final degree+2 coloring failed verification: " +
                  report.describe());
    return phi;
}

}  // namespace pcf
