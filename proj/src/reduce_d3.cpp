#include "pcf/reduce_d3.hpp"

#include <algorithm>
#include <map>

#include "pcf/errors.hpp"
#include "pcf/rational.hpp"
#include "pcf/sparsity.hpp"
#include "pick.hpp"

namespace pcf {

using detail::filtered;
using detail::pick_min;
using detail::pick_unique;

std::vector<int> ConfigD3::deletable() const {
    switch (kind) {
        case Kind::Pendant1Vertex:
        case Kind::TriangleWith2Vertex:
        case Kind::Twin2Vertices:
            return {u};
        case Kind::AdjacentSmallPair:
            return {u, v};
        case Kind::ManyDeg2Neighbors:
        case Kind::Deg2PlusDeg3Neighbors: {
            std::vector<int> out{u};
            out.insert(out.end(), deg2.begin(), deg2.end());
            return out;
        }
    }
    return {};
}

std::string ConfigD3::name() const {
    switch (kind) {
        case Kind::Pendant1Vertex: return "Pendant1Vertex";
        case Kind::TriangleWith2Vertex: return "TriangleWith2Vertex";
        case Kind::Twin2Vertices: return "Twin2Vertices";
        case Kind::AdjacentSmallPair: return "AdjacentSmallPair";
        case Kind::ManyDeg2Neighbors: return "ManyDeg2Neighbors";
        case Kind::Deg2PlusDeg3Neighbors: return "Deg2PlusDeg3Neighbors";
    }
    return "?";
}

std::optional<ConfigD3> find_config_d3(const Graph& g) {
    auto verts = g.vertices();

    for (int v : verts) {
        if (g.degree(v) <= 1) {
            ConfigD3 cfg;
            cfg.kind = ConfigD3::Kind::Pendant1Vertex;
            cfg.u = v;
            return cfg;
        }
    }

    for (int v : verts) {
        if (g.degree(v) != 2) continue;
        int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
        if (g.adjacent(a, b)) {
            ConfigD3 cfg;
            cfg.kind = ConfigD3::Kind::TriangleWith2Vertex;
            cfg.u = v;
            cfg.tri = {a, b};
            return cfg;
        }
    }

    for (int u : verts) {
        if (g.degree(u) != 2) continue;
        for (int v : verts) {
            if (v <= u || g.degree(v) != 2) continue;
            if (g.neighbors(u) == g.neighbors(v)) {
                ConfigD3 cfg;
                cfg.kind = ConfigD3::Kind::Twin2Vertices;
                cfg.u = u;
                cfg.v = v;
                return cfg;
            }
        }
    }

    for (int u : verts) {
        if (g.degree(u) > 3) continue;
        for (int v : g.neighbors(u)) {
            if (g.degree(v) <= 3) {
                ConfigD3 cfg;
                cfg.kind = ConfigD3::Kind::AdjacentSmallPair;
                cfg.u = u;
                cfg.v = v;
                return cfg;
            }
        }
    }

    for (int u : verts) {
        int k = g.degree(u);
        if (k < 4) continue;
        std::vector<int> twos, others;
        for (int w : g.neighbors(u))
            (g.degree(w) == 2 ? twos : others).push_back(w);
        if (static_cast<int>(twos.size()) >= k - 2) {
            ConfigD3 cfg;
            cfg.kind = ConfigD3::Kind::ManyDeg2Neighbors;
            cfg.u = u;
            cfg.deg2.assign(twos.begin(), twos.begin() + (k - 2));
            cfg.rest.assign(twos.begin() + (k - 2), twos.end());
            cfg.rest.insert(cfg.rest.end(), others.begin(), others.end());
            std::sort(cfg.rest.begin(), cfg.rest.end());
            return cfg;
        }
    }

    for (int u : verts) {
        int k = g.degree(u);
        if (k < 4) continue;
        std::vector<int> twos, threes, others;
        for (int w : g.neighbors(u)) {
            if (g.degree(w) == 2)
                twos.push_back(w);
            else if (g.degree(w) == 3)
                threes.push_back(w);
            else
                others.push_back(w);
        }
        if (static_cast<int>(twos.size()) == k - 3 && !threes.empty()) {
            ConfigD3 cfg;
            cfg.kind = ConfigD3::Kind::Deg2PlusDeg3Neighbors;
            cfg.u = u;
            cfg.deg2 = twos;
            cfg.rest = {threes.front()};
            std::vector<int> remaining(threes.begin() + 1, threes.end());
            remaining.insert(remaining.end(), others.begin(), others.end());
            std::sort(remaining.begin(), remaining.end());
            cfg.rest.insert(cfg.rest.end(), remaining.begin(), remaining.end());
            return cfg;
        }
    }

    return std::nullopt;
}

namespace {

int other_neighbor(const Graph& g, int v, int excluded) {
    for (int w : g.neighbors(v))
        if (w != excluded) return w;
    throw InternalError("vertex has no neighbor besides " +
                        std::to_string(excluded));
}

void extend_pendant(const Graph& g, const Graph& reduced,
                    const ListAssignment& l, const ConfigD3& cfg,
                    Coloring& phi) {
    if (g.degree(cfg.u) == 0) {
        phi.set(cfg.u, l.list(cfg.u).front());
        return;
    }
    int w = g.neighbors(cfg.u)[0];
    std::vector<int> avoid{phi.color(w)};
    if (reduced.degree(w) >= 1) avoid.push_back(pick_unique(reduced, phi, w));
    phi.set(cfg.u, pick_min(l.list(cfg.u), avoid));
}

// Claims for the 2-vertex in a triangle and for twin 2-vertices extend
// identically: avoid both neighbor colors and one uniquely seen color of
// each neighbor.  For twins the neighbor colors are distinct because the
// remaining twin keeps a uniquely seen color in the reduced graph.
void extend_two_neighbor_avoid(const Graph& g, const Graph& reduced,
                               const ListAssignment& l, const ConfigD3& cfg,
                               Coloring& phi) {
    int a = g.neighbors(cfg.u)[0], b = g.neighbors(cfg.u)[1];
    std::vector<int> avoid{phi.color(a), phi.color(b),
                           pick_unique(reduced, phi, a),
                           pick_unique(reduced, phi, b)};
    phi.set(cfg.u, pick_min(l.list(cfg.u), avoid));
}

void extend_adjacent_small(const Graph& g, const Graph& reduced,
                           const ListAssignment& l, const ConfigD3& cfg,
                           Coloring& phi) {
    std::vector<int> nu = filtered(g.neighbors(cfg.u), {cfg.v});
    std::vector<int> nv = filtered(g.neighbors(cfg.v), {cfg.u});
    PCF_CHECK(!nu.empty() && !nv.empty() && nu.size() <= 2 && nv.size() <= 2,
              "adjacent pair degrees out of range");

    std::map<int, int> cw;
    for (int w : nu) cw.emplace(w, pick_unique(reduced, phi, w));
    for (int w : nv) cw.emplace(w, pick_unique(reduced, phi, w));

    auto restricted = [&](int x, const std::vector<int>& nbrs) {
        std::vector<int> avoid;
        for (int w : nbrs) {
            avoid.push_back(phi.color(w));
            avoid.push_back(cw.at(w));
        }
        return filtered(l.list(x), avoid);
    };
    std::vector<int> lu = restricted(cfg.u, nu);
    std::vector<int> lv = restricted(cfg.v, nv);
    PCF_CHECK(lu.size() >= 2 && lv.size() >= 2,
              "restricted lists too small for adjacent pair");

    if (lu.size() == 2) {
        phi.set(cfg.u, pick_min(lu, {phi.color(nv[0])}));
        phi.set(cfg.v, pick_min(lv, {phi.color(cfg.u)}));
    } else {
        phi.set(cfg.v, pick_min(lv, {phi.color(nu[0])}));
        phi.set(cfg.u, pick_min(lu, {phi.color(cfg.v), phi.color(nv[0])}));
    }
}

void extend_many_deg2(const Graph& g, const Graph& reduced,
                      const ListAssignment& l, const ConfigD3& cfg,
                      Coloring& phi) {
    // cfg.rest holds the two undeleted neighbors; for the variant with a
    // 3-neighbor it holds that vertex first and then the other two.
    bool with_three = cfg.kind == ConfigD3::Kind::Deg2PlusDeg3Neighbors;
    std::vector<int> vs;  // other neighbor of each deleted 2-vertex
    for (int ui : cfg.deg2) vs.push_back(other_neighbor(g, ui, cfg.u));

    int ukm1 = with_three ? cfg.rest[1] : cfg.rest[0];
    int uk = with_three ? cfg.rest[2] : cfg.rest[1];

    std::map<int, int> cw;
    for (int w : {ukm1, uk}) cw.emplace(w, pick_unique(reduced, phi, w));
    for (int w : vs) cw.emplace(w, pick_unique(reduced, phi, w));

    std::vector<int> avoid;
    for (int w : cfg.rest) avoid.push_back(phi.color(w));
    for (int w : vs) avoid.push_back(phi.color(w));
    avoid.push_back(cw.at(ukm1));
    avoid.push_back(cw.at(uk));
    phi.set(cfg.u, pick_min(l.list(cfg.u), avoid));

    auto list_of = [&](std::size_t i) {
        return filtered(l.list(cfg.deg2[i]),
                        {phi.color(vs[i]), cw.at(vs[i])});
    };

    if (!with_three) {
        if (phi.color(ukm1) == phi.color(uk)) {
            int alpha = phi.color(uk);
            phi.set(cfg.deg2[0], pick_min(list_of(0), {phi.color(cfg.u), alpha}));
            for (std::size_t i = 1; i < cfg.deg2.size(); ++i)
                phi.set(cfg.deg2[i],
                        pick_min(list_of(i),
                                 {phi.color(cfg.u), phi.color(cfg.deg2[0])}));
        } else {
            for (std::size_t i = 0; i < cfg.deg2.size(); ++i)
                phi.set(cfg.deg2[i],
                        pick_min(list_of(i), {phi.color(cfg.u), phi.color(uk)}));
        }
        return;
    }

    // Colored neighbors of u are now the 3-neighbor and the two others:
    // either all share one color or some color appears exactly once.
    std::vector<int> trio{phi.color(cfg.rest[0]), phi.color(ukm1),
                          phi.color(uk)};
    if (trio[0] == trio[1] && trio[1] == trio[2]) {
        int alpha = trio[0];
        phi.set(cfg.deg2[0], pick_min(list_of(0), {phi.color(cfg.u), alpha}));
        for (std::size_t i = 1; i < cfg.deg2.size(); ++i)
            phi.set(cfg.deg2[i],
                    pick_min(list_of(i),
                             {phi.color(cfg.u), phi.color(cfg.deg2[0])}));
    } else {
        int beta = -1;
        for (int c : trio)
            if (std::count(trio.begin(), trio.end(), c) == 1 &&
                (beta < 0 || c < beta))
                beta = c;
        PCF_CHECK(beta >= 0, "no singleton color among three neighbors");
        for (std::size_t i = 0; i < cfg.deg2.size(); ++i)
            phi.set(cfg.deg2[i], pick_min(list_of(i), {phi.color(cfg.u), beta}));
    }
}

void extend_d3(const Graph& g, const Graph& reduced, const ListAssignment& l,
               const ConfigD3& cfg, Coloring& phi) {
    switch (cfg.kind) {
        case ConfigD3::Kind::Pendant1Vertex:
            extend_pendant(g, reduced, l, cfg, phi);
            break;
        case ConfigD3::Kind::TriangleWith2Vertex:
        case ConfigD3::Kind::Twin2Vertices:
            extend_two_neighbor_avoid(g, reduced, l, cfg, phi);
            break;
        case ConfigD3::Kind::AdjacentSmallPair:
            extend_adjacent_small(g, reduced, l, cfg, phi);
            break;
        case ConfigD3::Kind::ManyDeg2Neighbors:
        case ConfigD3::Kind::Deg2PlusDeg3Neighbors:
            extend_many_deg2(g, reduced, l, cfg, phi);
            break;
    }
}

void color_rec_d3(const Graph& g, const ListAssignment& l, Coloring& phi) {
    if (g.num_vertices() == 0) return;
    auto cfg = find_config_d3(g);
    PCF_CHECK(cfg.has_value(),
              "no reducible configuration in a graph with mad < 10/3");
    Graph reduced = g.delete_vertices(cfg->deletable());
    color_rec_d3(reduced, l, phi);
    extend_d3(g, reduced, l, *cfg, phi);
#ifndef NDEBUG
    auto report = verify_pcf(g, l, phi);
    PCF_CHECK(report.empty(),
              cfg->name() + " extension violated: " + report.describe());
#endif
}

}  // namespace

Coloring color_degree_plus_3(const Graph& g, const ListAssignment& l) {
    auto slack = validate_slack(g, l, 3);
    if (!slack.ok) {
        std::string msg = "lists below degree+3 at:";
        for (int v : slack.deficient) msg += " " + std::to_string(v);
        throw PreconditionError(msg);
    }
    if (g.num_vertices() > 0) {
        auto gate = mad_below(g, Rational(10, 3));
        if (!gate.below) {
            std::string msg =
                "mad(G) = " + gate.witness.density.str() + " >= 10/3, witness:";
            for (int v : gate.witness.subgraph_vertices)
                msg += " " + std::to_string(v);
            throw PreconditionError(msg);
        }
    }
    Coloring phi(g.universe());
    color_rec_d3(g, l, phi);
    auto report = verify_pcf(g, l, phi);
    PCF_CHECK(report.empty(),
              "final degree+3 coloring failed verification: " +
                  report.describe());
    return phi;
}

}  // namespace pcf
