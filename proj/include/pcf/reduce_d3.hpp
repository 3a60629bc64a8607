#ifndef PCF_REDUCE_D3_HPP
#define PCF_REDUCE_D3_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// One reducible configuration for the degree+3 engine.  Kinds are tried
// in declaration order, scanning vertices ascending; when a later kind
// matches, no earlier kind occurs anywhere in the graph, which is
// exactly the minimal-counterexample shape the extension steps rely on.
struct ConfigD3 {
    enum class Kind {
        Pendant1Vertex,        // d(u) <= 1
        TriangleWith2Vertex,   // 2-vertex u in a triangle u v1 v2
        Twin2Vertices,         // 2-vertices u, v with N(u) = N(v)
        AdjacentSmallPair,     // adjacent u, v with both degrees <= 3
        ManyDeg2Neighbors,     // k-vertex (k>=4) with >= k-2 2-neighbors
        Deg2PlusDeg3Neighbors, // k-vertex (k>=4), k-3 2-neighbors, a 3-neighbor
    };

    Kind kind;
    int u = -1;               // the anchor vertex
    int v = -1;               // partner (Twin/AdjacentSmallPair)
    std::vector<int> tri;     // v1, v2 (TriangleWith2Vertex)
    std::vector<int> deg2;    // u_1..u_{k-2} or u_1..u_{k-3}
    std::vector<int> rest;    // u_{k-1}, u_k (and u_{k-2} for the last kind)

    std::vector<int> deletable() const;
    std::string name() const;
};

std::optional<ConfigD3> find_config_d3(const Graph& g);

// Constructive proper conflict-free coloring under (degree+3)-lists for
// graphs with mad < 10/3.  Throws PreconditionError (with the density
// witness in the message) when a precondition fails and InternalError if
// an extension step runs out of colors, which the reductions rule out.
Coloring color_degree_plus_3(const Graph& g, const ListAssignment& l);

}  // namespace pcf

#endif
