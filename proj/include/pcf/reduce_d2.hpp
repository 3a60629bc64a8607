#ifndef PCF_REDUCE_D2_HPP
#define PCF_REDUCE_D2_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// One reducible configuration for the degree+2 engine, in the fixed
// order the finder tries them.  The finder runs only after the family
// dispatch (C5, other cycles, K_{2,r}, applicable theta graphs), and a
// later kind matching implies no earlier kind occurs anywhere.
struct ConfigD2 {
    enum class Kind {
        Pendant1Vertex,            // d(u0) <= 1
        ThreeVertexWith2Thread,    // 3-vertex u0 with path u0 v1 v2, both deg 2
        FourThread,                // four consecutive degree-2 vertices
        PendantCycle,              // cycle, all but u0 of degree 2
        AllDeg2Neighbors,          // all neighbors of a 3+-vertex have degree 2
        TooMany3Threads,           // k-vertex with >= k-2 3-thread incidences
        Deg2Heavy3Threads,         // k-1 2-neighbors, k-3 of them in 3-threads
        Bad3VertexNeighbors,       // 3-vertex, two 2-neighbors, one with a 3-nbr
        TooMany2Threads,           // k in {4,5}, >= k-1 2-thread incidences
        FourVertex2ThreadNeighbor, // 4-vertex, two 2-threads, third 2-nbr bad
    };

    Kind kind;
    int u0 = -1;
    // Role vertices, laid out per kind; see the matcher for each layout.
    std::vector<int> us;      // u_1..u_k (neighbors / thread starts)
    std::vector<int> vs;      // v_i (second thread vertices or other nbrs)
    std::vector<int> ws;      // w_i (third thread vertices)
    std::vector<int> xs;      // x_i (vertices beyond the threads)
    std::vector<int> cyc;     // PendantCycle: u_1..u_l in cycle order

    std::vector<int> deletable() const;
    std::string name() const;
};

std::optional<ConfigD2> find_config_d2(const Graph& g);

// The one unavoidable failure: a 5-cycle component whose five lists are
// identical with exactly four colors.
struct ExceptionalC5 {
    std::vector<int> component;  // sorted vertex ids
};

using D2Result = std::variant<Coloring, ExceptionalC5>;

// Family colorers.  Each returns a coloring that passes verify_pcf; the
// C5 colorer instead reports the exceptional list assignment.
D2Result color_c5(const Graph& g, const std::vector<int>& comp,
                  const ListAssignment& l);
Coloring color_k2r(const Graph& g, const K2rStructure& k2r,
                   const ListAssignment& l);

struct ThetaSpec {
    int x = -1;
    int y = -1;
    int r = 0, s = 0, t = 0;
    std::vector<std::vector<int>> paths;  // internal vertices, x side first

    static ThetaSpec from_structure(const ThetaStructure& st);
    bool colorable_family() const { return r + s >= 1 && r + s + t >= 2; }
};

Coloring color_theta(const Graph& g, const ThetaSpec& spec,
                     const ListAssignment& l);

// Exact decision for proper conflict-free colorability of a cycle under
// the given lists (used for every cycle length; nullopt only for the
// exceptional C5 case).
std::optional<Coloring> color_cycle(const Graph& g,
                                    const std::vector<int>& order,
                                    const ListAssignment& l);

// Constructive proper conflict-free coloring under (degree+2)-lists for
// graphs with mad < 18/7.  Disconnected input is handled per component;
// an ExceptionalC5 component aborts the run and is reported.
D2Result color_degree_plus_2(const Graph& g, const ListAssignment& l);

}  // namespace pcf

#endif
