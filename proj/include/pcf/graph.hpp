#ifndef PCF_GRAPH_HPP
#define PCF_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcf {

// Simple undirected graph over dense integer ids.  Vertex ids are stable
// under deletion: delete_vertices() returns a new graph on the same id
// universe with the chosen vertices absent, so partial colorings built on
// a reduced graph map back to the parent without translation.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Text format: first line "n m", then m lines "u v".
    // Rejects malformed lines, out-of-range ids, self-loops and
    // duplicate edges with distinct parse errors.
    static Graph parse(const std::string& text);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Emits the same format; edges sorted lexicographically.  The first
    // number is the id-universe size, so graphs with deleted vertices
    // re-parse with the holes as isolated vertices.
    std::string write() const;

    void add_edge(int u, int v);

    int universe() const { return static_cast<int>(adj_.size()); }
    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return num_edges_; }
    bool has_vertex(int v) const {
        return v >= 0 && v < universe() && present_[v];
    }
    // Sorted list of present ids.
    std::vector<int> vertices() const;
    // Sorted neighbor list; throws UnknownVertexError for absent ids.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    Graph delete_vertices(const std::vector<int>& s) const;

    std::vector<std::vector<int>> components() const;
    // Length of the shortest cycle; nullopt for forests.
    std::optional<int> girth() const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::vector<char> present_;
    int num_vertices_ = 0;
    int num_edges_ = 0;
};

// A maximal path of degree-2 vertices.  Both attachment vertices exist
// (components that are entire cycles are never reported as threads) and
// coincide exactly for pendant cycles.  The path is oriented so that its
// first vertex id is not larger than its last.
struct Thread {
    std::vector<int> path;
    int attach_front = -1;  // adjacent to path.front()
    int attach_back = -1;   // adjacent to path.back()

    int length() const { return static_cast<int>(path.size()); }
};

// Every degree-2 vertex whose component is not a full cycle appears in
// exactly one returned thread.  Threads are ordered by smallest
// contained id.
std::vector<Thread> maximal_threads(const Graph& g);

// Hubs and categorized internal paths of a theta graph
// (two adjacent hubs plus internally disjoint paths of lengths 2, 3, 4).
struct ThetaStructure {
    int x = -1;
    int y = -1;
    int r = 0;  // paths x-u-y
    int s = 0;  // paths x-u-v-y
    int t = 0;  // paths x-u-v-w-y
    // Internal vertices of each path, listed from the x side.
    std::vector<std::vector<int>> paths;
};

// Classification of a connected component against the named families.
// Kinds are mutually exclusive; precedence C5 > Theta > K2r > Cycle.
struct Component {
    enum class Kind { Generic, Cycle, K2r, Theta, C5 };

    std::vector<int> vertices;
    Kind kind = Kind::Generic;
    int cycle_len = 0;                      // Cycle and C5
    int k2r_r = 0;                          // K2r
    ThetaStructure theta;                   // Theta

    bool is_c5() const { return kind == Kind::C5; }
    bool is_cycle() const { return kind == Kind::Cycle || kind == Kind::C5; }
    bool is_k2r() const { return kind == Kind::K2r; }
    bool is_theta() const { return kind == Kind::Theta; }
};

Component classify_component(const Graph& g, const std::vector<int>& comp);

// Helpers shared by the classification and the degree+2 engine dispatch.
// cycle_order returns the component's vertices in cycle order starting
// from the smallest id, or nullopt if the component is not a cycle.
std::optional<std::vector<int>> cycle_order(const Graph& g,
                                            const std::vector<int>& comp);
// Hub pair {x, y} (x < y) and r if the component is K_{2,r}.
struct K2rStructure {
    int x = -1;
    int y = -1;
    int r = 0;
    std::vector<int> legs;
};
std::optional<K2rStructure> match_k2r(const Graph& g,
                                      const std::vector<int>& comp);
std::optional<ThetaStructure> match_theta(const Graph& g,
                                          const std::vector<int>& comp);

}  // namespace pcf

#endif
