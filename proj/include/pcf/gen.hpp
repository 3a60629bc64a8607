#ifndef PCF_GEN_HPP
#define PCF_GEN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// Deterministic RNG wrapper.  mt19937_64 output is portable; the
// distribution helpers here avoid std::uniform_int_distribution, whose
// results vary across standard libraries, so corpora are bit-identical
// everywhere for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);
    int range(int lo, int hi);  // inclusive bounds

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[below(i)]);
    }

    // k distinct values from {1..palette}, sorted.
    std::vector<int> subset(int k, int palette);

private:
    std::mt19937_64 eng_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Named base graphs for the subdivision corpora (all planar except
// petersen, which exists for the mad spot checks).
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_list();

Graph generalized_petersen(int n, int k);
Graph grid_graph(int rows, int cols);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Every edge replaced by a path with t internal vertices; original ids
// are preserved and internal vertices appended in edge order.
Graph subdivide(const Graph& g, int t);
// Per-edge subdivision factor drawn uniformly from [tmin, tmax].
Graph subdivide_mixed(const Graph& g, int tmin, int tmax, Rng& rng);

Graph random_tree(int n, Rng& rng);
// Random spanning tree plus `extra` additional edges (fewer if the graph
// fills up).
Graph random_connected(int n, int extra, Rng& rng);
// Uniform random m-subset of all pairs; may be disconnected.
Graph random_graph_nm(int n, int m, Rng& rng);
// Connected subgraph of a rows x cols grid containing `keep` vertices.
Graph random_grid_subgraph(int rows, int cols, int keep, Rng& rng);

// Each list a uniform random (d(v)+slack)-subset of {1..palette}.
ListAssignment random_lists(const Graph& g, int slack, int palette,
                            std::uint64_t seed);

}  // namespace pcf

#endif
