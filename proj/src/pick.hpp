#ifndef PCF_SRC_PICK_HPP
#define PCF_SRC_PICK_HPP

// Color-choice helpers shared by the two reduction engines.  Whenever a
// proof says "choose a color", the minimum admissible color is taken so
// reductions are reproducible.

#include <algorithm>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/errors.hpp"
#include "pcf/graph.hpp"

namespace pcf::detail {

inline bool contains(const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Minimum color of `list` outside `avoid`; the proofs guarantee one
// exists, so an empty choice set is an internal bug.
inline int pick_min(const std::vector<int>& list,
                    const std::vector<int>& avoid) {
    for (int c : list)
        if (!contains(avoid, c)) return c;
    throw InternalError("extension step exhausted a color list");
}

// Minimum element of U_phi(v, g); v must be non-isolated and conflict-free.
inline int pick_unique(const Graph& g, const Coloring& phi, int v) {
    auto u = unique_colors(g, phi, v);
    PCF_CHECK(!u.empty(), "no uniquely seen color at vertex " +
                              std::to_string(v));
    return u.front();
}

// list \ remove, keeping order.
inline std::vector<int> filtered(const std::vector<int>& list,
                                 const std::vector<int>& remove) {
    std::vector<int> out;
    for (int c : list)
        if (!contains(remove, c)) out.push_back(c);
    return out;
}

// First k colors (the proofs' "by deleting extra colors" trim).
inline std::vector<int> keep_smallest(std::vector<int> list, std::size_t k) {
    PCF_CHECK(list.size() >= k, "list too small to trim");
    list.resize(k);
    return list;
}

}  // namespace pcf::detail

#endif
