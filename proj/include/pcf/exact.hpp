#ifndef PCF_EXACT_HPP
#define PCF_EXACT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

struct SolveOptions {
    int cap = 16;             // refuse larger instances unless overridden
    bool override_cap = false;
};

// Exhaustive decision: a proper conflict-free L-coloring of g, or
// nullopt if none exists.  Backtracking over vertices in descending
// degree order; properness prunes everywhere, the conflict condition
// only once a neighborhood is fully colored (it is not monotone under
// extension before that).
std::optional<Coloring> solve_exact(const Graph& g, const ListAssignment& l,
                                    const SolveOptions& opt = {});

// Exact number of total PCF L-colorings.
std::uint64_t count_pcf(const Graph& g, const ListAssignment& l,
                        const SolveOptions& opt = {});

// Proper coloring of a 5-cycle (lists in cycle order, all of size >= 4)
// in which at most one vertex sees no unique color; returns that vertex's
// cycle position if any.  When several minimal colorings exist, one whose
// deficient position lies in prefer_deficient is chosen first.
struct NearPcfC5 {
    std::array<int, 5> colors;
    std::optional<int> deficient;  // position 0..4 on the cycle
};
NearPcfC5 color_c5_near_pcf(const std::array<std::vector<int>, 5>& lists,
                            const std::vector<int>& prefer_deficient = {});

}  // namespace pcf

#endif
