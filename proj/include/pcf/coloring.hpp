#ifndef PCF_COLORING_HPP
#define PCF_COLORING_HPP

#include <string>
#include <utility>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

// Per-vertex finite color sets (colors are opaque nonnegative integers;
// no palette normalization happens anywhere).
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(int universe) : lists_(universe) {}

    // File format: one line per vertex, "v: c1 c2 ...".
    static ListAssignment parse(const std::string& text);
    std::string write() const;

    int universe() const { return static_cast<int>(lists_.size()); }
    void set(int v, std::vector<int> colors);
    bool has(int v) const {
        return v >= 0 && v < universe() && !lists_[v].empty();
    }
    // Sorted, duplicate-free.
    const std::vector<int>& list(int v) const;

private:
    std::vector<std::vector<int>> lists_;
};

// Partial vertex -> color map with an explicitly tracked domain.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int universe) : color_(universe, kUncolored) {}

    // File format: one line per vertex, "v c".
    static Coloring parse(const std::string& text);
    std::string write() const;

    int universe() const { return static_cast<int>(color_.size()); }
    bool is_colored(int v) const {
        return v >= 0 && v < universe() && color_[v] != kUncolored;
    }
    int color(int v) const;
    void set(int v, int c);
    void unset(int v);
    bool total_on(const Graph& g) const;
    // Copies the colors of the other coloring's domain into this one.
    void merge(const Coloring& other);

    static constexpr int kUncolored = -1;

private:
    std::vector<int> color_;
};

// U_phi(v, G): colors appearing exactly once among the colored
// neighbors of v.  Uncolored neighbors are ignored, so extension steps
// may query partially colored graphs.
std::vector<int> unique_colors(const Graph& g, const Coloring& phi, int v);

struct PcfReport {
    std::vector<std::pair<int, int>> proper_violations;  // monochromatic edges
    std::vector<int> conflict_violations;  // non-isolated v with empty U
    std::vector<int> list_violations;      // colored outside their list

    bool empty() const {
        return proper_violations.empty() && conflict_violations.empty() &&
               list_violations.empty();
    }
    std::string describe() const;
};

// Requires phi total on V(G); isolated vertices are exempt from the
// conflict condition.
PcfReport verify_pcf(const Graph& g, const ListAssignment& l,
                     const Coloring& phi);

struct SlackReport {
    bool ok = true;
    std::vector<int> deficient;  // vertices with |L(v)| < d(v)+k
};

// True iff |L(v)| >= d(v)+k for every vertex of g.
SlackReport validate_slack(const Graph& g, const ListAssignment& l, int k);

}  // namespace pcf

#endif
