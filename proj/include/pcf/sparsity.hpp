#ifndef PCF_SPARSITY_HPP
#define PCF_SPARSITY_HPP

#include <vector>

#include "pcf/graph.hpp"
#include "pcf/rational.hpp"

namespace pcf {

struct DensityWitness {
    std::vector<int> subgraph_vertices;  // sorted
    Rational density;                    // 2 * edges(S) / |S|, exact
};

// Exact maximum average degree with a witness subgraph.  Brute-force
// subset scan for |V| <= 12 (also the test oracle); otherwise rational
// bisection over the Stern-Brocot-ordered candidate densities with a
// max-flow feasibility test.  No floating point anywhere: the engine
// thresholds 10/3 and 18/7 are not binary-representable.
DensityWitness mad_exact(const Graph& g);

struct MadBelow {
    bool below = false;
    DensityWitness witness;  // the violating subgraph when !below
};

// True iff mad(G) < bound.
MadBelow mad_below(const Graph& g, const Rational& bound);

struct Degeneracy {
    int d = 0;
    std::vector<int> elimination_order;
};

// Smallest d such that repeatedly removing a minimum-degree vertex never
// removes one of degree > d.
Degeneracy degeneracy(const Graph& g);

// 2|E(S)|/|S| for the induced subgraph on S; exposed for tests.
Rational induced_density(const Graph& g, const std::vector<int>& s);

}  // namespace pcf

#endif
