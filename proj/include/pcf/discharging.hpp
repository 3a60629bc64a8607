#ifndef PCF_DISCHARGING_HPP
#define PCF_DISCHARGING_HPP

#include <string>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/rational.hpp"

namespace pcf {

enum class Theorem { T1, T2 };  // initial charge 3d-10 resp. 7d-18

// A vertex attached to both ends of the same maximal thread either pays
// the thread rule once per incidence (default; matches the per-end
// charge arithmetic of the 2-vertex case analysis) or once per thread.
enum class ThreadPolicy { PerIncidence, PerThread };

struct Transfer {
    int from;
    int to;
    Rational amount;
    std::string rule;
};

struct ChargeLedger {
    Theorem theorem = Theorem::T1;
    std::vector<int> vertices;        // sorted present ids
    std::vector<Rational> initial;    // aligned with vertices
    std::vector<Rational> final;      // aligned with vertices
    std::vector<Transfer> transfers;

    Rational initial_sum() const;
    Rational final_sum() const;
    Rational initial_of(int v) const;
    Rational final_of(int v) const;
};

Rational initial_charge(Theorem t, int degree);
Rational density_bound(Theorem t);  // 10/3 resp. 18/7

ChargeLedger apply_rules(const Graph& g, Theorem t,
                         ThreadPolicy policy = ThreadPolicy::PerIncidence);

struct Certificate {
    enum class Kind { NegativeCharge, AllNonnegative };
    Kind kind = Kind::AllNonnegative;
    int vertex = -1;           // a minimum-charge vertex when negative
    Rational min_charge;
    Rational average_degree;   // 2|E|/|V|
    bool average_ge_bound = false;
    // Set when the two thread policies disagree on some final charge.
    bool policy_sensitive = false;
};

// NegativeCharge is consistent with a reducible configuration being
// present; AllNonnegative forces 2|E|/|V| >= the theorem's bound.
Certificate audit(const Graph& g, Theorem t,
                  ThreadPolicy policy = ThreadPolicy::PerIncidence);

}  // namespace pcf

#endif
