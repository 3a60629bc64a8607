#include "pcf/discharging.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pcf/errors.hpp"

namespace pcf {

Rational ChargeLedger::initial_sum() const {
    Rational s(0);
    for (const auto& c : initial) s += c;
    return s;
}

Rational ChargeLedger::final_sum() const {
    Rational s(0);
    for (const auto& c : final) s += c;
    return s;
}

namespace {

int index_of(const std::vector<int>& vs, int v) {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    PCF_CHECK(it != vs.end() && *it == v, "vertex not in ledger");
    return static_cast<int>(it - vs.begin());
}

}  // namespace

Rational ChargeLedger::initial_of(int v) const {
    return initial[index_of(vertices, v)];
}

Rational ChargeLedger::final_of(int v) const {
    return final[index_of(vertices, v)];
}

Rational initial_charge(Theorem t, int degree) {
    return t == Theorem::T1 ? Rational(3 * degree - 10)
                            : Rational(7 * degree - 18);
}

Rational density_bound(Theorem t) {
    return t == Theorem::T1 ? Rational(10, 3) : Rational(18, 7);
}

namespace {

struct LedgerBuilder {
    const Graph& g;
    ChargeLedger ledger;

    LedgerBuilder(const Graph& g_, Theorem t) : g(g_) {
        ledger.theorem = t;
        ledger.vertices = g.vertices();
        for (int v : ledger.vertices)
            ledger.initial.push_back(initial_charge(t, g.degree(v)));
        ledger.final = ledger.initial;
    }

    void send(int from, int to, Rational amount, const std::string& rule) {
        ledger.final[index_of(ledger.vertices, from)] -= amount;
        ledger.final[index_of(ledger.vertices, to)] += amount;
        ledger.transfers.push_back({from, to, amount, rule});
    }
};

void apply_t1(LedgerBuilder& b) {
    // 4+-vertices pay 2 per adjacent 2-vertex and 1/3 per adjacent
    // 3-vertex.
    for (int v : b.ledger.vertices) {
        if (b.g.degree(v) < 4) continue;
        for (int w : b.g.neighbors(v)) {
            if (b.g.degree(w) == 2)
                b.send(v, w, Rational(2), "T1:to-2-vertex");
            else if (b.g.degree(w) == 3)
                b.send(v, w, Rational(1, 3), "T1:to-3-vertex");
        }
    }
}

void apply_t2(LedgerBuilder& b, ThreadPolicy policy) {
    const Graph& g = b.g;

    // R1: a 3-vertex with exactly two 2-neighbors sends 3/2 to each;
    // with exactly one it sends 2.
    for (int v : b.ledger.vertices) {
        if (g.degree(v) != 3) continue;
        std::vector<int> twos;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 2) twos.push_back(w);
        if (twos.size() == 2) {
            for (int w : twos) b.send(v, w, Rational(3, 2), "R1:two-2-neighbors");
        } else if (twos.size() == 1) {
            b.send(v, twos[0], Rational(2), "R1:one-2-neighbor");
        }
    }

    // R2: per 4+-vertex.  Thread rules fire for incident maximal 2- and
    // 3-threads; a lone 2-vertex (maximal 1-thread) instead receives 5/2
    // or 2 depending on its other neighbor's degree.
    auto threads = maximal_threads(g);
    std::map<int, const Thread*> thread_of;  // by contained vertex
    for (const auto& t : threads)
        for (int v : t.path) thread_of[v] = &t;

    std::map<const Thread*, int> thread_index;
    for (std::size_t i = 0; i < threads.size(); ++i)
        thread_index[&threads[i]] = static_cast<int>(i);
    std::set<std::pair<int, int>> paid;  // (sender, thread index)

    for (int v : b.ledger.vertices) {
        if (g.degree(v) < 4) continue;
        for (int w : g.neighbors(v)) {
            if (g.degree(w) != 2) continue;
            auto it = thread_of.find(w);
            PCF_CHECK(it != thread_of.end(),
                      "degree-2 neighbor of a 4+-vertex outside any thread");
            const Thread* t = it->second;
            int k = t->length();
            if (k == 1) {
                int other = (t->attach_front == v && t->attach_back != v)
                                ? t->attach_back
                                : (t->attach_back == v && t->attach_front != v)
                                      ? t->attach_front
                                      : -1;
                PCF_CHECK(other >= 0, "1-thread without a second attachment");
                if (g.degree(other) == 3)
                    b.send(v, w, Rational(5, 2), "R2:2-vertex-with-3-neighbor");
                else if (g.degree(other) >= 4)
                    b.send(v, w, Rational(2), "R2:2-vertex-with-4-neighbor");
                // other of degree 1: no rule fires
            } else if (k == 2 || k == 3) {
                // Incidence through w requires w to be a thread end
                // adjacent to v; interior thread vertices have both
                // neighbors inside the thread.
                bool front = (t->path.front() == w && t->attach_front == v);
                bool back = (t->path.back() == w && t->attach_back == v);
                if (!front && !back) continue;
                int ti = thread_index[t];
                if (policy == ThreadPolicy::PerThread &&
                    !paid.insert({v, ti}).second)
                    continue;
                std::string rule = (k == 2 ? "R2:maximal-2-thread"
                                           : "R2:maximal-3-thread");
                rule += front ? "@front" : "@back";
                for (int x : t->path) b.send(v, x, Rational(2), rule);
            }
            // k >= 4: no rule fires (no such thread survives reduction)
        }
    }
}

}  // namespace

ChargeLedger apply_rules(const Graph& g, Theorem t, ThreadPolicy policy) {
    LedgerBuilder b(g, t);
    if (t == Theorem::T1)
        apply_t1(b);
    else
        apply_t2(b, policy);
    return b.ledger;
}

Certificate audit(const Graph& g, Theorem t, ThreadPolicy policy) {
    auto ledger = apply_rules(g, t, policy);
    Certificate cert;
    cert.min_charge = Rational(0);
    bool first = true;
    for (std::size_t i = 0; i < ledger.vertices.size(); ++i) {
        if (first || ledger.final[i] < cert.min_charge) {
            cert.min_charge = ledger.final[i];
            cert.vertex = ledger.vertices[i];
            first = false;
        }
    }
    if (!first && cert.min_charge < Rational(0)) {
        cert.kind = Certificate::Kind::NegativeCharge;
    } else {
        cert.kind = Certificate::Kind::AllNonnegative;
    }
    if (g.num_vertices() > 0) {
        cert.average_degree = Rational(2 * g.num_edges(), g.num_vertices());
        cert.average_ge_bound = cert.average_degree >= density_bound(t);
        if (cert.kind == Certificate::Kind::AllNonnegative)
            PCF_CHECK(cert.average_ge_bound,
                      "all charges nonnegative but average degree below bound");
    }
    if (t == Theorem::T2) {
        auto other = apply_rules(
            g, t,
            policy == ThreadPolicy::PerIncidence ? ThreadPolicy::PerThread
                                                 : ThreadPolicy::PerIncidence);
        for (std::size_t i = 0; i < ledger.vertices.size(); ++i) {
            if (ledger.final[i] != other.final[i]) {
                cert.policy_sensitive = true;
                break;
            }
        }
    }
    return cert;
}

}  // namespace pcf
