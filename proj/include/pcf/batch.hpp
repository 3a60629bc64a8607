#ifndef PCF_BATCH_HPP
#define PCF_BATCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// Corpus description; the seed fully determines every instance.
struct CorpusSpec {
    std::string generator = "sparse";  // trees | sparse | subdivided |
                                       // gridsub | mixed | c5forced
    int n = 12;              // target size for the random generators
    int subdivision = 2;     // t for the subdivision generators
    int count = 10;
    std::uint64_t seed = 1;
    int slack = 2;
    int palette = 12;
};

struct Instance {
    int index = 0;
    Graph graph;
    ListAssignment lists;
    std::string label;
};

// Deterministic corpus expansion (instance i depends only on seed and i).
std::vector<Instance> generate_corpus(const CorpusSpec& spec);

struct BatchResult {
    int total = 0;
    int passed = 0;
    int exceptional = 0;  // legitimate EXCEPTIONAL_C5 outcomes
    int failed = 0;
    double seconds = 0.0;
    std::vector<std::string> lines;     // per-instance, sorted by index
    std::vector<std::string> failures;  // reproducer file names

    std::string plain_report() const;
    std::string machine_report() const;  // key=value lines
};

// command: color | exact | discharge.  color runs the engine matching
// spec.slack and verifies every output; exact runs the solver on
// instances within its cap; discharge replays both ledgers and checks
// the sum identities.  Failing instances are dumped as reproducer files
// under dump_dir (graph + lists + a note).
BatchResult run_batch(const CorpusSpec& spec, const std::string& command,
                      int jobs = 1, const std::string& dump_dir = ".");

}  // namespace pcf

#endif
