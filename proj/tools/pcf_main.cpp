// Command-line front end: decide/construct proper conflict-free list
// colorings, verify them, compute exact maximum average degree, replay
// the discharging ledgers, and generate seeded corpora.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 precondition violation,
// 3 exceptional C5, 4 internal assertion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcf/batch.hpp"
#include "pcf/coloring.hpp"
#include "pcf/discharging.hpp"
#include "pcf/errors.hpp"
#include "pcf/exact.hpp"
#include "pcf/gen.hpp"
#include "pcf/graph.hpp"
#include "pcf/rational.hpp"
#include "pcf/reduce_d2.hpp"
#include "pcf/reduce_d3.hpp"
#include "pcf/sparsity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitExceptional = 3;
constexpr int kExitInternal = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pcf::PreconditionError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void put(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pcf::PreconditionError("cannot write " + path);
    out << text;
}

int cmd_mad(const std::string& graph_path) {
    auto g = pcf::Graph::parse(slurp(graph_path));
    auto w = pcf::mad_exact(g);
    std::cout << w.density.str() << "\n";
    for (std::size_t i = 0; i < w.subgraph_vertices.size(); ++i)
        std::cout << (i ? " " : "") << w.subgraph_vertices[i];
    std::cout << "\n";
    return kExitOk;
}

int cmd_color(const std::string& graph_path, const std::string& lists_path,
              int slack, bool fallback_exact, const std::string& out_path) {
    auto g = pcf::Graph::parse(slurp(graph_path));
    auto l = pcf::ListAssignment::parse(slurp(lists_path));
    pcf::Coloring phi;
    if (slack == 3) {
        try {
            phi = pcf::color_degree_plus_3(g, l);
        } catch (const pcf::PreconditionError& e) {
            if (!fallback_exact) throw;
            std::cerr << "engine precondition failed (" << e.what()
                      << "); falling back to the exact solver\n";
            auto res = pcf::solve_exact(g, l);
            if (!res) {
                std::cout << "UNSAT\n";
                return kExitPrecondition;
            }
            phi = *res;
        }
    } else if (slack == 2) {
        auto res = pcf::color_degree_plus_2(g, l);
        if (auto* exc = std::get_if<pcf::ExceptionalC5>(&res)) {
            std::cout << "EXCEPTIONAL_C5";
            for (int v : exc->component) std::cout << " " << v;
            std::cout << "\n";
            return kExitExceptional;
        }
        phi = std::get<pcf::Coloring>(res);
    } else {
        throw pcf::PreconditionError("--slack must be 2 or 3");
    }
    auto rep = pcf::verify_pcf(g, l, phi);
    if (!rep.empty()) throw pcf::InternalError(rep.describe());
    put(out_path, phi.write());
    return kExitOk;
}

int cmd_exact(const std::string& graph_path, const std::string& lists_path,
              int cap, const std::string& out_path) {
    auto g = pcf::Graph::parse(slurp(graph_path));
    auto l = pcf::ListAssignment::parse(slurp(lists_path));
    pcf::SolveOptions opt;
    if (cap > 0) {
        opt.cap = cap;
        opt.override_cap = true;
    }
    auto res = pcf::solve_exact(g, l, opt);
    if (!res) {
        std::cout << "UNSAT\n";
        return kExitOk;
    }
    std::cout << "SAT\n";
    put(out_path, res->write());
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& lists_path,
               const std::string& coloring_path) {
    auto g = pcf::Graph::parse(slurp(graph_path));
    auto l = pcf::ListAssignment::parse(slurp(lists_path));
    auto phi = pcf::Coloring::parse(slurp(coloring_path));
    auto rep = pcf::verify_pcf(g, l, phi);
    if (rep.empty()) {
        std::cout << "OK\n";
        return kExitOk;
    }
    std::cout << rep.describe();
    return kExitUsage;
}

int cmd_discharge(const std::string& graph_path, int theorem,
                  bool per_thread) {
    auto g = pcf::Graph::parse(slurp(graph_path));
    auto t = theorem == 1 ? pcf::Theorem::T1 : pcf::Theorem::T2;
    auto policy = per_thread ? pcf::ThreadPolicy::PerThread
                             : pcf::ThreadPolicy::PerIncidence;
    auto ledger = pcf::apply_rules(g, t, policy);
    for (std::size_t i = 0; i < ledger.vertices.size(); ++i)
        std::cout << "v " << ledger.vertices[i] << " initial "
                  << ledger.initial[i].str() << " final "
                  << ledger.final[i].str() << "\n";
    std::cout << "sum " << ledger.initial_sum().str() << "\n";
    auto cert = pcf::audit(g, t, policy);
    if (cert.kind == pcf::Certificate::Kind::NegativeCharge) {
        std::cout << "certificate NEGATIVE_CHARGE v " << cert.vertex
                  << " charge " << cert.min_charge.str() << "\n";
    } else {
        std::cout << "certificate ALL_NONNEGATIVE avg "
                  << cert.average_degree.str() << " bound "
                  << pcf::density_bound(t).str() << "\n";
    }
    if (cert.policy_sensitive)
        std::cout << "note: per-incidence and per-thread policies disagree\n";
    // Cross-check against the configuration finders: a graph where no
    // configuration exists must have every charge nonnegative.
    bool has_config = t == pcf::Theorem::T1
                          ? pcf::find_config_d3(g).has_value()
                          : pcf::find_config_d2(g).has_value();
    if (!has_config &&
        cert.kind == pcf::Certificate::Kind::NegativeCharge) {
        std::cout << "contradiction: no configuration but negative charge\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper conflict-free list coloring toolkit"};
    app.require_subcommand(1);

    std::string graph_path, lists_path, coloring_path, out_path;
    int slack = 2;
    bool fallback_exact = false;
    int cap = 0;
    int theorem = 1;
    bool per_thread = false;

    auto* mad = app.add_subcommand("mad", "exact maximum average degree");
    mad->add_option("graph", graph_path)->required();

    auto* color = app.add_subcommand("color", "constructive PCF coloring");
    color->add_option("--slack", slack, "2 or 3")->required();
    color->add_flag("--fallback-exact", fallback_exact,
                    "run the exact solver when the density gate fails");
    color->add_option("-o,--out", out_path, "coloring output file");
    color->add_option("graph", graph_path)->required();
    color->add_option("lists", lists_path)->required();

    auto* exact = app.add_subcommand("exact", "exhaustive decision");
    exact->add_option("--cap", cap, "override the vertex cap");
    exact->add_option("-o,--out", out_path, "coloring output file");
    exact->add_option("graph", graph_path)->required();
    exact->add_option("lists", lists_path)->required();

    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("lists", lists_path)->required();
    verify->add_option("coloring", coloring_path)->required();

    auto* discharge =
        app.add_subcommand("discharge", "replay a discharging argument");
    discharge->add_option("--theorem", theorem, "1 or 2")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    discharge->add_flag("--per-thread", per_thread,
                        "pay thread rules once per thread, not per incidence");
    discharge->add_option("graph", graph_path)->required();

    std::string gen_kind = "subdivided";
    std::string base = "dodecahedron";
    int sub_t = 2, gen_n = 12, palette = 12, gen_slack = 2;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "generate a graph or lists");
    gen->add_option("--kind", gen_kind,
                    "subdivided | tree | sparse | gridsub | lists | base");
    gen->add_option("--base", base, "base graph name");
    gen->add_option("-t", sub_t, "subdivision factor");
    gen->add_option("-n", gen_n, "vertex count for random generators");
    gen->add_option("--seed", seed);
    gen->add_option("--palette", palette);
    gen->add_option("--slack", gen_slack);
    gen->add_option("--graph", graph_path, "input graph (for lists)");
    gen->add_option("-o,--out", out_path);

    pcf::CorpusSpec spec;
    std::string batch_command = "color";
    int jobs = 1;
    std::string dump_dir = ".";
    bool machine = false;
    auto* batch = app.add_subcommand("batch", "run a command over a corpus");
    batch->add_option("--gen", spec.generator,
                      "trees | sparse | subdivided | gridsub | mixed | c5forced");
    batch->add_option("-n", spec.n);
    batch->add_option("-t", spec.subdivision);
    batch->add_option("--count", spec.count);
    batch->add_option("--seed", spec.seed);
    batch->add_option("--slack", spec.slack);
    batch->add_option("--palette", spec.palette);
    batch->add_option("--command", batch_command, "color | exact | discharge");
    batch->add_option("--jobs", jobs);
    batch->add_option("--dump-dir", dump_dir);
    batch->add_flag("--machine", machine, "key=value summary");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mad->parsed()) return cmd_mad(graph_path);
        if (color->parsed())
            return cmd_color(graph_path, lists_path, slack, fallback_exact,
                             out_path);
        if (exact->parsed())
            return cmd_exact(graph_path, lists_path, cap, out_path);
        if (verify->parsed())
            return cmd_verify(graph_path, lists_path, coloring_path);
        if (discharge->parsed())
            return cmd_discharge(graph_path, theorem, per_thread);
        if (gen->parsed()) {
            if (gen_kind == "lists") {
                auto g = pcf::Graph::parse(slurp(graph_path));
                put(out_path,
                    pcf::random_lists(g, gen_slack, palette, seed).write());
            } else if (gen_kind == "base") {
                put(out_path, pcf::named_graph(base).write());
            } else if (gen_kind == "subdivided") {
                put(out_path,
                    pcf::subdivide(pcf::named_graph(base), sub_t).write());
            } else if (gen_kind == "tree") {
                pcf::Rng rng(seed);
                put(out_path, pcf::random_tree(gen_n, rng).write());
            } else if (gen_kind == "sparse") {
                pcf::Rng rng(seed);
                put(out_path,
                    pcf::random_connected(gen_n, gen_n / 4, rng).write());
            } else if (gen_kind == "gridsub") {
                pcf::Rng rng(seed);
                put(out_path,
                    pcf::subdivide(
                        pcf::random_grid_subgraph(4, 4, gen_n, rng), sub_t)
                        .write());
            } else {
                throw pcf::PreconditionError("unknown gen kind: " + gen_kind);
            }
            return kExitOk;
        }
        if (batch->parsed()) {
            if (const char* env = std::getenv("PCF_SEED"))
                spec.seed = std::strtoull(env, nullptr, 10);
            auto result = pcf::run_batch(spec, batch_command, jobs, dump_dir);
            std::cout << (machine ? result.machine_report()
                                  : result.plain_report());
            return result.failed == 0 ? kExitOk : kExitUsage;
        }
    } catch (const pcf::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const pcf::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const pcf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
