// rdvhc: reduce Hamiltonian-cycle instances on bipartite max-degree-3 graphs
// to rooted directed path graphs, translate cycles both ways, and verify
// every step with independent oracles.
//
// Exit codes: 0 answer produced, 1 property/structure failure, 2 input error,
// 3 solver budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "rdvhc/cycle_map.hpp"
#include "rdvhc/errors.hpp"
#include "rdvhc/graph.hpp"
#include "rdvhc/io.hpp"
#include "rdvhc/oracle.hpp"
#include "rdvhc/rdv.hpp"
#include "rdvhc/reduction.hpp"

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_property = 1;
constexpr int k_exit_input = 2;
constexpr int k_exit_budget = 3;

struct Options {
    std::string input;
    std::string output;
    std::string tree;
    std::string cycle;
    int r = 0;
    std::uint64_t seed = 0;
    bool plant = false;
    double extra_edge_prob = 0.0;
    std::uint64_t budget = rdvhc::k_default_budget;
    bool verbose = false;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rdvhc::ValidationError("cannot open input file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw rdvhc::ValidationError("cannot open output file: " + path);
    return out;
}

rdvhc::NormalizationOutcome normalize_file(const rdvhc::io::BipartiteFile& file) {
    // The header carries the M-side size; column indices beyond it reveal a
    // larger N side.
    int r_n = file.r;
    for (auto [i, j] : file.edges) {
        (void)i;
        if (j > r_n) r_n = j;
    }
    return rdvhc::normalize(file.r, r_n, file.edges);
}

// Loads a bipartite file and insists on a proper instance.
rdvhc::BipartiteInstance load_instance(const std::string& path) {
    auto in = open_input(path);
    const auto file = rdvhc::io::parse_bipartite(in);
    auto outcome = normalize_file(file);
    if (outcome.kind == rdvhc::NormalizationOutcome::Kind::invalid)
        throw rdvhc::ValidationError("not a max-degree-3 bipartite instance: " + outcome.reason);
    if (outcome.kind == rdvhc::NormalizationOutcome::Kind::trivial_no)
        throw rdvhc::ValidationError("instance is a trivial no (" + outcome.reason +
                                     "); nothing to translate");
    return *outcome.instance;
}

int cmd_gen(const Options& opt) {
    const rdvhc::BipartiteInstance b =
        rdvhc::gen_bipartite({opt.r, opt.seed, opt.plant, opt.extra_edge_prob});
    if (opt.output.empty()) {
        rdvhc::io::write_bipartite(std::cout, b);
    } else {
        auto out = open_output(opt.output);
        rdvhc::io::write_bipartite(out, b);
    }
    return k_exit_ok;
}

int cmd_reduce(const Options& opt) {
    auto in = open_input(opt.input);
    const auto file = rdvhc::io::parse_bipartite(in);
    auto outcome = normalize_file(file);
    if (outcome.kind == rdvhc::NormalizationOutcome::Kind::invalid) {
        std::cerr << "invalid instance: " << outcome.reason << "\n";
        return k_exit_input;
    }
    if (outcome.kind == rdvhc::NormalizationOutcome::Kind::trivial_no) {
        std::cout << "TRIVIAL-NO " << outcome.reason << "\n";
        return k_exit_ok;
    }
    const rdvhc::BipartiteInstance& b = *outcome.instance;
    const rdvhc::ReducedInstance red = rdvhc::reduce(b);

    auto out = open_output(opt.output);
    rdvhc::io::write_graph(out, red.graph);
    if (!opt.tree.empty()) {
        auto tree_out = open_output(opt.tree);
        rdvhc::io::write_clique_tree(tree_out, red.clique_tree);
    }
    std::cout << "vertices " << red.graph.vertex_count() << " = 2*" << red.r << " + "
              << red.deg3.size() << " + " << b.edges.size() << "\n";
    return k_exit_ok;
}

int cmd_solve(const Options& opt) {
    auto in = open_input(opt.input);
    const rdvhc::Graph g = rdvhc::io::parse_graph(in);
    const rdvhc::SolverResult result = rdvhc::find_hamiltonian_cycle(g, opt.budget);
    if (opt.verbose)
        std::cerr << "nodes expanded: " << result.nodes_expanded << "\n";
    if (result.found())
        rdvhc::io::write_cycle(std::cout, *result.cycle);
    else
        std::cout << "NONE\n";
    return k_exit_ok;
}

int cmd_cliques(const Options& opt) {
    auto in = open_input(opt.input);
    const rdvhc::Graph g = rdvhc::io::parse_graph(in);
    for (const auto& clique : rdvhc::maximal_cliques(g).cliques) {
        bool first = true;
        for (const auto& member : clique) {
            if (!first) std::cout << " ";
            std::cout << member;
            first = false;
        }
        std::cout << "\n";
    }
    return k_exit_ok;
}

int cmd_verify_tree(const Options& opt) {
    auto in = open_input(opt.input);
    const rdvhc::Graph g = rdvhc::io::parse_graph(in);
    auto tree_in = open_input(opt.tree);
    const rdvhc::CliqueTree ct = rdvhc::io::parse_clique_tree(tree_in);
    const rdvhc::VerificationReport report = rdvhc::verify_rdp_clique_tree(g, ct);
    if (report.pass) {
        std::cout << "OK\n";
        return k_exit_ok;
    }
    std::cout << report.to_string() << "\n";
    return k_exit_property;
}

int cmd_lift(const Options& opt) {
    const rdvhc::BipartiteInstance b = load_instance(opt.input);
    const rdvhc::ReducedInstance red = rdvhc::reduce(b);
    auto cycle_in = open_input(opt.cycle);
    const rdvhc::Cycle cb = rdvhc::io::parse_cycle(cycle_in);
    const rdvhc::Cycle cg = rdvhc::lift_cycle(b, red, cb);
    rdvhc::io::write_cycle(std::cout, rdvhc::canonical_cycle(cg));
    return k_exit_ok;
}

int cmd_project(const Options& opt) {
    const rdvhc::BipartiteInstance b = load_instance(opt.input);
    const rdvhc::ReducedInstance red = rdvhc::reduce(b);
    auto cycle_in = open_input(opt.cycle);
    const rdvhc::Cycle cg = rdvhc::io::parse_cycle(cycle_in);
    const rdvhc::Cycle cb = rdvhc::project_cycle(red, cg);
    rdvhc::io::write_cycle(std::cout, rdvhc::canonical_cycle(cb));
    return k_exit_ok;
}

int cmd_roundtrip(const Options& opt) {
    const rdvhc::BipartiteInstance b =
        rdvhc::gen_bipartite({opt.r, opt.seed, opt.plant, opt.extra_edge_prob});
    const rdvhc::ReducedInstance red = rdvhc::reduce(b);

    bool all_pass = true;
    auto check = [&all_pass](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) all_pass = false;
    };

    check("reduce-identity",
          red.graph.vertex_count() == 2 * static_cast<std::size_t>(red.r) + red.deg3.size() +
                                          b.edges.size());
    check("clique-family-oracle",
          rdvhc::same_clique_sets(rdvhc::maximal_cliques(red.graph), red.clique_family));
    check("clique-tree-certificate",
          rdvhc::verify_rdp_clique_tree(red.graph, red.clique_tree).pass);
    {
        const auto fam = rdvhc::paths_from_clique_tree(red.graph, red.clique_tree);
        check("definitional-closure",
              rdvhc::same_graph(rdvhc::intersection_graph(red.clique_tree.tree, fam), red.graph));
    }

    const rdvhc::SolverResult rb =
        rdvhc::find_hamiltonian_cycle(rdvhc::bipartite_to_graph(b), opt.budget);
    const rdvhc::SolverResult rg = rdvhc::find_hamiltonian_cycle(red.graph, opt.budget);
    if (opt.verbose)
        std::cerr << "solver nodes: B " << rb.nodes_expanded << ", G " << rg.nodes_expanded
                  << "\n";
    check("solver-agreement", rb.found() == rg.found());

    if (rb.found()) {
        try {
            const rdvhc::Cycle cg = rdvhc::lift_cycle(b, red, *rb.cycle);
            check("lift-soundness", rdvhc::is_hamiltonian_cycle(red.graph, cg));
            check("roundtrip-canonical",
                  rdvhc::canonical_cycle(rdvhc::project_cycle(red, cg)) ==
                      rdvhc::canonical_cycle(*rb.cycle));
        } catch (const rdvhc::StructureViolation& e) {
            std::cout << "FAIL lift-soundness (" << e.what() << ")\n";
            all_pass = false;
        }
    } else {
        std::cout << "SKIP lift-soundness (no cycle in B)\n";
        std::cout << "SKIP roundtrip-canonical (no cycle in B)\n";
    }

    if (rg.found()) {
        try {
            const rdvhc::Cycle cb = rdvhc::project_cycle(red, *rg.cycle);
            check("projection-soundness",
                  rdvhc::is_hamiltonian_cycle(rdvhc::bipartite_to_graph(b), cb));
        } catch (const rdvhc::StructureViolation& e) {
            std::cout << "FAIL projection-soundness (" << e.what() << ")\n";
            all_pass = false;
        }
    } else {
        std::cout << "SKIP projection-soundness (no cycle in G)\n";
    }

    return all_pass ? k_exit_ok : k_exit_property;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian-cycle reduction toolkit for rooted directed path graphs"};
    app.require_subcommand(1);

    Options opt;

    auto add_instance_flags = [&opt](CLI::App* cmd) {
        cmd->add_option("--r", opt.r, "side size of the bipartite instance")->required();
        cmd->add_option("--seed", opt.seed, "generator seed")->required();
        cmd->add_flag("--plant", opt.plant, "plant a Hamiltonian cycle");
        cmd->add_option("--extra-edge-prob", opt.extra_edge_prob,
                        "probability of each legal extra edge (planted mode)");
    };

    auto* gen = app.add_subcommand("gen", "generate a bipartite instance");
    add_instance_flags(gen);
    gen->add_option("-o,--output", opt.output, "output file (default stdout)");

    auto* reduce = app.add_subcommand("reduce", "reduce a bipartite instance to G and T");
    reduce->add_option("-i,--input", opt.input, "bipartite instance file")->required();
    reduce->add_option("-o,--output", opt.output, "graph output file")->required();
    reduce->add_option("--tree", opt.tree, "clique-tree output file");

    auto* solve = app.add_subcommand("solve", "find a Hamiltonian cycle or print NONE");
    solve->add_option("-i,--input", opt.input, "graph file")->required();
    solve->add_option("--budget", opt.budget, "node-expansion budget");
    solve->add_flag("-v", opt.verbose, "print solver stats to stderr");

    auto* cliques = app.add_subcommand("cliques", "print the maximal cliques of a graph");
    cliques->add_option("-i,--input", opt.input, "graph file")->required();

    auto* verify = app.add_subcommand("verify-tree", "check a clique-tree certificate");
    verify->add_option("-i,--input", opt.input, "graph file")->required();
    verify->add_option("--tree", opt.tree, "clique-tree file")->required();

    auto* lift = app.add_subcommand("lift", "lift a cycle of B to a cycle of G");
    lift->add_option("-i,--input", opt.input, "bipartite instance file")->required();
    lift->add_option("--cycle", opt.cycle, "cycle file over m/n vertices")->required();

    auto* project = app.add_subcommand("project", "project a cycle of G back to B");
    project->add_option("-i,--input", opt.input, "bipartite instance file")->required();
    project->add_option("--cycle", opt.cycle, "cycle file over G vertices")->required();

    auto* roundtrip = app.add_subcommand("roundtrip", "generate, reduce, solve, translate, verify");
    add_instance_flags(roundtrip);
    roundtrip->add_option("--budget", opt.budget, "node-expansion budget");
    roundtrip->add_flag("-v", opt.verbose, "print solver stats to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? k_exit_ok : k_exit_input;
    }

    try {
        if (gen->parsed() || roundtrip->parsed()) {
            if (opt.r < 2) {
                std::cerr << "--r must be >= 2, got " << opt.r << "\n";
                return k_exit_input;
            }
            if (opt.extra_edge_prob < 0.0 || opt.extra_edge_prob > 1.0) {
                std::cerr << "--extra-edge-prob must be in [0,1]\n";
                return k_exit_input;
            }
        }
        if (gen->parsed()) return cmd_gen(opt);
        if (reduce->parsed()) return cmd_reduce(opt);
        if (solve->parsed()) return cmd_solve(opt);
        if (cliques->parsed()) return cmd_cliques(opt);
        if (verify->parsed()) return cmd_verify_tree(opt);
        if (lift->parsed()) return cmd_lift(opt);
        if (project->parsed()) return cmd_project(opt);
        if (roundtrip->parsed()) return cmd_roundtrip(opt);
    } catch (const rdvhc::ResourceExhausted& e) {
        std::cerr << e.what() << "\n";
        return k_exit_budget;
    } catch (const rdvhc::StructureViolation& e) {
        std::cerr << e.what() << "\n";
        return k_exit_property;
    } catch (const rdvhc::ParseError& e) {
        std::cerr << e.what() << "\n";
        return k_exit_input;
    } catch (const rdvhc::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return k_exit_input;
    } catch (const rdvhc::GenerationError& e) {
        std::cerr << e.what() << "\n";
        return k_exit_input;
    }
    return k_exit_input;
}
