#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "naive_oracles.hpp"

#include "rdvhc/errors.hpp"
#include "rdvhc/graph.hpp"
#include "rdvhc/oracle.hpp"
#include "rdvhc/reduction.hpp"

using namespace rdvhc;

namespace {

Graph path_graph(const std::vector<std::string>& names) {
    Graph g;
    for (const auto& n : names) g.add_vertex(n);
    for (std::size_t k = 0; k + 1 < names.size(); ++k) g.add_edge(names[k], names[k + 1]);
    return g;
}

Graph cycle_graph(const std::vector<std::string>& names) {
    Graph g = path_graph(names);
    g.add_edge(names.back(), names.front());
    return g;
}

Graph complete_graph(const std::vector<std::string>& names) {
    Graph g;
    for (const auto& n : names) g.add_vertex(n);
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b) g.add_edge(names[a], names[b]);
    return g;
}

BipartiteInstance c4_instance() {
    return make_bipartite_instance(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

}  // namespace

TEST_CASE("graph rejects malformed construction") {
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    CHECK_THROWS_AS(g.add_vertex("a"), ValidationError);
    CHECK_THROWS_AS(g.add_edge("a", "a"), ValidationError);
    CHECK_THROWS_AS(g.add_edge("a", "zzz"), ValidationError);
    g.add_edge("a", "b");
    CHECK_THROWS_AS(g.add_edge("b", "a"), ValidationError);
}

TEST_CASE("maximal_cliques: complete graph has one clique") {
    const auto fam = maximal_cliques(complete_graph({"a", "b", "c"}));
    REQUIRE(fam.cliques.size() == 1);
    CHECK(fam.cliques[0] == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("maximal_cliques: triangle-free path yields its edges") {
    const auto fam = maximal_cliques(path_graph({"a", "b", "c"}));
    REQUIRE(fam.cliques.size() == 2);
    CHECK(fam.cliques[0] == std::vector<std::string>{"a", "b"});
    CHECK(fam.cliques[1] == std::vector<std::string>{"b", "c"});
}

TEST_CASE("maximal_cliques: empty graph and isolated vertices") {
    CHECK(maximal_cliques(Graph{}).cliques.empty());
    Graph g;
    g.add_vertex("solo");
    const auto fam = maximal_cliques(g);
    REQUIRE(fam.cliques.size() == 1);
    CHECK(fam.cliques[0] == std::vector<std::string>{"solo"});
}

TEST_CASE("maximal_cliques of the reduced C4 instance are the constructed family") {
    const ReducedInstance red = reduce(c4_instance());
    const auto fam = maximal_cliques(red.graph);
    REQUIRE(fam.cliques.size() == 4);
    CHECK(same_clique_sets(fam, red.clique_family));
}

TEST_CASE("maximal_cliques agrees with subset enumeration on random graphs") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const int n = 3 + static_cast<int>(seed % 6);  // up to 8 vertices
        const double p = 0.2 + 0.1 * static_cast<double>(seed % 7);
        const Graph g = testing_oracles::random_graph(seed, n, p);
        const auto fast = maximal_cliques(g);
        const auto slow = testing_oracles::naive_maximal_cliques(g);
        CHECK(fast.cliques == slow.cliques);
    }
}

TEST_CASE("maximal_cliques output properties on random graphs") {
    for (std::uint64_t seed = 100; seed < 150; ++seed) {
        const int n = 4 + static_cast<int>(seed % 7);  // up to 10 vertices
        const Graph g = testing_oracles::random_graph(seed, n, 0.4);
        const auto fam = maximal_cliques(g);

        for (const auto& clique : fam.cliques)
            for (std::size_t a = 0; a < clique.size(); ++a)
                for (std::size_t b = a + 1; b < clique.size(); ++b)
                    CHECK(g.has_edge(clique[a], clique[b]));

        for (std::size_t a = 0; a < fam.cliques.size(); ++a) {
            for (std::size_t b = 0; b < fam.cliques.size(); ++b) {
                if (a == b) continue;
                CHECK(!std::includes(fam.cliques[b].begin(), fam.cliques[b].end(),
                                     fam.cliques[a].begin(), fam.cliques[a].end()));
            }
        }

        for (const auto& [u, v] : g.sorted_edges()) {
            bool covered = false;
            for (const auto& clique : fam.cliques)
                if (std::binary_search(clique.begin(), clique.end(), u) &&
                    std::binary_search(clique.begin(), clique.end(), v))
                    covered = true;
            CHECK(covered);
        }
    }
}

TEST_CASE("is_hamiltonian_cycle on the 4-cycle") {
    const Graph g = cycle_graph({"a", "b", "c", "d"});
    CHECK(is_hamiltonian_cycle(g, Cycle{{"a", "b", "c", "d"}}));
    CHECK(is_hamiltonian_cycle(g, Cycle{{"c", "b", "a", "d"}}));
    CHECK(!is_hamiltonian_cycle(g, Cycle{{"a", "b", "c"}}));
    CHECK(!is_hamiltonian_cycle(g, Cycle{{"a", "b", "d", "c"}}));
    CHECK_THROWS_AS(is_hamiltonian_cycle(g, Cycle{{"a", "b", "nope"}}), ValidationError);
}

TEST_CASE("hamiltonian cycle of the reduced C4 graph") {
    const ReducedInstance red = reduce(c4_instance());
    const Cycle cg{{"X1", "A1_1", "Y1", "A2_1", "X2", "A2_2", "Y2", "A1_2"}};
    CHECK(is_hamiltonian_cycle(red.graph, cg));
}

TEST_CASE("is_hamiltonian_cycle(g, c) implies the cycle covers the graph") {
    for (std::uint64_t seed = 7; seed < 27; ++seed) {
        const Graph g = testing_oracles::random_graph(seed, 7, 0.55);
        const auto cycle = testing_oracles::naive_hamiltonian(g);
        if (cycle) {
            CHECK(is_hamiltonian_cycle(g, *cycle));
            CHECK(cycle->size() == g.vertex_count());
        }
    }
}

TEST_CASE("cycle type invariants") {
    CHECK_THROWS_AS(Cycle(std::vector<std::string>{"a", "b"}), ValidationError);
    CHECK_THROWS_AS(Cycle(std::vector<std::string>{"a", "b", "a"}), ValidationError);
}

TEST_CASE("canonical_cycle examples") {
    CHECK(canonical_cycle(Cycle{{"b", "c", "a"}}) == Cycle{{"a", "b", "c"}});
    CHECK(canonical_cycle(Cycle{{"a", "c", "b"}}) == Cycle{{"a", "b", "c"}});
}

TEST_CASE("canonical_cycle is idempotent on shuffled inputs") {
    std::vector<std::string> names{"p", "q", "r", "s", "t", "u"};
    std::mt19937_64 eng(42);
    for (int trial = 0; trial < 100; ++trial) {
        for (std::size_t k = names.size(); k > 1; --k)
            std::swap(names[k - 1], names[eng() % k]);
        const Cycle c{names};
        const Cycle once = canonical_cycle(c);
        CHECK(canonical_cycle(once) == once);
    }
}

TEST_CASE("canonical_cycle kills rotation and reflection, exhaustively to length 7") {
    for (int len = 3; len <= 7; ++len) {
        std::vector<std::string> base;
        for (int k = 0; k < len; ++k) base.push_back(std::string(1, static_cast<char>('a' + k)));
        std::vector<std::string> perm = base;
        do {
            const Cycle reference = canonical_cycle(Cycle{perm});
            for (int shift = 0; shift < len; ++shift) {
                std::vector<std::string> rotated;
                for (int k = 0; k < len; ++k) rotated.push_back(perm[(shift + k) % len]);
                CHECK(canonical_cycle(Cycle{rotated}) == reference);
                std::vector<std::string> reflected(rotated.rbegin(), rotated.rend());
                CHECK(canonical_cycle(Cycle{reflected}) == reference);
            }
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
}
