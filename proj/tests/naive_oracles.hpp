#pragma once

// Brute-force reference implementations, kept independent of the library's
// search and enumeration code on purpose.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "rdvhc/graph.hpp"

namespace testing_oracles {

// Hamiltonian-cycle decision by checking every permutation that fixes the
// first vertex. Fine up to ~9 vertices.
inline std::optional<rdvhc::Cycle> naive_hamiltonian(const rdvhc::Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    if (n < 3) return std::nullopt;
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
        for (std::size_t k = 0; ok && k + 1 < rest.size(); ++k)
            ok = g.has_edge(rest[k], rest[k + 1]);
        if (ok) {
            std::vector<std::string> names{g.name_of(0)};
            for (int v : rest) names.push_back(g.name_of(v));
            return rdvhc::Cycle{std::move(names)};
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

// Maximal cliques by scanning all vertex subsets. Fine up to ~16 vertices.
inline rdvhc::CliqueFamily naive_maximal_cliques(const rdvhc::Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool is_clique = true;
        for (int a = 0; a < n && is_clique; ++a) {
            if (!(mask & (1u << a))) continue;
            for (int b = a + 1; b < n && is_clique; ++b) {
                if (!(mask & (1u << b))) continue;
                is_clique = g.has_edge(a, b);
            }
        }
        if (is_clique) cliques.push_back(mask);
    }
    rdvhc::CliqueFamily fam;
    for (std::uint32_t mask : cliques) {
        bool maximal = true;
        for (std::uint32_t other : cliques)
            if (other != mask && (mask & other) == mask) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<std::string> names;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) names.push_back(g.name_of(v));
        std::sort(names.begin(), names.end());
        fam.cliques.push_back(std::move(names));
    }
    std::sort(fam.cliques.begin(), fam.cliques.end());
    return fam;
}

// Deterministic random graph on n vertices named a, b, c, ...
inline rdvhc::Graph random_graph(std::uint64_t seed, int n, double edge_prob) {
    std::mt19937_64 eng(seed);
    auto flip = [&eng](double p) {
        return (eng() >> 11) < static_cast<std::uint64_t>(p * 9007199254740992.0);
    };
    rdvhc::Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(std::string(1, static_cast<char>('a' + v)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (flip(edge_prob)) g.add_edge(g.name_of(a), g.name_of(b));
    return g;
}

}  // namespace testing_oracles
