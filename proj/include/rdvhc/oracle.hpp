#pragma once

#include <cstdint>
#include <optional>

#include "rdvhc/graph.hpp"
#include "rdvhc/reduction.hpp"

namespace rdvhc {

struct SolverResult {
    std::optional<Cycle> cycle;  // canonical form when found
    std::uint64_t nodes_expanded = 0;
    double elapsed_seconds = 0.0;

    bool found() const { return cycle.has_value(); }
};

inline constexpr std::uint64_t k_default_budget = 50'000'000;

/// Exact Hamiltonian-cycle search: deterministic backtracking with
/// unreachable-vertex cut-off and forced-edge propagation around vertices
/// whose remaining degree drops to 2. Exceeding the node-expansion budget
/// throws ResourceExhausted; that is never reported as "no cycle".
SolverResult find_hamiltonian_cycle(const Graph& g, std::uint64_t budget = k_default_budget);

struct GenSpec {
    int r = 2;
    std::uint64_t seed = 0;
    bool plant = true;
    double extra_edge_prob = 0.0;
};

/// Deterministic instance generator (mt19937_64 keyed by seed). Planted:
/// start from the cycle m1 n1 m2 n2 ... mr nr and offer every remaining pair
/// in lexicographic order an independent coin flip, keeping degrees <= 3.
/// Unplanted: rejection-sample per-edge coin flips until all degrees land in
/// {2,3}; throws GenerationError when retries run out.
BipartiteInstance gen_bipartite(const GenSpec& spec);

/// Every bipartite instance on r+r vertices with all degrees in {2,3},
/// exactly once, in lexicographic edge-set order. Supports r in {2,3}.
std::vector<BipartiteInstance> enumerate_small_instances(int r);

}  // namespace rdvhc
