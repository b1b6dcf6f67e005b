#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdvhc/graph.hpp"
#include "rdvhc/rdv.hpp"

namespace rdvhc {

/// Balanced bipartite instance: sides m1..mr and n1..nr, every vertex with
/// degree 2 or 3. Edges are 1-based (i, j) pairs meaning m_i n_j, kept sorted.
struct BipartiteInstance {
    int r = 0;
    std::vector<std::pair<int, int>> edges;

    int m_degree(int i) const;
    int n_degree(int j) const;
    /// Rows i with (i, j) an edge, ascending.
    std::vector<int> n_neighbors(int j) const;
    bool has_edge(int i, int j) const;

    bool operator==(const BipartiteInstance& other) const {
        return r == other.r && edges == other.edges;
    }
};

/// Validates the invariants (r >= 2, degrees in {2,3}, edges in range,
/// no duplicates) and returns the instance; throws ValidationError.
BipartiteInstance make_bipartite_instance(int r, std::vector<std::pair<int, int>> edges);

struct NormalizationOutcome {
    enum class Kind { normalized, trivial_no, invalid };
    Kind kind = Kind::invalid;
    std::optional<BipartiteInstance> instance;  // set when normalized
    std::string reason;                         // set otherwise

    bool normalized() const { return kind == Kind::normalized; }
};

/// Classifies raw input: Invalid when it is not a max-degree-3 bipartite
/// instance at all (out-of-range or duplicate edges, degree > 3); TrivialNo
/// when it is one but provably has no Hamiltonian cycle on structural
/// grounds (unbalanced sides, a vertex of degree <= 1, fewer than 2 vertices
/// per side); Normalized otherwise.
NormalizationOutcome normalize(int r_m, int r_n, std::vector<std::pair<int, int>> edges);

/// The reduced instance: graph G over role-named vertices, its constructed
/// clique family (K1..Kr, then per column j the prime clique and, for
/// degree-3 columns, the double-prime clique), and the clique tree.
struct ReducedInstance {
    Graph graph;
    CliqueFamily clique_family;
    CliqueTree clique_tree;
    int r = 0;
    std::vector<int> deg3;  // ascending j with n_degree(j) == 3
};

/// Builds G from b: one clique per row vertex (cumulative over rows), one or
/// two cliques per column vertex by degree; G is the union of the cliques'
/// edge sets. The constructed family is cross-checked against maximal-clique
/// enumeration before returning.
ReducedInstance reduce(const BipartiteInstance& b);

/// The tree over the constructed cliques: a chain K1 -> ... -> Kr, arcs from
/// Kr to every prime node, and one arc from each prime node to its
/// double-prime node. Root K1.
CliqueTree build_clique_tree(const ReducedInstance& red);

/// B as a plain graph with vertices m1..mr, n1..nr.
Graph bipartite_to_graph(const BipartiteInstance& b);

/// Recovers B from a reduced instance (edges are encoded in the A-vertex
/// names); throws ValidationError if the vertex names do not decode.
BipartiteInstance bipartite_from_reduced(const ReducedInstance& red);

// Role-encoded vertex and node names.
std::string x_name(int i);
std::string y_name(int j);
std::string z_name(int j);
std::string a_name(int i, int j);
std::string k_name(int i);
std::string kp_name(int j);
std::string kpp_name(int j);
std::string m_name(int i);
std::string n_name(int j);

enum class Role { x, y, z, a };

struct RoleName {
    Role role;
    int i = 0;  // row index for x/a
    int j = 0;  // column index for y/z/a
};

/// Decodes X<i>, Y<j>, Z<j>, A<i>_<j>; nullopt when the name does not match.
std::optional<RoleName> parse_role(const std::string& name);

/// Decodes m<i> / n<j> into ('m', i) / ('n', j); nullopt when it does not match.
std::optional<std::pair<char, int>> parse_side_name(const std::string& name);

}  // namespace rdvhc
