#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rdvhc {

/// Undirected graph over named vertices. Vertices keep insertion order;
/// edges are simple (no loops, no duplicates).
class Graph {
public:
    Graph() = default;

    void add_vertex(const std::string& name);
    void add_edge(const std::string& a, const std::string& b);

    bool has_vertex(const std::string& name) const;
    bool has_edge(const std::string& a, const std::string& b) const;
    bool has_edge(int a, int b) const;

    // Throws ValidationError for unknown names.
    int index_of(const std::string& name) const;
    // Returns -1 instead of throwing.
    int find_index(const std::string& name) const;
    const std::string& name_of(int index) const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<int>& neighbors(int index) const;
    int degree(int index) const;

    /// Edges as name pairs; each pair ordered, list sorted lexicographically.
    std::vector<std::pair<std::string, std::string>> sorted_edges() const;

private:
    std::vector<std::string> vertices_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;  // each list sorted ascending
    std::vector<std::pair<int, int>> edges_;
};

/// Equal vertex sets and equal edge sets (names, order-insensitive).
bool same_graph(const Graph& a, const Graph& b);

/// Cyclic vertex sequence; entries pairwise distinct, length >= 3.
/// Closure from last back to first is implicit.
class Cycle {
public:
    explicit Cycle(std::vector<std::string> order);

    const std::vector<std::string>& order() const { return order_; }
    std::size_t size() const { return order_.size(); }

    bool operator==(const Cycle& other) const { return order_ == other.order_; }
    bool operator!=(const Cycle& other) const { return !(*this == other); }

private:
    std::vector<std::string> order_;
};

/// A list of vertex-name sets; each clique stored sorted ascending.
struct CliqueFamily {
    std::vector<std::vector<std::string>> cliques;
};

/// Multiset equality of the two families' cliques.
bool same_clique_sets(const CliqueFamily& a, const CliqueFamily& b);

/// All inclusion-maximal cliques of g. Each clique sorted internally,
/// family sorted lexicographically. Empty graph gives an empty family.
CliqueFamily maximal_cliques(const Graph& g);

/// True iff c visits every vertex of g exactly once and all consecutive
/// pairs (wraparound included) are edges. Unknown names throw ValidationError.
bool is_hamiltonian_cycle(const Graph& g, const Cycle& c);

/// Rotation- and reflection-insensitive normal form: smallest vertex first,
/// then the direction whose second vertex is smaller. Idempotent.
Cycle canonical_cycle(const Cycle& c);

}  // namespace rdvhc
