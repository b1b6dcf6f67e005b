#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rdvhc/graph.hpp"

namespace rdvhc {

/// Directed tree candidate: named nodes plus parent->child arcs. Arc endpoints
/// must be declared and arcs must be simple; rootedness is NOT enforced here
/// so that broken certificates can be represented and then reported on.
class RootedDirectedTree {
public:
    RootedDirectedTree() = default;

    void add_node(const std::string& name);
    void add_arc(const std::string& parent, const std::string& child);

    bool has_node(const std::string& name) const;
    int index_of(const std::string& name) const;  // throws ValidationError
    int find_index(const std::string& name) const;
    const std::string& name_of(int index) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& children(int index) const;
    int in_degree(int index) const;
    bool has_arc(int parent, int child) const;

private:
    std::vector<std::string> nodes_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> children_;  // sorted ascending
    std::vector<int> in_degree_;
};

/// Reason the structure fails to be a rooted directed tree, or nullopt.
std::optional<std::string> rooted_tree_violation(const RootedDirectedTree& t);

/// Node sequence that must follow arcs first->last; single node allowed.
struct DirectedPath {
    std::vector<std::string> nodes;

    bool operator==(const DirectedPath& other) const { return nodes == other.nodes; }
};

/// True iff `path` is non-empty, has pairwise distinct known nodes, and each
/// consecutive pair is an arc of t.
bool is_valid_path(const RootedDirectedTree& t, const DirectedPath& path);

/// Tree whose nodes carry vertex-set labels (the clique at that node).
struct CliqueTree {
    RootedDirectedTree tree;
    std::map<std::string, std::vector<std::string>> label;  // node -> sorted members
};

/// Per-vertex assignment of directed paths in a shared host tree.
/// Key order is meaningful and drives downstream vertex order.
struct DirectedPathFamily {
    std::vector<std::pair<std::string, DirectedPath>> assignment;
};

/// True iff the sub-digraph of t induced on `subset` is a single directed
/// path: in/out degree <= 1 within the subset, exactly one source, connected.
/// Singletons count (a directed path of length zero).
bool is_directed_path(const RootedDirectedTree& t, const std::vector<std::string>& subset);

enum class VerifyFailure {
    tree_not_rooted,
    labels_mismatch,
    vertex_path_broken,
};

/// Stable machine-readable code for a failure reason.
std::string failure_code(VerifyFailure f);

struct VerificationReport {
    bool pass = true;
    VerifyFailure failure = VerifyFailure::tree_not_rooted;  // valid when !pass
    std::string detail;                                      // offending names

    std::string to_string() const;
};

/// Checks that ct certifies g as a rooted directed path graph:
/// (1) the tree is a rooted directed tree, (2) the node labels are exactly
/// the maximal cliques of g, (3) for every vertex the set of nodes whose
/// labels contain it induces a directed path. Stops at the first violation.
/// A label naming a vertex absent from g throws ValidationError.
VerificationReport verify_rdp_clique_tree(const Graph& g, const CliqueTree& ct);

/// Thrown when an operation requires a verified clique tree and the check fails.
struct CliqueTreeInvalid : std::runtime_error {
    explicit CliqueTreeInvalid(VerificationReport r)
        : std::runtime_error("clique tree rejected: " + r.to_string()), report(std::move(r)) {}
    VerificationReport report;
};

/// One graph vertex per family member, in key order; edge iff the two paths
/// share at least one tree node. Invalid paths throw ValidationError.
Graph intersection_graph(const RootedDirectedTree& t, const DirectedPathFamily& fam);

/// For each vertex v of g (in g's vertex order), the directed path over the
/// clique-tree nodes whose labels contain v. Requires verify_rdp_clique_tree
/// to pass; otherwise throws CliqueTreeInvalid carrying the report.
DirectedPathFamily paths_from_clique_tree(const Graph& g, const CliqueTree& ct);

}  // namespace rdvhc
