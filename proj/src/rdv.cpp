#include "rdvhc/rdv.hpp"

#include <algorithm>
#include <set>

#include "rdvhc/errors.hpp"

namespace rdvhc {

void RootedDirectedTree::add_node(const std::string& name) {
    if (name.empty()) throw ValidationError("empty node name");
    if (index_.count(name)) throw ValidationError("duplicate node: " + name);
    index_[name] = static_cast<int>(nodes_.size());
    nodes_.push_back(name);
    children_.emplace_back();
    in_degree_.push_back(0);
}

void RootedDirectedTree::add_arc(const std::string& parent, const std::string& child) {
    const int p = index_of(parent);
    const int c = index_of(child);
    if (p == c) throw ValidationError("self-arc at " + parent);
    if (has_arc(p, c)) throw ValidationError("duplicate arc: " + parent + " -> " + child);
    auto& lst = children_[p];
    lst.insert(std::lower_bound(lst.begin(), lst.end(), c), c);
    in_degree_[c] += 1;
    arcs_.emplace_back(p, c);
}

bool RootedDirectedTree::has_node(const std::string& name) const { return index_.count(name) > 0; }

int RootedDirectedTree::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError("unknown tree node: " + name);
    return it->second;
}

int RootedDirectedTree::find_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

const std::string& RootedDirectedTree::name_of(int index) const { return nodes_.at(index); }

const std::vector<int>& RootedDirectedTree::children(int index) const {
    return children_.at(index);
}

int RootedDirectedTree::in_degree(int index) const { return in_degree_.at(index); }

bool RootedDirectedTree::has_arc(int parent, int child) const {
    const auto& lst = children_.at(parent);
    return std::binary_search(lst.begin(), lst.end(), child);
}

std::optional<std::string> rooted_tree_violation(const RootedDirectedTree& t) {
    const int n = static_cast<int>(t.node_count());
    if (n == 0) return "empty tree";

    std::vector<std::string> roots;
    for (int v = 0; v < n; ++v) {
        if (t.in_degree(v) == 0) roots.push_back(t.name_of(v));
        if (t.in_degree(v) > 1) return "node " + t.name_of(v) + " has in-degree > 1";
    }
    if (roots.empty()) return "no in-degree-0 node";
    if (roots.size() > 1) {
        std::string detail = std::to_string(roots.size()) + " in-degree-0 nodes:";
        for (const auto& r : roots) detail += " " + r;
        return detail;
    }
    if (t.arc_count() != t.node_count() - 1)
        return "arc count " + std::to_string(t.arc_count()) + " != node count - 1";

    // With a unique root and in-degrees <= 1, reachability from the root is
    // the remaining tree condition.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{t.index_of(roots.front())};
    seen[stack.front()] = 1;
    int reached = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int c : t.children(v)) {
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
        }
    }
    if (reached != n) return "not connected from root " + roots.front();
    return std::nullopt;
}

bool is_valid_path(const RootedDirectedTree& t, const DirectedPath& path) {
    if (path.nodes.empty()) return false;
    std::set<std::string> seen;
    for (const auto& name : path.nodes) {
        if (t.find_index(name) < 0) return false;
        if (!seen.insert(name).second) return false;
    }
    for (std::size_t k = 0; k + 1 < path.nodes.size(); ++k)
        if (!t.has_arc(t.index_of(path.nodes[k]), t.index_of(path.nodes[k + 1]))) return false;
    return true;
}

namespace {

// Orders `subset` along arcs if it induces a directed path, else nullopt.
std::optional<std::vector<int>> trace_induced_path(const RootedDirectedTree& t,
                                                   const std::vector<int>& subset) {
    std::set<int> in_subset(subset.begin(), subset.end());
    if (in_subset.size() != subset.size()) return std::nullopt;

    std::map<int, int> next;  // within-subset successor
    std::map<int, int> in_deg;
    for (int v : subset) in_deg[v] = 0;
    for (int v : subset) {
        int out = 0;
        for (int c : t.children(v)) {
            if (in_subset.count(c)) {
                ++out;
                next[v] = c;
                in_deg[c] += 1;
            }
        }
        if (out > 1) return std::nullopt;
    }
    int source = -1;
    for (auto [v, d] : in_deg) {
        if (d > 1) return std::nullopt;
        if (d == 0) {
            if (source != -1) return std::nullopt;
            source = v;
        }
    }
    if (source == -1) return std::nullopt;

    std::vector<int> order;
    for (int v = source; ; ) {
        order.push_back(v);
        auto it = next.find(v);
        if (it == next.end()) break;
        v = it->second;
    }
    if (order.size() != subset.size()) return std::nullopt;
    return order;
}

}  // namespace

bool is_directed_path(const RootedDirectedTree& t, const std::vector<std::string>& subset) {
    if (subset.empty()) throw ValidationError("empty subset");
    std::vector<int> idx;
    idx.reserve(subset.size());
    std::set<int> dedupe;
    for (const auto& name : subset) {
        const int v = t.index_of(name);
        if (!dedupe.insert(v).second) throw ValidationError("repeated node in subset: " + name);
        idx.push_back(v);
    }
    return trace_induced_path(t, idx).has_value();
}

std::string failure_code(VerifyFailure f) {
    switch (f) {
        case VerifyFailure::tree_not_rooted: return "tree-not-rooted";
        case VerifyFailure::labels_mismatch: return "labels-mismatch";
        case VerifyFailure::vertex_path_broken: return "vertex-path-broken";
    }
    return "unknown";
}

std::string VerificationReport::to_string() const {
    if (pass) return "pass";
    return failure_code(failure) + ": " + detail;
}

VerificationReport verify_rdp_clique_tree(const Graph& g, const CliqueTree& ct) {
    for (const auto& node : ct.tree.nodes()) {
        auto it = ct.label.find(node);
        if (it == ct.label.end() || it->second.empty())
            throw ValidationError("node " + node + " has no label");
        for (const auto& member : it->second)
            if (!g.has_vertex(member))
                throw ValidationError("label of " + node + " references unknown vertex " + member);
    }
    for (const auto& [node, members] : ct.label) {
        (void)members;
        if (!ct.tree.has_node(node)) throw ValidationError("label for unknown node " + node);
    }

    VerificationReport report;
    if (auto violation = rooted_tree_violation(ct.tree)) {
        report.pass = false;
        report.failure = VerifyFailure::tree_not_rooted;
        report.detail = *violation;
        return report;
    }

    std::vector<std::vector<std::string>> labels;
    labels.reserve(ct.tree.node_count());
    for (const auto& node : ct.tree.nodes()) {
        auto members = ct.label.at(node);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        labels.push_back(std::move(members));
    }
    std::vector<std::vector<std::string>> sorted_labels = labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    const CliqueFamily oracle = maximal_cliques(g);
    if (sorted_labels != oracle.cliques) {
        report.pass = false;
        report.failure = VerifyFailure::labels_mismatch;
        // Name the first clique present on one side only.
        std::string offending;
        for (const auto& c : sorted_labels) {
            if (!std::binary_search(oracle.cliques.begin(), oracle.cliques.end(), c)) {
                offending = "label not a maximal clique:";
                for (const auto& m : c) offending += " " + m;
                break;
            }
        }
        if (offending.empty()) {
            for (const auto& c : oracle.cliques) {
                if (!std::binary_search(sorted_labels.begin(), sorted_labels.end(), c)) {
                    offending = "maximal clique missing from labels:";
                    for (const auto& m : c) offending += " " + m;
                    break;
                }
            }
        }
        if (offending.empty()) offending = "label multiset differs from maximal cliques";
        report.detail = offending;
        return report;
    }

    for (const auto& vertex : g.vertices()) {
        std::vector<std::string> holding;
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (std::binary_search(labels[k].begin(), labels[k].end(), vertex))
                holding.push_back(ct.tree.nodes()[k]);
        if (!is_directed_path(ct.tree, holding)) {
            report.pass = false;
            report.failure = VerifyFailure::vertex_path_broken;
            std::string detail = "vertex " + vertex + " lies in nodes";
            for (const auto& node : holding) detail += " " + node;
            detail += " which do not induce a directed path";
            report.detail = detail;
            return report;
        }
    }
    return report;
}

Graph intersection_graph(const RootedDirectedTree& t, const DirectedPathFamily& fam) {
    for (const auto& [key, path] : fam.assignment)
        if (!is_valid_path(t, path))
            throw ValidationError("family member " + key + " is not a valid directed path");

    Graph g;
    for (const auto& [key, path] : fam.assignment) {
        (void)path;
        g.add_vertex(key);
    }
    std::vector<std::set<int>> node_sets;
    node_sets.reserve(fam.assignment.size());
    for (const auto& [key, path] : fam.assignment) {
        (void)key;
        std::set<int> s;
        for (const auto& node : path.nodes) s.insert(t.index_of(node));
        node_sets.push_back(std::move(s));
    }
    for (std::size_t a = 0; a < node_sets.size(); ++a) {
        for (std::size_t b = a + 1; b < node_sets.size(); ++b) {
            const auto& small = node_sets[a].size() <= node_sets[b].size() ? node_sets[a]
                                                                           : node_sets[b];
            const auto& large = node_sets[a].size() <= node_sets[b].size() ? node_sets[b]
                                                                           : node_sets[a];
            bool intersects = false;
            for (int v : small) {
                if (large.count(v)) {
                    intersects = true;
                    break;
                }
            }
            if (intersects)
                g.add_edge(fam.assignment[a].first, fam.assignment[b].first);
        }
    }
    return g;
}

DirectedPathFamily paths_from_clique_tree(const Graph& g, const CliqueTree& ct) {
    VerificationReport report = verify_rdp_clique_tree(g, ct);
    if (!report.pass) throw CliqueTreeInvalid(std::move(report));

    std::vector<std::vector<std::string>> labels;
    labels.reserve(ct.tree.node_count());
    for (const auto& node : ct.tree.nodes()) {
        auto members = ct.label.at(node);
        std::sort(members.begin(), members.end());
        labels.push_back(std::move(members));
    }

    DirectedPathFamily fam;
    for (const auto& vertex : g.vertices()) {
        std::vector<int> holding;
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (std::binary_search(labels[k].begin(), labels[k].end(), vertex))
                holding.push_back(static_cast<int>(k));
        auto ordered = trace_induced_path(ct.tree, holding);
        if (!ordered)
            throw CliqueTreeInvalid(VerificationReport{
                false, VerifyFailure::vertex_path_broken, "vertex " + vertex});
        DirectedPath path;
        for (int node : *ordered) path.nodes.push_back(ct.tree.name_of(node));
        fam.assignment.emplace_back(vertex, std::move(path));
    }
    return fam;
}

}  // namespace rdvhc
