#include "rdvhc/reduction.hpp"

#include <algorithm>
#include <set>

#include "rdvhc/errors.hpp"

namespace rdvhc {

int BipartiteInstance::m_degree(int i) const {
    int d = 0;
    for (auto [a, b] : edges) {
        (void)b;
        if (a == i) ++d;
    }
    return d;
}

int BipartiteInstance::n_degree(int j) const {
    int d = 0;
    for (auto [a, b] : edges) {
        (void)a;
        if (b == j) ++d;
    }
    return d;
}

std::vector<int> BipartiteInstance::n_neighbors(int j) const {
    std::vector<int> rows;
    for (auto [a, b] : edges)
        if (b == j) rows.push_back(a);
    std::sort(rows.begin(), rows.end());
    return rows;
}

bool BipartiteInstance::has_edge(int i, int j) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

BipartiteInstance make_bipartite_instance(int r, std::vector<std::pair<int, int>> edges) {
    if (r < 2) throw ValidationError("side size must be >= 2, got " + std::to_string(r));
    std::sort(edges.begin(), edges.end());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [i, j] = edges[k];
        if (i < 1 || i > r || j < 1 || j > r)
            throw ValidationError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of range");
        if (k > 0 && edges[k] == edges[k - 1])
            throw ValidationError("duplicate edge (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
    BipartiteInstance b{r, std::move(edges)};
    for (int v = 1; v <= r; ++v) {
        const int dm = b.m_degree(v);
        const int dn = b.n_degree(v);
        if (dm < 2 || dm > 3)
            throw ValidationError("m" + std::to_string(v) + " has degree " + std::to_string(dm));
        if (dn < 2 || dn > 3)
            throw ValidationError("n" + std::to_string(v) + " has degree " + std::to_string(dn));
    }
    return b;
}

NormalizationOutcome normalize(int r_m, int r_n, std::vector<std::pair<int, int>> edges) {
    NormalizationOutcome out;
    auto invalid = [&out](std::string reason) {
        out.kind = NormalizationOutcome::Kind::invalid;
        out.reason = std::move(reason);
        return out;
    };
    auto trivial_no = [&out](std::string reason) {
        out.kind = NormalizationOutcome::Kind::trivial_no;
        out.reason = std::move(reason);
        return out;
    };

    if (r_m < 0 || r_n < 0) return invalid("negative side size");
    std::sort(edges.begin(), edges.end());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [i, j] = edges[k];
        if (i < 1 || i > r_m || j < 1 || j > r_n)
            return invalid("edge (" + std::to_string(i) + "," + std::to_string(j) +
                           ") out of range");
        if (k > 0 && edges[k] == edges[k - 1])
            return invalid("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) +
                           ")");
    }
    std::vector<int> dm(r_m + 1, 0), dn(r_n + 1, 0);
    for (auto [i, j] : edges) {
        dm[i] += 1;
        dn[j] += 1;
    }
    for (int i = 1; i <= r_m; ++i)
        if (dm[i] > 3) return invalid("m" + std::to_string(i) + " has degree > 3");
    for (int j = 1; j <= r_n; ++j)
        if (dn[j] > 3) return invalid("n" + std::to_string(j) + " has degree > 3");

    if (r_m != r_n) return trivial_no("unbalanced");
    for (int i = 1; i <= r_m; ++i)
        if (dm[i] <= 1) return trivial_no("degree-below-2");
    for (int j = 1; j <= r_n; ++j)
        if (dn[j] <= 1) return trivial_no("degree-below-2");
    if (r_m < 2) return trivial_no("r-below-2");

    out.kind = NormalizationOutcome::Kind::normalized;
    out.instance = make_bipartite_instance(r_m, std::move(edges));
    return out;
}

ReducedInstance reduce(const BipartiteInstance& b) {
    // Re-validate: reduce is only defined on proper instances.
    make_bipartite_instance(b.r, b.edges);

    ReducedInstance red;
    red.r = b.r;
    for (int j = 1; j <= b.r; ++j)
        if (b.n_degree(j) == 3) red.deg3.push_back(j);

    // Vertices in role order: all X, all Y, Z for degree-3 columns, all A.
    for (int i = 1; i <= b.r; ++i) red.graph.add_vertex(x_name(i));
    for (int j = 1; j <= b.r; ++j) red.graph.add_vertex(y_name(j));
    for (int j : red.deg3) red.graph.add_vertex(z_name(j));
    for (auto [i, j] : b.edges) red.graph.add_vertex(a_name(i, j));

    // Row cliques accumulate every A-vertex with row index <= i.
    for (int i = 1; i <= b.r; ++i) {
        std::vector<std::string> clique{x_name(i)};
        for (auto [s, j] : b.edges)
            if (s <= i) clique.push_back(a_name(s, j));
        std::sort(clique.begin(), clique.end());
        red.clique_family.cliques.push_back(std::move(clique));
    }
    // Column cliques: the prime clique around Y, and for degree-3 columns a
    // second clique around Z over the same A-vertices.
    for (int j = 1; j <= b.r; ++j) {
        std::vector<std::string> column_as;
        for (int i : b.n_neighbors(j)) column_as.push_back(a_name(i, j));

        std::vector<std::string> prime{y_name(j)};
        prime.insert(prime.end(), column_as.begin(), column_as.end());
        std::sort(prime.begin(), prime.end());
        red.clique_family.cliques.push_back(std::move(prime));

        if (b.n_degree(j) == 3) {
            std::vector<std::string> dprime{z_name(j)};
            dprime.insert(dprime.end(), column_as.begin(), column_as.end());
            std::sort(dprime.begin(), dprime.end());
            red.clique_family.cliques.push_back(std::move(dprime));
        }
    }

    // G is the union of the cliques' edge sets.
    std::set<std::pair<std::string, std::string>> edge_set;
    for (const auto& clique : red.clique_family.cliques) {
        for (std::size_t a = 0; a < clique.size(); ++a) {
            for (std::size_t c = a + 1; c < clique.size(); ++c) {
                auto e = std::minmax(clique[a], clique[c]);
                edge_set.insert({e.first, e.second});
            }
        }
    }
    for (const auto& [u, v] : edge_set) red.graph.add_edge(u, v);

    red.clique_tree = build_clique_tree(red);

    // The construction is defined by its cliques; confirm against the
    // enumeration oracle instead of trusting the assembly above.
    if (!same_clique_sets(maximal_cliques(red.graph), red.clique_family))
        throw StructureViolation("constructed cliques are not the maximal cliques of G");
    return red;
}

CliqueTree build_clique_tree(const ReducedInstance& red) {
    CliqueTree ct;
    std::vector<std::string> node_names;
    for (int i = 1; i <= red.r; ++i) node_names.push_back(k_name(i));
    const std::set<int> deg3(red.deg3.begin(), red.deg3.end());
    for (int j = 1; j <= red.r; ++j) {
        node_names.push_back(kp_name(j));
        if (deg3.count(j)) node_names.push_back(kpp_name(j));
    }
    if (node_names.size() != red.clique_family.cliques.size())
        throw ValidationError("clique family size does not match the construction");

    for (std::size_t k = 0; k < node_names.size(); ++k) {
        ct.tree.add_node(node_names[k]);
        ct.label[node_names[k]] = red.clique_family.cliques[k];
    }
    for (int i = 1; i < red.r; ++i) ct.tree.add_arc(k_name(i), k_name(i + 1));
    for (int j = 1; j <= red.r; ++j) ct.tree.add_arc(k_name(red.r), kp_name(j));
    for (int j : red.deg3) ct.tree.add_arc(kp_name(j), kpp_name(j));
    return ct;
}

Graph bipartite_to_graph(const BipartiteInstance& b) {
    Graph g;
    for (int i = 1; i <= b.r; ++i) g.add_vertex(m_name(i));
    for (int j = 1; j <= b.r; ++j) g.add_vertex(n_name(j));
    for (auto [i, j] : b.edges) g.add_edge(m_name(i), n_name(j));
    return g;
}

BipartiteInstance bipartite_from_reduced(const ReducedInstance& red) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& name : red.graph.vertices()) {
        auto role = parse_role(name);
        if (!role) throw ValidationError("vertex " + name + " does not decode to a role");
        if (role->role == Role::a) edges.emplace_back(role->i, role->j);
    }
    return make_bipartite_instance(red.r, std::move(edges));
}

std::string x_name(int i) { return "X" + std::to_string(i); }
std::string y_name(int j) { return "Y" + std::to_string(j); }
std::string z_name(int j) { return "Z" + std::to_string(j); }
std::string a_name(int i, int j) {
    return "A" + std::to_string(i) + "_" + std::to_string(j);
}
std::string k_name(int i) { return "K" + std::to_string(i); }
std::string kp_name(int j) { return "Kp" + std::to_string(j); }
std::string kpp_name(int j) { return "Kpp" + std::to_string(j); }
std::string m_name(int i) { return "m" + std::to_string(i); }
std::string n_name(int j) { return "n" + std::to_string(j); }

namespace {

// Parses a positive decimal with no leading zero; -1 on failure.
int parse_positive(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end || end > s.size()) return -1;
    if (s[begin] == '0') return -1;
    long value = 0;
    for (std::size_t k = begin; k < end; ++k) {
        if (s[k] < '0' || s[k] > '9') return -1;
        value = value * 10 + (s[k] - '0');
        if (value > 1'000'000) return -1;
    }
    return static_cast<int>(value);
}

}  // namespace

std::optional<RoleName> parse_role(const std::string& name) {
    if (name.size() < 2) return std::nullopt;
    switch (name[0]) {
        case 'X': {
            const int i = parse_positive(name, 1, name.size());
            if (i < 0) return std::nullopt;
            return RoleName{Role::x, i, 0};
        }
        case 'Y': {
            const int j = parse_positive(name, 1, name.size());
            if (j < 0) return std::nullopt;
            return RoleName{Role::y, 0, j};
        }
        case 'Z': {
            const int j = parse_positive(name, 1, name.size());
            if (j < 0) return std::nullopt;
            return RoleName{Role::z, 0, j};
        }
        case 'A': {
            const auto sep = name.find('_');
            if (sep == std::string::npos) return std::nullopt;
            const int i = parse_positive(name, 1, sep);
            const int j = parse_positive(name, sep + 1, name.size());
            if (i < 0 || j < 0) return std::nullopt;
            return RoleName{Role::a, i, j};
        }
        default: return std::nullopt;
    }
}

std::optional<std::pair<char, int>> parse_side_name(const std::string& name) {
    if (name.size() < 2) return std::nullopt;
    if (name[0] != 'm' && name[0] != 'n') return std::nullopt;
    const int idx = parse_positive(name, 1, name.size());
    if (idx < 0) return std::nullopt;
    return std::make_pair(name[0], idx);
}

}  // namespace rdvhc
