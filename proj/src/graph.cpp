#include "rdvhc/graph.hpp"

#include <algorithm>
#include <set>

#include "rdvhc/errors.hpp"
#include "bitwords.hpp"

namespace rdvhc {

void Graph::add_vertex(const std::string& name) {
    if (name.empty()) throw ValidationError("empty vertex name");
    if (index_.count(name)) throw ValidationError("duplicate vertex: " + name);
    index_[name] = static_cast<int>(vertices_.size());
    vertices_.push_back(name);
    adj_.emplace_back();
}

void Graph::add_edge(const std::string& a, const std::string& b) {
    const int ia = index_of(a);
    const int ib = index_of(b);
    if (ia == ib) throw ValidationError("self-loop at " + a);
    if (has_edge(ia, ib)) throw ValidationError("duplicate edge: " + a + " " + b);
    auto insert_sorted = [this](int from, int to) {
        auto& lst = adj_[from];
        lst.insert(std::lower_bound(lst.begin(), lst.end(), to), to);
    };
    insert_sorted(ia, ib);
    insert_sorted(ib, ia);
    edges_.emplace_back(std::min(ia, ib), std::max(ia, ib));
}

bool Graph::has_vertex(const std::string& name) const { return index_.count(name) > 0; }

bool Graph::has_edge(const std::string& a, const std::string& b) const {
    return has_edge(index_of(a), index_of(b));
}

bool Graph::has_edge(int a, int b) const {
    const auto& lst = adj_[a];
    return std::binary_search(lst.begin(), lst.end(), b);
}

int Graph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError("unknown vertex: " + name);
    return it->second;
}

int Graph::find_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

const std::string& Graph::name_of(int index) const { return vertices_.at(index); }

const std::vector<int>& Graph::neighbors(int index) const { return adj_.at(index); }

int Graph::degree(int index) const { return static_cast<int>(adj_.at(index).size()); }

std::vector<std::pair<std::string, std::string>> Graph::sorted_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (auto [a, b] : edges_) {
        std::string na = vertices_[a];
        std::string nb = vertices_[b];
        if (nb < na) std::swap(na, nb);
        out.emplace_back(std::move(na), std::move(nb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool same_graph(const Graph& a, const Graph& b) {
    std::vector<std::string> va = a.vertices();
    std::vector<std::string> vb = b.vertices();
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    return va == vb && a.sorted_edges() == b.sorted_edges();
}

Cycle::Cycle(std::vector<std::string> order) : order_(std::move(order)) {
    if (order_.size() < 3)
        throw ValidationError("cycle needs at least 3 vertices, got " +
                              std::to_string(order_.size()));
    std::set<std::string> seen;
    for (const auto& v : order_) {
        if (v.empty()) throw ValidationError("empty vertex name in cycle");
        if (!seen.insert(v).second) throw ValidationError("repeated vertex in cycle: " + v);
    }
}

bool same_clique_sets(const CliqueFamily& a, const CliqueFamily& b) {
    auto key = [](const CliqueFamily& f) {
        std::vector<std::vector<std::string>> k = f.cliques;
        for (auto& c : k) std::sort(c.begin(), c.end());
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

namespace {

using detail::Words;

// Bron-Kerbosch with pivoting. Deterministic: candidates scanned in index
// order, pivot picked as the max-|N(u) ∩ P| vertex with lowest index.
struct BronKerbosch {
    int n;
    std::vector<Words> nb;
    std::vector<int> current;
    std::vector<std::vector<int>> found;

    void run(Words p, Words x) {
        if (!detail::any(p) && !detail::any(x)) {
            found.push_back(current);
            return;
        }
        int pivot = -1;
        int best = -1;
        auto consider = [&](int u) {
            const int score = detail::popcount(detail::and_words(nb[u], p));
            if (score > best) {
                best = score;
                pivot = u;
            }
        };
        detail::for_each_bit(p, consider);
        detail::for_each_bit(x, consider);

        const Words ext = detail::andnot_words(p, nb[pivot]);
        detail::for_each_bit(ext, [&](int v) {
            current.push_back(v);
            run(detail::and_words(p, nb[v]), detail::and_words(x, nb[v]));
            current.pop_back();
            detail::clear_bit(p, v);
            detail::set_bit(x, v);
        });
    }
};

}  // namespace

CliqueFamily maximal_cliques(const Graph& g) {
    CliqueFamily fam;
    const int n = static_cast<int>(g.vertex_count());
    if (n == 0) return fam;

    BronKerbosch bk;
    bk.n = n;
    bk.nb.assign(n, detail::make_words(n));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) detail::set_bit(bk.nb[v], u);

    Words p = detail::make_words(n);
    for (int v = 0; v < n; ++v) detail::set_bit(p, v);
    bk.run(std::move(p), detail::make_words(n));

    for (const auto& idx_clique : bk.found) {
        std::vector<std::string> names;
        names.reserve(idx_clique.size());
        for (int v : idx_clique) names.push_back(g.name_of(v));
        std::sort(names.begin(), names.end());
        fam.cliques.push_back(std::move(names));
    }
    std::sort(fam.cliques.begin(), fam.cliques.end());
    return fam;
}

bool is_hamiltonian_cycle(const Graph& g, const Cycle& c) {
    std::vector<int> idx;
    idx.reserve(c.size());
    for (const auto& name : c.order()) idx.push_back(g.index_of(name));
    if (c.size() != g.vertex_count()) return false;
    const std::size_t n = idx.size();
    for (std::size_t k = 0; k < n; ++k)
        if (!g.has_edge(idx[k], idx[(k + 1) % n])) return false;
    return true;
}

Cycle canonical_cycle(const Cycle& c) {
    const auto& v = c.order();
    const std::size_t n = v.size();
    const std::size_t p = static_cast<std::size_t>(
        std::min_element(v.begin(), v.end()) - v.begin());

    std::vector<std::string> fwd(n), bwd(n);
    for (std::size_t k = 0; k < n; ++k) {
        fwd[k] = v[(p + k) % n];
        bwd[k] = v[(p + n - k) % n];
    }
    return Cycle(fwd[1] < bwd[1] ? std::move(fwd) : std::move(bwd));
}

}  // namespace rdvhc
