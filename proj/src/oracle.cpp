#include "rdvhc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "rdvhc/errors.hpp"
#include "bitwords.hpp"

namespace rdvhc {

namespace {

using detail::Words;

struct HamiltonianSearch {
    int n = 0;
    std::vector<Words> nb;
    std::vector<int> path;
    Words visited;
    Words all;  // bits 0..n-1
    int start = 0;
    std::uint64_t budget = 0;
    std::uint64_t expanded = 0;

    bool adjacent(int a, int b) const { return detail::test_bit(nb[a], b); }

    // Usable connections of unvisited v: unvisited neighbors, plus the
    // current endpoint, plus the closing edge to the start.
    int avail(int v, int current) const {
        int c = detail::popcount(detail::andnot_words(nb[v], visited));
        if (adjacent(v, current)) ++c;
        if (current != start && adjacent(v, start)) ++c;
        return c;
    }

    bool all_reachable(int current) const {
        Words seen = visited;
        std::vector<int> stack;
        detail::for_each_bit(detail::andnot_words(nb[current], visited), [&](int v) {
            detail::set_bit(seen, v);
            stack.push_back(v);
        });
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            detail::for_each_bit(detail::andnot_words(nb[v], seen), [&](int u) {
                detail::set_bit(seen, u);
                stack.push_back(u);
            });
        }
        return !detail::any(detail::andnot_words(all, seen));
    }

    bool dfs(int current) {
        if (++expanded > budget) throw ResourceExhausted(expanded, budget);
        if (static_cast<int>(path.size()) == n) return adjacent(current, start);

        // Prunes. Any unvisited vertex with fewer than two usable
        // connections is stranded. A vertex with exactly two that include
        // the current endpoint forces the next move; two such force a
        // contradiction (the endpoint takes only one more edge). The same
        // argument caps vertices relying on the closing edge at the start.
        const bool at_root = path.size() == 1;
        int forced = -1;
        int forced_at_current = 0;
        int forced_at_start = 0;
        for (int v = 0; v < n; ++v) {
            if (detail::test_bit(visited, v)) continue;
            const int a = avail(v, current);
            if (a < 2) return false;
            if (a == 2) {
                if (adjacent(v, current)) {
                    ++forced_at_current;
                    forced = v;
                }
                if (current != start && adjacent(v, start)) ++forced_at_start;
            }
        }
        if (!at_root && forced_at_current >= 2) return false;
        if (at_root && forced_at_current >= 3) return false;
        if (forced_at_start >= 2) return false;

        if (!all_reachable(current)) return false;
        // The closing edge needs an unvisited neighbor of the start.
        if (current != start) {
            bool closer = false;
            detail::for_each_bit(detail::andnot_words(nb[start], visited),
                                 [&](int) { closer = true; });
            if (!closer) return false;
        }

        auto try_move = [&](int v) {
            path.push_back(v);
            detail::set_bit(visited, v);
            const bool ok = dfs(v);
            if (!ok) {
                detail::clear_bit(visited, v);
                path.pop_back();
            }
            return ok;
        };

        if (forced_at_current >= 1) {
            // Only the forced neighbor can be next (at the root the first of
            // the forced pair suffices: the cycle is direction-symmetric).
            return try_move(forced);
        }
        bool done = false;
        detail::for_each_bit(detail::andnot_words(nb[current], visited), [&](int v) {
            if (!done && try_move(v)) done = true;
        });
        return done;
    }
};

}  // namespace

SolverResult find_hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
    const auto t0 = std::chrono::steady_clock::now();
    SolverResult result;
    auto finish = [&]() {
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    };

    const int n = static_cast<int>(g.vertex_count());
    if (n < 3) return finish();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) return finish();

    HamiltonianSearch search;
    search.n = n;
    search.budget = budget;
    search.nb.assign(n, detail::make_words(n));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) detail::set_bit(search.nb[v], u);
    search.visited = detail::make_words(n);
    search.all = detail::make_words(n);
    for (int v = 0; v < n; ++v) detail::set_bit(search.all, v);

    int start = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(start)) start = v;
    search.start = start;
    search.path.push_back(start);
    detail::set_bit(search.visited, start);

    bool found;
    try {
        found = search.dfs(start);
    } catch (ResourceExhausted&) {
        result.nodes_expanded = search.expanded;
        throw;
    }
    result.nodes_expanded = search.expanded;
    if (found) {
        std::vector<std::string> names;
        names.reserve(search.path.size());
        for (int v : search.path) names.push_back(g.name_of(v));
        Cycle cycle = canonical_cycle(Cycle{std::move(names)});
        if (!is_hamiltonian_cycle(g, cycle))
            throw std::logic_error("solver produced a non-Hamiltonian cycle");
        result.cycle = std::move(cycle);
    }
    return finish();
}

namespace {

// 53-bit coin flip; exact for probabilities with short mantissas and
// bit-identical across platforms (mt19937_64 output is standardized).
bool flip(std::mt19937_64& eng, double p) {
    const std::uint64_t draw = eng() >> 11;
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return draw < static_cast<std::uint64_t>(p * 9007199254740992.0);
}

}  // namespace

BipartiteInstance gen_bipartite(const GenSpec& spec) {
    if (spec.r < 2) throw ValidationError("GenSpec.r must be >= 2");
    if (spec.extra_edge_prob < 0.0 || spec.extra_edge_prob > 1.0)
        throw ValidationError("extra_edge_prob must be in [0,1]");

    std::mt19937_64 eng(spec.seed);
    const int r = spec.r;

    if (spec.plant) {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> dm(r + 1, 0), dn(r + 1, 0);
        auto add = [&](int i, int j) {
            edges.emplace_back(i, j);
            dm[i] += 1;
            dn[j] += 1;
        };
        for (int i = 1; i <= r; ++i) {
            add(i, i);
            add(i == r ? 1 : i + 1, i);
        }
        std::sort(edges.begin(), edges.end());
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= r; ++j) {
                if (std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j)))
                    continue;
                if (dm[i] >= 3 || dn[j] >= 3) continue;
                if (flip(eng, spec.extra_edge_prob)) add(i, j);
            }
        }
        std::sort(edges.begin(), edges.end());
        return make_bipartite_instance(r, std::move(edges));
    }

    const double p = 2.5 / r;
    constexpr int k_max_attempts = 100000;
    for (int attempt = 0; attempt < k_max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> dm(r + 1, 0), dn(r + 1, 0);
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= r; ++j) {
                if (flip(eng, p)) {
                    edges.emplace_back(i, j);
                    dm[i] += 1;
                    dn[j] += 1;
                }
            }
        }
        bool ok = true;
        for (int v = 1; v <= r && ok; ++v)
            ok = dm[v] >= 2 && dm[v] <= 3 && dn[v] >= 2 && dn[v] <= 3;
        if (ok) return make_bipartite_instance(r, std::move(edges));
    }
    throw GenerationError("no instance with degrees in {2,3} after " +
                          std::to_string(k_max_attempts) + " attempts (r=" +
                          std::to_string(spec.r) + ", seed=" + std::to_string(spec.seed) + ")");
}

std::vector<BipartiteInstance> enumerate_small_instances(int r) {
    if (r != 2 && r != 3)
        throw ValidationError("enumerate_small_instances supports r in {2,3}, got " +
                              std::to_string(r));
    const int cells = r * r;
    std::vector<BipartiteInstance> out;
    for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> dm(r + 1, 0), dn(r + 1, 0);
        for (int bit = 0; bit < cells; ++bit) {
            if (mask & (1u << bit)) {
                const int i = bit / r + 1;
                const int j = bit % r + 1;
                edges.emplace_back(i, j);
                dm[i] += 1;
                dn[j] += 1;
            }
        }
        bool ok = true;
        for (int v = 1; v <= r && ok; ++v)
            ok = dm[v] >= 2 && dm[v] <= 3 && dn[v] >= 2 && dn[v] <= 3;
        if (ok) {
            std::sort(edges.begin(), edges.end());
            out.push_back(make_bipartite_instance(r, std::move(edges)));
        }
    }
    std::sort(out.begin(), out.end(), [](const BipartiteInstance& a, const BipartiteInstance& b) {
        return a.edges < b.edges;
    });
    return out;
}

}  // namespace rdvhc
