#include "rdvhc/cycle_map.hpp"

#include <algorithm>
#include <set>

#include "rdvhc/errors.hpp"

namespace rdvhc {

namespace {

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += " ";
        out += n;
    }
    return out;
}

std::vector<std::string> rotate_to(const std::vector<std::string>& order, std::size_t first) {
    std::vector<std::string> out;
    out.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        out.push_back(order[(first + k) % order.size()]);
    return out;
}

}  // namespace

Cycle lift_cycle(const BipartiteInstance& b, const ReducedInstance& red, const Cycle& cb) {
    if (red.r != b.r) throw ValidationError("reduced instance does not match b");
    if (cb.size() != static_cast<std::size_t>(2 * b.r))
        throw ValidationError("cycle has " + std::to_string(cb.size()) + " vertices, expected " +
                              std::to_string(2 * b.r));
    for (const auto& name : cb.order()) {
        auto side = parse_side_name(name);
        if (!side || side->second < 1 || side->second > b.r)
            throw ValidationError("not an m/n vertex of B: " + name);
    }
    if (!is_hamiltonian_cycle(bipartite_to_graph(b), cb))
        throw ValidationError("not a Hamiltonian cycle of B: " + join(cb.order()));

    // Bipartite Hamiltonian cycles alternate sides; start at the first m.
    std::size_t first_m = 0;
    while (cb.order()[first_m][0] != 'm') ++first_m;
    const std::vector<std::string> seq = rotate_to(cb.order(), first_m);

    std::vector<std::string> lifted;
    lifted.reserve(red.graph.vertex_count());
    const std::size_t len = seq.size();
    for (std::size_t t = 0; t < len; t += 2) {
        const int i = parse_side_name(seq[t])->second;
        const int j = parse_side_name(seq[t + 1])->second;
        const int k = parse_side_name(seq[(t + 2) % len])->second;

        lifted.push_back(x_name(i));
        if (b.n_degree(j) == 3) {
            const std::vector<int> rows = b.n_neighbors(j);
            int h = 0;
            for (int row : rows)
                if (row != i && row != k) h = row;
            lifted.push_back(a_name(i, j));
            lifted.push_back(y_name(j));
            lifted.push_back(a_name(h, j));
            lifted.push_back(z_name(j));
            lifted.push_back(a_name(k, j));
        } else {
            lifted.push_back(a_name(i, j));
            lifted.push_back(y_name(j));
            lifted.push_back(a_name(k, j));
        }
    }

    Cycle cg{std::move(lifted)};
    if (!is_hamiltonian_cycle(red.graph, cg))
        throw StructureViolation("lifted sequence is not a Hamiltonian cycle of G: " +
                                 join(cg.order()));
    return cg;
}

std::vector<FlankedBlock> find_j_blocks(const ReducedInstance& red, const Cycle& cg) {
    if (!is_hamiltonian_cycle(red.graph, cg))
        throw ValidationError("not a Hamiltonian cycle of G: " + join(cg.order()));

    std::vector<RoleName> roles;
    roles.reserve(cg.size());
    for (const auto& name : cg.order()) {
        auto role = parse_role(name);
        if (!role) throw ValidationError("vertex " + name + " does not decode to a role");
        roles.push_back(*role);
    }

    std::size_t first_x = 0;
    while (first_x < roles.size() && roles[first_x].role != Role::x) ++first_x;
    if (first_x == roles.size())
        throw StructureViolation("cycle contains no X vertex: " + join(cg.order()));
    const std::vector<std::string> seq = rotate_to(cg.order(), first_x);

    const std::set<int> deg3(red.deg3.begin(), red.deg3.end());
    const BipartiteInstance b = bipartite_from_reduced(red);
    std::vector<FlankedBlock> blocks;
    std::size_t pos = 0;
    const std::size_t len = seq.size();
    while (pos < len) {
        const int x_before = parse_role(seq[pos])->i;
        std::vector<std::string> run;
        std::size_t next = pos + 1;
        while (next < len && parse_role(seq[next])->role != Role::x) {
            run.push_back(seq[next]);
            ++next;
        }
        const int x_after = parse_role(seq[next % len])->i;

        if (run.empty())
            throw StructureViolation("adjacent X vertices " + seq[pos] + " " + seq[next % len]);
        if (run.size() != 3 && run.size() != 5)
            throw StructureViolation("run is not a j-block: " + join(run));

        std::vector<RoleName> run_roles;
        for (const auto& name : run) run_roles.push_back(*parse_role(name));

        const RoleName& entry = run_roles.front();
        const RoleName& exit = run_roles.back();
        if (entry.role != Role::a || exit.role != Role::a)
            throw StructureViolation("run does not start and end with A vertices: " + join(run));
        const int j = entry.j;

        std::vector<int> a_rows;
        int y_count = 0;
        int z_count = 0;
        for (std::size_t k = 0; k < run_roles.size(); ++k) {
            const RoleName& role = run_roles[k];
            const bool a_slot = (k % 2 == 0);
            if (a_slot) {
                if (role.role != Role::a || role.j != j)
                    throw StructureViolation("run mixes columns: " + join(run));
                a_rows.push_back(role.i);
            } else {
                if (role.role == Role::y) ++y_count;
                else if (role.role == Role::z) ++z_count;
                else
                    throw StructureViolation("run has a misplaced vertex: " + join(run));
                if (role.j != j) throw StructureViolation("run mixes columns: " + join(run));
            }
        }
        if (run.size() == 3) {
            if (y_count != 1 || z_count != 0 || deg3.count(j))
                throw StructureViolation("short run in a degree-3 column: " + join(run));
        } else {
            // N(Y_j) = N(Z_j), so either interior order is a valid block.
            if (y_count != 1 || z_count != 1 || !deg3.count(j))
                throw StructureViolation("long run needs one Y and one Z: " + join(run));
        }
        std::vector<int> sorted_rows = a_rows;
        std::sort(sorted_rows.begin(), sorted_rows.end());
        if (sorted_rows != b.n_neighbors(j))
            throw StructureViolation("run does not cover column " + std::to_string(j) +
                                     " exactly: " + join(run));

        if (x_before < entry.i || x_after < exit.i)
            throw StructureViolation("flank bound violated at run: " + seq[pos] + " " +
                                     join(run) + " " + seq[next % len]);

        FlankedBlock fb;
        fb.block.j = j;
        fb.block.entry_a = run.front();
        fb.block.exit_a = run.back();
        fb.block.body = run;
        fb.x_before = x_before;
        fb.x_after = x_after;
        blocks.push_back(std::move(fb));
        pos = next;
    }

    if (blocks.size() != static_cast<std::size_t>(red.r))
        throw StructureViolation("expected " + std::to_string(red.r) + " blocks, found " +
                                 std::to_string(blocks.size()));
    return blocks;
}

Cycle project_cycle(const ReducedInstance& red, const Cycle& cg) {
    const std::vector<FlankedBlock> blocks = find_j_blocks(red, cg);

    std::vector<std::string> projected;
    projected.reserve(2 * blocks.size());
    for (const auto& fb : blocks) {
        projected.push_back(m_name(fb.x_before));
        projected.push_back(n_name(fb.block.j));
    }

    Cycle cb{std::move(projected)};
    const BipartiteInstance b = bipartite_from_reduced(red);
    if (!is_hamiltonian_cycle(bipartite_to_graph(b), cb)) {
        std::string detail;
        for (const auto& fb : blocks) {
            if (!b.has_edge(fb.x_before, fb.block.j))
                detail += " m" + std::to_string(fb.x_before) + "-n" + std::to_string(fb.block.j);
            if (!b.has_edge(fb.x_after, fb.block.j))
                detail += " n" + std::to_string(fb.block.j) + "-m" + std::to_string(fb.x_after);
        }
        throw ProjectionViolation("projected sequence uses non-edges of B:" + detail +
                                  " (from " + join(cb.order()) + ")");
    }
    return cb;
}

}  // namespace rdvhc
