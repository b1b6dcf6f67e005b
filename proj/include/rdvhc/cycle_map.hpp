#pragma once

#include <string>
#include <vector>

#include "rdvhc/graph.hpp"
#include "rdvhc/reduction.hpp"

namespace rdvhc {

/// The forced run a Hamiltonian cycle of G must take through column j:
/// entry A, Y (and Z for degree-3 columns, in either order), exit A.
struct JBlock {
    int j = 0;
    std::string entry_a;
    std::string exit_a;
    std::vector<std::string> body;  // the full run, cycle order
};

/// A j-block together with the X indices immediately before and after it.
struct FlankedBlock {
    JBlock block;
    int x_before = 0;
    int x_after = 0;
};

/// Lemma-style substitution from a Hamiltonian cycle of B to one of G:
/// each consecutive (m_i, n_j, m_k) becomes X_i followed by the column-j
/// block entered at A_ij and left at A_kj. cb must be a Hamiltonian cycle
/// of B over names m<i>/n<j>; anything else throws ValidationError.
Cycle lift_cycle(const BipartiteInstance& b, const ReducedInstance& red, const Cycle& cb);

/// Decomposes a Hamiltonian cycle of red.graph into exactly r j-blocks,
/// each flanked by X-vertices, in cycle order starting from the first X of
/// cg's stored order. Flank indices are checked against the entry/exit row
/// bounds (before >= entry row, after >= exit row). A run that is not a
/// well-formed block, or a bound violation, throws StructureViolation.
std::vector<FlankedBlock> find_j_blocks(const ReducedInstance& red, const Cycle& cg);

/// Replaces each (X_s, column-j block, X_t) with (m_s, n_j, m_t). The result
/// is validated against B; if it is not a Hamiltonian cycle of B this throws
/// ProjectionViolation naming the offending flank pair.
Cycle project_cycle(const ReducedInstance& red, const Cycle& cg);

}  // namespace rdvhc
