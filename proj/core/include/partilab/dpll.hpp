#pragma once

#include "partilab/cnf.hpp"

#include <optional>
#include <span>

namespace partilab {

struct SolveStats {
    long decisions = 0;
    long propagations = 0;
    long conflicts = 0;
};

// Sound and complete search: unit propagation, branching on the first
// unassigned variable with positive phase first, conflict-directed
// backjumping and no learned clauses. Fully deterministic.
std::optional<Assignment> dpll(const CnfFormula& f, std::span<const int> assumptions = {},
    SolveStats* stats = nullptr);

} // namespace partilab
