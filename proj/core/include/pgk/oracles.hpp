#pragma once

#include "pgk/guardrails.hpp"
#include "pgk/instance.hpp"

namespace pgk {

// Exact decision by exhaustive search, one algorithm per kind. Answers are
// ground truth for every transformation in this library; sizes are held in
// check by the guardrails (resource_error beyond them).
Answer solve(const ProblemInstance& inst, const Guardrails& lim = {});

// Exact decision for assignment instances by branch and bound over buyers.
Answer solve_cfa(const CfaInstance& inst, const Guardrails& lim = {});

// True iff the witness certifies a yes answer. Deliberately shares no search
// code with solve: plain predicate evaluation per the problem definition.
// argument_error when the witness shape does not fit the kind.
bool check_witness(const ProblemInstance& inst, const Witness& w);

// Decides the refinement question (strictly smaller solution, or strictly
// larger induced matching) with the same exact solvers.
bool solve_refinement(const RefinementInstance& inst, const Guardrails& lim = {});

}
