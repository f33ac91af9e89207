#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgk/cnf.hpp"
#include "pgk/graph.hpp"
#include "pgk/instance.hpp"

namespace pgk {

// Output of a parameter-tracked transformation. Exactly one of `instance`
// and `refinement` is meaningful (is_refinement tells which). `cover` is a
// vertex cover of the output graph constructed alongside the instance; its
// size is guaranteed to stay within `cover_bound`, and construction checks
// both before returning. `labels` names each output vertex after the input
// entity it stands for.
struct PptOutput {
	ProblemInstance instance;
	std::optional<RefinementInstance> refinement;
	std::vector<int> cover;
	long long cover_bound = 0;
	std::vector<std::string> labels;

	bool is_refinement() const { return refinement.has_value(); }
};

// Multicolored clique -> induced matching. One vertex per input edge; a
// collector vertex per color pair; per color i, ordered pair (j, j') and bit
// position, a triangle whose two outer vertices watch the edges colored
// (i,j) with that id-bit set and the edges colored (i,j') with it clear.
// Target: C(k,2) + one per triangle. The bit triangles force every selected
// (i,*) edge to leave color class i at the same vertex.
PptOutput mcc_to_induced_matching(const Graph& g, const std::vector<int>& coloring, int k);

// CNF-SAT -> chromatic number with n+1 colors: a K_n spine, a joined literal
// pair per variable also joined to every other spine vertex, one vertex per
// clause adjacent to the literals the clause does NOT contain, and an apex
// adjacent to spine and clause vertices.
PptOutput sat_to_chromatic(const CnfFormula& f);

// CNF-SAT -> steiner tree with edge budget 2n+m: one triangle per variable,
// clause vertices adjacent to their literals' triangle corners, an apex
// joined to all literal corners; terminals are the triangle tips, the clause
// vertices and the apex.
PptOutput sat_to_steiner(const CnfFormula& f);

// CNF-SAT -> connected dominating set, budget n+1 (apex p plus its pendant
// force p into every solution), or -> independent dominating set, budget n
// (no apex/pendant).
PptOutput sat_to_cds(const CnfFormula& f, bool independent_variant);

// Decision problem -> its refinement problem. Each gadget pads the graph so
// the refinement question on the padded graph (one below the baseline
// solution) matches the original threshold question.
PptOutput refine_vc(const Graph& g, long long k);  // 0 <= k <= n-1
PptOutput refine_fvs(const Graph& g, long long k); // 0 <= k <= n-1
PptOutput refine_oct(const Graph& g, long long k); // 0 <= k <= n-1
PptOutput refine_im(const Graph& g, long long k);  // 2 <= k <= n/2

// Hamiltonian path -> hamiltonian cycle via one universal vertex. Undefined
// on n = 1 (a 2-vertex graph has no cycle); argument_error there.
PptOutput hp_to_hc(const Graph& g);

}
