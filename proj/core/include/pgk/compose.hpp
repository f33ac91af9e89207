#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgk/graph.hpp"
#include "pgk/instance.hpp"

namespace pgk {

// A batch combination of same-shaped instances into one instance whose
// answer is the OR (or AND) of the inputs' answers.
struct CompositionOutput {
	ProblemInstance instance;
	char relation = '|';          // '|' or '&'
	long long mw_bound = 0;       // declared bound for the output's modular width
	std::vector<int> offsets;     // first output id of each input part
	int extra_first = -1;         // first connector/apex id, -1 if none
};

// Disjoint unions. Inputs must agree on (n, k); modular width is preserved
// exactly (no new prime nodes appear), so the declared bound is the largest
// input modular width.
CompositionOutput compose_clique_or(const std::vector<ProblemInstance>& inputs);
CompositionOutput compose_chromatic_and(const std::vector<ProblemInstance>& inputs);

// Disjoint unions of refinement instances, rephrased as plain threshold
// instances on the union. Inputs agree on (n, k) with k the baseline size;
// thresholds: kt-1 for the minimization kinds, kt+1 for induced matching.
CompositionOutput compose_fvs_or(const std::vector<RefinementInstance>& inputs);
CompositionOutput compose_oct_or(const std::vector<RefinementInstance>& inputs);
CompositionOutput compose_ds_or(const std::vector<RefinementInstance>& inputs);
CompositionOutput compose_im_or(const std::vector<RefinementInstance>& inputs);

// t-1 connector vertices joined to every input vertex thread the parts'
// paths together; inputs agree on (n, mw). Declared bound: max input n.
CompositionOutput compose_hp_and(const std::vector<Graph>& inputs);

// Union of vertex-cover refinement instances plus one apex joined to
// everything, asked as connected vertex cover with budget kt. Inputs agree
// on (n, k, mw); declared bound: max input n.
CompositionOutput compose_cvc_or(const std::vector<RefinementInstance>& inputs);

// Greedy dominating set, used to pair graphs with a baseline when building
// dominating-set refinement instances.
std::vector<int> greedy_dominating_set(const Graph& g);

// Groups raw JSON instances by the equivalence key of the named composition
// ("clique-or", "chromatic-and", "hp-and", "cvc-or", "fvs-or", "oct-or",
// "ds-or", "im-or"). Instances that fail to parse or validate land in the
// bad bucket with a reason.
struct Buckets {
	// key string -> member indexes into the input array
	std::vector<std::pair<std::string, std::vector<int>>> classes;
	std::vector<std::pair<int, std::string>> bad; // input index + reason
};

Buckets bucket_by_relation(const nlohmann::json& instances, const std::string& composition);

}
