#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgk/cfa.hpp"
#include "pgk/cnf.hpp"
#include "pgk/graph.hpp"

namespace pgk {

// Decision problems handled by the exact solvers. The string names are the
// kebab-case forms used in instance files and on the command line.
enum class ProblemKind {
	clique,
	independent_set,
	vertex_cover,
	dominating_set,
	connected_dominating_set,
	independent_dominating_set,
	connected_vertex_cover,
	feedback_vertex_set,
	odd_cycle_transversal,
	chromatic_number,
	hamiltonian_cycle,
	hamiltonian_path,
	steiner_tree,
	induced_matching,
	triangle_partition,
	multicolored_clique,
	cnf_sat,
	cfa,
};

std::string kind_name(ProblemKind k);
ProblemKind kind_from_name(const std::string& name); // parse_error on unknown

// Certificate for a yes answer. Only the fields relevant to the instance
// kind are used; see check_witness for the exact predicate per kind.
struct Witness {
	std::vector<int> vertices;                  // set-valued certificates
	std::vector<std::pair<int, int>> edges;     // induced matching
	std::vector<int> order;                     // hamiltonian cycle/path
	std::vector<int> coloring;                  // colors 1..k, indexed by vertex
	std::vector<bool> assignment;               // truth values, indexed by var-1
	std::vector<std::pair<int, int>> cfa_edges; // chosen (buyer, seller) pairs
	std::vector<std::array<int, 3>> triangles;  // triangle partition
};

struct Answer {
	bool yes = false;
	std::optional<Witness> witness;
};

// A decision instance. `graph` + `k` suffice for most kinds; Steiner Tree
// adds terminals, Multicolored Clique a coloring, CNF-SAT a formula, CFA its
// own structure. Triangle Partition ignores any supplied k (the question is
// always a perfect partition, k = |V|).
struct ProblemInstance {
	ProblemKind kind = ProblemKind::clique;
	Graph graph;
	long long k = 0;
	std::vector<int> terminals;  // steiner-tree
	std::vector<int> coloring;   // multicolored-clique, colors 1..k
	CnfFormula formula;          // cnf-sat
	CfaInstance cfa;             // cfa

	// argument_error when the payload shape does not match the kind
	void validate() const;
};

ProblemInstance graph_instance(ProblemKind kind, Graph g, long long k);
ProblemInstance steiner_instance(Graph g, std::vector<int> terminals, long long k);
ProblemInstance mcc_instance(Graph g, std::vector<int> coloring, long long k);
ProblemInstance sat_instance(CnfFormula f);
ProblemInstance cfa_wrap(CfaInstance c);

// Refinement question: the instance carries a known solution, and asks
// whether a strictly better one exists (one vertex smaller for the
// minimization kinds, one edge larger for induced matching).
enum class RefinementKind { vcr, fvsr, octr, dsr, imr };

std::string refinement_name(RefinementKind k);
RefinementKind refinement_from_name(const std::string& name);

struct RefinementInstance {
	RefinementKind kind = RefinementKind::vcr;
	Graph graph;
	std::vector<int> base;                      // vcr/fvsr/octr/dsr solution
	std::vector<std::pair<int, int>> base_edges; // imr matching

	// argument_error when base is not a valid solution of its kind
	void validate() const;
};

// JSON wire formats. Graphs are {"n": int, "edges": [[u,v], ...]};
// instances add "schema", "kind" and the kind's payload fields.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json formula_to_json(const CnfFormula& f);
CnfFormula formula_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const nlohmann::json& j);

nlohmann::json refinement_to_json(const RefinementInstance& inst);
RefinementInstance refinement_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const Witness& w);

}
