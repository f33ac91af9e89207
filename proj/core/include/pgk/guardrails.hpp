#pragma once

namespace pgk {

// Size limits for the exact solvers. Exceeding a limit raises resource_error
// unless `unrestricted` is set. PGK_UNRESTRICTED=1 in the environment flips
// the default for processes that opt in via from_env().
struct Guardrails {
	int max_solve_vertices = 20;   // exhaustive graph-problem solvers
	int max_cnf_vars = 24;         // CNF satisfiability
	int max_cfa_buyers = 12;       // assignment-instance solver
	int max_twin_cover_vertices = 64;
	int max_tp_cover_size = 14;    // augmented cover size in the partition compressor
	bool unrestricted = false;

	static Guardrails from_env();
	static Guardrails unlimited() {
		Guardrails g;
		g.unrestricted = true;
		return g;
	}
};

}
