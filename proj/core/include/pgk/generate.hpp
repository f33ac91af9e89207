#pragma once

#include <cstdint>
#include <vector>

#include "pgk/cnf.hpp"
#include "pgk/graph.hpp"

namespace pgk {

// Erdos-Renyi G(n, p). Same seed, same graph.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Disjoint cliques plus `attach` extra vertices. Each extra vertex is joined
// to all-or-none of every clique (coin flip per clique) and to other extras
// with probability 1/2, so the extras always form a twin cover: the twin
// cover number is at most `attach`. Clique vertices come first, extras last.
Graph gen_cluster(const std::vector<int>& clique_sizes, int attach, std::uint64_t seed);

// Split-like graph: a clique, an independent set, random cross edges.
Graph gen_split(int clique_n, int indep_n, double cross_p, std::uint64_t seed);

// Random CNF: `clauses` clauses of width 1..3 over `vars` variables.
// Canonicalization may merge duplicate clauses.
CnfFormula gen_cnf(int vars, int clauses, std::uint64_t seed);

}
