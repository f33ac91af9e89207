#include "pgk/generate.hpp"

#include <random>

#include "pgk/errors.hpp"

namespace pgk {

Graph gen_gnp(int n, double p, std::uint64_t seed) {
	if (n < 0) throw argument_error("gen_gnp: negative n");
	if (!(p >= 0.0 && p <= 1.0)) throw argument_error("gen_gnp: p must be in [0,1]");
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> coin(0.0, 1.0);
	std::vector<std::pair<int, int>> es;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			if (coin(rng) < p) es.push_back({u, v});
	return Graph(n, es);
}

Graph gen_cluster(const std::vector<int>& clique_sizes, int attach, std::uint64_t seed) {
	if (attach < 0) throw argument_error("gen_cluster: negative attach count");
	for (int s : clique_sizes)
		if (s <= 0) throw argument_error("gen_cluster: clique sizes must be positive");
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> coin(0, 1);

	int n = attach;
	std::vector<std::pair<int, int>> first;	// first vertex of each clique
	std::vector<std::pair<int, int>> es;
	int base = 0;
	for (int s : clique_sizes) {
		for (int u = 0; u < s; ++u)
			for (int v = u + 1; v < s; ++v) es.push_back({base + u, base + v});
		first.push_back({base, s});
		base += s;
	}
	n += base;
	for (int a = 0; a < attach; ++a) {
		int av = base + a;
		for (auto [cb, cs] : first)
			if (coin(rng))
				for (int u = 0; u < cs; ++u) es.push_back({av, cb + u});
		for (int b = 0; b < a; ++b)
			if (coin(rng)) es.push_back({av, base + b});
	}
	return Graph(n, es);
}

Graph gen_split(int clique_n, int indep_n, double cross_p, std::uint64_t seed) {
	if (clique_n < 0 || indep_n < 0) throw argument_error("gen_split: negative part size");
	if (!(cross_p >= 0.0 && cross_p <= 1.0))
		throw argument_error("gen_split: cross_p must be in [0,1]");
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> coin(0.0, 1.0);
	std::vector<std::pair<int, int>> es;
	for (int u = 0; u < clique_n; ++u)
		for (int v = u + 1; v < clique_n; ++v) es.push_back({u, v});
	for (int u = 0; u < clique_n; ++u)
		for (int v = 0; v < indep_n; ++v)
			if (coin(rng) < cross_p) es.push_back({u, clique_n + v});
	return Graph(clique_n + indep_n, es);
}

CnfFormula gen_cnf(int vars, int clauses, std::uint64_t seed) {
	if (vars <= 0) throw argument_error("gen_cnf: need at least one variable");
	if (clauses < 0) throw argument_error("gen_cnf: negative clause count");
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> width_d(1, 3);
	std::uniform_int_distribution<int> var_d(1, vars);
	std::uniform_int_distribution<int> sign_d(0, 1);
	std::vector<std::vector<int>> cs;
	for (int j = 0; j < clauses; ++j) {
		int w = std::min(width_d(rng), vars);
		std::vector<int> vs;
		while (int(vs.size()) < w) {
			int v = var_d(rng);
			bool dup = false;
			for (int x : vs)
				if (x == v) dup = true;
			if (!dup) vs.push_back(v);
		}
		std::vector<int> clause;
		for (int v : vs) clause.push_back(sign_d(rng) ? v : -v);
		cs.push_back(clause);
	}
	return CnfFormula(vars, cs);
}

}
