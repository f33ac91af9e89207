#include "pgk/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "pgk/errors.hpp"

namespace pgk {

CnfFormula::CnfFormula(int num_vars, const std::vector<std::vector<int>>& clauses)
    : vars_(num_vars) {
	if (num_vars < 0) throw argument_error("cnf: negative variable count");
	std::set<std::vector<int>> seen;
	for (const auto& raw : clauses) {
		std::vector<int> c = raw;
		for (int lit : c) {
			int v = std::abs(lit);
			if (lit == 0 || v > num_vars)
				throw argument_error("cnf: literal out of range");
		}
		std::sort(c.begin(), c.end(), [](int a, int b) {
			return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
		});
		c.erase(std::unique(c.begin(), c.end()), c.end());
		bool tautology = false;
		for (std::size_t i = 0; i + 1 < c.size(); ++i)
			if (std::abs(c[i]) == std::abs(c[i + 1])) tautology = true;
		if (tautology) continue;
		if (seen.insert(c).second) clauses_.push_back(c);
	}
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
	std::istringstream in(text);
	std::string line;
	int vars = -1, lineno = 0;
	std::vector<std::vector<int>> clauses;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty() || line[0] == 'c') continue;
		std::istringstream ls(line);
		std::string first;
		ls >> first;
		if (first.empty()) continue;
		if (first == "p") {
			std::string fmt;
			long long pv = -1, pc = -1;
			if (!(ls >> fmt >> pv >> pc) || fmt != "cnf" || pv < 0 || pc < 0)
				throw parse_error("cnf line " + std::to_string(lineno) + ": bad problem line");
			if (vars >= 0)
				throw parse_error("cnf line " + std::to_string(lineno) + ": duplicate problem line");
			vars = int(pv);
		} else {
			if (vars < 0)
				throw parse_error("cnf line " + std::to_string(lineno) + ": clause before problem line");
			std::istringstream cs(line);
			std::vector<int> clause;
			long long lit;
			bool closed = false;
			while (cs >> lit) {
				if (lit == 0) {
					closed = true;
					break;
				}
				if (std::llabs(lit) > vars)
					throw parse_error("cnf line " + std::to_string(lineno) + ": literal out of range");
				clause.push_back(int(lit));
			}
			if (!closed)
				throw parse_error("cnf line " + std::to_string(lineno) + ": clause not terminated by 0");
			clauses.push_back(clause);
		}
	}
	if (vars < 0) throw parse_error("cnf: missing problem line");
	return CnfFormula(vars, clauses);
}

std::string to_dimacs_cnf(const CnfFormula& f) {
	std::ostringstream out;
	out << "p cnf " << f.num_vars() << " " << f.num_clauses() << "\n";
	for (const auto& c : f.clauses()) {
		for (int lit : c) out << lit << " ";
		out << "0\n";
	}
	return out.str();
}

}
