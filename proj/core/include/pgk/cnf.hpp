#pragma once

#include <string>
#include <vector>

namespace pgk {

// CNF formula with 1-based signed literals (DIMACS convention). Construction
// canonicalizes: literals inside a clause are sorted and deduplicated,
// clauses containing a variable in both polarities are dropped (always
// satisfied), and duplicate clauses are removed.
class CnfFormula {
public:
	CnfFormula() = default;
	CnfFormula(int num_vars, const std::vector<std::vector<int>>& clauses);

	int num_vars() const { return vars_; }
	int num_clauses() const { return int(clauses_.size()); }
	const std::vector<std::vector<int>>& clauses() const { return clauses_; }

	bool operator==(const CnfFormula& o) const {
		return vars_ == o.vars_ && clauses_ == o.clauses_;
	}

private:
	int vars_ = 0;
	std::vector<std::vector<int>> clauses_;
};

// DIMACS CNF ("p cnf vars clauses", clause lines terminated by 0).
CnfFormula parse_dimacs_cnf(const std::string& text);
std::string to_dimacs_cnf(const CnfFormula& f);

}
