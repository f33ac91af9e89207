#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pgk/cnf.hpp"
#include "pgk/errors.hpp"
#include "pgk/generate.hpp"

using namespace pgk;

TEST_CASE("canonicalization") {
	// literals sorted by variable then sign, duplicates removed
	CnfFormula f(3, {{3, 1, -2, 1}});
	REQUIRE(f.num_clauses() == 1);
	CHECK(f.clauses()[0] == std::vector<int>{1, -2, 3});

	// tautological clauses vanish, duplicate clauses collapse
	CnfFormula g(2, {{1, -1}, {2}, {2}});
	CHECK(g.num_clauses() == 1);
	CHECK(g.clauses()[0] == std::vector<int>{2});

	CHECK_THROWS_AS(CnfFormula(2, {{0}}), argument_error);
	CHECK_THROWS_AS(CnfFormula(2, {{3}}), argument_error);
	CHECK_THROWS_AS(CnfFormula(2, {{-3}}), argument_error);
}

TEST_CASE("dimacs cnf round trip") {
	CnfFormula f(3, {{1, -2}, {2, 3}, {-1}});
	CHECK(parse_dimacs_cnf(to_dimacs_cnf(f)) == f);

	CnfFormula parsed = parse_dimacs_cnf("c comment\np cnf 2 2\n1 -2 0\n2 0\n");
	CHECK(parsed.num_vars() == 2);
	CHECK(parsed.num_clauses() == 2);

	CHECK_THROWS_AS(parse_dimacs_cnf("1 2 0\n"), parse_error);
	CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 1\n2 0\n"), parse_error);
}

TEST_CASE("empty formula") {
	CnfFormula f(2, {});
	CHECK(f.num_clauses() == 0);
	CHECK(parse_dimacs_cnf(to_dimacs_cnf(f)) == f);
}

TEST_CASE("random formulas stay within their declared bounds") {
	for (std::uint64_t seed = 0; seed < 50; ++seed) {
		CnfFormula f = gen_cnf(3, 4, seed);
		CHECK(f.num_vars() == 3);
		CHECK(f.num_clauses() <= 4);
		for (const auto& c : f.clauses()) {
			CHECK(!c.empty());
			CHECK(c.size() <= 3);
			for (int lit : c) {
				CHECK(lit != 0);
				CHECK(std::abs(lit) <= 3);
			}
		}
	}
}
