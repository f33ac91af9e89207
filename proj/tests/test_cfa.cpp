#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pgk/cfa.hpp"
#include "pgk/errors.hpp"
#include "pgk/guardrails.hpp"
#include "pgk/oracles.hpp"

using namespace pgk;

namespace {

CfaInstance one_buyer(BigInt weight, BigInt capacity) {
	CfaInstance c;
	c.profit[0] = 5;
	c.weight[0] = CfaWeight::of(std::move(weight));
	c.capacity[100] = std::move(capacity);
	c.edges.insert({0, 100});
	c.target = 5;
	return c;
}

// the three reduction rules applied in a random order until none fits,
// independently of the library's fixed priority schedule
CfaInstance randomized_exhaustion(CfaInstance c, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	int fresh = 1'000'000;
	while (true) {
		struct Move {
			int rule;
			int a = -1, b = -1;
		};
		std::vector<Move> moves;
		for (const auto& [b, p] : c.profit)
			if (c.buyer_degree(b) == 0) moves.push_back({1, b, 1});
		for (const auto& [s, cap] : c.capacity)
			if (c.seller_degree(s) == 0) moves.push_back({1, s, 0});
		for (const auto& [b, s] : c.edges) {
			const CfaWeight& w = c.weight.at(b);
			if (w.infinite || w.value > c.capacity.at(s)) moves.push_back({2, b, s});
		}
		for (const auto& [b, p] : c.profit)
			if (c.buyer_degree(b) > c.num_buyers()) moves.push_back({3, b});
		if (moves.empty()) return c;
		Move m = moves[rng() % moves.size()];
		if (m.rule == 1) {
			if (m.b == 1) {
				c.profit.erase(m.a);
				c.weight.erase(m.a);
				std::erase_if(c.conflicts, [&](const std::pair<int, int>& p) {
					return p.first == m.a || p.second == m.a;
				});
			} else {
				c.capacity.erase(m.a);
			}
		} else if (m.rule == 2) {
			c.edges.erase({m.a, m.b});
		} else {
			std::erase_if(c.edges,
			              [&](const std::pair<int, int>& e) { return e.first == m.a; });
			int s = fresh++;
			c.capacity[s] = c.weight.at(m.a).infinite ? BigInt(0) : c.weight.at(m.a).value;
			c.edges.insert({m.a, s});
		}
	}
}

}

TEST_CASE("isolated vertices are dropped") {
	CfaInstance c = one_buyer(3, 3);
	c.capacity[200] = 50; // nobody shops here
	auto res = kernelize_cfa(c);
	CHECK(res.instance.capacity.count(200) == 0);
	CHECK(res.instance.capacity.count(100) == 1);
	REQUIRE(res.trace.size() == 1);
	CHECK(res.trace[0].rule == CfaKernelStep::Rule::drop_isolated);
	CHECK(res.trace[0].vertex == 200);
	CHECK_FALSE(res.trace[0].vertex_is_buyer);
}

TEST_CASE("overweight edges are dropped, then the starved buyer goes too") {
	CfaInstance c = one_buyer(5, 3);
	auto res = kernelize_cfa(c);
	// the only edge dies, then both endpoints are isolated
	CHECK(res.instance.num_buyers() == 0);
	CHECK(res.instance.num_sellers() == 0);
	CHECK(res.instance.target == 5);
	bool saw_edge_drop = false;
	for (const auto& step : res.trace)
		if (step.rule == CfaKernelStep::Rule::drop_heavy_edge) {
			saw_edge_drop = true;
			CHECK(step.buyer == 0);
			CHECK(step.seller == 100);
		}
	CHECK(saw_edge_drop);

	CfaInstance inf = one_buyer(0, 100);
	inf.weight[0] = CfaWeight::inf();
	auto res2 = kernelize_cfa(inf);
	CHECK(res2.instance.edges.empty());
}

TEST_CASE("a buyer with too many sellers is rewired to a fresh one") {
	CfaInstance c;
	c.profit[0] = 7;
	c.weight[0] = CfaWeight::of(4);
	c.capacity[10] = 9;
	c.capacity[11] = 9;
	c.edges.insert({0, 10});
	c.edges.insert({0, 11});
	c.target = 7;
	auto res = kernelize_cfa(c);
	CHECK(res.instance.num_buyers() == 1);
	CHECK(res.instance.num_sellers() == 1);
	int fresh = res.instance.capacity.begin()->first;
	CHECK(fresh != 10);
	CHECK(fresh != 11);
	CHECK(res.instance.capacity.at(fresh) == 4); // capacity = the buyer's weight
	CHECK(res.instance.buyer_degree(0) == 1);
	bool saw_rewire = false;
	for (const auto& step : res.trace)
		if (step.rule == CfaKernelStep::Rule::rewire_big_buyer) {
			saw_rewire = true;
			CHECK(step.buyer == 0);
			CHECK(step.fresh_seller == fresh);
		}
	CHECK(saw_rewire);
	CHECK(solve_cfa(c).yes == solve_cfa(res.instance).yes);
}

TEST_CASE("a seller glut collapses to the quadratic bound") {
	CfaInstance c;
	for (int b = 0; b < 2; ++b) {
		c.profit[b] = 1;
		c.weight[b] = CfaWeight::of(1);
	}
	for (int s = 0; s < 8; ++s) { // |B|^3 sellers
		c.capacity[100 + s] = 5;
		c.edges.insert({0, 100 + s});
		c.edges.insert({1, 100 + s});
	}
	c.target = 2;
	auto res = kernelize_cfa(c);
	CHECK(res.instance.num_buyers() == 2);
	CHECK(res.instance.num_sellers() <= 4);
	CHECK(kernel_bound_violation(res.instance) == std::nullopt);
	CHECK(solve_cfa(res.instance).yes);
}

TEST_CASE("bound checker spots violations") {
	CfaInstance c = one_buyer(3, 3);
	CHECK(kernel_bound_violation(c) == std::nullopt);
	c.capacity[200] = 5;
	CHECK(kernel_bound_violation(c).has_value());

	CfaInstance busy;
	busy.profit[0] = 1;
	busy.weight[0] = CfaWeight::of(1);
	busy.capacity[10] = 1;
	busy.capacity[11] = 1;
	busy.edges.insert({0, 10});
	busy.edges.insert({0, 11});
	busy.target = 1;
	CHECK(kernel_bound_violation(busy).has_value()); // degree 2 > |B| = 1
}

TEST_CASE("kernel preserves the answer on random instances") {
	for (std::uint64_t seed = 0; seed < 150; ++seed) {
		CfaInstance in = random_cfa(6, 8, seed);
		auto res = kernelize_cfa(in);
		CHECK(kernel_bound_violation(res.instance) == std::nullopt);
		CHECK(res.instance.num_buyers() <= in.num_buyers());
		CHECK(res.instance.target == in.target);
		CHECK(solve_cfa(in).yes == solve_cfa(res.instance).yes);
	}
}

TEST_CASE("rule order does not change the answer") {
	for (std::uint64_t seed = 0; seed < 60; ++seed) {
		CfaInstance in = random_cfa(5, 7, seed);
		bool expected = solve_cfa(in).yes;
		CfaInstance shuffled = randomized_exhaustion(in, seed * 31 + 1);
		shuffled.validate();
		CHECK(solve_cfa(shuffled, Guardrails::unlimited()).yes == expected);
		CHECK(solve_cfa(kernelize_cfa(in).instance).yes == expected);
	}
}

TEST_CASE("json round trip keeps big numbers and infinities") {
	CfaInstance c;
	c.profit[3] = BigInt(1) << 100;
	c.weight[3] = CfaWeight::inf();
	c.profit[4] = 2;
	c.weight[4] = CfaWeight::of(BigInt(7) << 90);
	c.capacity[9] = BigInt(5) << 120;
	c.edges.insert({3, 9});
	c.edges.insert({4, 9});
	c.conflicts.insert({3, 4});
	c.target = BigInt(11) << 80;
	CfaInstance back = cfa_from_json(cfa_to_json(c));
	CHECK(back == c);
}

TEST_CASE("structural validation") {
	CfaInstance c = one_buyer(3, 3);
	c.edges.insert({5, 100}); // unknown buyer
	CHECK_THROWS_AS(c.validate(), argument_error);

	CfaInstance r = one_buyer(3, 3);
	r.conflicts.insert({0, 0});
	CHECK_THROWS_AS(r.validate(), argument_error);
}

TEST_CASE("random generator is deterministic") {
	CHECK(random_cfa(6, 8, 12345) == random_cfa(6, 8, 12345));
	CHECK_FALSE(random_cfa(6, 8, 1) == random_cfa(6, 8, 2));
}
