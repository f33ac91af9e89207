#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pgk/cnf.hpp"
#include "pgk/errors.hpp"
#include "pgk/generate.hpp"
#include "pgk/graph.hpp"
#include "pgk/instance.hpp"
#include "pgk/oracles.hpp"
#include "pgk/params.hpp"
#include "pgk/ppt.hpp"

using namespace pgk;

namespace {

void check_side_outputs(const PptOutput& out) {
	const Graph& g = out.is_refinement() ? out.refinement->graph : out.instance.graph;
	CHECK(is_vertex_cover(g, out.cover));
	CHECK(long(out.cover.size()) <= out.cover_bound);
	CHECK(int(out.labels.size()) == g.num_vertices());
}

bool gadget_yes(const PptOutput& out) {
	return out.is_refinement() ? solve_refinement(*out.refinement)
	                           : solve(out.instance).yes;
}

}

TEST_CASE("multicolored clique into induced matching") {
	auto lone = mcc_to_induced_matching(complete_graph(2), {1, 2}, 2);
	CHECK(lone.instance.kind == ProblemKind::induced_matching);
	CHECK(gadget_yes(lone));
	check_side_outputs(lone);

	CHECK_FALSE(gadget_yes(mcc_to_induced_matching(complete_graph(2), {1, 1}, 2)));
	CHECK(gadget_yes(mcc_to_induced_matching(complete_graph(3), {1, 2, 3}, 3)));
	CHECK(gadget_yes(mcc_to_induced_matching(path_graph(3), {1, 2, 1}, 2)));
	CHECK_FALSE(gadget_yes(mcc_to_induced_matching(Graph(3), {1, 2, 3}, 2)));
}

TEST_CASE("multicolored clique gadget agrees with the direct answer") {
	std::mt19937_64 rng(51);
	for (int round = 0; round < 60; ++round) {
		int k = 1 + int(rng() % 3);
		int n = k + int(rng() % 4);
		Graph g = gen_gnp(n, 0.5, rng());
		std::vector<int> coloring;
		for (int v = 0; v < n; ++v) coloring.push_back(1 + int(rng() % k));
		bool direct = solve(mcc_instance(g, coloring, k)).yes;
		auto out = mcc_to_induced_matching(g, coloring, k);
		CHECK(direct == gadget_yes(out));
		check_side_outputs(out);
	}
}

TEST_CASE("satisfiability into coloring") {
	auto sat = sat_to_chromatic(CnfFormula(1, {{1}}));
	CHECK(sat.instance.kind == ProblemKind::chromatic_number);
	CHECK(sat.instance.k == 2); // one variable: spine plus apex
	CHECK(gadget_yes(sat));
	check_side_outputs(sat);

	CHECK_FALSE(gadget_yes(sat_to_chromatic(CnfFormula(1, {{1}, {-1}}))));
	CHECK(gadget_yes(sat_to_chromatic(CnfFormula(3, {{1, -2}, {2, 3}, {-1, -3}}))));
}

TEST_CASE("satisfiability into steiner tree") {
	auto sat = sat_to_steiner(CnfFormula(1, {{1}}));
	CHECK(sat.instance.kind == ProblemKind::steiner_tree);
	CHECK(sat.instance.k == 3); // 2n + m edges
	CHECK(sat.instance.terminals.size() == 3);
	CHECK(gadget_yes(sat));
	check_side_outputs(sat);

	CHECK_FALSE(gadget_yes(sat_to_steiner(CnfFormula(1, {{1}, {-1}}))));
	CHECK(gadget_yes(sat_to_steiner(CnfFormula(2, {{1, 2}, {-1, 2}}))));
}

TEST_CASE("satisfiability into dominating sets") {
	auto connected = sat_to_cds(CnfFormula(1, {{1}}), false);
	CHECK(connected.instance.kind == ProblemKind::connected_dominating_set);
	CHECK(connected.instance.k == 2);
	CHECK(gadget_yes(connected));
	check_side_outputs(connected);

	auto independent = sat_to_cds(CnfFormula(1, {{1}}), true);
	CHECK(independent.instance.kind == ProblemKind::independent_dominating_set);
	CHECK(independent.instance.k == 1);
	CHECK(gadget_yes(independent));
	check_side_outputs(independent);

	CnfFormula contradiction(1, {{1}, {-1}});
	CHECK_FALSE(gadget_yes(sat_to_cds(contradiction, false)));
	CHECK_FALSE(gadget_yes(sat_to_cds(contradiction, true)));
}

TEST_CASE("satisfiability gadgets agree with the solver") {
	std::mt19937_64 rng(52);
	for (int round = 0; round < 50; ++round) {
		CnfFormula f = gen_cnf(1 + int(rng() % 3), int(rng() % 5), rng());
		bool direct = solve(sat_instance(f)).yes;
		CHECK(direct == gadget_yes(sat_to_chromatic(f)));
		CHECK(direct == gadget_yes(sat_to_steiner(f)));
		CHECK(direct == gadget_yes(sat_to_cds(f, false)));
		CHECK(direct == gadget_yes(sat_to_cds(f, true)));
	}
}

TEST_CASE("refinement gadget fixed answers") {
	CHECK_FALSE(gadget_yes(refine_vc(complete_graph(3), 1)));
	CHECK(gadget_yes(refine_vc(path_graph(3), 1)));
	CHECK_THROWS_AS(refine_vc(complete_graph(2), 1), argument_error);

	CHECK(gadget_yes(refine_fvs(complete_graph(3), 1)));
	CHECK_FALSE(gadget_yes(refine_fvs(complete_graph(4), 1)));
	CHECK(gadget_yes(refine_fvs(cycle_graph(4), 1)));

	CHECK(gadget_yes(refine_oct(complete_graph(3), 1)));
	CHECK_FALSE(gadget_yes(refine_oct(complete_graph(5), 1)));
	CHECK(gadget_yes(refine_oct(cycle_graph(5), 1)));

	CHECK(gadget_yes(refine_im(disjoint_union({complete_graph(2), complete_graph(2)}).graph, 2)));
	CHECK_FALSE(gadget_yes(refine_im(complete_graph(4), 2)));
	CHECK(gadget_yes(refine_im(path_graph(5), 2)));
	CHECK_THROWS_AS(refine_im(complete_graph(4), 1), argument_error);
	CHECK_THROWS_AS(refine_im(path_graph(5), 3), argument_error);
}

TEST_CASE("refinement gadgets agree with the direct answer") {
	std::mt19937_64 rng(53);
	for (int round = 0; round < 50; ++round) {
		int n = 2 + int(rng() % 5);
		Graph g = gen_gnp(n, 0.45, rng());
		long long k = rng() % (n - 1); // [0, n-2]
		auto vc = refine_vc(g, k);
		CHECK(gadget_yes(vc) ==
		      solve(graph_instance(ProblemKind::vertex_cover, g, k)).yes);
		check_side_outputs(vc);
		auto fvs = refine_fvs(g, k);
		CHECK(gadget_yes(fvs) ==
		      solve(graph_instance(ProblemKind::feedback_vertex_set, g, k)).yes);
		check_side_outputs(fvs);
		auto oct = refine_oct(g, k);
		CHECK(gadget_yes(oct) ==
		      solve(graph_instance(ProblemKind::odd_cycle_transversal, g, k)).yes);
		check_side_outputs(oct);
	}
	for (int round = 0; round < 40; ++round) {
		int n = 4 + int(rng() % 4);
		Graph g = gen_gnp(n, 0.35, rng());
		long long k = 2 + rng() % (n / 2 - 1); // [2, n/2]
		auto im = refine_im(g, k);
		CHECK(gadget_yes(im) ==
		      solve(graph_instance(ProblemKind::induced_matching, g, k)).yes);
		check_side_outputs(im);
	}
}

TEST_CASE("refinement baselines validate") {
	// the packaged base solution must itself pass validation
	CHECK_NOTHROW(refine_vc(complete_graph(4), 2).refinement->validate());
	CHECK_NOTHROW(refine_fvs(cycle_graph(5), 2).refinement->validate());
	CHECK_NOTHROW(refine_oct(cycle_graph(5), 2).refinement->validate());
	CHECK_NOTHROW(refine_im(path_graph(6), 2).refinement->validate());
}

TEST_CASE("path question becomes a cycle question") {
	auto out = hp_to_hc(path_graph(3));
	CHECK(out.instance.kind == ProblemKind::hamiltonian_cycle);
	CHECK(out.instance.graph.num_vertices() == 4);
	CHECK(gadget_yes(out));
	check_side_outputs(out);

	CHECK_FALSE(gadget_yes(hp_to_hc(Graph(2))));
	CHECK_THROWS_AS(hp_to_hc(Graph(1)), argument_error);
	CHECK_THROWS_AS(hp_to_hc(Graph(0)), argument_error);

	std::mt19937_64 rng(54);
	for (int round = 0; round < 40; ++round) {
		Graph g = gen_gnp(2 + int(rng() % 6), 0.5, rng());
		CHECK(gadget_yes(hp_to_hc(g)) ==
		      solve(graph_instance(ProblemKind::hamiltonian_path, g, 0)).yes);
	}
}
