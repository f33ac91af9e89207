#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "pgk/cfa.hpp"
#include "pgk/cnf.hpp"
#include "pgk/errors.hpp"
#include "pgk/graph.hpp"
#include "pgk/instance.hpp"
#include "pgk/oracles.hpp"

using namespace pgk;

TEST_CASE("problem kind names round trip") {
	const ProblemKind all[] = {
	    ProblemKind::clique,
	    ProblemKind::independent_set,
	    ProblemKind::vertex_cover,
	    ProblemKind::dominating_set,
	    ProblemKind::connected_dominating_set,
	    ProblemKind::independent_dominating_set,
	    ProblemKind::connected_vertex_cover,
	    ProblemKind::feedback_vertex_set,
	    ProblemKind::odd_cycle_transversal,
	    ProblemKind::chromatic_number,
	    ProblemKind::hamiltonian_cycle,
	    ProblemKind::hamiltonian_path,
	    ProblemKind::steiner_tree,
	    ProblemKind::induced_matching,
	    ProblemKind::triangle_partition,
	    ProblemKind::multicolored_clique,
	    ProblemKind::cnf_sat,
	    ProblemKind::cfa,
	};
	for (ProblemKind k : all) CHECK(kind_from_name(kind_name(k)) == k);

	CHECK(kind_name(ProblemKind::vertex_cover) == "vertex-cover");
	CHECK(kind_name(ProblemKind::odd_cycle_transversal) == "odd-cycle-transversal");
	CHECK(kind_name(ProblemKind::independent_dominating_set) ==
	      "independent-dominating-set");
	CHECK(kind_name(ProblemKind::cnf_sat) == "cnf-sat");
	CHECK(kind_name(ProblemKind::multicolored_clique) == "multicolored-clique");

	CHECK_THROWS_AS(kind_from_name("vertex_cover"), parse_error);
	CHECK_THROWS_AS(kind_from_name("unknown"), parse_error);
}

TEST_CASE("refinement kind names round trip") {
	for (RefinementKind k : {RefinementKind::vcr, RefinementKind::fvsr, RefinementKind::octr,
	                         RefinementKind::dsr, RefinementKind::imr})
		CHECK(refinement_from_name(refinement_name(k)) == k);
	CHECK_THROWS_AS(refinement_from_name("vc"), parse_error);
}

TEST_CASE("graph json round trip") {
	Graph g = petersen_graph();
	CHECK(graph_from_json(graph_to_json(g)) == g);
	CHECK(graph_from_json(graph_to_json(Graph(0))) == Graph(0));

	CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"edges", nlohmann::json::array()}}),
	                parse_error);
	CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", -1}}), parse_error);
	CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0]]})")),
	                parse_error);
	CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,0]]})")),
	                parse_error);
	CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,5]]})")),
	                parse_error);
}

TEST_CASE("threshold instance json") {
	auto inst = graph_instance(ProblemKind::clique, complete_graph(4), 2);
	auto j = instance_to_json(inst);
	CHECK(j.at("schema") == 1);
	CHECK(j.at("kind") == "clique");
	CHECK(j.at("k") == 2);
	auto back = instance_from_json(j);
	CHECK(back.kind == inst.kind);
	CHECK(back.k == inst.k);
	CHECK(back.graph == inst.graph);
}

TEST_CASE("hamiltonian instances carry no threshold") {
	auto j = instance_to_json(
	    graph_instance(ProblemKind::hamiltonian_cycle, cycle_graph(5), 0));
	CHECK_FALSE(j.contains("k"));
	CHECK(instance_from_json(j).graph == cycle_graph(5));
}

TEST_CASE("steiner instance json") {
	auto inst = steiner_instance(path_graph(4), {2, 0, 2}, 3);
	CHECK(inst.terminals == std::vector<int>{0, 2}); // deduplicated, sorted
	auto back = instance_from_json(instance_to_json(inst));
	CHECK(back.terminals == inst.terminals);
	CHECK(back.k == 3);

	CHECK_THROWS_AS(steiner_instance(path_graph(4), {4}, 1), argument_error);
}

TEST_CASE("multicolored clique instance json") {
	auto inst = mcc_instance(complete_graph(3), {1, 2, 2}, 2);
	auto back = instance_from_json(instance_to_json(inst));
	CHECK(back.coloring == inst.coloring);

	auto j = instance_to_json(inst);
	j["coloring"] = {1, 2, 5}; // color beyond k
	CHECK_THROWS_AS(instance_from_json(j), parse_error);
	CHECK_THROWS_AS(mcc_instance(complete_graph(3), {1, 2}, 2), argument_error);
}

TEST_CASE("formula instance json") {
	auto inst = sat_instance(CnfFormula(2, {{1, -2}, {2}}));
	auto j = instance_to_json(inst);
	CHECK_FALSE(j.contains("graph"));
	auto back = instance_from_json(j);
	CHECK(back.formula.num_vars() == 2);
	CHECK(back.formula.clauses() == inst.formula.clauses());
}

TEST_CASE("assignment instance json") {
	CfaInstance c = random_cfa(3, 6, 7);
	auto back = instance_from_json(instance_to_json(cfa_wrap(c)));
	CHECK(back.kind == ProblemKind::cfa);
	CHECK(back.cfa == c);
}

TEST_CASE("triangle partition always asks for a perfect partition") {
	auto inst = graph_instance(ProblemKind::triangle_partition, complete_graph(3), 0);
	CHECK(inst.k == 3); // normalized to n

	auto j = instance_to_json(inst);
	j["k"] = 7;
	CHECK(instance_from_json(j).k == 3); // normalized again on read

	ProblemInstance manual;
	manual.kind = ProblemKind::triangle_partition;
	manual.graph = complete_graph(3);
	manual.k = 1;
	CHECK_THROWS_AS(manual.validate(), argument_error);
}

TEST_CASE("instance json rejects malformed input") {
	CHECK_THROWS_AS(instance_from_json(nlohmann::json(3)), parse_error);
	CHECK_THROWS_AS(instance_from_json(nlohmann::json::object()), parse_error);
	CHECK_THROWS_AS(
	    instance_from_json(nlohmann::json::parse(R"({"schema":2,"kind":"clique"})")),
	    parse_error);
	CHECK_THROWS_AS(
	    instance_from_json(nlohmann::json::parse(R"({"kind":"clique"})")),
	    parse_error); // no graph
	CHECK_THROWS_AS(
	    instance_from_json(nlohmann::json::parse(R"({"kind":"cnf-sat"})")),
	    parse_error); // no formula
}

TEST_CASE("refinement instance json") {
	RefinementInstance vcr;
	vcr.kind = RefinementKind::vcr;
	vcr.graph = path_graph(4);
	vcr.base = {1, 2};
	auto j = refinement_to_json(vcr);
	CHECK(j.at("kind") == "vcr");
	CHECK_FALSE(j.contains("base_edges"));
	auto back = refinement_from_json(j);
	CHECK(back.kind == RefinementKind::vcr);
	CHECK(back.graph == vcr.graph);
	CHECK(back.base == vcr.base);

	RefinementInstance imr;
	imr.kind = RefinementKind::imr;
	imr.graph = disjoint_union({complete_graph(2), complete_graph(2)}).graph;
	imr.base_edges = {{0, 1}, {2, 3}};
	auto jm = refinement_to_json(imr);
	CHECK_FALSE(jm.contains("base"));
	CHECK(refinement_from_json(jm).base_edges == imr.base_edges);

	j["base"] = {3}; // leaves edge 0-1 uncovered
	CHECK_THROWS_AS(refinement_from_json(j), parse_error);
	CHECK_THROWS_AS(refinement_from_json(nlohmann::json::parse(R"({"kind":"vcr"})")),
	                parse_error);
}

TEST_CASE("refinement validation catches bad baselines") {
	RefinementInstance r;
	r.kind = RefinementKind::dsr;
	r.graph = path_graph(4);
	r.base = {0}; // vertex 3 undominated
	CHECK_THROWS_AS(r.validate(), argument_error);

	r.kind = RefinementKind::vcr;
	r.base = {1, 1};
	CHECK_THROWS_AS(r.validate(), argument_error); // repeated vertex

	r.base = {1, 7};
	CHECK_THROWS_AS(r.validate(), argument_error); // out of range

	RefinementInstance m;
	m.kind = RefinementKind::imr;
	m.graph = path_graph(4);
	m.base = {0};
	CHECK_THROWS_AS(m.validate(), argument_error); // imr uses base_edges

	m.base = {};
	m.base_edges = {{0, 1}, {2, 3}};
	CHECK_THROWS_AS(m.validate(), argument_error); // adjacent matching edges

	RefinementInstance v;
	v.kind = RefinementKind::vcr;
	v.graph = path_graph(3);
	v.base = {1};
	v.base_edges = {{0, 1}};
	CHECK_THROWS_AS(v.validate(), argument_error); // stray base_edges
}

TEST_CASE("witness json carries only populated fields") {
	CHECK(witness_to_json(Witness{}) == nlohmann::json::object());

	auto answer = solve(graph_instance(ProblemKind::clique, complete_graph(3), 3));
	REQUIRE(answer.yes);
	REQUIRE(answer.witness.has_value());
	auto j = witness_to_json(*answer.witness);
	CHECK(j.at("vertices").size() == 3);
	CHECK_FALSE(j.contains("order"));

	Witness w;
	w.order = {0, 1, 2};
	w.triangles = {{0, 1, 2}};
	auto jw = witness_to_json(w);
	CHECK(jw.at("order") == nlohmann::json({0, 1, 2}));
	CHECK(jw.at("triangles").size() == 1);
	CHECK_FALSE(jw.contains("vertices"));
}
