#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "pgk/compose.hpp"
#include "pgk/errors.hpp"
#include "pgk/graph.hpp"
#include "pgk/instance.hpp"
#include "pgk/oracles.hpp"
#include "pgk/params.hpp"

using namespace pgk;

namespace {

RefinementInstance make_ref(RefinementKind kind, Graph g, std::vector<int> base) {
	RefinementInstance ref;
	ref.kind = kind;
	ref.graph = std::move(g);
	ref.base = std::move(base);
	return ref;
}

RefinementInstance make_im_ref(Graph g, std::vector<std::pair<int, int>> base_edges) {
	RefinementInstance ref;
	ref.kind = RefinementKind::imr;
	ref.graph = std::move(g);
	ref.base_edges = std::move(base_edges);
	return ref;
}

bool out_yes(const CompositionOutput& out) { return solve(out.instance).yes; }

}

TEST_CASE("clique batches answer the or") {
	auto hit = compose_clique_or({graph_instance(ProblemKind::clique, complete_graph(3), 3),
	                              graph_instance(ProblemKind::clique, Graph(3), 3)});
	CHECK(hit.relation == '|');
	CHECK(hit.offsets == std::vector<int>{0, 3});
	CHECK(hit.extra_first == -1);
	CHECK(out_yes(hit));

	auto miss = compose_clique_or({graph_instance(ProblemKind::clique, Graph(3), 3),
	                               graph_instance(ProblemKind::clique, path_graph(3), 3)});
	CHECK_FALSE(out_yes(miss));

	auto single = compose_clique_or({graph_instance(ProblemKind::clique, cycle_graph(5), 2)});
	CHECK(single.instance.graph == cycle_graph(5));
	CHECK(single.offsets == std::vector<int>{0});
}

TEST_CASE("chromatic batches answer the and") {
	auto both = compose_chromatic_and(
	    {graph_instance(ProblemKind::chromatic_number, cycle_graph(4), 3),
	     graph_instance(ProblemKind::chromatic_number, path_graph(4), 3)});
	CHECK(both.relation == '&');
	CHECK(out_yes(both));

	auto one_fails = compose_chromatic_and(
	    {graph_instance(ProblemKind::chromatic_number, complete_graph(4), 3),
	     graph_instance(ProblemKind::chromatic_number, cycle_graph(4), 3)});
	CHECK_FALSE(out_yes(one_fails));
}

TEST_CASE("batch inputs must agree in shape") {
	auto k3 = graph_instance(ProblemKind::clique, complete_graph(3), 2);
	auto k4 = graph_instance(ProblemKind::clique, complete_graph(4), 2);
	auto other_k = graph_instance(ProblemKind::clique, complete_graph(3), 3);
	CHECK_THROWS_AS(compose_clique_or({k3, k4}), argument_error);
	CHECK_THROWS_AS(compose_clique_or({k3, other_k}), argument_error);
	CHECK_THROWS_AS(compose_clique_or({}), argument_error);
	CHECK_THROWS_AS(
	    compose_clique_or({graph_instance(ProblemKind::vertex_cover, complete_graph(3), 2)}),
	    argument_error);
}

TEST_CASE("feedback refinement batch") {
	// baseline all vertices: a strictly smaller transversal always exists
	auto loose = make_ref(RefinementKind::fvsr, complete_graph(3), {0, 1, 2});
	auto yes = compose_fvs_or({loose, loose});
	CHECK(yes.instance.kind == ProblemKind::feedback_vertex_set);
	CHECK(yes.instance.k == 5); // 2 * 3 - 1
	CHECK(out_yes(yes));

	// baseline already minimum: no part can improve
	auto tight = make_ref(RefinementKind::fvsr, complete_graph(3), {0});
	auto no = compose_fvs_or({tight, tight});
	CHECK(no.instance.k == 1);
	CHECK_FALSE(out_yes(no));

	// disagreeing baseline sizes
	CHECK_THROWS_AS(compose_fvs_or({tight, loose}), argument_error);
}

TEST_CASE("odd cycle refinement batch") {
	auto improvable = make_ref(RefinementKind::octr, cycle_graph(5), {0, 1});
	CHECK(out_yes(compose_oct_or({improvable, improvable})));

	auto minimum = make_ref(RefinementKind::octr, cycle_graph(5), {0});
	CHECK_FALSE(out_yes(compose_oct_or({minimum, minimum, minimum})));
}

TEST_CASE("dominating refinement batch") {
	auto two = make_ref(RefinementKind::dsr, star_graph(3), {0, 1});
	CHECK(out_yes(compose_ds_or({two, two})));

	auto center = make_ref(RefinementKind::dsr, star_graph(3), {0});
	CHECK_FALSE(out_yes(compose_ds_or({center, center})));
}

TEST_CASE("induced matching refinement batch") {
	Graph pairs = disjoint_union({complete_graph(2), complete_graph(2)}).graph;
	auto grow = make_im_ref(pairs, {{0, 1}});
	auto yes = compose_im_or({grow, grow});
	CHECK(yes.instance.k == 3); // 2 * 1 + 1
	CHECK(out_yes(yes));

	auto full = make_im_ref(pairs, {{0, 1}, {2, 3}});
	CHECK_FALSE(out_yes(compose_im_or({full, full})));
}

TEST_CASE("path batches answer the and") {
	Graph edge = complete_graph(2);
	auto both = compose_hp_and({edge, edge});
	CHECK(both.relation == '&');
	CHECK(both.extra_first == 4);
	CHECK(both.instance.graph.num_vertices() == 5); // one connector for two parts
	CHECK(out_yes(both));

	CHECK_FALSE(out_yes(compose_hp_and({edge, Graph(2)})));

	auto single = compose_hp_and({path_graph(3)});
	CHECK(single.extra_first == -1);
	CHECK(single.instance.graph == path_graph(3));
	CHECK(out_yes(single));

	CHECK_THROWS_AS(compose_hp_and({path_graph(4), cycle_graph(4)}), argument_error);
	CHECK_THROWS_AS(compose_hp_and({Graph(0)}), argument_error);
	CHECK_THROWS_AS(compose_hp_and({}), argument_error);
}

TEST_CASE("connected cover batch") {
	auto improvable = make_ref(RefinementKind::vcr, complete_graph(2), {0, 1});
	auto yes = compose_cvc_or({improvable, improvable});
	CHECK(yes.instance.kind == ProblemKind::connected_vertex_cover);
	CHECK(yes.instance.k == 4);
	CHECK(yes.extra_first == 4); // apex after both parts
	CHECK(yes.offsets == std::vector<int>{0, 2});
	CHECK(out_yes(yes));

	auto minimum = make_ref(RefinementKind::vcr, complete_graph(2), {0});
	auto no = compose_cvc_or({minimum, minimum});
	CHECK(no.instance.k == 2);
	CHECK_FALSE(out_yes(no));

	auto p4 = make_ref(RefinementKind::vcr, path_graph(4), {1, 2});
	auto c4 = make_ref(RefinementKind::vcr, cycle_graph(4), {0, 2});
	CHECK_THROWS_AS(compose_cvc_or({p4, c4}), argument_error); // widths differ
}

TEST_CASE("declared width bounds hold exactly") {
	auto cliques = compose_clique_or({graph_instance(ProblemKind::clique, cycle_graph(5), 2),
	                                  graph_instance(ProblemKind::clique, cycle_graph(5), 2)});
	CHECK(cliques.mw_bound == 5);
	CHECK(modular_width(cliques.instance.graph) <= cliques.mw_bound);

	auto paths = compose_hp_and({path_graph(4), path_graph(4), path_graph(4)});
	CHECK(paths.mw_bound == 4);
	CHECK(modular_width(paths.instance.graph) <= paths.mw_bound);

	auto covers = compose_cvc_or({make_ref(RefinementKind::vcr, path_graph(4), {1, 2}),
	                              make_ref(RefinementKind::vcr, path_graph(4), {0, 2})});
	CHECK(covers.mw_bound == 4);
	CHECK(modular_width(covers.instance.graph) <= covers.mw_bound);
}

TEST_CASE("greedy dominating sets are dominating") {
	CHECK(greedy_dominating_set(star_graph(4)) == std::vector<int>{0});
	for (const Graph& g : {cycle_graph(6), path_graph(5), petersen_graph(), Graph(3)}) {
		std::vector<int> ds = greedy_dominating_set(g);
		std::vector<char> hit(g.num_vertices(), 0);
		for (int v : ds) {
			hit[v] = 1;
			for (int u : g.neighbors(v)) hit[u] = 1;
		}
		for (int v = 0; v < g.num_vertices(); ++v) CHECK(hit[v] == 1);
	}
}

TEST_CASE("bucketing groups compatible instances") {
	nlohmann::json arr = nlohmann::json::array();
	arr.push_back(instance_to_json(graph_instance(ProblemKind::clique, complete_graph(3), 2)));
	arr.push_back(instance_to_json(graph_instance(ProblemKind::clique, path_graph(3), 2)));
	arr.push_back(instance_to_json(graph_instance(ProblemKind::clique, complete_graph(4), 2)));
	arr.push_back(instance_to_json(graph_instance(ProblemKind::vertex_cover, Graph(3), 2)));
	arr.push_back("not an instance");

	Buckets b = bucket_by_relation(arr, "clique-or");
	REQUIRE(b.classes.size() == 2);
	CHECK(b.classes[0].first == "n=3 k=2");
	CHECK(b.classes[0].second == std::vector<int>{0, 1});
	CHECK(b.classes[1].second == std::vector<int>{2});
	REQUIRE(b.bad.size() == 2);
	CHECK(b.bad[0].first == 3);
	CHECK_FALSE(b.bad[0].second.empty());
	CHECK(b.bad[1].first == 4);

	CHECK_THROWS_AS(bucket_by_relation(arr, "clique-and"), argument_error);
	CHECK_THROWS_AS(bucket_by_relation(nlohmann::json::object(), "clique-or"),
	                argument_error);
}

TEST_CASE("bucketing keys refinement batches by baseline and width") {
	nlohmann::json arr = nlohmann::json::array();
	arr.push_back(refinement_to_json(make_ref(RefinementKind::vcr, path_graph(4), {1, 2})));
	arr.push_back(refinement_to_json(make_ref(RefinementKind::vcr, path_graph(4), {0, 2})));
	arr.push_back(refinement_to_json(make_ref(RefinementKind::vcr, cycle_graph(4), {0, 2})));
	arr.push_back(refinement_to_json(make_ref(RefinementKind::vcr, path_graph(4), {3})));
	arr.push_back(refinement_to_json(make_ref(RefinementKind::fvsr, path_graph(4), {0})));

	Buckets b = bucket_by_relation(arr, "cvc-or");
	REQUIRE(b.classes.size() == 2);
	CHECK(b.classes[0].first == "n=4 k=2 mw=4");
	CHECK(b.classes[0].second == std::vector<int>{0, 1});
	CHECK(b.classes[1].first == "n=4 k=2 mw=0");
	// index 3: base {3} is not a vertex cover of the path
	// index 4: wrong refinement kind
	CHECK(b.bad.size() == 2);
}
