#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "pgk/errors.hpp"
#include "pgk/harness.hpp"

using namespace pgk;

TEST_CASE("target registry") {
	const auto& targets = verification_targets();
	CHECK(targets.size() >= 26);
	std::set<std::string> names;
	for (const auto& t : targets) {
		CHECK(names.insert(t.name).second); // unique
		CHECK((t.relation == '=' || t.relation == '|' || t.relation == '&'));
		CHECK(bool(t.generate));
		CHECK(bool(t.run));
	}
	CHECK(names.count("_fault-vc-refine") == 1);
}

TEST_CASE("name resolution") {
	auto all = resolve_target_names({});
	CHECK(all.size() == verification_targets().size() - 1); // fixture excluded
	for (const auto& n : all) CHECK(n[0] != '_');

	auto picked = resolve_target_names({"cfa-kernel", "turing-clique", "cfa-kernel"});
	CHECK(picked == std::vector<std::string>{"cfa-kernel", "turing-clique"});

	auto fixture = resolve_target_names({"_fault-vc-refine"});
	CHECK(fixture.size() == 1);

	CHECK_THROWS_AS(resolve_target_names({"no-such-target"}), argument_error);
}

TEST_CASE("sub-seeds separate targets and trials") {
	std::set<std::uint64_t> seen;
	for (int trial = 0; trial < 50; ++trial) {
		seen.insert(fnv_sub_seed(1, "cfa-kernel", trial));
		seen.insert(fnv_sub_seed(1, "turing-clique", trial));
	}
	CHECK(seen.size() == 100);
	CHECK(fnv_sub_seed(1, "cfa-kernel", 0) == fnv_sub_seed(1, "cfa-kernel", 0));
	CHECK(fnv_sub_seed(1, "cfa-kernel", 0) != fnv_sub_seed(2, "cfa-kernel", 0));
}

TEST_CASE("zero trials produce an empty passing report") {
	SuiteConfig cfg;
	cfg.trials = 0;
	auto r = run_suite(cfg, {"cfa-kernel"});
	CHECK(r.pass);
	CHECK(r.total_passed == 0);
	CHECK(r.targets.size() == 1);
	CHECK(r.targets[0].passed == 0);
}

TEST_CASE("a healthy target passes its trials") {
	SuiteConfig cfg;
	cfg.trials = 25;
	cfg.seed = 7;
	auto r = run_suite(cfg, {"vc-refine"});
	CHECK(r.pass);
	CHECK(r.total_failed == 0);
	CHECK(r.targets[0].passed + r.targets[0].skipped == 25);
}

TEST_CASE("the fault fixture fails and leaves a counterexample") {
	SuiteConfig cfg;
	cfg.trials = 30;
	auto r = run_suite(cfg, {"_fault-vc-refine"});
	CHECK_FALSE(r.pass);
	REQUIRE(r.targets.size() == 1);
	const auto& t = r.targets[0];
	CHECK(t.failed >= 1);
	REQUIRE(t.counterexample.has_value());
	CHECK_FALSE(t.failure_detail.empty());
	// the shrinker only ever replaces a failing instance with a smaller
	// failing one, so the counterexample stays a genuine failure
	const auto& target = [&]() -> const Target& {
		for (const auto& cand : verification_targets())
			if (cand.name == "_fault-vc-refine") return cand;
		throw std::logic_error("fixture not registered");
	}();
	auto outcome = target.run(*t.counterexample, cfg.rails);
	CHECK(outcome.status == TrialOutcome::Status::fail);
}

TEST_CASE("suite reports are canonical json") {
	SuiteConfig cfg;
	cfg.trials = 10;
	auto r1 = run_suite(cfg, {"cfa-kernel", "sat-chromatic"});
	auto r2 = run_suite(cfg, {"cfa-kernel", "sat-chromatic"});
	auto j1 = suite_report_to_json(r1);
	auto j2 = suite_report_to_json(r2);
	CHECK(j1 == j2);
	CHECK(j1.at("schema") == 1);
	CHECK(j1.at("pass") == true);
	CHECK(j1.at("targets").size() == 2);
	CHECK(j1.dump().find("elapsed") == std::string::npos);

	auto timed = suite_report_to_json(r1, true);
	CHECK(timed.dump().find("elapsed") != std::string::npos);
}

TEST_CASE("different seeds draw different instances") {
	SuiteConfig a;
	a.trials = 1;
	const auto& targets = verification_targets();
	const Target* cfa = nullptr;
	for (const auto& t : targets)
		if (t.name == "cfa-kernel") cfa = &t;
	REQUIRE(cfa != nullptr);
	auto one = cfa->generate(a, fnv_sub_seed(1, "cfa-kernel", 0));
	auto two = cfa->generate(a, fnv_sub_seed(1, "cfa-kernel", 1));
	CHECK(one != two);
	auto again = cfa->generate(a, fnv_sub_seed(1, "cfa-kernel", 0));
	CHECK(one == again);
}

TEST_CASE("size overrides reach the generators") {
	const Target* refine = nullptr;
	for (const auto& t : verification_targets())
		if (t.name == "vc-refine") refine = &t;
	REQUIRE(refine != nullptr);

	SuiteConfig small;
	small.size_override["vc-refine"] = 3;
	for (int trial = 0; trial < 20; ++trial) {
		auto j = refine->generate(small, fnv_sub_seed(3, "vc-refine", trial));
		CHECK(j.at("graph").at("n").get<int>() <= 3);
	}

	small.trials = 10;
	auto r = run_suite(small, {"vc-refine"});
	CHECK(r.pass);
}

TEST_CASE("corpus composition") {
	auto corpus = sweep_corpus(1);
	CHECK(corpus.size() == 816);
	int tiny = 0;
	for (const auto& g : corpus) {
		CHECK(g.num_vertices() <= 12);
		if (g.num_vertices() <= 4) ++tiny;
	}
	CHECK(tiny >= 76); // every labeled graph on up to 4 vertices
	// deterministic for a fixed seed
	auto again = sweep_corpus(1);
	CHECK(corpus.size() == again.size());
	for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(corpus[i] == again[i]);
}

TEST_CASE("parameter sweep holds on the corpus") {
	SuiteConfig cfg;
	auto j = param_sweep(cfg);
	CHECK(j.at("schema") == 1);
	CHECK(j.at("pass") == true);
	CHECK(j.at("graphs") == 816);
	CHECK(j.at("violations").empty());
	CHECK(j.at("max_nd_ratio").get<double>() <= 1.0);
}
