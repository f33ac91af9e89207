#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgk/graph.hpp"
#include "pgk/guardrails.hpp"

namespace pgk {

// Everything a verification run depends on. Two runs with equal configs
// produce byte-identical canonical reports.
struct SuiteConfig {
	std::uint64_t seed = 1;
	int trials = 50;
	bool shrink_failures = true;
	Guardrails rails;
	std::map<std::string, int> size_override; // per-target instance size cap
};

struct TrialOutcome {
	enum class Status { pass, fail, skip };
	Status status = Status::pass;
	std::string detail; // failure description / skip reason
};

// One verifiable transformation: generate a trial instance from a sub-seed,
// run it (transform, solve both sides, compare per the declared relation),
// and propose smaller variants of a failing instance.
struct Target {
	std::string name;
	char relation = '='; // '=' equivalence, '|' OR of inputs, '&' AND
	std::function<nlohmann::json(const SuiteConfig&, std::uint64_t)> generate;
	std::function<TrialOutcome(const nlohmann::json&, const Guardrails&)> run;
	std::function<std::vector<nlohmann::json>(const nlohmann::json&)> shrink;
};

// Static registry. Names starting with '_' are fault-injection fixtures and
// excluded from "all".
const std::vector<Target>& verification_targets();
std::vector<std::string> resolve_target_names(const std::vector<std::string>& requested);

struct TargetReport {
	std::string name;
	char relation = '=';
	int passed = 0;
	int failed = 0;
	int skipped = 0;
	std::vector<std::string> skip_reasons; // one per skipped trial
	std::optional<nlohmann::json> counterexample; // first failure, minimized
	std::string failure_detail;
	int shrink_steps = 0;
	double elapsed_ms = 0; // never part of canonical output
};

struct SuiteReport {
	std::vector<TargetReport> targets;
	int total_passed = 0;
	int total_failed = 0;
	int total_skipped = 0;
	bool pass = true; // no failed trials anywhere
};

SuiteReport run_suite(const SuiteConfig& cfg, const std::vector<std::string>& targets);

// Canonical JSON ("schema": 1). Timing fields appear only on request and are
// excluded from the canonical determinism contract.
nlohmann::json suite_report_to_json(const SuiteReport& r, bool include_timing = false);

// Trial sub-seed: FNV-1a over the master seed, target name and trial index.
std::uint64_t fnv_sub_seed(std::uint64_t seed, const std::string& target, int trial);

// Shared graph corpus: every labeled graph on up to 4 vertices, density
// sweeps for 5..8, and 500 random graphs on up to 12.
std::vector<Graph> sweep_corpus(std::uint64_t seed);

// Computes (vc, tc, nd, mw) across the corpus and checks tc <= vc,
// mw <= nd and nd <= 2*2^vc + vc. Returns the canonical report, including
// any violations and the largest measured nd / bound ratio.
nlohmann::json param_sweep(const SuiteConfig& cfg);

}
