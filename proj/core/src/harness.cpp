#include "pgk/harness.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "pgk/cfa.hpp"
#include "pgk/compose.hpp"
#include "pgk/errors.hpp"
#include "pgk/generate.hpp"
#include "pgk/instance.hpp"
#include "pgk/kernels_tc.hpp"
#include "pgk/nd_compress.hpp"
#include "pgk/oracles.hpp"
#include "pgk/params.hpp"
#include "pgk/ppt.hpp"

namespace pgk {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// small shared helpers
// ---------------------------------------------------------------------------

int rand_int(std::mt19937_64& rng, int lo, int hi) {
	return int(lo + rng() % std::uint64_t(hi - lo + 1));
}

double pick_density(std::mt19937_64& rng) {
	static const double choices[] = {0.15, 0.3, 0.5, 0.7, 0.85};
	return choices[rng() % 5];
}

int size_cap(const SuiteConfig& cfg, const std::string& name, int fallback) {
	auto it = cfg.size_override.find(name);
	return it == cfg.size_override.end() ? fallback : std::min(it->second, fallback);
}

TrialOutcome ok() { return {}; }

TrialOutcome mismatch(bool lhs, bool rhs, const std::string& left,
                      const std::string& right) {
	TrialOutcome t;
	t.status = TrialOutcome::Status::fail;
	t.detail = left + " says " + (lhs ? "yes" : "no") + " but " + right + " says " +
	           (rhs ? "yes" : "no");
	return t;
}

TrialOutcome agree(bool lhs, bool rhs, const std::string& left, const std::string& right) {
	return lhs == rhs ? ok() : mismatch(lhs, rhs, left, right);
}

bool solve_yes(const ProblemInstance& inst, const Guardrails& rails) {
	return solve(inst, rails).yes;
}

Graph permuted_copy(const Graph& g, std::mt19937_64& rng) {
	const int n = g.num_vertices();
	std::vector<int> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rand_int(rng, 0, i)]);
	std::vector<std::pair<int, int>> edges;
	for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
	return Graph(n, edges);
}

// exact optimum by scanning the threshold upward from zero
long long min_solution_size(ProblemKind kind, const Graph& g, std::vector<int>* set_out) {
	for (long long k = 0;; ++k) {
		Answer a = solve(graph_instance(kind, g, k), Guardrails::unlimited());
		if (!a.yes) continue;
		if (set_out) *set_out = a.witness ? a.witness->vertices : std::vector<int>{};
		return k;
	}
}

long long max_induced_matching(const Graph& g,
                               std::vector<std::pair<int, int>>* edges_out) {
	long long best = 0;
	if (edges_out) edges_out->clear();
	for (long long k = 1; 2 * k <= g.num_vertices(); ++k) {
		Answer a = solve(graph_instance(ProblemKind::induced_matching, g, k),
		                 Guardrails::unlimited());
		if (!a.yes) break;
		best = k;
		if (edges_out && a.witness) *edges_out = a.witness->edges;
	}
	return best;
}

// grow `chosen` to exactly `size` members using the lowest ids not yet in it
std::vector<int> pad_to_size(std::vector<int> chosen, int size, int n) {
	std::set<int> in(chosen.begin(), chosen.end());
	for (int v = 0; v < n && int(in.size()) < size; ++v) in.insert(v);
	return std::vector<int>(in.begin(), in.end());
}

std::vector<std::pair<int, int>> pairs_from_json(const json& arr) {
	std::vector<std::pair<int, int>> out;
	for (const auto& e : arr) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
	return out;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
	json arr = json::array();
	for (auto [a, b] : pairs) arr.push_back(json::array({a, b}));
	return arr;
}

// ---------------------------------------------------------------------------
// shrinking: vertex deletions that keep the payload shape consistent
// ---------------------------------------------------------------------------

// delete `victim` and remap the optional cover / coloring / base fields
json drop_vertex(const json& j, int victim) {
	Graph g = graph_from_json(j.at("graph"));
	std::vector<int> keep;
	for (int v = 0; v < g.num_vertices(); ++v)
		if (v != victim) keep.push_back(v);
	InducedSubgraph sub = induced_subgraph(g, keep);

	json out = j;
	out["graph"] = graph_to_json(sub.graph);
	if (j.contains("cover")) {
		std::vector<int> cover;
		for (int v : j.at("cover").get<std::vector<int>>())
			if (sub.new_ids[v] != -1) cover.push_back(sub.new_ids[v]);
		std::sort(cover.begin(), cover.end());
		out["cover"] = cover;
	}
	if (j.contains("coloring")) {
		std::vector<int> coloring;
		auto old = j.at("coloring").get<std::vector<int>>();
		for (int v = 0; v < g.num_vertices(); ++v)
			if (v != victim) coloring.push_back(old[v]);
		out["coloring"] = coloring;
	}
	return out;
}

std::vector<json> shrink_single_graph(const json& j) {
	std::vector<json> out;
	Graph g = graph_from_json(j.at("graph"));
	for (int v = g.num_vertices() - 1; v >= 0; --v) out.push_back(drop_vertex(j, v));
	return out;
}

std::vector<json> shrink_formula(const json& j) {
	std::vector<json> out;
	CnfFormula f = formula_from_json(j.at("formula"));
	for (int c = f.num_clauses() - 1; c >= 0; --c) {
		std::vector<std::vector<int>> clauses = f.clauses();
		clauses.erase(clauses.begin() + c);
		json cand = j;
		cand["formula"] = formula_to_json(CnfFormula(f.num_vars(), clauses));
		out.push_back(cand);
	}
	return out;
}

std::vector<json> shrink_cfa(const json& j) {
	std::vector<json> out;
	CfaInstance c = cfa_from_json(j.at("cfa"));
	for (auto it = c.profit.rbegin(); it != c.profit.rend(); ++it) {
		CfaInstance d = c;
		int b = it->first;
		d.profit.erase(b);
		d.weight.erase(b);
		for (auto e = d.edges.begin(); e != d.edges.end();)
			e = e->first == b ? d.edges.erase(e) : std::next(e);
		for (auto p = d.conflicts.begin(); p != d.conflicts.end();)
			p = (p->first == b || p->second == b) ? d.conflicts.erase(p) : std::next(p);
		json cand = j;
		cand["cfa"] = cfa_to_json(d);
		out.push_back(cand);
	}
	for (auto it = c.capacity.rbegin(); it != c.capacity.rend(); ++it) {
		CfaInstance d = c;
		int s = it->first;
		d.capacity.erase(s);
		for (auto e = d.edges.begin(); e != d.edges.end();)
			e = e->second == s ? d.edges.erase(e) : std::next(e);
		json cand = j;
		cand["cfa"] = cfa_to_json(d);
		out.push_back(cand);
	}
	return out;
}

// drop one part, or drop the same vertex from every part (parts must stay the
// same size). Parts are stored as instance/refinement/graph objects.
std::vector<json> shrink_parts(const json& j) {
	std::vector<json> out;
	const json& parts = j.at("parts");
	if (parts.size() > 1)
		for (std::size_t p = 0; p < parts.size(); ++p) {
			json cand = j;
			cand["parts"].erase(cand["parts"].begin() + int(p));
			out.push_back(cand);
		}

	auto part_graph = [](const json& part) {
		return graph_from_json(part.contains("graph") ? part.at("graph") : part);
	};
	int n = parts.empty() ? 0 : part_graph(parts[0]).num_vertices();
	for (int victim = n - 1; victim >= 0; --victim) {
		json cand = j;
		for (auto& part : cand["parts"]) {
			Graph g = part_graph(part);
			std::vector<int> keep;
			for (int v = 0; v < g.num_vertices(); ++v)
				if (v != victim) keep.push_back(v);
			InducedSubgraph sub = induced_subgraph(g, keep);
			json graph_json = graph_to_json(sub.graph);
			if (!part.contains("graph")) {
				part = graph_json;
				continue;
			}
			part["graph"] = graph_json;
			if (part.contains("base")) {
				std::vector<int> base;
				for (int v : part.at("base").get<std::vector<int>>())
					if (sub.new_ids[v] != -1) base.push_back(sub.new_ids[v]);
				part["base"] = base;
			}
			if (part.contains("base_edges")) {
				std::vector<std::pair<int, int>> edges;
				for (auto [a, b] : pairs_from_json(part.at("base_edges"))) {
					if (sub.new_ids[a] == -1 || sub.new_ids[b] == -1) continue;
					edges.push_back({sub.new_ids[a], sub.new_ids[b]});
				}
				part["base_edges"] = pairs_to_json(edges);
			}
		}
		out.push_back(cand);
	}
	return out;
}

// ---------------------------------------------------------------------------
// transformation targets
// ---------------------------------------------------------------------------

Target make_mcc_im_target() {
	Target t;
	t.name = "mcc-im";
	t.relation = '=';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int cap = size_cap(cfg, "mcc-im", 6);
		int k = rand_int(rng, 0, 3);
		int n = k == 0 ? 0 : rand_int(rng, std::min(k, cap), cap);
		Graph g = gen_gnp(n, pick_density(rng), rng());
		std::vector<int> coloring(n);
		for (int v = 0; v < n; ++v) coloring[v] = rand_int(rng, 1, k);
		json j;
		j["graph"] = graph_to_json(g);
		j["coloring"] = coloring;
		j["k"] = k;
		return j;
	};
	t.run = [](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		std::vector<int> coloring = j.at("coloring").get<std::vector<int>>();
		int k = j.at("k").get<int>();
		PptOutput out = mcc_to_induced_matching(g, coloring, k);
		bool lhs = solve_yes(mcc_instance(g, coloring, k), rails);
		bool rhs = solve_yes(out.instance, rails);
		return agree(lhs, rhs, "the colored clique side", "the matching side");
	};
	t.shrink = shrink_single_graph;
	return t;
}

Target make_sat_target(const std::string& name, char mode) {
	Target t;
	t.name = name;
	t.relation = '=';
	t.generate = [name](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int vars = rand_int(rng, 1, std::max(1, size_cap(cfg, name, 3)));
		int clauses = rand_int(rng, 0, 4);
		json j;
		j["formula"] = formula_to_json(gen_cnf(vars, clauses, rng()));
		return j;
	};
	t.run = [mode](const json& j, const Guardrails& rails) {
		CnfFormula f = formula_from_json(j.at("formula"));
		PptOutput out = mode == 'c' ? sat_to_chromatic(f)
		              : mode == 's' ? sat_to_steiner(f)
		              : mode == 'd' ? sat_to_cds(f, false)
		                            : sat_to_cds(f, true);
		bool lhs = solve_yes(sat_instance(f), rails);
		bool rhs = solve_yes(out.instance, rails);
		return agree(lhs, rhs, "the formula side", "the graph side");
	};
	t.shrink = shrink_formula;
	return t;
}

Target make_refine_target(const std::string& name, char mode) {
	Target t;
	t.name = name;
	t.relation = '=';
	t.generate = [name, mode](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int n, k;
		if (mode == 'v') {
			n = rand_int(rng, 2, std::max(2, size_cap(cfg, name, 7)));
			k = rand_int(rng, 0, n - 2);
		} else if (mode == 'm') {
			n = rand_int(rng, 4, std::max(4, size_cap(cfg, name, 7)));
			k = rand_int(rng, 2, n / 2);
		} else {
			n = rand_int(rng, 2, std::max(2, size_cap(cfg, name, 5)));
			k = rand_int(rng, 0, n - 2);
		}
		json j;
		j["graph"] = graph_to_json(gen_gnp(n, pick_density(rng), rng()));
		j["k"] = k;
		return j;
	};
	t.run = [mode](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		long long k = j.at("k").get<long long>();
		PptOutput out = mode == 'v' ? refine_vc(g, k)
		              : mode == 'f' ? refine_fvs(g, k)
		              : mode == 'o' ? refine_oct(g, k)
		                            : refine_im(g, k);
		ProblemKind kind = mode == 'v' ? ProblemKind::vertex_cover
		                 : mode == 'f' ? ProblemKind::feedback_vertex_set
		                 : mode == 'o' ? ProblemKind::odd_cycle_transversal
		                               : ProblemKind::induced_matching;
		bool lhs = solve_yes(graph_instance(kind, g, k), rails);
		bool rhs = solve_refinement(*out.refinement, rails);
		return agree(lhs, rhs, "the threshold side", "the refinement side");
	};
	t.shrink = [mode](const json& j) {
		// vertex deletion changes n, so keep k inside its window
		std::vector<json> out;
		Graph g = graph_from_json(j.at("graph"));
		long long k = j.at("k").get<long long>();
		for (int v = g.num_vertices() - 1; v >= 0; --v) {
			json cand = drop_vertex(j, v);
			int n = g.num_vertices() - 1;
			long long lo = mode == 'm' ? 2 : 0;
			long long hi = mode == 'm' ? n / 2 : n - 2;
			if (k < lo || hi < lo) continue;
			cand["k"] = std::min(k, hi);
			out.push_back(cand);
		}
		return out;
	};
	return t;
}

Target make_hp_hc_target() {
	Target t;
	t.name = "hp-hc";
	t.relation = '=';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int n = rand_int(rng, 2, std::max(2, size_cap(cfg, "hp-hc", 8)));
		json j;
		j["graph"] = graph_to_json(gen_gnp(n, pick_density(rng), rng()));
		return j;
	};
	t.run = [](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		PptOutput out = hp_to_hc(g);
		bool lhs = solve_yes(graph_instance(ProblemKind::hamiltonian_path, g, 0), rails);
		bool rhs = solve_yes(out.instance, rails);
		return agree(lhs, rhs, "the path side", "the cycle side");
	};
	t.shrink = shrink_single_graph;
	return t;
}

Target make_cfa_kernel_target() {
	Target t;
	t.name = "cfa-kernel";
	t.relation = '=';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int buyers = size_cap(cfg, "cfa-kernel", 6);
		json j;
		j["cfa"] = cfa_to_json(random_cfa(buyers, 8, rng()));
		return j;
	};
	t.run = [](const json& j, const Guardrails& rails) {
		CfaInstance in = cfa_from_json(j.at("cfa"));
		CfaKernelResult kr = kernelize_cfa(in);
		if (auto violation = kernel_bound_violation(kr.instance)) {
			TrialOutcome t;
			t.status = TrialOutcome::Status::fail;
			t.detail = *violation;
			return t;
		}
		bool lhs = solve_cfa(in, rails).yes;
		bool rhs = solve_cfa(kr.instance, rails).yes;
		return agree(lhs, rhs, "the input", "the kernel");
	};
	t.shrink = shrink_cfa;
	return t;
}

json gen_cluster_payload(const SuiteConfig& cfg, const std::string& name,
                         std::uint64_t sub_seed, int total_cap, int attach_cap,
                         bool with_k, int k_extra) {
	std::mt19937_64 rng(sub_seed);
	int cap = std::max(1, size_cap(cfg, name, total_cap));
	int attach = rand_int(rng, 0, std::min(attach_cap, cap - 1));
	int blocks = rand_int(rng, 1, 3);
	std::vector<int> sizes;
	int used = attach;
	for (int b = 0; b < blocks && used < cap; ++b) {
		int s = rand_int(rng, 1, std::min(5, cap - used));
		sizes.push_back(s);
		used += s;
	}
	if (sizes.empty()) sizes.push_back(1);
	Graph g = gen_cluster(sizes, attach, rng());
	std::vector<int> cover;
	for (int v = g.num_vertices() - attach; v < g.num_vertices(); ++v) cover.push_back(v);
	json j;
	j["graph"] = graph_to_json(g);
	j["cover"] = cover;
	if (with_k) j["k"] = rand_int(rng, 0, g.num_vertices() + k_extra);
	return j;
}

Target make_tp_tc_target() {
	Target t;
	t.name = "tp-tc";
	t.relation = '=';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		return gen_cluster_payload(cfg, "tp-tc", sub_seed, 12, 3, false, 0);
	};
	t.run = [](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		std::vector<int> cover = j.at("cover").get<std::vector<int>>();
		TpCompressResult out = tp_tc_compress(g, cover, rails);
		bool lhs = solve_yes(graph_instance(ProblemKind::triangle_partition, g, 0), rails);
		// compressed instances outgrow the desk-scale buyer cap by design
		bool rhs = solve_cfa(out.cfa, Guardrails::unlimited()).yes;
		return agree(lhs, rhs, "the partition side", "the assignment side");
	};
	t.shrink = shrink_single_graph;
	return t;
}

Target make_tp_vc_target() {
	Target t;
	t.name = "tp-vc";
	t.relation = '=';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int n = rand_int(rng, 0, size_cap(cfg, "tp-vc", 9));
		json j;
		j["graph"] = graph_to_json(gen_gnp(n, pick_density(rng), rng()));
		return j;
	};
	t.run = [](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		std::vector<int> cover = vertex_cover_exact(g).cover;
		TpVcKernel out = tp_vc_kernel(g, cover);
		bool lhs = solve_yes(graph_instance(ProblemKind::triangle_partition, g, 0), rails);
		bool rhs = !out.immediate_no &&
		           solve_yes(graph_instance(ProblemKind::triangle_partition, out.graph, 0),
		                     rails);
		return agree(lhs, rhs, "the input", "the kernel");
	};
	t.shrink = shrink_single_graph;
	return t;
}

Target make_collapse_target(const std::string& name, char mode) {
	Target t;
	t.name = name;
	t.relation = '=';
	t.generate = [name](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		return gen_cluster_payload(cfg, name, sub_seed, 12, 3, true, 0);
	};
	t.run = [mode](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		std::vector<int> cover = j.at("cover").get<std::vector<int>>();
		long long k = j.at("k").get<long long>();
		CollapseKernel out = mode == 'v' ? vc_tc_kernel(g, cover, k)
		                   : mode == 'o' ? oct_tc_collapse(g, cover, k)
		                                 : is_tc_kernel(g, cover, k);
		ProblemKind kind = mode == 'v' ? ProblemKind::vertex_cover
		                 : mode == 'o' ? ProblemKind::odd_cycle_transversal
		                               : ProblemKind::independent_set;
		bool lhs = solve_yes(graph_instance(kind, g, k), rails);
		bool rhs = !out.immediate_no &&
		           solve_yes(graph_instance(kind, out.graph, out.k), rails);
		return agree(lhs, rhs, "the input", "the kernel");
	};
	t.shrink = shrink_single_graph;
	return t;
}

Target make_turing_target() {
	Target t;
	t.name = "turing-clique";
	t.relation = '=';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		return gen_cluster_payload(cfg, "turing-clique", sub_seed, 14, 3, true, 1);
	};
	t.run = [](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		std::vector<int> cover = j.at("cover").get<std::vector<int>>();
		int k = j.at("k").get<int>();
		CliqueOracle oracle = [&rails](const Graph& q, int threshold) {
			return solve_yes(graph_instance(ProblemKind::clique, q, threshold), rails);
		};
		TuringTranscript tr = clique_tc_turing(g, cover, k, oracle);
		for (const auto& q : tr.queries)
			if (q.graph.num_vertices() > int(cover.size()) + 1) {
				TrialOutcome bad;
				bad.status = TrialOutcome::Status::fail;
				bad.detail = "query on " + std::to_string(q.graph.num_vertices()) +
				             " vertices with a cover of " +
				             std::to_string(cover.size());
				return bad;
			}
		bool lhs = solve_yes(graph_instance(ProblemKind::clique, g, k), rails);
		return agree(lhs, tr.answer, "the direct solver", "the query protocol");
	};
	t.shrink = shrink_single_graph;
	return t;
}

Target make_nd_codec_target() {
	Target t;
	t.name = "nd-codec";
	t.relation = '=';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int n = rand_int(rng, 0, size_cap(cfg, "nd-codec", 8));
		Graph g = gen_gnp(n, pick_density(rng), rng());
		const auto& kinds = nd_codec_kinds();
		json j;
		j["graph"] = graph_to_json(g);
		j["kind"] = kind_name(kinds[rng() % kinds.size()]);
		j["k"] = rand_int(rng, 0, n + 1);
		return j;
	};
	t.run = [](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		ProblemKind kind = kind_from_name(j.at("kind").get<std::string>());
		long long k = j.at("k").get<long long>();
		QuotientEncoding enc = encode_nd(g, kind, k);
		if (enc.bytes.size() * 8 > enc.bit_bound) {
			TrialOutcome bad;
			bad.status = TrialOutcome::Status::fail;
			bad.detail = std::to_string(enc.bytes.size() * 8) + " bits against a bound of " +
			             std::to_string(enc.bit_bound);
			return bad;
		}
		auto mismatches = verify_answer_preserved(g, {kind}, {k}, rails);
		if (mismatches.empty()) return ok();
		TrialOutcome bad;
		bad.status = TrialOutcome::Status::fail;
		bad.detail = mismatches.front();
		return bad;
	};
	t.shrink = shrink_single_graph;
	return t;
}

// ---------------------------------------------------------------------------
// composition targets
// ---------------------------------------------------------------------------

TrialOutcome check_mw_bound(const CompositionOutput& out) {
	long long measured = modular_width(out.instance.graph);
	if (measured <= out.mw_bound) return ok();
	TrialOutcome bad;
	bad.status = TrialOutcome::Status::fail;
	bad.detail = "modular width " + std::to_string(measured) + " above the declared " +
	             std::to_string(out.mw_bound);
	return bad;
}

Target make_union_target(const std::string& name, ProblemKind kind, char relation) {
	Target t;
	t.name = name;
	t.relation = relation;
	t.generate = [name, kind](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int parts = rand_int(rng, 1, 3);
		int n = rand_int(rng, 0, size_cap(cfg, name, 6));
		long long k = rand_int(rng, 0, n + 1);
		json arr = json::array();
		for (int p = 0; p < parts; ++p) {
			ProblemInstance inst =
			    graph_instance(kind, gen_gnp(n, pick_density(rng), rng()), k);
			arr.push_back(instance_to_json(inst));
		}
		json j;
		j["parts"] = arr;
		return j;
	};
	t.run = [kind](const json& j, const Guardrails& rails) {
		std::vector<ProblemInstance> parts;
		for (const auto& pj : j.at("parts")) parts.push_back(instance_from_json(pj));
		CompositionOutput out = kind == ProblemKind::clique
		                            ? compose_clique_or(parts)
		                            : compose_chromatic_and(parts);
		bool lhs = out.relation == '|' ? false : true;
		for (const auto& p : parts) {
			bool yes = solve_yes(p, rails);
			lhs = out.relation == '|' ? (lhs || yes) : (lhs && yes);
		}
		bool rhs = solve_yes(out.instance, rails);
		TrialOutcome cmp = agree(lhs, rhs, "the parts", "the batch");
		return cmp.status == TrialOutcome::Status::pass ? check_mw_bound(out) : cmp;
	};
	t.shrink = shrink_parts;
	return t;
}

Target make_hp_and_target() {
	Target t;
	t.name = "hp-and";
	t.relation = '&';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int parts = rand_int(rng, 1, 3);
		int n = rand_int(rng, 1, std::max(1, size_cap(cfg, "hp-and", 6)));
		Graph first = gen_gnp(n, pick_density(rng), rng());
		int want = modular_width(first);
		json arr = json::array();
		arr.push_back(graph_to_json(first));
		for (int p = 1; p < parts; ++p) {
			Graph g = first;
			bool found = false;
			for (int tries = 0; tries < 40 && !found; ++tries) {
				Graph cand = gen_gnp(n, pick_density(rng), rng());
				if (modular_width(cand) == want) {
					g = cand;
					found = true;
				}
			}
			if (!found) g = permuted_copy(first, rng);
			arr.push_back(graph_to_json(g));
		}
		json j;
		j["parts"] = arr;
		return j;
	};
	t.run = [](const json& j, const Guardrails& rails) {
		std::vector<Graph> parts;
		for (const auto& pj : j.at("parts")) parts.push_back(graph_from_json(pj));
		CompositionOutput out = compose_hp_and(parts);
		bool lhs = true;
		for (const auto& g : parts)
			lhs = lhs &&
			      solve_yes(graph_instance(ProblemKind::hamiltonian_path, g, 0), rails);
		bool rhs = solve_yes(out.instance, rails);
		TrialOutcome cmp = agree(lhs, rhs, "the parts", "the batch");
		return cmp.status == TrialOutcome::Status::pass ? check_mw_bound(out) : cmp;
	};
	t.shrink = shrink_parts;
	return t;
}

json refinement_parts_payload(std::mt19937_64& rng, int parts, int n_lo, int n_hi,
                              RefinementKind kind, bool match_mw) {
	int n = rand_int(rng, n_lo, std::max(n_lo, n_hi));
	std::vector<Graph> graphs;
	Graph first = gen_gnp(n, pick_density(rng), rng());
	graphs.push_back(first);
	int want = match_mw ? modular_width(first) : -1;
	for (int p = 1; p < parts; ++p) {
		Graph g = first;
		bool found = !match_mw;
		if (!match_mw) g = gen_gnp(n, pick_density(rng), rng());
		for (int tries = 0; tries < 40 && !found; ++tries) {
			Graph cand = gen_gnp(n, pick_density(rng), rng());
			if (modular_width(cand) == want) {
				g = cand;
				found = true;
			}
		}
		if (!found) g = permuted_copy(first, rng);
		graphs.push_back(g);
	}

	// baselines: solve each part exactly, then pad every baseline to one
	// shared size so the batch is well formed
	std::vector<RefinementInstance> insts;
	if (kind == RefinementKind::imr) {
		int shared = INT_MAX;
		std::vector<std::vector<std::pair<int, int>>> matchings(graphs.size());
		for (std::size_t i = 0; i < graphs.size(); ++i)
			shared = std::min(shared, int(max_induced_matching(graphs[i], &matchings[i])));
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			RefinementInstance r;
			r.kind = kind;
			r.graph = graphs[i];
			matchings[i].resize(shared);
			r.base_edges = matchings[i];
			insts.push_back(std::move(r));
		}
	} else {
		int shared = 0;
		std::vector<std::vector<int>> sets(graphs.size());
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			if (kind == RefinementKind::vcr)
				sets[i] = vertex_cover_exact(graphs[i]).cover;
			else if (kind == RefinementKind::dsr)
				sets[i] = greedy_dominating_set(graphs[i]);
			else
				min_solution_size(kind == RefinementKind::fvsr
				                      ? ProblemKind::feedback_vertex_set
				                      : ProblemKind::odd_cycle_transversal,
				                  graphs[i], &sets[i]);
			shared = std::max(shared, int(sets[i].size()));
		}
		if (shared < n && rand_int(rng, 0, 3) == 0) ++shared;
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			RefinementInstance r;
			r.kind = kind;
			r.graph = graphs[i];
			r.base = pad_to_size(sets[i], shared, n);
			insts.push_back(std::move(r));
		}
	}

	json arr = json::array();
	for (const auto& r : insts) arr.push_back(refinement_to_json(r));
	json j;
	j["parts"] = arr;
	return j;
}

Target make_refinement_union_target(const std::string& name, RefinementKind kind) {
	Target t;
	t.name = name;
	t.relation = '|';
	t.generate = [name, kind](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int parts = rand_int(rng, 1, 3);
		int hi = size_cap(cfg, name, kind == RefinementKind::imr ? 6 : 5);
		return refinement_parts_payload(rng, parts, kind == RefinementKind::imr ? 2 : 1,
		                                hi, kind, false);
	};
	t.run = [kind](const json& j, const Guardrails& rails) {
		std::vector<RefinementInstance> parts;
		for (const auto& pj : j.at("parts")) parts.push_back(refinement_from_json(pj));
		CompositionOutput out = kind == RefinementKind::fvsr
		                            ? compose_fvs_or(parts)
		                        : kind == RefinementKind::octr
		                            ? compose_oct_or(parts)
		                        : kind == RefinementKind::dsr ? compose_ds_or(parts)
		                                                      : compose_im_or(parts);
		bool lhs = false;
		for (const auto& p : parts) lhs = lhs || solve_refinement(p, rails);
		bool rhs = solve_yes(out.instance, rails);
		TrialOutcome cmp = agree(lhs, rhs, "the parts", "the batch");
		return cmp.status == TrialOutcome::Status::pass ? check_mw_bound(out) : cmp;
	};
	t.shrink = shrink_parts;
	return t;
}

Target make_cvc_or_target() {
	Target t;
	t.name = "cvc-or";
	t.relation = '|';
	t.generate = [](const SuiteConfig& cfg, std::uint64_t sub_seed) {
		std::mt19937_64 rng(sub_seed);
		int parts = rand_int(rng, 1, 3);
		int hi = size_cap(cfg, "cvc-or", 5);
		return refinement_parts_payload(rng, parts, 2, hi, RefinementKind::vcr, true);
	};
	t.run = [](const json& j, const Guardrails& rails) {
		std::vector<RefinementInstance> parts;
		for (const auto& pj : j.at("parts")) parts.push_back(refinement_from_json(pj));
		CompositionOutput out = compose_cvc_or(parts);
		bool lhs = false;
		for (const auto& p : parts) lhs = lhs || solve_refinement(p, rails);
		bool rhs = solve_yes(out.instance, rails);
		TrialOutcome cmp = agree(lhs, rhs, "the parts", "the batch");
		return cmp.status == TrialOutcome::Status::pass ? check_mw_bound(out) : cmp;
	};
	t.shrink = shrink_parts;
	return t;
}

// deliberately broken variant used to prove the harness reports and shrinks
// failures; hidden from "all"
Target make_fault_target() {
	Target base = make_refine_target("_fault-vc-refine", 'v');
	base.run = [](const json& j, const Guardrails& rails) {
		Graph g = graph_from_json(j.at("graph"));
		long long k = j.at("k").get<long long>();
		PptOutput out = refine_vc(g, k);
		// off-by-one planted on the left side
		bool lhs =
		    solve_yes(graph_instance(ProblemKind::vertex_cover, g, k - 1), rails);
		bool rhs = solve_refinement(*out.refinement, rails);
		return agree(lhs, rhs, "the threshold side", "the refinement side");
	};
	return base;
}

}

// ---------------------------------------------------------------------------
// registry and driver
// ---------------------------------------------------------------------------

const std::vector<Target>& verification_targets() {
	static const std::vector<Target> targets = [] {
		std::vector<Target> all;
		all.push_back(make_mcc_im_target());
		all.push_back(make_sat_target("sat-chromatic", 'c'));
		all.push_back(make_sat_target("sat-steiner", 's'));
		all.push_back(make_sat_target("sat-cds", 'd'));
		all.push_back(make_sat_target("sat-ids", 'i'));
		all.push_back(make_refine_target("vc-refine", 'v'));
		all.push_back(make_refine_target("fvs-refine", 'f'));
		all.push_back(make_refine_target("oct-refine", 'o'));
		all.push_back(make_refine_target("im-refine", 'm'));
		all.push_back(make_hp_hc_target());
		all.push_back(make_cfa_kernel_target());
		all.push_back(make_tp_tc_target());
		all.push_back(make_tp_vc_target());
		all.push_back(make_collapse_target("vc-tc", 'v'));
		all.push_back(make_collapse_target("oct-tc", 'o'));
		all.push_back(make_collapse_target("is-tc", 'i'));
		all.push_back(make_turing_target());
		all.push_back(make_nd_codec_target());
		all.push_back(make_union_target("clique-or", ProblemKind::clique, '|'));
		all.push_back(
		    make_union_target("chromatic-and", ProblemKind::chromatic_number, '&'));
		all.push_back(make_hp_and_target());
		all.push_back(make_cvc_or_target());
		all.push_back(make_refinement_union_target("fvs-or", RefinementKind::fvsr));
		all.push_back(make_refinement_union_target("oct-or", RefinementKind::octr));
		all.push_back(make_refinement_union_target("ds-or", RefinementKind::dsr));
		all.push_back(make_refinement_union_target("im-or", RefinementKind::imr));
		all.push_back(make_fault_target());
		return all;
	}();
	return targets;
}

std::vector<std::string> resolve_target_names(const std::vector<std::string>& requested) {
	std::vector<std::string> known;
	for (const auto& t : verification_targets()) known.push_back(t.name);

	std::vector<std::string> out;
	std::set<std::string> seen;
	auto add = [&](const std::string& name) {
		if (seen.insert(name).second) out.push_back(name);
	};
	std::vector<std::string> wanted = requested;
	if (wanted.empty()) wanted.push_back("all");
	for (const auto& req : wanted) {
		if (req == "all") {
			for (const auto& name : known)
				if (name[0] != '_') add(name);
			continue;
		}
		if (std::find(known.begin(), known.end(), req) == known.end())
			throw argument_error("unknown verification target: " + req);
		add(req);
	}
	return out;
}

std::uint64_t fnv_sub_seed(std::uint64_t seed, const std::string& target, int trial) {
	std::uint64_t h = 14695981039346656037ULL;
	auto mix = [&h](std::uint8_t byte) {
		h ^= byte;
		h *= 1099511628211ULL;
	};
	for (int i = 0; i < 8; ++i) mix(std::uint8_t(seed >> (8 * i)));
	for (char c : target) mix(std::uint8_t(c));
	for (int i = 0; i < 4; ++i) mix(std::uint8_t(std::uint32_t(trial) >> (8 * i)));
	return h;
}

namespace {

const Target& target_by_name(const std::string& name) {
	for (const auto& t : verification_targets())
		if (t.name == name) return t;
	throw argument_error("unknown verification target: " + name);
}

// run one trial; exceptions other than resource limits count as failures
TrialOutcome run_guarded(const Target& t, const json& inst, const Guardrails& rails,
                         bool* invalid = nullptr) {
	try {
		return t.run(inst, rails);
	} catch (const resource_error& e) {
		TrialOutcome out;
		out.status = TrialOutcome::Status::skip;
		out.detail = e.what();
		return out;
	} catch (const argument_error& e) {
		if (invalid) *invalid = true;
		TrialOutcome out;
		out.status = TrialOutcome::Status::fail;
		out.detail = std::string("rejected input: ") + e.what();
		return out;
	} catch (const std::exception& e) {
		TrialOutcome out;
		out.status = TrialOutcome::Status::fail;
		out.detail = e.what();
		return out;
	}
}

}

SuiteReport run_suite(const SuiteConfig& cfg, const std::vector<std::string>& targets) {
	SuiteReport report;
	for (const auto& name : resolve_target_names(targets)) {
		const Target& t = target_by_name(name);
		TargetReport tr;
		tr.name = t.name;
		tr.relation = t.relation;
		auto started = std::chrono::steady_clock::now();

		for (int trial = 0; trial < cfg.trials; ++trial) {
			json inst = t.generate(cfg, fnv_sub_seed(cfg.seed, t.name, trial));
			TrialOutcome outcome = run_guarded(t, inst, cfg.rails);
			switch (outcome.status) {
			case TrialOutcome::Status::pass:
				++tr.passed;
				break;
			case TrialOutcome::Status::skip:
				++tr.skipped;
				tr.skip_reasons.push_back(outcome.detail);
				break;
			case TrialOutcome::Status::fail:
				++tr.failed;
				if (!tr.counterexample) {
					// keep the first failure, greedily minimized
					json current = inst;
					std::string detail = outcome.detail;
					if (cfg.shrink_failures && t.shrink) {
						bool progress = true;
						while (progress && tr.shrink_steps < 200) {
							progress = false;
							for (const json& cand : t.shrink(current)) {
								bool invalid = false;
								TrialOutcome again =
								    run_guarded(t, cand, cfg.rails, &invalid);
								if (invalid ||
								    again.status != TrialOutcome::Status::fail)
									continue;
								current = cand;
								detail = again.detail;
								++tr.shrink_steps;
								progress = true;
								break;
							}
						}
					}
					tr.counterexample = current;
					tr.failure_detail = detail;
				}
				break;
			}
		}

		tr.elapsed_ms = std::chrono::duration<double, std::milli>(
		                    std::chrono::steady_clock::now() - started)
		                    .count();
		report.total_passed += tr.passed;
		report.total_failed += tr.failed;
		report.total_skipped += tr.skipped;
		if (tr.failed > 0) report.pass = false;
		report.targets.push_back(std::move(tr));
	}
	return report;
}

json suite_report_to_json(const SuiteReport& r, bool include_timing) {
	json targets = json::array();
	for (const auto& t : r.targets) {
		json entry;
		entry["name"] = t.name;
		entry["relation"] = std::string(1, t.relation);
		entry["passed"] = t.passed;
		entry["failed"] = t.failed;
		entry["skipped"] = t.skipped;
		if (t.skipped > 0) entry["skip_reasons"] = t.skip_reasons;
		if (t.failed > 0) {
			entry["counterexample"] = *t.counterexample;
			entry["failure_detail"] = t.failure_detail;
			entry["shrink_steps"] = t.shrink_steps;
		}
		if (include_timing) entry["elapsed_ms"] = t.elapsed_ms;
		targets.push_back(std::move(entry));
	}
	json out;
	out["schema"] = 1;
	out["pass"] = r.pass;
	out["totals"] = {{"passed", r.total_passed},
	                 {"failed", r.total_failed},
	                 {"skipped", r.total_skipped}};
	out["targets"] = std::move(targets);
	return out;
}

// ---------------------------------------------------------------------------
// parameter sweep
// ---------------------------------------------------------------------------

std::vector<Graph> sweep_corpus(std::uint64_t seed) {
	std::vector<Graph> corpus;

	// every labeled graph on up to 4 vertices
	for (int n = 0; n <= 4; ++n) {
		std::vector<std::pair<int, int>> slots;
		for (int u = 0; u < n; ++u)
			for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
		for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
			std::vector<std::pair<int, int>> edges;
			for (std::size_t b = 0; b < slots.size(); ++b)
				if (mask & (1u << b)) edges.push_back(slots[b]);
			corpus.push_back(Graph(n, edges));
		}
	}

	// density sweep on 5..8
	int tick = 0;
	for (int n = 5; n <= 8; ++n)
		for (double p : {0.15, 0.3, 0.5, 0.7, 0.85})
			for (int rep = 0; rep < 12; ++rep)
				corpus.push_back(gen_gnp(n, p, fnv_sub_seed(seed, "corpus-sweep", tick++)));

	// random fill up to 12
	for (int i = 0; i < 500; ++i) {
		std::mt19937_64 rng(fnv_sub_seed(seed, "corpus-random", i));
		int n = rand_int(rng, 0, 12);
		double p = (rng() % 91 + 5) / 100.0;
		corpus.push_back(gen_gnp(n, p, rng()));
	}
	return corpus;
}

json param_sweep(const SuiteConfig& cfg) {
	std::vector<Graph> corpus = sweep_corpus(cfg.seed);
	std::vector<std::string> violations;
	double worst_ratio = 0;
	int worst_nd = 0, worst_vc = 0;

	for (std::size_t i = 0; i < corpus.size(); ++i) {
		const Graph& g = corpus[i];
		int vc = int(vertex_cover_exact(g).cover.size());
		int tc = int(twin_cover_exact(g, cfg.rails).cover.size());
		int nd = nd_partition(g).width();
		int mw = modular_width(g);
		long long nd_bound = 2LL * (1LL << std::min(vc, 40)) + vc;

		auto flag = [&](const std::string& what) {
			violations.push_back("graph " + std::to_string(i) + " (n=" +
			                     std::to_string(g.num_vertices()) + "): " + what);
		};
		if (tc > vc)
			flag("twin cover " + std::to_string(tc) + " above vertex cover " +
			     std::to_string(vc));
		if (mw > nd)
			flag("modular width " + std::to_string(mw) + " above neighborhood diversity " +
			     std::to_string(nd));
		if (nd > nd_bound)
			flag("neighborhood diversity " + std::to_string(nd) + " above its bound " +
			     std::to_string(nd_bound));
		double ratio = double(nd) / double(nd_bound);
		if (ratio > worst_ratio) {
			worst_ratio = ratio;
			worst_nd = nd;
			worst_vc = vc;
		}
	}

	json out;
	out["schema"] = 1;
	out["graphs"] = corpus.size();
	out["pass"] = violations.empty();
	out["violations"] = violations;
	out["max_nd_ratio"] = worst_ratio;
	out["max_nd_ratio_witness"] = {{"nd", worst_nd}, {"vc", worst_vc}};
	return out;
}

}
