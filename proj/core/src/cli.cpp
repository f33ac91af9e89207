#include "pgk/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pgk/cfa.hpp"
#include "pgk/compose.hpp"
#include "pgk/errors.hpp"
#include "pgk/generate.hpp"
#include "pgk/graph.hpp"
#include "pgk/guardrails.hpp"
#include "pgk/harness.hpp"
#include "pgk/instance.hpp"
#include "pgk/kernels_tc.hpp"
#include "pgk/nd_compress.hpp"
#include "pgk/oracles.hpp"
#include "pgk/params.hpp"
#include "pgk/ppt.hpp"

namespace pgk {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw argument_error("cannot open " + path);
	std::ostringstream out;
	out << in.rdbuf();
	return out.str();
}

void spill(const std::string& path, const std::string& bytes) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw argument_error("cannot write " + path);
	out << bytes;
}

bool looks_like_json(const std::string& text) {
	for (char c : text) {
		if (std::isspace(static_cast<unsigned char>(c))) continue;
		return c == '{' || c == '[';
	}
	return false;
}

Graph load_graph(const std::string& path) {
	std::string text = slurp(path);
	return looks_like_json(text) ? graph_from_json(json::parse(text)) : parse_dimacs(text);
}

CnfFormula load_formula(const std::string& path) {
	std::string text = slurp(path);
	return looks_like_json(text) ? formula_from_json(json::parse(text))
	                             : parse_dimacs_cnf(text);
}

std::string hex_of(const std::vector<std::uint8_t>& bytes) {
	static const char digits[] = "0123456789abcdef";
	std::string out;
	for (std::uint8_t b : bytes) {
		out.push_back(digits[b >> 4]);
		out.push_back(digits[b & 15]);
	}
	return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// params
// ---------------------------------------------------------------------------

int cmd_params(const std::string& path, bool as_json, const Guardrails& rails) {
	Graph g = load_graph(path);
	int vc = int(vertex_cover_exact(g).cover.size());
	int tc = int(twin_cover_exact(g, rails).cover.size());
	int nd = nd_partition(g).width();
	int mw = modular_width(g);
	if (as_json) {
		print_json(json{{"vc", vc}, {"tc", tc}, {"nd", nd}, {"mw", mw}});
	} else {
		std::cout << "n = " << g.num_vertices() << ", m = " << g.num_edges() << "\n"
		          << "vertex cover        vc = " << vc << "\n"
		          << "twin cover          tc = " << tc << "\n"
		          << "neighborhood div.   nd = " << nd << "\n"
		          << "modular width       mw = " << mw << "\n";
	}
	return 0;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

ProblemInstance load_instance(const std::string& kind_name_arg, const std::string& path,
                              long long k) {
	ProblemKind kind = kind_from_name(kind_name_arg);
	std::string text = slurp(path);
	if (looks_like_json(text)) {
		json j = json::parse(text);
		if (j.contains("kind")) {
			ProblemInstance inst = instance_from_json(j);
			if (inst.kind != kind)
				throw argument_error("file encodes " + kind_name(inst.kind) + ", not " +
				                     kind_name_arg);
			return inst;
		}
		if (kind == ProblemKind::cfa) return cfa_wrap(cfa_from_json(j));
		if (kind == ProblemKind::cnf_sat) return sat_instance(formula_from_json(j));
		return graph_instance(kind, graph_from_json(j), k);
	}
	if (kind == ProblemKind::cnf_sat) return sat_instance(parse_dimacs_cnf(text));
	if (kind == ProblemKind::cfa)
		throw argument_error("assignment instances must be given as JSON");
	Graph g = parse_dimacs(text);
	if (kind == ProblemKind::multicolored_clique)
		throw argument_error("a colored instance needs a JSON file with its coloring");
	if (kind == ProblemKind::steiner_tree) {
		std::vector<int> all(g.num_vertices());
		std::iota(all.begin(), all.end(), 0);
		return steiner_instance(g, all, k);
	}
	return graph_instance(kind, g, k);
}

int cmd_solve(const std::string& kind_arg, const std::string& path, long long k,
              bool as_json, const Guardrails& rails) {
	ProblemInstance inst = load_instance(kind_arg, path, k);
	Answer a = solve(inst, rails);
	if (as_json) {
		json j{{"kind", kind_name(inst.kind)}, {"k", inst.k}, {"yes", a.yes}};
		if (a.witness) j["witness"] = witness_to_json(*a.witness);
		print_json(j);
	} else {
		std::cout << (a.yes ? "yes" : "no") << "\n";
	}
	return 0;
}

// ---------------------------------------------------------------------------
// kernelize
// ---------------------------------------------------------------------------

std::vector<int> parse_id_list(const std::string& csv) {
	std::vector<int> out;
	std::stringstream ss(csv);
	std::string item;
	while (std::getline(ss, item, ','))
		if (!item.empty()) out.push_back(std::stoi(item));
	return out;
}

int cmd_kernelize(const std::string& which, const std::string& path, long long k,
                  bool k_given, const std::string& cover_csv,
                  const std::string& cert_path, bool as_json, const Guardrails& rails) {
	Graph g = load_graph(path);

	std::vector<int> cover;
	if (!cover_csv.empty())
		cover = parse_id_list(cover_csv);
	else if (which == "tp-vc")
		cover = vertex_cover_exact(g).cover;
	else
		cover = twin_cover_exact(g, rails).cover;

	if (!cert_path.empty()) {
		if (which == "tp-vc")
			throw argument_error("certificates apply to the twin-cover kernels only");
		TcCertificate cert = make_tc_certificate(g, cover);
		json cj{{"cover", cert.cover}, {"cliques", cert.cliques}};
		spill(cert_path, cj.dump(2) + "\n");
	}

	if (which == "tp-tc") {
		TpCompressResult r = tp_tc_compress(g, cover, rails);
		if (as_json) {
			print_json(json{{"immediate_no", r.immediate_no},
			                {"reason", r.reason},
			                {"buyers", r.cfa.num_buyers()},
			                {"sellers", r.cfa.num_sellers()},
			                {"kernel_steps", r.kernel_trace.size()},
			                {"cfa", cfa_to_json(r.cfa)}});
		} else if (r.immediate_no) {
			std::cout << "no instance: " << r.reason << "\n";
		} else {
			std::cout << "assignment instance: " << r.cfa.num_buyers() << " buyers, "
			          << r.cfa.num_sellers() << " sellers, target " << r.cfa.target
			          << " (" << r.kernel_trace.size() << " kernel steps)\n";
		}
		return 0;
	}

	if (which == "tp-vc") {
		TpVcKernel r = tp_vc_kernel(g, cover);
		if (as_json) {
			json j{{"immediate_no", r.immediate_no}, {"reason", r.reason}};
			if (!r.immediate_no) j["graph"] = graph_to_json(r.graph);
			print_json(j);
		} else if (r.immediate_no) {
			std::cout << "no instance: " << r.reason << "\n";
		} else {
			std::cout << to_dimacs(r.graph);
		}
		return 0;
	}

	if (!k_given) throw argument_error(which + " needs a threshold (-k)");
	CollapseKernel r = which == "vc-tc"    ? vc_tc_kernel(g, cover, k)
	                   : which == "oct-tc" ? oct_tc_collapse(g, cover, k)
	                                       : is_tc_kernel(g, cover, k);
	if (as_json) {
		json j{{"immediate_no", r.immediate_no}, {"reason", r.reason}, {"k", r.k}};
		if (!r.immediate_no) {
			j["graph"] = graph_to_json(r.graph);
			j["orig_ids"] = r.orig_ids;
		}
		print_json(j);
	} else if (r.immediate_no) {
		std::cout << "no instance: " << r.reason << "\n";
	} else {
		std::cout << "kernel: n = " << r.graph.num_vertices() << ", m = "
		          << r.graph.num_edges() << ", k = " << r.k << "\n"
		          << to_dimacs(r.graph);
	}
	return 0;
}

// ---------------------------------------------------------------------------
// nd codec
// ---------------------------------------------------------------------------

int cmd_compress_nd(const std::string& path, const std::string& kind_arg, long long k,
                    const std::string& out_path, bool as_json) {
	Graph g = load_graph(path);
	ProblemKind kind = kind_from_name(kind_arg);
	QuotientEncoding enc = encode_nd(g, kind, k);
	int nd = enc.partition.width();
	long long n = g.num_vertices();
	// below log2(n) classes the encoding beats the graph itself
	bool fpt_regime = n > 0 && (1LL << std::min(nd, 62)) <= n;
	if (!out_path.empty())
		spill(out_path, std::string(enc.bytes.begin(), enc.bytes.end()));
	if (as_json) {
		json j{{"bits", enc.bytes.size() * 8},
		       {"bit_bound", enc.bit_bound},
		       {"nd", nd},
		       {"fpt_regime", fpt_regime}};
		if (out_path.empty()) j["bytes_hex"] = hex_of(enc.bytes);
		print_json(j);
	} else {
		std::cout << "encoded " << enc.bytes.size() * 8 << " bits (bound "
		          << enc.bit_bound << ") across " << nd << " classes\n";
		if (fpt_regime)
			std::cout << "nd <= log2(n): compressed form is smaller than the graph\n";
		if (out_path.empty()) std::cout << hex_of(enc.bytes) << "\n";
	}
	return 0;
}

int cmd_decompress_nd(const std::string& path, const std::string& out_path,
                      bool as_json) {
	std::string text = slurp(path);
	std::vector<std::uint8_t> bytes(text.begin(), text.end());
	NdDecoded d = decode_nd(bytes);
	if (!out_path.empty()) spill(out_path, to_dimacs(d.graph));
	if (as_json) {
		json j{{"kind", kind_name(d.kind)},
		       {"k", d.k},
		       {"n", d.graph.num_vertices()},
		       {"m", d.graph.num_edges()}};
		if (out_path.empty()) j["graph"] = graph_to_json(d.graph);
		print_json(j);
	} else {
		std::cout << "kind = " << kind_name(d.kind) << ", k = " << d.k << "\n";
		if (out_path.empty()) std::cout << to_dimacs(d.graph);
	}
	return 0;
}

// ---------------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------------

int cmd_reduce(const std::string& name, const std::string& path, long long k,
               bool k_given, bool as_json) {
	PptOutput out;
	if (name == "mcc-im") {
		json j = json::parse(slurp(path));
		ProblemInstance inst = instance_from_json(j);
		if (inst.kind != ProblemKind::multicolored_clique)
			throw argument_error("mcc-im expects a multicolored_clique JSON instance");
		out = mcc_to_induced_matching(inst.graph, inst.coloring, inst.k);
	} else if (name == "sat-chromatic" || name == "sat-steiner" || name == "sat-cds" ||
	           name == "sat-ids") {
		CnfFormula f = load_formula(path);
		out = name == "sat-chromatic" ? sat_to_chromatic(f)
		    : name == "sat-steiner"   ? sat_to_steiner(f)
		                              : sat_to_cds(f, name == "sat-ids");
	} else if (name == "hp-hc") {
		out = hp_to_hc(load_graph(path));
	} else {
		if (!k_given) throw argument_error(name + " needs a threshold (-k)");
		Graph g = load_graph(path);
		out = name == "vc-refine"    ? refine_vc(g, k)
		    : name == "fvs-refine"   ? refine_fvs(g, k)
		    : name == "oct-refine"   ? refine_oct(g, k)
		    : name == "im-refine"    ? refine_im(g, k)
		                             : throw argument_error("unknown reduction: " + name);
	}

	if (as_json) {
		json j{{"cover", out.cover},
		       {"cover_bound", out.cover_bound},
		       {"labels", out.labels}};
		if (out.is_refinement())
			j["refinement"] = refinement_to_json(*out.refinement);
		else
			j["instance"] = instance_to_json(out.instance);
		print_json(j);
	} else {
		const Graph& h =
		    out.is_refinement() ? out.refinement->graph : out.instance.graph;
		std::cout << "output: n = " << h.num_vertices() << ", m = " << h.num_edges();
		if (!out.is_refinement())
			std::cout << ", kind = " << kind_name(out.instance.kind) << ", k = "
			          << out.instance.k;
		std::cout << "\nvertex cover of the output: at most " << out.cover_bound << "\n";
	}
	return 0;
}

// ---------------------------------------------------------------------------
// compose
// ---------------------------------------------------------------------------

int cmd_compose(const std::string& name, const std::vector<std::string>& paths,
                long long k, bool k_given, bool as_json) {
	CompositionOutput out;
	if (name == "clique-or" || name == "chromatic-and") {
		ProblemKind kind = name == "clique-or" ? ProblemKind::clique
		                                       : ProblemKind::chromatic_number;
		std::vector<ProblemInstance> parts;
		for (const auto& p : paths) {
			std::string text = slurp(p);
			if (looks_like_json(text) && json::parse(text).contains("kind")) {
				parts.push_back(instance_from_json(json::parse(text)));
			} else {
				if (!k_given)
					throw argument_error("plain graph inputs need a shared threshold (-k)");
				parts.push_back(graph_instance(kind, load_graph(p), k));
			}
		}
		out = kind == ProblemKind::clique ? compose_clique_or(parts)
		                                  : compose_chromatic_and(parts);
	} else if (name == "hp-and") {
		std::vector<Graph> parts;
		for (const auto& p : paths) parts.push_back(load_graph(p));
		out = compose_hp_and(parts);
	} else {
		std::vector<RefinementInstance> parts;
		for (const auto& p : paths)
			parts.push_back(refinement_from_json(json::parse(slurp(p))));
		out = name == "cvc-or"   ? compose_cvc_or(parts)
		    : name == "fvs-or"   ? compose_fvs_or(parts)
		    : name == "oct-or"   ? compose_oct_or(parts)
		    : name == "ds-or"    ? compose_ds_or(parts)
		    : name == "im-or"    ? compose_im_or(parts)
		                         : throw argument_error("unknown composition: " + name);
	}

	if (as_json) {
		print_json(json{{"instance", instance_to_json(out.instance)},
		                {"relation", std::string(1, out.relation)},
		                {"mw_bound", out.mw_bound},
		                {"offsets", out.offsets},
		                {"extra_first", out.extra_first}});
	} else {
		std::cout << "composed " << paths.size() << " inputs ("
		          << (out.relation == '|' ? "or" : "and") << "): n = "
		          << out.instance.graph.num_vertices() << ", kind = "
		          << kind_name(out.instance.kind) << ", k = " << out.instance.k
		          << ", modular width at most " << out.mw_bound << "\n";
	}
	return 0;
}

// ---------------------------------------------------------------------------
// turing-clique
// ---------------------------------------------------------------------------

int cmd_turing(const std::string& path, int k, bool as_json, const Guardrails& rails) {
	Graph g = load_graph(path);
	std::vector<int> cover = twin_cover_exact(g, rails).cover;
	CliqueOracle oracle = [&rails](const Graph& q, int threshold) {
		return solve(graph_instance(ProblemKind::clique, q, threshold), rails).yes;
	};
	TuringTranscript tr = clique_tc_turing(g, cover, k, oracle);
	if (as_json) {
		json queries = json::array();
		for (const auto& q : tr.queries)
			queries.push_back(json{{"n", q.graph.num_vertices()},
			                       {"threshold", q.threshold},
			                       {"answer", q.answer},
			                       {"vertices", q.vertices}});
		print_json(json{{"answer", tr.answer},
		                {"cover_size", cover.size()},
		                {"queries", queries}});
	} else {
		std::size_t widest = 0;
		for (const auto& q : tr.queries)
			widest = std::max(widest, std::size_t(q.graph.num_vertices()));
		std::cout << (tr.answer ? "yes" : "no") << " (" << tr.queries.size()
		          << " queries, widest " << widest << " vertices, cover "
		          << cover.size() << ")\n";
	}
	return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(std::vector<std::string> targets, std::uint64_t seed, int trials,
               bool no_shrink, bool timing, bool sweep, bool targets_given,
               const std::vector<std::string>& size_overrides, bool as_json,
               const Guardrails& rails) {
	SuiteConfig cfg;
	cfg.seed = seed;
	cfg.trials = trials;
	cfg.shrink_failures = !no_shrink;
	cfg.rails = rails;
	for (const auto& kv : size_overrides) {
		auto eq = kv.find('=');
		if (eq == std::string::npos)
			throw argument_error("size override must look like target=N: " + kv);
		cfg.size_override[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
	}

	bool run_targets = targets_given || !sweep;
	bool ok = true;
	json out;

	if (run_targets) {
		SuiteReport report = run_suite(cfg, targets);
		ok = ok && report.pass;
		out["suite"] = suite_report_to_json(report, timing);
		if (!as_json) {
			for (const auto& t : report.targets) {
				std::cout << t.name << ": " << t.passed << " passed";
				if (t.failed) std::cout << ", " << t.failed << " FAILED";
				if (t.skipped) std::cout << ", " << t.skipped << " skipped";
				if (timing) std::cout << " (" << int(t.elapsed_ms) << " ms)";
				std::cout << "\n";
				if (t.failed) {
					std::cout << "  " << t.failure_detail << "\n";
					std::cout << "  counterexample (after " << t.shrink_steps
					          << " shrink steps): " << t.counterexample->dump() << "\n";
				}
			}
		}
	}

	if (sweep) {
		json sj = param_sweep(cfg);
		ok = ok && sj.at("pass").get<bool>();
		out["sweep"] = sj;
		if (!as_json) {
			std::cout << "parameter sweep over " << sj.at("graphs").get<std::size_t>()
			          << " graphs: "
			          << (sj.at("pass").get<bool>() ? "all inequalities hold"
			                                        : "VIOLATIONS FOUND")
			          << "\n";
			for (const auto& v : sj.at("violations"))
				std::cout << "  " << v.get<std::string>() << "\n";
		}
	}

	if (as_json) {
		if (out.size() == 1)
			print_json(out.begin().value());
		else
			print_json(out);
	} else {
		std::cout << (ok ? "PASS" : "FAIL") << "\n";
	}
	return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

void emit_graph(const Graph& g, const std::string& out_path, bool as_json) {
	std::string text = as_json ? graph_to_json(g).dump(2) + "\n" : to_dimacs(g);
	if (out_path.empty())
		std::cout << text;
	else
		spill(out_path, text);
}

}

int run_cli(const std::vector<std::string>& args) {
	Guardrails rails = Guardrails::from_env();

	CLI::App app{"instance preprocessing for structural graph parameters"};
	app.name("pgk");
	app.require_subcommand(1);
	int rc = 0;

	// params
	{
		auto* sub = app.add_subcommand("params", "compute vc, tc, nd and mw");
		auto path = std::make_shared<std::string>();
		auto as_json = std::make_shared<bool>(false);
		sub->add_option("graph", *path, "graph file (DIMACS or JSON)")->required();
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, path, as_json, rails] {
			rc = cmd_params(*path, *as_json, rails);
		});
	}

	// solve
	{
		auto* sub = app.add_subcommand("solve", "answer one instance exactly");
		auto kind = std::make_shared<std::string>();
		auto path = std::make_shared<std::string>();
		auto k = std::make_shared<long long>(0);
		auto as_json = std::make_shared<bool>(false);
		sub->add_option("kind", *kind, "problem name, e.g. clique or vertex-cover")
		    ->required();
		sub->add_option("input", *path, "instance file")->required();
		sub->add_option("-k", *k, "threshold");
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, kind, path, k, as_json, rails] {
			rc = cmd_solve(*kind, *path, *k, *as_json, rails);
		});
	}

	// kernelize
	{
		auto* sub = app.add_subcommand("kernelize", "shrink an instance");
		auto which = std::make_shared<std::string>();
		auto path = std::make_shared<std::string>();
		auto k = std::make_shared<long long>(0);
		auto cover = std::make_shared<std::string>();
		auto cert = std::make_shared<std::string>();
		auto as_json = std::make_shared<bool>(false);
		sub->add_option("which", *which, "one of tp-tc, vc-tc, oct-tc, is-tc, tp-vc")
		    ->required()
		    ->check(CLI::IsMember({"tp-tc", "vc-tc", "oct-tc", "is-tc", "tp-vc"}));
		sub->add_option("graph", *path, "graph file")->required();
		auto* kopt = sub->add_option("-k", *k, "threshold (vc-tc, oct-tc, is-tc)");
		sub->add_option("--cover", *cover, "comma-separated cover to use");
		sub->add_option("--tc-cert", *cert, "write the twin-cover certificate here");
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, which, path, k, kopt, cover, cert, as_json, rails] {
			rc = cmd_kernelize(*which, *path, *k, kopt->count() > 0, *cover, *cert,
			                   *as_json, rails);
		});
	}

	// compress-nd / decompress-nd
	{
		auto* sub = app.add_subcommand("compress-nd",
		                               "encode a graph and threshold by quotient");
		auto path = std::make_shared<std::string>();
		auto kind = std::make_shared<std::string>("vertex-cover");
		auto k = std::make_shared<long long>(0);
		auto out = std::make_shared<std::string>();
		auto as_json = std::make_shared<bool>(false);
		sub->add_option("graph", *path, "graph file")->required();
		sub->add_option("--kind", *kind, "problem the threshold belongs to");
		sub->add_option("-k", *k, "threshold");
		sub->add_option("-o,--out", *out, "write the encoding to this file");
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, path, kind, k, out, as_json] {
			rc = cmd_compress_nd(*path, *kind, *k, *out, *as_json);
		});
	}
	{
		auto* sub = app.add_subcommand("decompress-nd", "decode an encoded instance");
		auto path = std::make_shared<std::string>();
		auto out = std::make_shared<std::string>();
		auto as_json = std::make_shared<bool>(false);
		sub->add_option("bytes", *path, "encoded file")->required();
		sub->add_option("-o,--out", *out, "write the graph here (DIMACS)");
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, path, out, as_json] {
			rc = cmd_decompress_nd(*path, *out, *as_json);
		});
	}

	// reduce
	{
		auto* sub = app.add_subcommand("reduce", "run one hardness reduction");
		auto name = std::make_shared<std::string>();
		auto path = std::make_shared<std::string>();
		auto k = std::make_shared<long long>(0);
		auto as_json = std::make_shared<bool>(false);
		sub->add_option("name", *name, "reduction name")
		    ->required()
		    ->check(CLI::IsMember({"mcc-im", "sat-chromatic", "sat-steiner", "sat-cds",
		                           "sat-ids", "vc-refine", "fvs-refine", "oct-refine",
		                           "im-refine", "hp-hc"}));
		sub->add_option("input", *path, "instance file")->required();
		auto* kopt = sub->add_option("-k", *k, "threshold (refinement reductions)");
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, name, path, k, kopt, as_json] {
			rc = cmd_reduce(*name, *path, *k, kopt->count() > 0, *as_json);
		});
	}

	// compose
	{
		auto* sub = app.add_subcommand("compose", "combine instances into one");
		auto name = std::make_shared<std::string>();
		auto paths = std::make_shared<std::vector<std::string>>();
		auto k = std::make_shared<long long>(0);
		auto as_json = std::make_shared<bool>(false);
		sub->add_option("name", *name, "composition name")
		    ->required()
		    ->check(CLI::IsMember({"clique-or", "chromatic-and", "hp-and", "cvc-or",
		                           "fvs-or", "oct-or", "ds-or", "im-or"}));
		sub->add_option("inputs", *paths, "instance files")->required()
		    ->expected(-1);
		auto* kopt = sub->add_option("-k", *k, "shared threshold for plain graphs");
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, name, paths, k, kopt, as_json] {
			rc = cmd_compose(*name, *paths, *k, kopt->count() > 0, *as_json);
		});
	}

	// turing-clique
	{
		auto* sub = app.add_subcommand("turing-clique",
		                               "decide clique through small cover queries");
		auto path = std::make_shared<std::string>();
		auto k = std::make_shared<int>(0);
		auto as_json = std::make_shared<bool>(false);
		sub->add_option("graph", *path, "graph file")->required();
		sub->add_option("-k", *k, "clique size sought")->required();
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, path, k, as_json, rails] {
			rc = cmd_turing(*path, *k, *as_json, rails);
		});
	}

	// verify
	{
		auto* sub = app.add_subcommand("verify", "run the randomized equivalence suites");
		auto targets = std::make_shared<std::vector<std::string>>();
		auto seed = std::make_shared<std::uint64_t>(1);
		auto trials = std::make_shared<int>(50);
		auto no_shrink = std::make_shared<bool>(false);
		auto timing = std::make_shared<bool>(false);
		auto sweep = std::make_shared<bool>(false);
		auto sizes = std::make_shared<std::vector<std::string>>();
		auto as_json = std::make_shared<bool>(false);
		auto* topt = sub->add_option("--targets", *targets,
		                             "target names or 'all'")
		                 ->delimiter(',');
		sub->add_option("--seed", *seed, "master seed");
		sub->add_option("--trials", *trials, "trials per target")
		    ->check(CLI::NonNegativeNumber);
		sub->add_flag("--no-shrink", *no_shrink, "keep failing instances as generated");
		sub->add_flag("--timing", *timing, "include elapsed time per target");
		sub->add_flag("--sweep", *sweep, "check the parameter inequalities on the corpus");
		sub->add_option("--size", *sizes, "per-target size cap, e.g. tp-tc=8")
		    ->delimiter(',');
		sub->add_flag("--json", *as_json, "machine-readable output");
		sub->callback([&rc, targets, seed, trials, no_shrink, timing, sweep, topt,
		               sizes, as_json, rails] {
			rc = cmd_verify(*targets, *seed, *trials, *no_shrink, *timing, *sweep,
			                topt->count() > 0, *sizes, *as_json, rails);
		});
	}

	// gen
	{
		auto* sub = app.add_subcommand("gen", "generate test inputs");
		sub->require_subcommand(1);
		sub->fallthrough();
		auto out = std::make_shared<std::string>();
		auto as_json = std::make_shared<bool>(false);
		auto seed = std::make_shared<std::uint64_t>(1);
		sub->add_option("-o,--out", *out, "write here instead of stdout");
		sub->add_flag("--json", *as_json, "emit JSON instead of DIMACS");
		sub->add_option("--seed", *seed, "rng seed");

		{
			auto* g = sub->add_subcommand("gnp", "binomial random graph");
			auto n = std::make_shared<int>(8);
			auto p = std::make_shared<double>(0.5);
			g->add_option("-n", *n, "vertices")->check(CLI::NonNegativeNumber);
			g->add_option("-p", *p, "edge probability");
			g->callback([&rc, n, p, seed, out, as_json] {
				emit_graph(gen_gnp(*n, *p, *seed), *out, *as_json);
				rc = 0;
			});
		}
		{
			auto* g = sub->add_subcommand("cluster",
			                              "disjoint cliques plus an attachment set");
			auto sizes = std::make_shared<std::string>("3,3");
			auto attach = std::make_shared<int>(1);
			g->add_option("--sizes", *sizes, "comma-separated clique sizes");
			g->add_option("--attach", *attach, "attachment vertices")
			    ->check(CLI::NonNegativeNumber);
			g->callback([&rc, sizes, attach, seed, out, as_json] {
				emit_graph(gen_cluster(parse_id_list(*sizes), *attach, *seed), *out,
				           *as_json);
				rc = 0;
			});
		}
		{
			auto* g = sub->add_subcommand("split", "clique joined to an independent set");
			auto clique = std::make_shared<int>(3);
			auto indep = std::make_shared<int>(4);
			auto cross = std::make_shared<double>(0.5);
			g->add_option("--clique", *clique, "clique side size")
			    ->check(CLI::NonNegativeNumber);
			g->add_option("--indep", *indep, "independent side size")
			    ->check(CLI::NonNegativeNumber);
			g->add_option("--cross", *cross, "cross edge probability");
			g->callback([&rc, clique, indep, cross, seed, out, as_json] {
				emit_graph(gen_split(*clique, *indep, *cross, *seed), *out, *as_json);
				rc = 0;
			});
		}
		{
			auto* g = sub->add_subcommand("cnf", "random small formula");
			auto vars = std::make_shared<int>(3);
			auto clauses = std::make_shared<int>(4);
			g->add_option("--vars", *vars, "variables")->check(CLI::NonNegativeNumber);
			g->add_option("--clauses", *clauses, "clauses")
			    ->check(CLI::NonNegativeNumber);
			g->callback([&rc, vars, clauses, seed, out, as_json] {
				CnfFormula f = gen_cnf(*vars, *clauses, *seed);
				std::string text =
				    *as_json ? formula_to_json(f).dump(2) + "\n" : to_dimacs_cnf(f);
				if (out->empty())
					std::cout << text;
				else
					spill(*out, text);
				rc = 0;
			});
		}
	}

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	} catch (const resource_error& e) {
		std::cerr << "error: " << e.what()
		          << " (set PGK_UNRESTRICTED=1 to lift the desk-scale guardrails)\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return rc;
}

int run_cli(int argc, char** argv) {
	return run_cli(std::vector<std::string>(argv + 1, argv + argc));
}

}
