#include "pgk/compose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pgk/errors.hpp"
#include "pgk/params.hpp"

namespace pgk {

namespace {

std::string num(long long v) { return std::to_string(v); }

void require_parts(std::size_t t, const char* what) {
	if (t == 0) throw argument_error(std::string(what) + ": no input parts");
}

long long max_modular_width(const std::vector<const Graph*>& parts) {
	long long best = 0;
	for (const Graph* g : parts) best = std::max<long long>(best, modular_width(*g));
	return best;
}

// disjoint union of threshold instances that agree on (n, k)
CompositionOutput union_same_shape(const std::vector<ProblemInstance>& inputs,
                                   ProblemKind kind, char relation, const char* what) {
	require_parts(inputs.size(), what);
	std::vector<Graph> graphs;
	std::vector<const Graph*> refs;
	for (const auto& in : inputs) {
		if (in.kind != kind)
			throw argument_error(std::string(what) + ": input is " + kind_name(in.kind) +
			                     ", not " + kind_name(kind));
		in.validate();
		if (in.graph.num_vertices() != inputs[0].graph.num_vertices() ||
		    in.k != inputs[0].k)
			throw argument_error(std::string(what) +
			                     ": inputs disagree on vertex count or threshold");
		graphs.push_back(in.graph);
		refs.push_back(&in.graph);
	}
	DisjointUnion u = disjoint_union(graphs);

	CompositionOutput out;
	out.instance = graph_instance(kind, std::move(u.graph), inputs[0].k);
	out.relation = relation;
	out.mw_bound = max_modular_width(refs);
	out.offsets = std::move(u.offsets);
	return out;
}

// disjoint union of refinement instances that agree on (n, baseline size),
// rephrased with the given threshold on the union
CompositionOutput union_refinements(const std::vector<RefinementInstance>& inputs,
                                    RefinementKind rkind, ProblemKind out_kind,
                                    long long threshold_shift, const char* what) {
	require_parts(inputs.size(), what);
	const bool matching = rkind == RefinementKind::imr;
	std::vector<Graph> graphs;
	std::vector<const Graph*> refs;
	long long base_size = -1;
	for (const auto& in : inputs) {
		if (in.kind != rkind)
			throw argument_error(std::string(what) + ": input is " +
			                     refinement_name(in.kind) + ", not " +
			                     refinement_name(rkind));
		in.validate();
		long long sz = matching ? long(in.base_edges.size()) : long(in.base.size());
		if (base_size == -1) base_size = sz;
		if (in.graph.num_vertices() != inputs[0].graph.num_vertices() || sz != base_size)
			throw argument_error(std::string(what) +
			                     ": inputs disagree on vertex count or baseline size");
		graphs.push_back(in.graph);
		refs.push_back(&in.graph);
	}
	DisjointUnion u = disjoint_union(graphs);

	CompositionOutput out;
	out.instance = graph_instance(
	    out_kind, std::move(u.graph),
	    base_size * (long long)(inputs.size()) + threshold_shift);
	out.relation = '|';
	out.mw_bound = max_modular_width(refs);
	out.offsets = std::move(u.offsets);
	return out;
}

}

CompositionOutput compose_clique_or(const std::vector<ProblemInstance>& inputs) {
	return union_same_shape(inputs, ProblemKind::clique, '|', "clique batch");
}

CompositionOutput compose_chromatic_and(const std::vector<ProblemInstance>& inputs) {
	return union_same_shape(inputs, ProblemKind::chromatic_number, '&',
	                        "chromatic batch");
}

CompositionOutput compose_fvs_or(const std::vector<RefinementInstance>& inputs) {
	return union_refinements(inputs, RefinementKind::fvsr,
	                         ProblemKind::feedback_vertex_set, -1, "fvs batch");
}

CompositionOutput compose_oct_or(const std::vector<RefinementInstance>& inputs) {
	return union_refinements(inputs, RefinementKind::octr,
	                         ProblemKind::odd_cycle_transversal, -1, "oct batch");
}

CompositionOutput compose_ds_or(const std::vector<RefinementInstance>& inputs) {
	return union_refinements(inputs, RefinementKind::dsr, ProblemKind::dominating_set,
	                         -1, "ds batch");
}

CompositionOutput compose_im_or(const std::vector<RefinementInstance>& inputs) {
	return union_refinements(inputs, RefinementKind::imr, ProblemKind::induced_matching,
	                         +1, "im batch");
}

CompositionOutput compose_hp_and(const std::vector<Graph>& inputs) {
	require_parts(inputs.size(), "path batch");
	std::vector<const Graph*> refs;
	for (const auto& g : inputs) {
		if (g.num_vertices() != inputs[0].num_vertices())
			throw argument_error("path batch: inputs disagree on vertex count");
		if (g.num_vertices() == 0)
			throw argument_error("path batch: input part has no vertices");
		refs.push_back(&g);
	}
	const long long mw = modular_width(inputs[0]);
	for (const auto& g : inputs)
		if (modular_width(g) != mw)
			throw argument_error("path batch: inputs disagree on modular width");

	DisjointUnion u = disjoint_union(std::vector<Graph>(inputs.begin(), inputs.end()));
	const int total = u.graph.num_vertices();
	const int connectors = int(inputs.size()) - 1;
	std::vector<std::pair<int, int>> edges(u.graph.edges());
	for (int c = 0; c < connectors; ++c)
		for (int v = 0; v < total; ++v) edges.push_back({total + c, v});

	CompositionOutput out;
	out.instance = graph_instance(ProblemKind::hamiltonian_path,
	                              Graph(total + connectors, edges), 0);
	out.relation = '&';
	out.mw_bound = inputs[0].num_vertices();
	out.offsets = std::move(u.offsets);
	out.extra_first = connectors > 0 ? total : -1;
	return out;
}

CompositionOutput compose_cvc_or(const std::vector<RefinementInstance>& inputs) {
	require_parts(inputs.size(), "cvc batch");
	std::vector<Graph> graphs;
	for (const auto& in : inputs) {
		if (in.kind != RefinementKind::vcr)
			throw argument_error("cvc batch: input is " + refinement_name(in.kind) +
			                     ", not " + refinement_name(RefinementKind::vcr));
		in.validate();
		if (in.graph.num_vertices() != inputs[0].graph.num_vertices() ||
		    in.base.size() != inputs[0].base.size())
			throw argument_error(
			    "cvc batch: inputs disagree on vertex count or baseline size");
		if (in.graph.num_vertices() == 0)
			throw argument_error("cvc batch: input part has no vertices");
		graphs.push_back(in.graph);
	}
	const long long mw = modular_width(inputs[0].graph);
	for (const auto& in : inputs)
		if (modular_width(in.graph) != mw)
			throw argument_error("cvc batch: inputs disagree on modular width");

	DisjointUnion u = disjoint_union(graphs);
	const int total = u.graph.num_vertices();
	std::vector<std::pair<int, int>> edges(u.graph.edges());
	for (int v = 0; v < total; ++v) edges.push_back({total, v});

	CompositionOutput out;
	out.instance = graph_instance(
	    ProblemKind::connected_vertex_cover, Graph(total + 1, edges),
	    (long long)(inputs[0].base.size()) * (long long)(inputs.size()));
	out.relation = '|';
	out.mw_bound = inputs[0].graph.num_vertices();
	out.offsets = std::move(u.offsets);
	out.extra_first = total;
	return out;
}

std::vector<int> greedy_dominating_set(const Graph& g) {
	const int n = g.num_vertices();
	std::vector<char> dominated(n, 0);
	std::vector<int> chosen;
	int left = n;
	while (left > 0) {
		int best = -1, best_gain = -1;
		for (int v = 0; v < n; ++v) {
			int gain = dominated[v] ? 0 : 1;
			for (int u : g.neighbors(v)) gain += dominated[u] ? 0 : 1;
			if (gain > best_gain) {
				best_gain = gain;
				best = v;
			}
		}
		chosen.push_back(best);
		if (!dominated[best]) {
			dominated[best] = 1;
			--left;
		}
		for (int u : g.neighbors(best))
			if (!dominated[u]) {
				dominated[u] = 1;
				--left;
			}
	}
	std::sort(chosen.begin(), chosen.end());
	return chosen;
}

Buckets bucket_by_relation(const nlohmann::json& instances, const std::string& composition) {
	static const std::set<std::string> instance_compositions = {"clique-or",
	                                                            "chromatic-and", "hp-and"};
	static const std::set<std::string> refinement_compositions = {"cvc-or", "fvs-or",
	                                                              "oct-or", "ds-or",
	                                                              "im-or"};
	const bool plain = instance_compositions.count(composition) > 0;
	if (!plain && !refinement_compositions.count(composition))
		throw argument_error("unknown composition: " + composition);
	if (!instances.is_array())
		throw argument_error("expected an array of instances");

	Buckets out;
	std::map<std::string, std::size_t> index_of;
	auto file = [&](int idx, const std::string& key) {
		auto it = index_of.find(key);
		if (it == index_of.end()) {
			index_of[key] = out.classes.size();
			out.classes.push_back({key, {idx}});
		} else {
			out.classes[it->second].second.push_back(idx);
		}
	};

	for (int idx = 0; idx < int(instances.size()); ++idx) {
		try {
			if (plain) {
				ProblemInstance inst = instance_from_json(instances[idx]);
				inst.validate();
				ProblemKind want = composition == "clique-or"
				                       ? ProblemKind::clique
				                       : composition == "chromatic-and"
				                             ? ProblemKind::chromatic_number
				                             : ProblemKind::hamiltonian_path;
				if (inst.kind != want)
					throw argument_error("instance is " + kind_name(inst.kind) +
					                     ", not " + kind_name(want));
				std::string key = "n=" + num(inst.graph.num_vertices());
				if (composition == "hp-and")
					key += " mw=" + num(modular_width(inst.graph));
				else
					key += " k=" + num(inst.k);
				file(idx, key);
			} else {
				RefinementInstance inst = refinement_from_json(instances[idx]);
				inst.validate();
				RefinementKind want =
				    composition == "cvc-or"
				        ? RefinementKind::vcr
				        : composition == "fvs-or"
				              ? RefinementKind::fvsr
				              : composition == "oct-or"
				                    ? RefinementKind::octr
				                    : composition == "ds-or" ? RefinementKind::dsr
				                                             : RefinementKind::imr;
				if (inst.kind != want)
					throw argument_error("instance is " + refinement_name(inst.kind) +
					                     ", not " + refinement_name(want));
				long long base = inst.kind == RefinementKind::imr
				                     ? long(inst.base_edges.size())
				                     : long(inst.base.size());
				std::string key =
				    "n=" + num(inst.graph.num_vertices()) + " k=" + num(base);
				if (composition == "cvc-or")
					key += " mw=" + num(modular_width(inst.graph));
				file(idx, key);
			}
		} catch (const std::exception& e) {
			out.bad.push_back({idx, e.what()});
		}
	}
	return out;
}

}
