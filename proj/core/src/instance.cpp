#include "pgk/instance.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "pgk/errors.hpp"

namespace pgk {

namespace {

struct KindName {
	ProblemKind kind;
	const char* name;
};

const KindName kKinds[] = {
    {ProblemKind::clique, "clique"},
    {ProblemKind::independent_set, "independent-set"},
    {ProblemKind::vertex_cover, "vertex-cover"},
    {ProblemKind::dominating_set, "dominating-set"},
    {ProblemKind::connected_dominating_set, "connected-dominating-set"},
    {ProblemKind::independent_dominating_set, "independent-dominating-set"},
    {ProblemKind::connected_vertex_cover, "connected-vertex-cover"},
    {ProblemKind::feedback_vertex_set, "feedback-vertex-set"},
    {ProblemKind::odd_cycle_transversal, "odd-cycle-transversal"},
    {ProblemKind::chromatic_number, "chromatic-number"},
    {ProblemKind::hamiltonian_cycle, "hamiltonian-cycle"},
    {ProblemKind::hamiltonian_path, "hamiltonian-path"},
    {ProblemKind::steiner_tree, "steiner-tree"},
    {ProblemKind::induced_matching, "induced-matching"},
    {ProblemKind::triangle_partition, "triangle-partition"},
    {ProblemKind::multicolored_clique, "multicolored-clique"},
    {ProblemKind::cnf_sat, "cnf-sat"},
    {ProblemKind::cfa, "cfa"},
};

}

std::string kind_name(ProblemKind k) {
	for (const auto& e : kKinds)
		if (e.kind == k) return e.name;
	throw argument_error("unknown problem kind value");
}

ProblemKind kind_from_name(const std::string& name) {
	for (const auto& e : kKinds)
		if (name == e.name) return e.kind;
	throw parse_error("unknown problem kind '" + name + "'");
}

void ProblemInstance::validate() const {
	const int n = graph.num_vertices();
	switch (kind) {
	case ProblemKind::steiner_tree:
		for (int t : terminals)
			if (t < 0 || t >= n)
				throw argument_error("steiner terminal " + std::to_string(t) + " out of range");
		break;
	case ProblemKind::multicolored_clique: {
		if (int(coloring.size()) != n)
			throw argument_error("multicolored-clique coloring must assign every vertex");
		for (int c : coloring)
			if (c < 1 || c > k)
				throw argument_error("multicolored-clique color " + std::to_string(c) +
				                     " outside 1.." + std::to_string(k));
		break;
	}
	case ProblemKind::triangle_partition:
		if (k != n)
			throw argument_error("triangle-partition instances always ask for a perfect partition (k = n)");
		break;
	case ProblemKind::cfa:
		cfa.validate();
		break;
	default:
		break;
	}
}

ProblemInstance graph_instance(ProblemKind kind, Graph g, long long k) {
	ProblemInstance inst;
	inst.kind = kind;
	inst.k = (kind == ProblemKind::triangle_partition) ? g.num_vertices() : k;
	inst.graph = std::move(g);
	inst.validate();
	return inst;
}

ProblemInstance steiner_instance(Graph g, std::vector<int> terminals, long long k) {
	std::sort(terminals.begin(), terminals.end());
	terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
	ProblemInstance inst;
	inst.kind = ProblemKind::steiner_tree;
	inst.graph = std::move(g);
	inst.terminals = std::move(terminals);
	inst.k = k;
	inst.validate();
	return inst;
}

ProblemInstance mcc_instance(Graph g, std::vector<int> coloring, long long k) {
	ProblemInstance inst;
	inst.kind = ProblemKind::multicolored_clique;
	inst.graph = std::move(g);
	inst.coloring = std::move(coloring);
	inst.k = k;
	inst.validate();
	return inst;
}

ProblemInstance sat_instance(CnfFormula f) {
	ProblemInstance inst;
	inst.kind = ProblemKind::cnf_sat;
	inst.formula = std::move(f);
	return inst;
}

ProblemInstance cfa_wrap(CfaInstance c) {
	ProblemInstance inst;
	inst.kind = ProblemKind::cfa;
	inst.cfa = std::move(c);
	inst.validate();
	return inst;
}

namespace {

struct RefName {
	RefinementKind kind;
	const char* name;
};

const RefName kRefs[] = {
    {RefinementKind::vcr, "vcr"},   {RefinementKind::fvsr, "fvsr"}, {RefinementKind::octr, "octr"},
    {RefinementKind::dsr, "dsr"},   {RefinementKind::imr, "imr"},
};

// forest iff every remaining component has exactly vertices - 1 edges
bool forest_after_removal(const Graph& g, const std::set<int>& removed) {
	const int n = g.num_vertices();
	int rem_vertices = 0, rem_edges = 0, components = 0;
	std::vector<bool> seen(n, false);
	for (const auto& [u, v] : g.edges())
		if (!removed.count(u) && !removed.count(v)) ++rem_edges;
	for (int s = 0; s < n; ++s) {
		if (removed.count(s)) continue;
		++rem_vertices;
		if (seen[s]) continue;
		++components;
		seen[s] = true;
		std::queue<int> q;
		q.push(s);
		while (!q.empty()) {
			int u = q.front();
			q.pop();
			for (int v : g.neighbors(u))
				if (!removed.count(v) && !seen[v]) {
					seen[v] = true;
					q.push(v);
				}
		}
	}
	return rem_edges == rem_vertices - components;
}

bool bipartite_after_removal(const Graph& g, const std::set<int>& removed) {
	const int n = g.num_vertices();
	std::vector<int> side(n, -1);
	for (int s = 0; s < n; ++s) {
		if (removed.count(s) || side[s] != -1) continue;
		side[s] = 0;
		std::queue<int> q;
		q.push(s);
		while (!q.empty()) {
			int u = q.front();
			q.pop();
			for (int v : g.neighbors(u)) {
				if (removed.count(v)) continue;
				if (side[v] == -1) {
					side[v] = 1 - side[u];
					q.push(v);
				} else if (side[v] == side[u]) {
					return false;
				}
			}
		}
	}
	return true;
}

}

std::string refinement_name(RefinementKind k) {
	for (const auto& e : kRefs)
		if (e.kind == k) return e.name;
	throw argument_error("unknown refinement kind value");
}

RefinementKind refinement_from_name(const std::string& name) {
	for (const auto& e : kRefs)
		if (name == e.name) return e.kind;
	throw parse_error("unknown refinement kind '" + name + "'");
}

void RefinementInstance::validate() const {
	const int n = graph.num_vertices();
	std::set<int> b(base.begin(), base.end());
	if (b.size() != base.size()) throw argument_error("refinement base repeats a vertex");
	for (int v : base)
		if (v < 0 || v >= n) throw argument_error("refinement base vertex out of range");

	switch (kind) {
	case RefinementKind::vcr:
		for (const auto& [u, v] : graph.edges())
			if (!b.count(u) && !b.count(v))
				throw argument_error("vcr base misses edge " + std::to_string(u) + "-" + std::to_string(v));
		break;
	case RefinementKind::fvsr:
		if (!forest_after_removal(graph, b))
			throw argument_error("fvsr base leaves a cycle");
		break;
	case RefinementKind::octr:
		if (!bipartite_after_removal(graph, b))
			throw argument_error("octr base leaves an odd cycle");
		break;
	case RefinementKind::dsr:
		for (int v = 0; v < n; ++v) {
			if (b.count(v)) continue;
			bool dominated = false;
			for (int u : graph.neighbors(v))
				if (b.count(u)) {
					dominated = true;
					break;
				}
			if (!dominated)
				throw argument_error("dsr base does not dominate vertex " + std::to_string(v));
		}
		break;
	case RefinementKind::imr: {
		if (!base.empty()) throw argument_error("imr carries its solution in base_edges");
		std::set<int> ends;
		for (const auto& [u, v] : base_edges) {
			if (!graph.has_edge(u, v))
				throw argument_error("imr base pair " + std::to_string(u) + "-" +
				                     std::to_string(v) + " is not an edge");
			if (ends.count(u) || ends.count(v))
				throw argument_error("imr base pairs share a vertex");
			ends.insert(u);
			ends.insert(v);
		}
		for (const auto& [u, v] : base_edges)
			for (const auto& [x, y] : base_edges) {
				if (u == x && v == y) continue;
				if (graph.has_edge(u, x) || graph.has_edge(u, y) || graph.has_edge(v, x) ||
				    graph.has_edge(v, y))
					throw argument_error("imr base matching is not induced");
			}
		break;
	}
	}
	if (kind != RefinementKind::imr && !base_edges.empty())
		throw argument_error("base_edges is only meaningful for imr");
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

nlohmann::json graph_to_json(const Graph& g) {
	nlohmann::json j;
	j["n"] = g.num_vertices();
	j["edges"] = nlohmann::json::array();
	for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
	return j;
}

Graph graph_from_json(const nlohmann::json& j) {
	if (!j.is_object() || !j.contains("n"))
		throw parse_error("graph: expected an object with \"n\"");
	if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 0)
		throw parse_error("graph: \"n\" must be a nonnegative integer");
	const int n = j.at("n").get<int>();
	std::vector<std::pair<int, int>> edges;
	for (const auto& je : j.value("edges", nlohmann::json::array())) {
		if (!je.is_array() || je.size() != 2 || !je.at(0).is_number_integer() ||
		    !je.at(1).is_number_integer())
			throw parse_error("graph: edges must be [u, v] integer pairs");
		edges.push_back({je.at(0).get<int>(), je.at(1).get<int>()});
	}
	try {
		return Graph(n, edges);
	} catch (const argument_error& e) {
		throw parse_error(std::string("graph: ") + e.what());
	}
}

nlohmann::json formula_to_json(const CnfFormula& f) {
	nlohmann::json j;
	j["vars"] = f.num_vars();
	j["clauses"] = f.clauses();
	return j;
}

CnfFormula formula_from_json(const nlohmann::json& j) {
	if (!j.is_object() || !j.contains("vars"))
		throw parse_error("formula: expected an object with \"vars\"");
	const int vars = j.at("vars").get<int>();
	std::vector<std::vector<int>> clauses;
	for (const auto& jc : j.value("clauses", nlohmann::json::array())) {
		if (!jc.is_array()) throw parse_error("formula: clauses must be arrays of literals");
		std::vector<int> cl;
		for (const auto& l : jc) {
			if (!l.is_number_integer()) throw parse_error("formula: literals must be integers");
			cl.push_back(l.get<int>());
		}
		clauses.push_back(std::move(cl));
	}
	try {
		return CnfFormula(vars, clauses);
	} catch (const argument_error& e) {
		throw parse_error(std::string("formula: ") + e.what());
	}
}

nlohmann::json instance_to_json(const ProblemInstance& inst) {
	nlohmann::json j;
	j["schema"] = 1;
	j["kind"] = kind_name(inst.kind);
	switch (inst.kind) {
	case ProblemKind::cnf_sat:
		j["formula"] = formula_to_json(inst.formula);
		break;
	case ProblemKind::cfa:
		j["cfa"] = cfa_to_json(inst.cfa);
		break;
	case ProblemKind::hamiltonian_cycle:
	case ProblemKind::hamiltonian_path:
		j["graph"] = graph_to_json(inst.graph);
		break;
	default:
		j["graph"] = graph_to_json(inst.graph);
		j["k"] = inst.k;
		break;
	}
	if (inst.kind == ProblemKind::steiner_tree) j["terminals"] = inst.terminals;
	if (inst.kind == ProblemKind::multicolored_clique) j["coloring"] = inst.coloring;
	return j;
}

ProblemInstance instance_from_json(const nlohmann::json& j) {
	if (!j.is_object()) throw parse_error("instance: expected an object");
	if (j.contains("schema") && j.at("schema") != 1)
		throw parse_error("instance: unsupported schema");
	if (!j.contains("kind") || !j.at("kind").is_string())
		throw parse_error("instance: missing \"kind\"");
	const ProblemKind kind = kind_from_name(j.at("kind").get<std::string>());

	ProblemInstance inst;
	inst.kind = kind;
	if (kind == ProblemKind::cnf_sat) {
		if (!j.contains("formula")) throw parse_error("instance: cnf-sat needs \"formula\"");
		inst.formula = formula_from_json(j.at("formula"));
		return inst;
	}
	if (kind == ProblemKind::cfa) {
		if (!j.contains("cfa")) throw parse_error("instance: cfa needs \"cfa\"");
		inst.cfa = cfa_from_json(j.at("cfa"));
		return inst;
	}
	if (!j.contains("graph")) throw parse_error("instance: missing \"graph\"");
	inst.graph = graph_from_json(j.at("graph"));
	if (j.contains("k")) {
		if (!j.at("k").is_number_integer()) throw parse_error("instance: \"k\" must be an integer");
		inst.k = j.at("k").get<long long>();
	}
	if (kind == ProblemKind::triangle_partition) inst.k = inst.graph.num_vertices();
	if (kind == ProblemKind::steiner_tree) {
		std::vector<int> terms;
		for (const auto& t : j.value("terminals", nlohmann::json::array())) {
			if (!t.is_number_integer()) throw parse_error("instance: terminals must be integers");
			terms.push_back(t.get<int>());
		}
		std::sort(terms.begin(), terms.end());
		terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
		inst.terminals = std::move(terms);
	}
	if (kind == ProblemKind::multicolored_clique) {
		for (const auto& c : j.value("coloring", nlohmann::json::array())) {
			if (!c.is_number_integer()) throw parse_error("instance: coloring must be integers");
			inst.coloring.push_back(c.get<int>());
		}
	}
	try {
		inst.validate();
	} catch (const argument_error& e) {
		throw parse_error(std::string("instance: ") + e.what());
	}
	return inst;
}

nlohmann::json refinement_to_json(const RefinementInstance& inst) {
	nlohmann::json j;
	j["schema"] = 1;
	j["kind"] = refinement_name(inst.kind);
	j["graph"] = graph_to_json(inst.graph);
	if (inst.kind == RefinementKind::imr) {
		j["base_edges"] = nlohmann::json::array();
		for (const auto& [u, v] : inst.base_edges) j["base_edges"].push_back({u, v});
	} else {
		j["base"] = inst.base;
	}
	return j;
}

RefinementInstance refinement_from_json(const nlohmann::json& j) {
	if (!j.is_object()) throw parse_error("refinement: expected an object");
	if (j.contains("schema") && j.at("schema") != 1)
		throw parse_error("refinement: unsupported schema");
	if (!j.contains("kind") || !j.at("kind").is_string())
		throw parse_error("refinement: missing \"kind\"");
	RefinementInstance inst;
	inst.kind = refinement_from_name(j.at("kind").get<std::string>());
	if (!j.contains("graph")) throw parse_error("refinement: missing \"graph\"");
	inst.graph = graph_from_json(j.at("graph"));
	for (const auto& v : j.value("base", nlohmann::json::array())) {
		if (!v.is_number_integer()) throw parse_error("refinement: base must be integers");
		inst.base.push_back(v.get<int>());
	}
	for (const auto& e : j.value("base_edges", nlohmann::json::array())) {
		if (!e.is_array() || e.size() != 2)
			throw parse_error("refinement: base_edges must be [u, v] pairs");
		inst.base_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
	}
	try {
		inst.validate();
	} catch (const argument_error& e) {
		throw parse_error(std::string("refinement: ") + e.what());
	}
	return inst;
}

nlohmann::json witness_to_json(const Witness& w) {
	nlohmann::json j = nlohmann::json::object();
	if (!w.vertices.empty()) j["vertices"] = w.vertices;
	if (!w.edges.empty()) {
		j["edges"] = nlohmann::json::array();
		for (const auto& [u, v] : w.edges) j["edges"].push_back({u, v});
	}
	if (!w.order.empty()) j["order"] = w.order;
	if (!w.coloring.empty()) j["coloring"] = w.coloring;
	if (!w.assignment.empty()) {
		j["assignment"] = nlohmann::json::array();
		for (bool b : w.assignment) j["assignment"].push_back(b);
	}
	if (!w.cfa_edges.empty()) {
		j["cfa_edges"] = nlohmann::json::array();
		for (const auto& [b, s] : w.cfa_edges) j["cfa_edges"].push_back({b, s});
	}
	if (!w.triangles.empty()) {
		j["triangles"] = nlohmann::json::array();
		for (const auto& t : w.triangles) j["triangles"].push_back({t[0], t[1], t[2]});
	}
	return j;
}

}
