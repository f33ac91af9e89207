#include "pgk/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pgk/errors.hpp"

namespace pgk {

Graph::Graph(int n) : n_(n), m_(0), adj_(n) {
	if (n < 0) throw argument_error("graph: negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
	std::set<std::pair<int, int>> seen;
	for (auto [u, v] : edge_list) {
		if (u < 0 || u >= n || v < 0 || v >= n)
			throw argument_error("graph: edge endpoint out of range");
		if (u == v) throw argument_error("graph: self-loop not allowed");
		if (u > v) std::swap(u, v);
		seen.insert({u, v});
	}
	for (auto [u, v] : seen) {
		adj_[u].push_back(v);
		adj_[v].push_back(u);
	}
	for (auto& l : adj_) std::sort(l.begin(), l.end());
	m_ = int(seen.size());
}

bool Graph::has_edge(int u, int v) const {
	if (u == v) return false;
	const auto& l = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
	int other = adj_[u].size() <= adj_[v].size() ? v : u;
	return std::binary_search(l.begin(), l.end(), other);
}

std::vector<std::pair<int, int>> Graph::edges() const {
	std::vector<std::pair<int, int>> out;
	out.reserve(m_);
	for (int u = 0; u < n_; ++u)
		for (int v : adj_[u])
			if (u < v) out.push_back({u, v});
	return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
	std::vector<int> sel = keep;
	std::sort(sel.begin(), sel.end());
	sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
	for (int v : sel)
		if (v < 0 || v >= g.num_vertices())
			throw argument_error("induced_subgraph: vertex out of range");

	InducedSubgraph out;
	out.orig_ids = sel;
	out.new_ids.assign(g.num_vertices(), -1);
	for (int i = 0; i < int(sel.size()); ++i) out.new_ids[sel[i]] = i;

	std::vector<std::pair<int, int>> es;
	for (int i = 0; i < int(sel.size()); ++i)
		for (int w : g.neighbors(sel[i])) {
			int j = out.new_ids[w];
			if (j > i) es.push_back({i, j});
		}
	out.graph = Graph(int(sel.size()), es);
	return out;
}

Graph complement(const Graph& g) {
	int n = g.num_vertices();
	std::vector<std::pair<int, int>> es;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			if (!g.has_edge(u, v)) es.push_back({u, v});
	return Graph(n, es);
}

DisjointUnion disjoint_union(const std::vector<Graph>& parts) {
	DisjointUnion out;
	int n = 0;
	for (const auto& p : parts) {
		out.offsets.push_back(n);
		n += p.num_vertices();
	}
	std::vector<std::pair<int, int>> es;
	for (std::size_t i = 0; i < parts.size(); ++i)
		for (auto [u, v] : parts[i].edges())
			es.push_back({u + out.offsets[i], v + out.offsets[i]});
	out.graph = Graph(n, es);
	return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
	int n = g.num_vertices();
	std::vector<int> comp(n, -1);
	std::vector<std::vector<int>> out;
	for (int s = 0; s < n; ++s) {
		if (comp[s] >= 0) continue;
		int c = int(out.size());
		out.push_back({});
		std::vector<int> stack{s};
		comp[s] = c;
		while (!stack.empty()) {
			int u = stack.back();
			stack.pop_back();
			out[c].push_back(u);
			for (int v : g.neighbors(u))
				if (comp[v] < 0) {
					comp[v] = c;
					stack.push_back(v);
				}
		}
		std::sort(out[c].begin(), out[c].end());
	}
	return out;
}

bool is_connected(const Graph& g) {
	return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

Graph parse_dimacs(const std::string& text) {
	std::istringstream in(text);
	std::string line;
	int n = -1, lineno = 0;
	std::vector<std::pair<int, int>> es;
	while (std::getline(in, line)) {
		++lineno;
		if (line.empty() || line[0] == 'c') continue;
		std::istringstream ls(line);
		std::string tag;
		ls >> tag;
		if (tag.empty()) continue;
		if (tag == "p") {
			std::string fmt;
			long long pn = -1, pm = -1;
			if (!(ls >> fmt >> pn >> pm) || fmt != "edge" || pn < 0 || pm < 0)
				throw parse_error("dimacs line " + std::to_string(lineno) + ": bad problem line");
			if (n >= 0)
				throw parse_error("dimacs line " + std::to_string(lineno) + ": duplicate problem line");
			n = int(pn);
		} else if (tag == "e") {
			if (n < 0)
				throw parse_error("dimacs line " + std::to_string(lineno) + ": edge before problem line");
			long long u, v;
			if (!(ls >> u >> v))
				throw parse_error("dimacs line " + std::to_string(lineno) + ": bad edge line");
			if (u < 1 || u > n || v < 1 || v > n)
				throw parse_error("dimacs line " + std::to_string(lineno) + ": vertex out of range");
			if (u == v)
				throw parse_error("dimacs line " + std::to_string(lineno) + ": self-loop");
			es.push_back({int(u - 1), int(v - 1)});
		} else {
			throw parse_error("dimacs line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
		}
	}
	if (n < 0) throw parse_error("dimacs: missing problem line");
	return Graph(n, es);
}

std::string to_dimacs(const Graph& g) {
	std::ostringstream out;
	out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
	for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
	return out.str();
}

Graph complete_graph(int n) {
	std::vector<std::pair<int, int>> es;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v) es.push_back({u, v});
	return Graph(n, es);
}

Graph cycle_graph(int n) {
	if (n < 3) throw argument_error("cycle_graph: need n >= 3");
	std::vector<std::pair<int, int>> es;
	for (int u = 0; u < n; ++u) es.push_back({u, (u + 1) % n});
	return Graph(n, es);
}

Graph path_graph(int n) {
	std::vector<std::pair<int, int>> es;
	for (int u = 0; u + 1 < n; ++u) es.push_back({u, u + 1});
	return Graph(n, es);
}

Graph star_graph(int leaves) {
	std::vector<std::pair<int, int>> es;
	for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
	return Graph(leaves + 1, es);
}

Graph complete_bipartite(int a, int b) {
	std::vector<std::pair<int, int>> es;
	for (int u = 0; u < a; ++u)
		for (int v = 0; v < b; ++v) es.push_back({u, a + v});
	return Graph(a + b, es);
}

Graph petersen_graph() {
	std::vector<std::pair<int, int>> es;
	for (int i = 0; i < 5; ++i) {
		es.push_back({i, (i + 1) % 5});          // outer cycle
		es.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
		es.push_back({i, 5 + i});                // spokes
	}
	return Graph(10, es);
}

}
