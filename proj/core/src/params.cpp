#include "pgk/params.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "pgk/bitset.hpp"
#include "pgk/errors.hpp"

namespace pgk {

bool is_vertex_cover(const Graph& g, const std::vector<int>& s) {
	std::vector<char> in(g.num_vertices(), 0);
	for (int v : s) {
		if (v < 0 || v >= g.num_vertices()) return false;
		in[v] = 1;
	}
	for (auto [u, v] : g.edges())
		if (!in[u] && !in[v]) return false;
	return true;
}

bool is_module(const Graph& g, const std::vector<int>& m) {
	std::vector<char> in(g.num_vertices(), 0);
	for (int v : m) {
		if (v < 0 || v >= g.num_vertices()) return false;
		in[v] = 1;
	}
	if (m.empty()) return false;
	for (int x = 0; x < g.num_vertices(); ++x) {
		if (in[x]) continue;
		int cnt = 0;
		for (int w : g.neighbors(x))
			if (in[w]) ++cnt;
		if (cnt != 0 && cnt != int(m.size())) return false;
	}
	return true;
}

namespace {

// clique components of g - s with identical cover neighbourhoods
bool cluster_partition(const Graph& g, const std::vector<int>& s,
                       std::vector<std::vector<int>>* out) {
	std::vector<char> in(g.num_vertices(), 0);
	for (int v : s) {
		if (v < 0 || v >= g.num_vertices()) return false;
		in[v] = 1;
	}
	std::vector<int> rest;
	for (int v = 0; v < g.num_vertices(); ++v)
		if (!in[v]) rest.push_back(v);
	auto sub = induced_subgraph(g, rest);
	for (const auto& comp : connected_components(sub.graph)) {
		std::vector<int> block;
		for (int v : comp) block.push_back(sub.orig_ids[v]);
		for (std::size_t i = 0; i < block.size(); ++i)
			for (std::size_t j = i + 1; j < block.size(); ++j)
				if (!g.has_edge(block[i], block[j])) return false;
		// same neighbourhood inside the cover for all block members
		for (std::size_t i = 1; i < block.size(); ++i) {
			for (int v = 0; v < g.num_vertices(); ++v) {
				if (!in[v]) continue;
				if (g.has_edge(block[0], v) != g.has_edge(block[i], v)) return false;
			}
		}
		if (out) out->push_back(block);
	}
	return true;
}

int greedy_matching_size(const std::vector<std::pair<int, int>>& edges,
                         const std::vector<char>& covered, int n) {
	std::vector<char> used(n, 0);
	int m = 0;
	for (auto [u, v] : edges) {
		if (covered[u] || covered[v] || used[u] || used[v]) continue;
		used[u] = used[v] = 1;
		++m;
	}
	return m;
}

struct CoverSearch {
	int n;
	std::vector<std::pair<int, int>> edges;
	std::vector<char> in_cover;
	std::vector<int> best;

	void rec(int cnt) {
		int lb = cnt + greedy_matching_size(edges, in_cover, n);
		if (lb >= int(best.size())) return;
		std::pair<int, int> open{-1, -1};
		for (auto [u, v] : edges)
			if (!in_cover[u] && !in_cover[v]) {
				open = {u, v};
				break;
			}
		if (open.first < 0) {
			best.clear();
			for (int v = 0; v < n; ++v)
				if (in_cover[v]) best.push_back(v);
			return;
		}
		for (int w : {open.first, open.second}) {
			in_cover[w] = 1;
			rec(cnt + 1);
			in_cover[w] = 0;
		}
	}
};

std::vector<int> min_cover_of_edges(int n, const std::vector<std::pair<int, int>>& edges) {
	if (edges.empty()) return {};
	CoverSearch s;
	s.n = n;
	s.edges = edges;
	s.in_cover.assign(n, 0);
	// greedy upper bound: both endpoints of a maximal matching
	std::vector<char> used(n, 0);
	std::vector<int> ub;
	for (auto [u, v] : edges) {
		if (used[u] || used[v]) continue;
		used[u] = used[v] = 1;
		ub.push_back(u);
		ub.push_back(v);
	}
	s.best = ub;
	s.rec(0);
	std::sort(s.best.begin(), s.best.end());
	return s.best;
}

}

bool is_twin_cover(const Graph& g, const std::vector<int>& s) {
	return cluster_partition(g, s, nullptr);
}

VcCertificate vertex_cover_exact(const Graph& g) {
	return VcCertificate{min_cover_of_edges(g.num_vertices(), g.edges())};
}

TcCertificate twin_cover_exact(const Graph& g, const Guardrails& limits) {
	if (!limits.unrestricted && g.num_vertices() > limits.max_twin_cover_vertices)
		throw resource_error("twin_cover_exact: " + std::to_string(g.num_vertices()) +
		                     " vertices exceeds limit " +
		                     std::to_string(limits.max_twin_cover_vertices));
	int n = g.num_vertices();
	std::vector<DynBits> adj(n, DynBits(n));
	for (auto [u, v] : g.edges()) {
		adj[u].set(v);
		adj[v].set(u);
	}
	std::vector<std::pair<int, int>> non_twin;
	for (auto [u, v] : g.edges()) {
		DynBits a = adj[u], b = adj[v];
		a.reset(u); a.reset(v);
		b.reset(u); b.reset(v);
		if (!(a.w == b.w)) non_twin.push_back({u, v});
	}
	std::vector<int> cover = min_cover_of_edges(n, non_twin);
	return make_tc_certificate(g, cover);
}

TcCertificate make_tc_certificate(const Graph& g, const std::vector<int>& cover) {
	TcCertificate cert;
	cert.cover = cover;
	std::sort(cert.cover.begin(), cert.cover.end());
	cert.cover.erase(std::unique(cert.cover.begin(), cert.cover.end()), cert.cover.end());
	if (!cluster_partition(g, cert.cover, &cert.cliques))
		throw argument_error("make_tc_certificate: set is not a twin cover");
	return cert;
}

NdPartition nd_partition(const Graph& g) {
	int n = g.num_vertices();
	std::vector<DynBits> adj(n, DynBits(std::max(n, 1)));
	for (auto [u, v] : g.edges()) {
		adj[u].set(v);
		adj[v].set(u);
	}
	std::vector<int> cls(n, -1);
	std::vector<std::vector<int>> groups;
	for (int u = 0; u < n; ++u) {
		if (cls[u] >= 0) continue;
		int id = int(groups.size());
		groups.push_back({u});
		cls[u] = id;
		for (int v = u + 1; v < n; ++v) {
			if (cls[v] >= 0) continue;
			DynBits a = adj[u], b = adj[v];
			a.reset(u); a.reset(v);
			b.reset(u); b.reset(v);
			if (a.w == b.w) {
				cls[v] = id;
				groups[id].push_back(v);
			}
		}
	}
	NdPartition out;
	for (auto& m : groups) {
		NdClass c;
		c.members = m;
		c.kind = (m.size() >= 2 && g.has_edge(m[0], m[1])) ? NdClassKind::clique
		                                                   : NdClassKind::independent;
		out.classes.push_back(std::move(c));
	}
	return out;
}

namespace {

// Smallest module of g containing {u, v}: grow by any outside vertex seeing
// only part of the current set.
std::vector<char> min_module_closure(const Graph& g, int u, int v) {
	int n = g.num_vertices();
	std::vector<char> in(n, 0);
	std::vector<int> cnt(n, 0);
	int size = 0;
	auto add = [&](int x) {
		in[x] = 1;
		++size;
		for (int w : g.neighbors(x))
			if (!in[w]) ++cnt[w];
	};
	add(u);
	add(v);
	bool grew = true;
	while (grew && size < n) {
		grew = false;
		for (int x = 0; x < n && !grew; ++x) {
			if (in[x]) continue;
			int c = cnt[x];
			if (c != 0 && c != size) {
				add(x);
				grew = true;
			}
		}
	}
	return in;
}

int md_build(const Graph& g, const std::vector<int>& verts, MdTree& t);

int md_internal(const Graph& g, const std::vector<int>& verts, MdTree& t,
                MdNode::Kind kind, const std::vector<std::vector<int>>& parts) {
	MdNode node;
	node.kind = kind;
	node.module_vertices = verts;
	int id = int(t.nodes.size());
	t.nodes.push_back(node);
	std::vector<int> kids;
	for (const auto& p : parts) kids.push_back(md_build(g, p, t));
	t.nodes[id].children = kids;
	return id;
}

int md_build(const Graph& g, const std::vector<int>& verts, MdTree& t) {
	if (verts.size() == 1) {
		MdNode node;
		node.kind = MdNode::leaf;
		node.vertex = verts[0];
		node.module_vertices = verts;
		t.nodes.push_back(node);
		return int(t.nodes.size()) - 1;
	}
	auto sub = induced_subgraph(g, verts);
	const Graph& h = sub.graph;
	auto lift = [&](const std::vector<std::vector<int>>& local) {
		std::vector<std::vector<int>> out;
		for (const auto& part : local) {
			std::vector<int> p;
			for (int v : part) p.push_back(sub.orig_ids[v]);
			std::sort(p.begin(), p.end());
			out.push_back(p);
		}
		return out;
	};

	auto comps = connected_components(h);
	if (comps.size() > 1)
		return md_internal(g, verts, t, MdNode::parallel, lift(comps));

	auto co_comps = connected_components(complement(h));
	if (co_comps.size() > 1)
		return md_internal(g, verts, t, MdNode::series, lift(co_comps));

	// prime: vertices u, v share a child module iff some proper module of h
	// contains both
	int n = h.num_vertices();
	std::vector<int> rep(n);
	std::iota(rep.begin(), rep.end(), 0);
	std::function<int(int)> find = [&](int x) {
		while (rep[x] != x) x = rep[x] = rep[rep[x]];
		return x;
	};
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v) {
			if (find(u) == find(v)) continue;
			auto m = min_module_closure(h, u, v);
			if (std::count(m.begin(), m.end(), char(1)) < n) rep[find(v)] = find(u);
		}
	std::vector<std::vector<int>> parts(n);
	for (int v = 0; v < n; ++v) parts[find(v)].push_back(v);
	std::vector<std::vector<int>> nonempty;
	for (auto& p : parts)
		if (!p.empty()) nonempty.push_back(p);
	return md_internal(g, verts, t, MdNode::prime, lift(nonempty));
}

}

MdTree modular_decomposition(const Graph& g) {
	MdTree t;
	if (g.num_vertices() == 0) return t;
	std::vector<int> all(g.num_vertices());
	std::iota(all.begin(), all.end(), 0);
	t.root = md_build(g, all, t);
	return t;
}

int modular_width(const MdTree& t) {
	int w = 0;
	for (const auto& node : t.nodes)
		if (node.kind == MdNode::prime) w = std::max(w, int(node.children.size()));
	return w;
}

int modular_width(const Graph& g) { return modular_width(modular_decomposition(g)); }

QuotientResult quotient_graph(const Graph& g, const std::vector<std::vector<int>>& partition) {
	std::vector<int> owner(g.num_vertices(), -1);
	for (std::size_t i = 0; i < partition.size(); ++i) {
		if (partition[i].empty()) throw argument_error("quotient_graph: empty part");
		for (int v : partition[i]) {
			if (v < 0 || v >= g.num_vertices())
				throw argument_error("quotient_graph: vertex out of range");
			if (owner[v] != -1) throw argument_error("quotient_graph: parts overlap");
			owner[v] = int(i);
		}
	}
	for (int v = 0; v < g.num_vertices(); ++v)
		if (owner[v] < 0) throw argument_error("quotient_graph: vertex " + std::to_string(v) +
		                                       " not covered by the partition");
	for (std::size_t i = 0; i < partition.size(); ++i) {
		for (int x = 0; x < g.num_vertices(); ++x) {
			if (owner[x] == int(i)) continue;
			int cnt = 0;
			for (int w : g.neighbors(x))
				if (owner[w] == int(i)) ++cnt;
			if (cnt != 0 && cnt != int(partition[i].size()))
				throw argument_error("quotient_graph: vertex " + std::to_string(x) +
				                     " sees only part of module " + std::to_string(i));
		}
	}
	std::vector<std::pair<int, int>> es;
	for (std::size_t i = 0; i < partition.size(); ++i)
		for (std::size_t j = i + 1; j < partition.size(); ++j)
			if (g.has_edge(partition[i][0], partition[j][0])) es.push_back({int(i), int(j)});
	QuotientResult out;
	out.graph = Graph(int(partition.size()), es);
	out.parts = partition;
	return out;
}

namespace {

void md_emit_edges(const Graph& g, const MdTree& t, int node_id,
                   std::vector<std::pair<int, int>>& es) {
	const MdNode& node = t.nodes[node_id];
	if (node.kind == MdNode::leaf) return;
	for (std::size_t i = 0; i < node.children.size(); ++i) {
		for (std::size_t j = i + 1; j < node.children.size(); ++j) {
			const auto& a = t.nodes[node.children[i]].module_vertices;
			const auto& b = t.nodes[node.children[j]].module_vertices;
			bool joined;
			switch (node.kind) {
				case MdNode::parallel: joined = false; break;
				case MdNode::series: joined = true; break;
				default: joined = g.has_edge(a[0], b[0]); break;
			}
			if (joined)
				for (int u : a)
					for (int v : b) es.push_back({u, v});
		}
	}
	for (int c : node.children) md_emit_edges(g, t, c, es);
}

}

Graph reconstruct_from_md(const Graph& g, const MdTree& t) {
	if (t.root < 0) return Graph(0);
	std::vector<std::pair<int, int>> es;
	md_emit_edges(g, t, t.root, es);
	return Graph(g.num_vertices(), es);
}

}
