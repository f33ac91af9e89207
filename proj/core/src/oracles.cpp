#include "pgk/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

#include "pgk/bitset.hpp"
#include "pgk/errors.hpp"
#include "pgk/graph.hpp"

namespace pgk {

namespace {

// ---------------------------------------------------------------------------
// shared machinery
// ---------------------------------------------------------------------------

void require_size(int n, int cap, bool unrestricted, const char* what) {
	if (!unrestricted && n > cap)
		throw resource_error(std::string(what) + ": size " + std::to_string(n) +
		                     " exceeds guardrail " + std::to_string(cap));
}

// adjacency as 64-bit masks; the exhaustive solvers run per component or on
// guardrail-sized graphs, so 64 vertices is a hard ceiling
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
	if (g.num_vertices() > 64)
		throw resource_error("exhaustive search limited to 64 vertices, got " +
		                     std::to_string(g.num_vertices()));
	std::vector<std::uint64_t> adj(g.num_vertices(), 0);
	for (int v = 0; v < g.num_vertices(); ++v)
		for (int u : g.neighbors(v)) adj[v] |= std::uint64_t(1) << u;
	return adj;
}

std::uint64_t full_mask(int n) {
	return n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
}

std::vector<int> mask_to_vertices(std::uint64_t m) {
	std::vector<int> out;
	while (m) {
		out.push_back(std::countr_zero(m));
		m &= m - 1;
	}
	return out;
}

bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t set) {
	if (std::popcount(set) <= 1) return true;
	std::uint64_t seen = set & (~set + 1); // lowest bit
	std::uint64_t frontier = seen;
	while (frontier) {
		std::uint64_t next = 0;
		while (frontier) {
			int v = std::countr_zero(frontier);
			frontier &= frontier - 1;
			next |= adj[v] & set & ~seen;
		}
		seen |= next;
		frontier = next;
	}
	return seen == set;
}

struct Component {
	Graph graph;
	std::vector<int> orig; // component vertex -> input vertex
};

std::vector<Component> split_components(const Graph& g) {
	std::vector<Component> out;
	for (const auto& c : connected_components(g)) {
		InducedSubgraph sub = induced_subgraph(g, c);
		out.push_back({std::move(sub.graph), std::move(sub.orig_ids)});
	}
	return out;
}

void map_ids(std::vector<int>& vs, const std::vector<int>& orig) {
	for (int& v : vs) v = orig[v];
}

// ---------------------------------------------------------------------------
// clique: branch and bound with a greedy-coloring upper bound
// ---------------------------------------------------------------------------

struct CliqueSearch {
	const std::vector<std::uint64_t>& adj;
	int target;
	std::vector<int> cur;

	bool expand(std::uint64_t cand) {
		if (int(cur.size()) >= target) return true;
		if (!cand) return false;
		// greedily color the candidates; a clique uses every color at most once
		std::vector<int> verts = mask_to_vertices(cand);
		std::vector<int> color(verts.size());
		std::vector<std::uint64_t> classes;
		for (std::size_t i = 0; i < verts.size(); ++i) {
			std::size_t c = 0;
			while (c < classes.size() && (classes[c] & adj[verts[i]])) ++c;
			if (c == classes.size()) classes.push_back(0);
			classes[c] |= std::uint64_t(1) << verts[i];
			color[i] = int(c) + 1;
		}
		// walk in descending color order; only then does one vertex's color
		// bound the clique hiding among everything still ahead of the loop
		std::vector<std::size_t> order(verts.size());
		std::iota(order.begin(), order.end(), std::size_t{0});
		std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
			return color[a] < color[b];
		});
		for (int oi = int(order.size()) - 1; oi >= 0; --oi) {
			std::size_t i = order[oi];
			if (int(cur.size()) + color[i] < target) return false;
			int v = verts[i];
			cur.push_back(v);
			if (expand(cand & adj[v])) return true;
			cur.pop_back();
			cand &= ~(std::uint64_t(1) << v);
		}
		return false;
	}
};

bool clique_at_least(const Graph& comp, long long k, std::vector<int>& witness) {
	if (k <= 0) {
		witness.clear();
		return true;
	}
	if (k > comp.num_vertices()) return false;
	auto adj = adjacency_masks(comp);
	CliqueSearch s{adj, int(k), {}};
	if (!s.expand(full_mask(comp.num_vertices()))) return false;
	witness = s.cur;
	return true;
}

// ---------------------------------------------------------------------------
// independent set: exact maximum per component, early exit at stop_at
// ---------------------------------------------------------------------------

struct MisSearch {
	const std::vector<std::uint64_t>& adj;
	int stop_at;
	int best = 0;
	std::uint64_t best_set = 0;

	void rec(std::uint64_t cand, int size, std::uint64_t chosen) {
		if (size > best) {
			best = size;
			best_set = chosen;
		}
		if (best >= stop_at || !cand) return;
		if (size + std::popcount(cand) <= best) return;
		// branch on a max-degree candidate; taking it is forced when its
		// remaining degree is below two
		int v = -1, vd = -1;
		for (std::uint64_t m = cand; m;) {
			int u = std::countr_zero(m);
			m &= m - 1;
			int d = std::popcount(cand & adj[u]);
			if (d > vd) {
				vd = d;
				v = u;
			}
		}
		std::uint64_t bit = std::uint64_t(1) << v;
		rec(cand & ~(adj[v] | bit), size + 1, chosen | bit);
		if (vd >= 2 && best < stop_at) rec(cand & ~bit, size, chosen);
	}
};

int mis_value(const Graph& comp, int stop_at, std::vector<int>* witness) {
	if (comp.num_vertices() == 0) return 0;
	auto adj = adjacency_masks(comp);
	MisSearch s{adj, std::max(stop_at, 0)};
	s.rec(full_mask(comp.num_vertices()), 0, 0);
	if (witness) *witness = mask_to_vertices(s.best_set);
	return s.best;
}

// ---------------------------------------------------------------------------
// vertex cover: edge branching with a greedy-matching lower bound
// ---------------------------------------------------------------------------

struct VcSearch {
	const std::vector<std::uint64_t>& adj;
	int n;
	int best;
	std::uint64_t best_set = 0;

	int matching_lb(std::uint64_t removed) const {
		std::uint64_t used = removed;
		int m = 0;
		for (int v = 0; v < n; ++v) {
			if (used & (std::uint64_t(1) << v)) continue;
			std::uint64_t free_nbrs = adj[v] & ~used;
			if (free_nbrs) {
				used |= std::uint64_t(1) << v;
				used |= free_nbrs & (~free_nbrs + 1);
				++m;
			}
		}
		return m;
	}

	void rec(std::uint64_t removed, int count, std::uint64_t chosen) {
		if (count + matching_lb(removed) >= best) return;
		int eu = -1, ev = -1;
		for (int v = 0; v < n && eu < 0; ++v) {
			if (removed & (std::uint64_t(1) << v)) continue;
			std::uint64_t rest = adj[v] & ~removed;
			if (rest) {
				eu = v;
				ev = std::countr_zero(rest);
			}
		}
		if (eu < 0) {
			best = count;
			best_set = chosen;
			return;
		}
		rec(removed | (std::uint64_t(1) << eu), count + 1, chosen | (std::uint64_t(1) << eu));
		rec(removed | (std::uint64_t(1) << ev), count + 1, chosen | (std::uint64_t(1) << ev));
	}
};

int vc_value(const Graph& comp, std::vector<int>* witness) {
	auto adj = adjacency_masks(comp);
	VcSearch s{adj, comp.num_vertices(), comp.num_vertices() + 1};
	s.rec(0, 0, 0);
	if (witness) *witness = mask_to_vertices(s.best_set);
	return s.best;
}

// ---------------------------------------------------------------------------
// dominating set: branch over the closed neighborhood of an undominated vertex
// ---------------------------------------------------------------------------

struct DsSearch {
	const std::vector<std::uint64_t>& closed;
	int n;
	std::uint64_t full;
	int best;
	std::uint64_t best_set = 0;

	void rec(std::uint64_t dominated, int count, std::uint64_t chosen) {
		if (dominated == full) {
			if (count < best) {
				best = count;
				best_set = chosen;
			}
			return;
		}
		int undom = std::popcount(full & ~dominated);
		int maxcover = 1;
		for (int u = 0; u < n; ++u)
			maxcover = std::max(maxcover, std::popcount(closed[u] & ~dominated));
		if (count + (undom + maxcover - 1) / maxcover >= best) return;
		int v = std::countr_zero(full & ~dominated);
		std::uint64_t options = closed[v];
		while (options) {
			int u = std::countr_zero(options);
			options &= options - 1;
			rec(dominated | closed[u], count + 1, chosen | (std::uint64_t(1) << u));
		}
	}
};

int ds_value(const Graph& comp, std::vector<int>* witness) {
	const int n = comp.num_vertices();
	if (n == 0) return 0;
	auto adj = adjacency_masks(comp);
	std::vector<std::uint64_t> closed(n);
	for (int v = 0; v < n; ++v) closed[v] = adj[v] | (std::uint64_t(1) << v);
	DsSearch s{closed, n, full_mask(n), n + 1};
	s.rec(0, 0, 0);
	if (witness) *witness = mask_to_vertices(s.best_set);
	return s.best;
}

// ---------------------------------------------------------------------------
// feedback vertex set: multigraph reductions plus shortest-cycle branching
// ---------------------------------------------------------------------------

struct MultiGraph {
	int n = 0;
	std::vector<std::map<int, int>> adj; // neighbor -> multiplicity
	std::vector<char> alive;

	explicit MultiGraph(const Graph& g) : n(g.num_vertices()), adj(n), alive(n, 1) {
		for (const auto& [u, v] : g.edges()) {
			adj[u][v] = 1;
			adj[v][u] = 1;
		}
	}

	int degree(int v) const {
		int d = 0;
		for (const auto& [u, m] : adj[v]) d += m;
		return d;
	}

	void remove_vertex(int v) {
		for (const auto& [u, m] : adj[v]) adj[u].erase(v);
		adj[v].clear();
		alive[v] = 0;
	}

	void add_edge(int u, int v) {
		adj[u][v] += 1;
		adj[v][u] += 1;
	}
};

// shortest cycle as a vertex list; a doubled edge counts as a 2-cycle
std::vector<int> shortest_cycle(const MultiGraph& g) {
	for (int v = 0; v < g.n; ++v)
		if (g.alive[v])
			for (const auto& [u, m] : g.adj[v])
				if (m >= 2) return {v, u};
	std::vector<int> best;
	for (int s = 0; s < g.n; ++s) {
		if (!g.alive[s]) continue;
		std::vector<int> dist(g.n, -1), par(g.n, -1);
		dist[s] = 0;
		std::queue<int> q;
		q.push(s);
		while (!q.empty()) {
			int u = q.front();
			q.pop();
			for (const auto& [w, m] : g.adj[u]) {
				if (dist[w] == -1) {
					dist[w] = dist[u] + 1;
					par[w] = u;
					q.push(w);
				} else if (w != par[u] && par[w] != u) {
					std::vector<int> a, b;
					for (int x = u; x != -1; x = par[x]) a.push_back(x);
					for (int x = w; x != -1; x = par[x]) b.push_back(x);
					while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
						a.pop_back();
						b.pop_back();
					}
					std::vector<int> cyc(a.begin(), a.end());
					for (int i = int(b.size()) - 2; i >= 0; --i) cyc.push_back(b[i]);
					if (best.empty() || cyc.size() < best.size()) best = cyc;
					if (best.size() == 3) return best;
				}
			}
		}
	}
	return best;
}

int disjoint_cycle_lb(MultiGraph g) {
	int lb = 0;
	while (true) {
		auto cyc = shortest_cycle(g);
		if (cyc.empty()) return lb;
		++lb;
		for (int v : cyc) g.remove_vertex(v);
	}
}

bool fvs_le_rec(MultiGraph g, int k, std::vector<int>& acc) {
	// reductions: drop degree <= 1; a doubled edge at a degree-2 vertex
	// forces its neighbor; other degree-2 vertices are suppressed
	bool changed = true;
	while (changed) {
		changed = false;
		for (int v = 0; v < g.n; ++v) {
			if (!g.alive[v]) continue;
			int d = g.degree(v);
			if (d == 0 && g.n > 1) {
				g.alive[v] = 0;
			} else if (d == 1) {
				g.remove_vertex(v);
				changed = true;
			} else if (d == 2) {
				if (g.adj[v].size() == 1) {
					int u = g.adj[v].begin()->first;
					if (k == 0) return false;
					acc.push_back(u);
					g.remove_vertex(u);
					--k;
				} else {
					int a = g.adj[v].begin()->first;
					int b = std::next(g.adj[v].begin())->first;
					g.remove_vertex(v);
					g.add_edge(a, b);
				}
				changed = true;
			}
		}
	}
	auto cyc = shortest_cycle(g);
	if (cyc.empty()) return true;
	if (k <= 0) return false;
	if (disjoint_cycle_lb(g) > k) return false;
	for (int v : cyc) {
		MultiGraph h = g;
		h.remove_vertex(v);
		std::size_t mark = acc.size();
		acc.push_back(v);
		if (fvs_le_rec(std::move(h), k - 1, acc)) return true;
		acc.resize(mark);
	}
	return false;
}

// exact minimum size by iterative deepening, saturating at cap + 1
int fvs_value(const Graph& comp, int cap, std::vector<int>* witness) {
	for (int k = 0; k <= cap; ++k) {
		std::vector<int> acc;
		if (fvs_le_rec(MultiGraph(comp), k, acc)) {
			if (witness) *witness = acc;
			return int(acc.size());
		}
	}
	return cap + 1;
}

// ---------------------------------------------------------------------------
// odd cycle transversal: branch over an odd cycle
// ---------------------------------------------------------------------------

std::vector<int> find_odd_cycle(const Graph& g, const std::vector<char>& removed) {
	const int n = g.num_vertices();
	std::vector<int> side(n, -1), par(n, -1);
	for (int s = 0; s < n; ++s) {
		if (removed[s] || side[s] != -1) continue;
		side[s] = 0;
		std::queue<int> q;
		q.push(s);
		while (!q.empty()) {
			int u = q.front();
			q.pop();
			for (int v : g.neighbors(u)) {
				if (removed[v]) continue;
				if (side[v] == -1) {
					side[v] = 1 - side[u];
					par[v] = u;
					q.push(v);
				} else if (side[v] == side[u]) {
					std::vector<int> a, b;
					for (int x = u; x != -1; x = par[x]) a.push_back(x);
					for (int x = v; x != -1; x = par[x]) b.push_back(x);
					while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
						a.pop_back();
						b.pop_back();
					}
					std::vector<int> cyc(a.begin(), a.end());
					for (int i = int(b.size()) - 2; i >= 0; --i) cyc.push_back(b[i]);
					return cyc;
				}
			}
		}
	}
	return {};
}

int disjoint_odd_cycle_lb(const Graph& g, std::vector<char> removed) {
	int lb = 0;
	while (true) {
		auto cyc = find_odd_cycle(g, removed);
		if (cyc.empty()) return lb;
		++lb;
		for (int v : cyc) removed[v] = 1;
	}
}

bool oct_rec(const Graph& g, std::vector<char>& removed, int k, std::vector<int>& chosen) {
	auto cyc = find_odd_cycle(g, removed);
	if (cyc.empty()) return true;
	if (k <= 0) return false;
	if (disjoint_odd_cycle_lb(g, removed) > k) return false;
	// a live degree-2 vertex with adjacent neighbors is dominated by either
	// neighbor, and both neighbors sit on this cycle too; skipping it is only
	// safe while some other cycle vertex still gets branched on (a bare
	// triangle would otherwise skip all three)
	for (int pass = 0; pass < 2; ++pass) {
		bool branched = false;
		for (int v : cyc) {
			if (pass == 0) {
				int live = 0, nb[2] = {-1, -1};
				for (int u : g.neighbors(v))
					if (!removed[u]) {
						if (live < 2) nb[live] = u;
						++live;
					}
				if (live == 2 && g.has_edge(nb[0], nb[1])) continue;
			}
			branched = true;
			removed[v] = 1;
			chosen.push_back(v);
			if (oct_rec(g, removed, k - 1, chosen)) return true;
			chosen.pop_back();
			removed[v] = 0;
		}
		if (branched) break;
	}
	return false;
}

int oct_value(const Graph& comp, int cap, std::vector<int>* witness) {
	for (int k = 0; k <= cap; ++k) {
		std::vector<char> removed(comp.num_vertices(), 0);
		std::vector<int> chosen;
		if (oct_rec(comp, removed, k, chosen)) {
			if (witness) *witness = chosen;
			return int(chosen.size());
		}
	}
	return cap + 1;
}

// ---------------------------------------------------------------------------
// chromatic number: backtracking, colors introduced in canonical order
// ---------------------------------------------------------------------------

struct ColorSearch {
	const Graph& g;
	std::vector<int> order;
	int k;
	std::vector<int> color;

	bool rec(std::size_t i, int used) {
		if (i == order.size()) return true;
		int v = order[i];
		std::uint32_t seen = 0;
		for (int u : g.neighbors(v))
			if (color[u]) seen |= std::uint32_t(1) << (color[u] - 1);
		int limit = std::min(used + 1, k);
		for (int c = 1; c <= limit; ++c) {
			if (seen & (std::uint32_t(1) << (c - 1))) continue;
			color[v] = c;
			if (rec(i + 1, std::max(used, c))) return true;
			color[v] = 0;
		}
		return false;
	}
};

bool chromatic_le(const Graph& comp, long long k, std::vector<int>* coloring) {
	const int n = comp.num_vertices();
	if (n == 0) return k >= 0;
	if (k <= 0) return false;
	if (k >= n) {
		if (coloring) {
			coloring->resize(n);
			std::iota(coloring->begin(), coloring->end(), 1);
		}
		return true;
	}
	ColorSearch s{comp, {}, int(k), std::vector<int>(n, 0)};
	s.order.resize(n);
	std::iota(s.order.begin(), s.order.end(), 0);
	std::stable_sort(s.order.begin(), s.order.end(),
	                 [&](int a, int b) { return comp.degree(a) > comp.degree(b); });
	if (!s.rec(0, 0)) return false;
	if (coloring) *coloring = s.color;
	return true;
}

// ---------------------------------------------------------------------------
// hamiltonian cycle and path: backtracking with a connectivity prune
// ---------------------------------------------------------------------------

struct HamSearch {
	const std::vector<std::uint64_t>& adj;
	int n;
	bool cycle;
	int start;
	std::vector<int> path;

	bool rec(std::uint64_t visited, int cur) {
		if (int(path.size()) == n)
			return !cycle || (adj[cur] & (std::uint64_t(1) << start));
		std::uint64_t rest = ~visited & full_mask(n);
		std::uint64_t zone = rest | (std::uint64_t(1) << cur);
		if (cycle) zone |= std::uint64_t(1) << start;
		if (!mask_connected(adj, zone)) return false;
		std::uint64_t next = adj[cur] & rest;
		while (next) {
			int v = std::countr_zero(next);
			next &= next - 1;
			path.push_back(v);
			if (rec(visited | (std::uint64_t(1) << v), v)) return true;
			path.pop_back();
		}
		return false;
	}
};

bool hamiltonian(const Graph& g, bool cycle, std::vector<int>* order) {
	const int n = g.num_vertices();
	if (cycle && n <= 2) return false; // simple graphs have no 1- or 2-cycles
	if (!cycle && n <= 1) {
		if (order) {
			order->clear();
			if (n == 1) order->push_back(0);
		}
		return true;
	}
	if (!is_connected(g)) return false;
	auto adj = adjacency_masks(g);
	// a cycle visits everything, so its start may be pinned
	const int last_start = cycle ? 0 : n - 1;
	for (int s = 0; s <= last_start; ++s) {
		HamSearch hs{adj, n, cycle, s, {s}};
		if (hs.rec(std::uint64_t(1) << s, s)) {
			if (order) *order = hs.path;
			return true;
		}
	}
	return false;
}

// ---------------------------------------------------------------------------
// induced matching: independent set in the edge-conflict graph, searched
// bucket by bucket over a first-fit clique cover
// ---------------------------------------------------------------------------

struct MimSearch {
	const std::vector<DynBits>& conflict;
	const std::vector<std::vector<int>>& buckets;
	int stop_at;
	int best = 0;
	std::vector<int> best_nodes;
	std::vector<int> cur;

	void rec(std::size_t bi, const DynBits& cand, int size) {
		if (size > best) {
			best = size;
			best_nodes = cur;
		}
		if (best >= stop_at || bi == buckets.size()) return;
		// at most one node per remaining bucket can join
		int bound = size;
		for (std::size_t j = bi; j < buckets.size() && bound <= best; ++j)
			for (int m : buckets[j])
				if (cand.test(m)) {
					++bound;
					break;
				}
		if (bound <= best) return;
		for (int m : buckets[bi]) {
			if (!cand.test(m)) continue;
			DynBits next = cand;
			next.subtract(conflict[m]);
			next.reset(m);
			cur.push_back(m);
			rec(bi + 1, next, size + 1);
			cur.pop_back();
			if (best >= stop_at) return;
		}
		rec(bi + 1, cand, size);
	}
};

int mim_value(const Graph& comp, int stop_at, std::vector<std::pair<int, int>>* witness) {
	if (stop_at <= 0) return 0;
	const auto edge_list = comp.edges();
	const int m = int(edge_list.size());
	if (m == 0) return 0;
	std::vector<DynBits> conflict(m, DynBits(m));
	for (int i = 0; i < m; ++i)
		for (int j = i + 1; j < m; ++j) {
			auto [a, b] = edge_list[i];
			auto [c, d] = edge_list[j];
			bool clash = a == c || a == d || b == c || b == d || comp.has_edge(a, c) ||
			             comp.has_edge(a, d) || comp.has_edge(b, c) || comp.has_edge(b, d);
			if (clash) {
				conflict[i].set(j);
				conflict[j].set(i);
			}
		}
	// first-fit cover: a node joins the first clique it conflicts with entirely
	std::vector<std::vector<int>> buckets;
	std::vector<DynBits> bucket_mask;
	for (int i = 0; i < m; ++i) {
		bool placed = false;
		for (std::size_t b = 0; b < buckets.size(); ++b)
			if (conflict[i].contains(bucket_mask[b])) {
				buckets[b].push_back(i);
				bucket_mask[b].set(i);
				placed = true;
				break;
			}
		if (!placed) {
			buckets.push_back({i});
			bucket_mask.emplace_back(m);
			bucket_mask.back().set(i);
		}
	}
	MimSearch s{conflict, buckets, stop_at};
	DynBits all(m);
	for (int i = 0; i < m; ++i) all.set(i);
	s.rec(0, all, 0);
	if (witness) {
		witness->clear();
		for (int i : s.best_nodes) witness->push_back(edge_list[i]);
	}
	return s.best;
}

// ---------------------------------------------------------------------------
// triangle partition: cover the lowest uncovered vertex, memoize dead states
// ---------------------------------------------------------------------------

bool tp_component(const Graph& comp, std::vector<std::array<int, 3>>* out) {
	const int n = comp.num_vertices();
	if (n % 3 != 0) return false;
	if (n == 0) return true;
	auto adj = adjacency_masks(comp);
	const std::uint64_t full = full_mask(n);
	std::unordered_set<std::uint64_t> dead;
	std::vector<std::array<int, 3>> acc;
	std::function<bool(std::uint64_t)> rec = [&](std::uint64_t covered) -> bool {
		if (covered == full) return true;
		if (dead.count(covered)) return false;
		int v = std::countr_zero(~covered & full);
		std::uint64_t vb = std::uint64_t(1) << v;
		auto vs = mask_to_vertices(adj[v] & ~covered & ~vb);
		for (std::size_t i = 0; i < vs.size(); ++i)
			for (std::size_t j = i + 1; j < vs.size(); ++j) {
				if (!(adj[vs[i]] & (std::uint64_t(1) << vs[j]))) continue;
				std::uint64_t next = covered | vb | (std::uint64_t(1) << vs[i]) |
				                     (std::uint64_t(1) << vs[j]);
				acc.push_back({v, vs[i], vs[j]});
				if (rec(next)) return true;
				acc.pop_back();
			}
		dead.insert(covered);
		return false;
	};
	if (!rec(0)) return false;
	if (out) *out = acc;
	return true;
}

// ---------------------------------------------------------------------------
// multicolored clique: one vertex per color class, smallest classes first
// ---------------------------------------------------------------------------

bool mcc_component(const Graph& comp, const std::vector<int>& colors, int k,
                   std::vector<int>* out) {
	std::vector<std::vector<int>> by_color(k);
	for (int v = 0; v < comp.num_vertices(); ++v)
		if (colors[v] >= 1 && colors[v] <= k) by_color[colors[v] - 1].push_back(v);
	for (const auto& cls : by_color)
		if (cls.empty()) return false;
	std::sort(by_color.begin(), by_color.end(),
	          [](const auto& a, const auto& b) { return a.size() < b.size(); });
	auto adj = adjacency_masks(comp);
	std::vector<int> chosen;
	std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t i,
	                                                          std::uint64_t common) -> bool {
		if (i == by_color.size()) return true;
		for (int v : by_color[i]) {
			if (!(common & (std::uint64_t(1) << v))) continue;
			chosen.push_back(v);
			if (rec(i + 1, common & adj[v])) return true;
			chosen.pop_back();
		}
		return false;
	};
	if (!rec(0, full_mask(comp.num_vertices()))) return false;
	if (out) *out = chosen;
	return true;
}

// ---------------------------------------------------------------------------
// cnf satisfiability: unit propagation plus branching on the first open clause
// ---------------------------------------------------------------------------

struct SatSearch {
	const std::vector<std::vector<int>>& cls;
	std::vector<int> val; // per variable: 0 unset, 1 true, -1 false

	bool rec() {
		int unit = 0;
		const std::vector<int>* open = nullptr;
		for (const auto& c : cls) {
			int unassigned = 0, last = 0;
			bool sat = false;
			for (int lit : c) {
				int v = val[std::abs(lit)];
				if (v == 0) {
					++unassigned;
					last = lit;
				} else if ((v == 1) == (lit > 0)) {
					sat = true;
					break;
				}
			}
			if (sat) continue;
			if (unassigned == 0) return false;
			if (unassigned == 1) {
				unit = last;
				break;
			}
			if (!open) open = &c;
		}
		if (unit) {
			int var = std::abs(unit);
			val[var] = unit > 0 ? 1 : -1;
			if (rec()) return true;
			val[var] = 0;
			return false;
		}
		if (!open) return true;
		int var = 0;
		for (int lit : *open)
			if (val[std::abs(lit)] == 0) {
				var = std::abs(lit);
				break;
			}
		for (int v : {1, -1}) {
			val[var] = v;
			if (rec()) return true;
		}
		val[var] = 0;
		return false;
	}
};

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

// kinds whose answer combines over connected components
bool decomposes(ProblemKind k) {
	switch (k) {
	case ProblemKind::clique:
	case ProblemKind::independent_set:
	case ProblemKind::vertex_cover:
	case ProblemKind::dominating_set:
	case ProblemKind::feedback_vertex_set:
	case ProblemKind::odd_cycle_transversal:
	case ProblemKind::chromatic_number:
	case ProblemKind::induced_matching:
	case ProblemKind::triangle_partition:
	case ProblemKind::multicolored_clique:
		return true;
	default:
		return false;
	}
}

Answer yes_with(Witness w) {
	Answer a;
	a.yes = true;
	a.witness = std::move(w);
	return a;
}

Answer solve_decomposed(const ProblemInstance& inst, const std::vector<Component>& comps) {
	const int n = inst.graph.num_vertices();
	const long long k = inst.k;

	switch (inst.kind) {
	case ProblemKind::clique: {
		if (k <= 0) return yes_with({});
		for (const auto& c : comps) {
			std::vector<int> wit;
			if (clique_at_least(c.graph, k, wit)) {
				map_ids(wit, c.orig);
				Witness w;
				w.vertices = std::move(wit);
				return yes_with(std::move(w));
			}
		}
		return {};
	}
	case ProblemKind::independent_set: {
		if (k <= 0) return yes_with({});
		long long total = 0;
		Witness w;
		for (const auto& c : comps) {
			std::vector<int> wit;
			total += mis_value(c.graph, int(std::min<long long>(k - total, n)), &wit);
			map_ids(wit, c.orig);
			w.vertices.insert(w.vertices.end(), wit.begin(), wit.end());
			if (total >= k) return yes_with(std::move(w));
		}
		return {};
	}
	case ProblemKind::vertex_cover: {
		if (k < 0) return {};
		long long total = 0;
		Witness w;
		for (const auto& c : comps) {
			std::vector<int> wit;
			total += vc_value(c.graph, &wit);
			if (total > k) return {};
			map_ids(wit, c.orig);
			w.vertices.insert(w.vertices.end(), wit.begin(), wit.end());
		}
		return yes_with(std::move(w));
	}
	case ProblemKind::dominating_set: {
		if (k < 0) return {};
		long long total = 0;
		Witness w;
		for (const auto& c : comps) {
			std::vector<int> wit;
			total += ds_value(c.graph, &wit);
			if (total > k) return {};
			map_ids(wit, c.orig);
			w.vertices.insert(w.vertices.end(), wit.begin(), wit.end());
		}
		return yes_with(std::move(w));
	}
	case ProblemKind::feedback_vertex_set: {
		if (k < 0) return {};
		long long total = 0;
		Witness w;
		for (const auto& c : comps) {
			int cap = int(std::min<long long>(k - total, c.graph.num_vertices()));
			std::vector<int> wit;
			int v = fvs_value(c.graph, cap, &wit);
			if (v > cap) return {};
			total += v;
			map_ids(wit, c.orig);
			w.vertices.insert(w.vertices.end(), wit.begin(), wit.end());
		}
		return yes_with(std::move(w));
	}
	case ProblemKind::odd_cycle_transversal: {
		if (k < 0) return {};
		long long total = 0;
		Witness w;
		for (const auto& c : comps) {
			int cap = int(std::min<long long>(k - total, c.graph.num_vertices()));
			std::vector<int> wit;
			int v = oct_value(c.graph, cap, &wit);
			if (v > cap) return {};
			total += v;
			map_ids(wit, c.orig);
			w.vertices.insert(w.vertices.end(), wit.begin(), wit.end());
		}
		return yes_with(std::move(w));
	}
	case ProblemKind::chromatic_number: {
		if (k < 0) return {};
		Witness w;
		w.coloring.assign(n, 1);
		for (const auto& c : comps) {
			std::vector<int> col;
			if (!chromatic_le(c.graph, k, &col)) return {};
			for (int v = 0; v < c.graph.num_vertices(); ++v) w.coloring[c.orig[v]] = col[v];
		}
		return yes_with(std::move(w));
	}
	case ProblemKind::induced_matching: {
		if (k <= 0) return yes_with({});
		long long total = 0;
		Witness w;
		for (const auto& c : comps) {
			std::vector<std::pair<int, int>> wit;
			total += mim_value(c.graph, int(std::min<long long>(k - total, n)), &wit);
			for (auto [a, b] : wit) w.edges.push_back({c.orig[a], c.orig[b]});
			if (total >= k) return yes_with(std::move(w));
		}
		return {};
	}
	case ProblemKind::triangle_partition: {
		Witness w;
		for (const auto& c : comps) {
			std::vector<std::array<int, 3>> tris;
			if (!tp_component(c.graph, &tris)) return {};
			for (auto& t : tris)
				w.triangles.push_back({c.orig[t[0]], c.orig[t[1]], c.orig[t[2]]});
		}
		return yes_with(std::move(w));
	}
	case ProblemKind::multicolored_clique: {
		if (k <= 0) return yes_with({});
		for (const auto& c : comps) {
			std::vector<int> colors(c.graph.num_vertices());
			for (int v = 0; v < c.graph.num_vertices(); ++v)
				colors[v] = inst.coloring[c.orig[v]];
			std::vector<int> wit;
			if (mcc_component(c.graph, colors, int(k), &wit)) {
				map_ids(wit, c.orig);
				Witness w;
				w.vertices = std::move(wit);
				return yes_with(std::move(w));
			}
		}
		return {};
	}
	default:
		throw argument_error("solve: unhandled decomposed kind");
	}
}

Answer solve_whole(const ProblemInstance& inst) {
	const Graph& g = inst.graph;
	const int n = g.num_vertices();
	const long long k = inst.k;

	switch (inst.kind) {
	case ProblemKind::connected_dominating_set: {
		if (k < 0) return {};
		if (n == 0) return yes_with({});
		if (!is_connected(g) || k == 0) return {};
		auto adj = adjacency_masks(g);
		std::vector<std::uint64_t> closed(n);
		for (int v = 0; v < n; ++v) closed[v] = adj[v] | (std::uint64_t(1) << v);
		const std::uint64_t full = full_mask(n);
		const int cap = int(std::min<long long>(k, n));
		for (std::uint64_t mask = 1; mask <= full; ++mask) {
			if (std::popcount(mask) > cap) continue;
			std::uint64_t dom = 0;
			for (std::uint64_t m = mask; m;) {
				int v = std::countr_zero(m);
				m &= m - 1;
				dom |= closed[v];
			}
			if (dom != full || !mask_connected(adj, mask)) continue;
			Witness w;
			w.vertices = mask_to_vertices(mask);
			return yes_with(std::move(w));
		}
		return {};
	}
	case ProblemKind::independent_dominating_set: {
		if (k < 0) return {};
		if (n == 0) return yes_with({});
		if (k == 0) return {};
		auto adj = adjacency_masks(g);
		std::vector<std::uint64_t> closed(n);
		for (int v = 0; v < n; ++v) closed[v] = adj[v] | (std::uint64_t(1) << v);
		const std::uint64_t full = full_mask(n);
		const int cap = int(std::min<long long>(k, n));
		for (std::uint64_t mask = 1; mask <= full; ++mask) {
			if (std::popcount(mask) > cap) continue;
			std::uint64_t dom = 0;
			bool indep = true;
			for (std::uint64_t m = mask; m && indep;) {
				int v = std::countr_zero(m);
				m &= m - 1;
				if (adj[v] & mask) indep = false;
				dom |= closed[v];
			}
			if (!indep || dom != full) continue;
			Witness w;
			w.vertices = mask_to_vertices(mask);
			return yes_with(std::move(w));
		}
		return {};
	}
	case ProblemKind::connected_vertex_cover: {
		if (k < 0) return {};
		if (g.num_edges() == 0) return yes_with({});
		int edge_comps = 0;
		for (const auto& c : connected_components(g))
			if (induced_subgraph(g, c).graph.num_edges() > 0) ++edge_comps;
		if (edge_comps > 1) return {};
		auto adj = adjacency_masks(g);
		const std::uint64_t full = full_mask(n);
		const int cap = int(std::min<long long>(k, n));
		for (std::uint64_t mask = 1; mask <= full; ++mask) {
			if (std::popcount(mask) > cap) continue;
			// covers every edge iff the complement is independent
			bool cover = true;
			for (std::uint64_t m = ~mask & full; m && cover;) {
				int v = std::countr_zero(m);
				m &= m - 1;
				if (adj[v] & ~mask) cover = false;
			}
			if (!cover || !mask_connected(adj, mask)) continue;
			Witness w;
			w.vertices = mask_to_vertices(mask);
			return yes_with(std::move(w));
		}
		return {};
	}
	case ProblemKind::steiner_tree: {
		if (k < 0) return {};
		if (inst.terminals.empty()) return yes_with({});
		const long long size_cap = k + 1;
		if (std::int64_t(inst.terminals.size()) > size_cap) return {};
		auto adj = adjacency_masks(g);
		std::uint64_t kmask = 0;
		for (int t : inst.terminals) kmask |= std::uint64_t(1) << t;
		const std::uint64_t pool = ~kmask & full_mask(n);
		std::uint64_t sub = pool;
		std::uint64_t best = 0;
		bool found = false;
		while (true) {
			std::uint64_t mask = kmask | sub;
			if (std::popcount(mask) <= size_cap && mask_connected(adj, mask) &&
			    (!found || std::popcount(mask) < std::popcount(best))) {
				best = mask;
				found = true;
			}
			if (sub == 0) break;
			sub = (sub - 1) & pool;
		}
		if (!found) return {};
		Witness w;
		w.vertices = mask_to_vertices(best);
		return yes_with(std::move(w));
	}
	case ProblemKind::hamiltonian_cycle:
	case ProblemKind::hamiltonian_path: {
		std::vector<int> order;
		if (!hamiltonian(g, inst.kind == ProblemKind::hamiltonian_cycle, &order)) return {};
		Witness w;
		w.order = std::move(order);
		return yes_with(std::move(w));
	}
	default:
		throw argument_error("solve: unhandled kind " + kind_name(inst.kind));
	}
}

}

Answer solve(const ProblemInstance& inst, const Guardrails& lim) {
	inst.validate();
	switch (inst.kind) {
	case ProblemKind::cnf_sat: {
		require_size(inst.formula.num_vars(), lim.max_cnf_vars, lim.unrestricted, "solve cnf");
		SatSearch s{inst.formula.clauses(), std::vector<int>(inst.formula.num_vars() + 1, 0)};
		if (!s.rec()) return {};
		Witness w;
		w.assignment.resize(inst.formula.num_vars());
		for (int v = 1; v <= inst.formula.num_vars(); ++v) w.assignment[v - 1] = s.val[v] == 1;
		return yes_with(std::move(w));
	}
	case ProblemKind::cfa:
		return solve_cfa(inst.cfa, lim);
	default:
		break;
	}
	if (decomposes(inst.kind)) {
		auto comps = split_components(inst.graph);
		for (const auto& c : comps)
			require_size(c.graph.num_vertices(), lim.max_solve_vertices, lim.unrestricted,
			             "solve");
		return solve_decomposed(inst, comps);
	}
	require_size(inst.graph.num_vertices(), lim.max_solve_vertices, lim.unrestricted, "solve");
	return solve_whole(inst);
}

// ---------------------------------------------------------------------------
// cfa: branch and bound over conflict-clique buckets
// ---------------------------------------------------------------------------

Answer solve_cfa(const CfaInstance& inst, const Guardrails& lim) {
	inst.validate();
	require_size(inst.num_buyers(), lim.max_cfa_buyers, lim.unrestricted, "solve cfa");
	if (inst.target <= 0) return yes_with({});

	std::vector<int> buyer_ids, seller_ids;
	for (const auto& [b, p] : inst.profit) buyer_ids.push_back(b);
	for (const auto& [s, c] : inst.capacity) seller_ids.push_back(s);
	const int nb = int(buyer_ids.size());
	std::map<int, int> bidx, sidx;
	for (int i = 0; i < nb; ++i) bidx[buyer_ids[i]] = i;
	for (int i = 0; i < int(seller_ids.size()); ++i) sidx[seller_ids[i]] = i;

	std::vector<DynBits> row(nb, DynBits(nb));
	for (const auto& [x, y] : inst.conflicts) {
		row[bidx.at(x)].set(bidx.at(y));
		row[bidx.at(y)].set(bidx.at(x));
	}

	// a buyer is assignable only through an edge its weight fits; capacities
	// never grow during the search, so unaffordable edges stay unaffordable
	std::vector<std::vector<int>> cand(nb);
	for (const auto& [b, s] : inst.edges) {
		const CfaWeight& w = inst.weight.at(b);
		if (!w.infinite && w.value <= inst.capacity.at(s)) cand[bidx.at(b)].push_back(sidx.at(s));
	}

	// one clique of pairwise-conflicting buyers per bucket; any assignment
	// uses at most one buyer from each, so the search walks bucket by bucket
	std::vector<std::vector<int>> buckets;
	std::vector<DynBits> bucket_mask;
	for (int i = 0; i < nb; ++i) {
		if (cand[i].empty()) continue;
		bool placed = false;
		for (std::size_t b = 0; b < buckets.size(); ++b)
			if (row[i].contains(bucket_mask[b])) {
				buckets[b].push_back(i);
				bucket_mask[b].set(i);
				placed = true;
				break;
			}
		if (!placed) {
			buckets.push_back({i});
			bucket_mask.emplace_back(nb);
			bucket_mask.back().set(i);
		}
	}

	std::vector<BigInt> cap_rem;
	for (int s : seller_ids) cap_rem.push_back(inst.capacity.at(s));
	std::vector<std::pair<int, int>> chosen;
	BigInt profit_acc = 0;
	DynBits blocked(nb);

	std::function<bool(std::size_t)> rec = [&](std::size_t bi) -> bool {
		if (profit_acc >= inst.target) return true;
		if (bi == buckets.size()) return false;
		BigInt bound = profit_acc;
		for (std::size_t j = bi; j < buckets.size(); ++j) {
			const BigInt* mx = nullptr;
			for (int m : buckets[j]) {
				if (blocked.test(m)) continue;
				const BigInt& p = inst.profit.at(buyer_ids[m]);
				if (!mx || p > *mx) mx = &p;
			}
			if (mx) bound += *mx;
		}
		if (bound < inst.target) return false;
		for (int m : buckets[bi]) {
			if (blocked.test(m)) continue;
			const BigInt& wv = inst.weight.at(buyer_ids[m]).value;
			for (int s : cand[m]) {
				if (wv > cap_rem[s]) continue;
				cap_rem[s] -= wv;
				chosen.push_back({m, s});
				profit_acc += inst.profit.at(buyer_ids[m]);
				DynBits saved = blocked;
				blocked |= row[m];
				blocked.set(m);
				if (rec(bi + 1)) return true;
				blocked = saved;
				profit_acc -= inst.profit.at(buyer_ids[m]);
				chosen.pop_back();
				cap_rem[s] += wv;
			}
		}
		return rec(bi + 1);
	};

	if (!rec(0)) return {};
	Witness w;
	for (auto [m, s] : chosen) w.cfa_edges.push_back({buyer_ids[m], seller_ids[s]});
	return yes_with(std::move(w));
}

// ---------------------------------------------------------------------------
// witness checking: plain predicate evaluation, no shared search code
// ---------------------------------------------------------------------------

namespace {

bool distinct_in_range(const std::vector<int>& vs, int n) {
	std::set<int> seen;
	for (int v : vs) {
		if (v < 0 || v >= n) return false;
		if (!seen.insert(v).second) return false;
	}
	return true;
}

bool set_connected(const Graph& g, const std::vector<int>& vs) {
	if (vs.size() <= 1) return true;
	std::set<int> in(vs.begin(), vs.end());
	std::set<int> seen{vs[0]};
	std::queue<int> q;
	q.push(vs[0]);
	while (!q.empty()) {
		int u = q.front();
		q.pop();
		for (int v : g.neighbors(u))
			if (in.count(v) && !seen.count(v)) {
				seen.insert(v);
				q.push(v);
			}
	}
	return seen.size() == in.size();
}

bool dominates_all(const Graph& g, const std::vector<int>& vs) {
	std::set<int> in(vs.begin(), vs.end());
	for (int v = 0; v < g.num_vertices(); ++v) {
		if (in.count(v)) continue;
		bool dom = false;
		for (int u : g.neighbors(v))
			if (in.count(u)) {
				dom = true;
				break;
			}
		if (!dom) return false;
	}
	return true;
}

bool covers_all_edges(const Graph& g, const std::vector<int>& vs) {
	std::set<int> in(vs.begin(), vs.end());
	for (const auto& [u, v] : g.edges())
		if (!in.count(u) && !in.count(v)) return false;
	return true;
}

bool forest_without(const Graph& g, const std::vector<int>& vs) {
	std::set<int> gone(vs.begin(), vs.end());
	const int n = g.num_vertices();
	long long rem_v = 0, rem_e = 0, comps = 0;
	std::vector<char> seen(n, 0);
	for (int v = 0; v < n; ++v) {
		if (gone.count(v)) continue;
		++rem_v;
		for (int u : g.neighbors(v))
			if (u > v && !gone.count(u)) ++rem_e;
		if (!seen[v]) {
			++comps;
			std::queue<int> q;
			q.push(v);
			seen[v] = 1;
			while (!q.empty()) {
				int x = q.front();
				q.pop();
				for (int u : g.neighbors(x))
					if (!gone.count(u) && !seen[u]) {
						seen[u] = 1;
						q.push(u);
					}
			}
		}
	}
	return rem_e == rem_v - comps;
}

bool bipartite_without(const Graph& g, const std::vector<int>& vs) {
	std::set<int> gone(vs.begin(), vs.end());
	const int n = g.num_vertices();
	std::vector<int> side(n, -1);
	for (int s = 0; s < n; ++s) {
		if (gone.count(s) || side[s] != -1) continue;
		side[s] = 0;
		std::queue<int> q;
		q.push(s);
		while (!q.empty()) {
			int u = q.front();
			q.pop();
			for (int v : g.neighbors(u)) {
				if (gone.count(v)) continue;
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

enum WitnessField {
	wf_vertices = 1,
	wf_edges = 2,
	wf_order = 4,
	wf_coloring = 8,
	wf_assignment = 16,
	wf_cfa_edges = 32,
	wf_triangles = 64,
};

void require_only(const Witness& w, unsigned allowed) {
	if ((!(allowed & wf_vertices) && !w.vertices.empty()) ||
	    (!(allowed & wf_edges) && !w.edges.empty()) ||
	    (!(allowed & wf_order) && !w.order.empty()) ||
	    (!(allowed & wf_coloring) && !w.coloring.empty()) ||
	    (!(allowed & wf_assignment) && !w.assignment.empty()) ||
	    (!(allowed & wf_cfa_edges) && !w.cfa_edges.empty()) ||
	    (!(allowed & wf_triangles) && !w.triangles.empty()))
		throw argument_error("witness carries fields that do not belong to this kind");
}

}

bool check_witness(const ProblemInstance& inst, const Witness& w) {
	inst.validate();
	const Graph& g = inst.graph;
	const int n = g.num_vertices();
	const long long k = inst.k;

	switch (inst.kind) {
	case ProblemKind::clique: {
		require_only(w, wf_vertices);
		if (!distinct_in_range(w.vertices, n) || std::int64_t(w.vertices.size()) < k) return false;
		for (std::size_t i = 0; i < w.vertices.size(); ++i)
			for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
				if (!g.has_edge(w.vertices[i], w.vertices[j])) return false;
		return true;
	}
	case ProblemKind::independent_set: {
		require_only(w, wf_vertices);
		if (!distinct_in_range(w.vertices, n) || std::int64_t(w.vertices.size()) < k) return false;
		for (std::size_t i = 0; i < w.vertices.size(); ++i)
			for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
				if (g.has_edge(w.vertices[i], w.vertices[j])) return false;
		return true;
	}
	case ProblemKind::vertex_cover:
		require_only(w, wf_vertices);
		return distinct_in_range(w.vertices, n) && std::int64_t(w.vertices.size()) <= k &&
		       covers_all_edges(g, w.vertices);
	case ProblemKind::dominating_set:
		require_only(w, wf_vertices);
		return distinct_in_range(w.vertices, n) && std::int64_t(w.vertices.size()) <= k &&
		       dominates_all(g, w.vertices);
	case ProblemKind::connected_dominating_set:
		require_only(w, wf_vertices);
		return distinct_in_range(w.vertices, n) && std::int64_t(w.vertices.size()) <= k &&
		       dominates_all(g, w.vertices) && set_connected(g, w.vertices);
	case ProblemKind::independent_dominating_set: {
		require_only(w, wf_vertices);
		if (!distinct_in_range(w.vertices, n) || std::int64_t(w.vertices.size()) > k) return false;
		for (std::size_t i = 0; i < w.vertices.size(); ++i)
			for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
				if (g.has_edge(w.vertices[i], w.vertices[j])) return false;
		return dominates_all(g, w.vertices);
	}
	case ProblemKind::connected_vertex_cover:
		require_only(w, wf_vertices);
		return distinct_in_range(w.vertices, n) && std::int64_t(w.vertices.size()) <= k &&
		       covers_all_edges(g, w.vertices) && set_connected(g, w.vertices);
	case ProblemKind::feedback_vertex_set:
		require_only(w, wf_vertices);
		return distinct_in_range(w.vertices, n) && std::int64_t(w.vertices.size()) <= k &&
		       forest_without(g, w.vertices);
	case ProblemKind::odd_cycle_transversal:
		require_only(w, wf_vertices);
		return distinct_in_range(w.vertices, n) && std::int64_t(w.vertices.size()) <= k &&
		       bipartite_without(g, w.vertices);
	case ProblemKind::steiner_tree: {
		require_only(w, wf_vertices);
		if (!distinct_in_range(w.vertices, n) || std::int64_t(w.vertices.size()) > k + 1)
			return false;
		std::set<int> in(w.vertices.begin(), w.vertices.end());
		for (int t : inst.terminals)
			if (!in.count(t)) return false;
		return set_connected(g, w.vertices);
	}
	case ProblemKind::chromatic_number: {
		require_only(w, wf_coloring);
		if (int(w.coloring.size()) != n) return false;
		for (int c : w.coloring)
			if (c < 1 || std::int64_t(c) > k) return false;
		for (const auto& [u, v] : g.edges())
			if (w.coloring[u] == w.coloring[v]) return false;
		return true;
	}
	case ProblemKind::hamiltonian_cycle:
	case ProblemKind::hamiltonian_path: {
		require_only(w, wf_order);
		const bool cycle = inst.kind == ProblemKind::hamiltonian_cycle;
		if (cycle && n <= 2) return false;
		if (!cycle && n <= 1) return int(w.order.size()) == n;
		if (int(w.order.size()) != n || !distinct_in_range(w.order, n)) return false;
		for (int i = 0; i + 1 < n; ++i)
			if (!g.has_edge(w.order[i], w.order[i + 1])) return false;
		return !cycle || g.has_edge(w.order[n - 1], w.order[0]);
	}
	case ProblemKind::induced_matching: {
		require_only(w, wf_edges);
		if (std::int64_t(w.edges.size()) < k) return false;
		std::vector<int> ends;
		for (auto [u, v] : w.edges) {
			if (u < 0 || u >= n || v < 0 || v >= n || !g.has_edge(u, v)) return false;
			ends.push_back(u);
			ends.push_back(v);
		}
		if (!distinct_in_range(ends, n)) return false;
		for (std::size_t i = 0; i < w.edges.size(); ++i)
			for (std::size_t j = i + 1; j < w.edges.size(); ++j) {
				auto [a, b] = w.edges[i];
				auto [c, d] = w.edges[j];
				if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) ||
				    g.has_edge(b, d))
					return false;
			}
		return true;
	}
	case ProblemKind::triangle_partition: {
		require_only(w, wf_triangles);
		if (n % 3 != 0 || int(w.triangles.size()) != n / 3) return false;
		std::vector<int> all;
		for (const auto& t : w.triangles) {
			for (int v : t) {
				if (v < 0 || v >= n) return false;
				all.push_back(v);
			}
			if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) ||
			    !g.has_edge(t[1], t[2]))
				return false;
		}
		return distinct_in_range(all, n) && int(all.size()) == n;
	}
	case ProblemKind::multicolored_clique: {
		require_only(w, wf_vertices);
		if (k <= 0) return w.vertices.empty();
		if (!distinct_in_range(w.vertices, n) || std::int64_t(w.vertices.size()) != k)
			return false;
		std::set<int> colors;
		for (int v : w.vertices)
			if (!colors.insert(inst.coloring[v]).second) return false;
		for (std::size_t i = 0; i < w.vertices.size(); ++i)
			for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
				if (!g.has_edge(w.vertices[i], w.vertices[j])) return false;
		return true;
	}
	case ProblemKind::cnf_sat: {
		require_only(w, wf_assignment);
		if (int(w.assignment.size()) != inst.formula.num_vars()) return false;
		for (const auto& clause : inst.formula.clauses()) {
			bool sat = false;
			for (int lit : clause)
				if (w.assignment[std::abs(lit) - 1] == (lit > 0)) {
					sat = true;
					break;
				}
			if (!sat) return false;
		}
		return true;
	}
	case ProblemKind::cfa: {
		require_only(w, wf_cfa_edges);
		const CfaInstance& c = inst.cfa;
		std::set<int> assigned;
		std::map<int, BigInt> load;
		BigInt profit = 0;
		for (auto [b, s] : w.cfa_edges) {
			if (!c.edges.count({b, s})) return false;
			if (!assigned.insert(b).second) return false;
			const CfaWeight& wt = c.weight.at(b);
			if (wt.infinite) return false;
			load[s] += wt.value;
			profit += c.profit.at(b);
		}
		for (const auto& [s, l] : load)
			if (l > c.capacity.at(s)) return false;
		for (const auto& [x, y] : c.conflicts)
			if (assigned.count(x) && assigned.count(y)) return false;
		return profit >= c.target;
	}
	}
	throw argument_error("check_witness: unhandled kind");
}

bool solve_refinement(const RefinementInstance& inst, const Guardrails& lim) {
	inst.validate();
	ProblemKind kind;
	long long k;
	switch (inst.kind) {
	case RefinementKind::vcr:
		kind = ProblemKind::vertex_cover;
		k = std::int64_t(inst.base.size()) - 1;
		break;
	case RefinementKind::fvsr:
		kind = ProblemKind::feedback_vertex_set;
		k = std::int64_t(inst.base.size()) - 1;
		break;
	case RefinementKind::octr:
		kind = ProblemKind::odd_cycle_transversal;
		k = std::int64_t(inst.base.size()) - 1;
		break;
	case RefinementKind::dsr:
		kind = ProblemKind::dominating_set;
		k = std::int64_t(inst.base.size()) - 1;
		break;
	case RefinementKind::imr:
		kind = ProblemKind::induced_matching;
		k = std::int64_t(inst.base_edges.size()) + 1;
		break;
	default:
		throw argument_error("solve_refinement: unhandled kind");
	}
	return solve(graph_instance(kind, inst.graph, k), lim).yes;
}

}
