#include "pgk/kernels_tc.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "pgk/errors.hpp"

namespace pgk {

namespace {

void require_distinct(const std::vector<int>& vs, int n, const char* what) {
	std::set<int> seen;
	for (int v : vs) {
		if (v < 0 || v >= n)
			throw argument_error(std::string(what) + ": vertex " + std::to_string(v) +
			                     " out of range");
		if (!seen.insert(v).second)
			throw argument_error(std::string(what) + ": vertex " + std::to_string(v) +
			                     " listed twice");
	}
}

}

// ---------------------------------------------------------------------------
// triangle partition via twin cover
// ---------------------------------------------------------------------------

TpTcState tp_tc_prepare(const Graph& g, const std::vector<int>& twin_cover) {
	require_distinct(twin_cover, g.num_vertices(), "tp kernel");
	TcCertificate cert = make_tc_certificate(g, twin_cover);
	const int tc = int(twin_cover.size());

	TpTcState st;
	if (g.num_vertices() % 3 != 0) {
		st.immediate_no = true;
		st.reason = "vertex count not divisible by 3";
		st.graph = g;
		st.orig_ids.resize(g.num_vertices());
		std::iota(st.orig_ids.begin(), st.orig_ids.end(), 0);
		return st;
	}

	// trim oversized clique blocks: drop their three highest ids at a time
	// until the size lands in [2tc, 2tc+2]. Dropping a triangle inside a
	// clique never changes the answer, and below 2tc+3 it cannot continue.
	std::vector<char> dropped(g.num_vertices(), 0);
	for (const auto& block : cert.cliques) {
		std::vector<int> c = block;
		std::sort(c.begin(), c.end());
		int keep = int(c.size());
		while (keep > 2 * tc + 2) keep -= 3;
		for (int i = keep; i < int(c.size()); ++i) dropped[c[i]] = 1;
	}
	std::vector<int> kept;
	for (int v = 0; v < g.num_vertices(); ++v)
		if (!dropped[v]) kept.push_back(v);
	InducedSubgraph sub = induced_subgraph(g, kept);
	st.graph = std::move(sub.graph);
	st.orig_ids = std::move(sub.orig_ids);

	for (int v : twin_cover) st.cover.push_back(sub.new_ids[v]);
	std::sort(st.cover.begin(), st.cover.end());
	for (const auto& block : cert.cliques) {
		std::vector<int> c;
		for (int v : block)
			if (sub.new_ids[v] != -1) c.push_back(sub.new_ids[v]);
		if (c.empty()) continue;
		std::sort(c.begin(), c.end());
		st.cliques.push_back(std::move(c));
	}

	int good_count = 0;
	for (const auto& c : st.cliques) {
		bool is_good = int(c.size()) % 3 != 0;
		st.good.push_back(is_good);
		if (is_good) ++good_count;
	}
	if (good_count > tc) {
		st.immediate_no = true;
		st.reason = "more non-divisible clique blocks than cover vertices";
		return st;
	}

	std::set<int> aug(st.cover.begin(), st.cover.end());
	for (std::size_t i = 0; i < st.cliques.size(); ++i)
		if (st.good[i]) aug.insert(st.cliques[i].begin(), st.cliques[i].end());
	st.x_aug.assign(aug.begin(), aug.end());
	if (int(st.x_aug.size()) > tc + tc * (2 * tc + 2))
		throw std::logic_error("augmented cover exceeds its size bound");
	return st;
}

namespace {

// perfect matching on exactly six vertices, by the fifteen pairings
bool has_three_matching(const Graph& g, const std::vector<int>& six) {
	for (int a = 1; a < 6; ++a) {
		if (!g.has_edge(six[0], six[a])) continue;
		std::vector<int> rest;
		for (int i = 1; i < 6; ++i)
			if (i != a) rest.push_back(six[i]);
		for (int b = 1; b < 4; ++b) {
			if (!g.has_edge(rest[0], rest[b])) continue;
			std::vector<int> last;
			for (int i = 1; i < 4; ++i)
				if (i != b) last.push_back(rest[i]);
			if (g.has_edge(last[0], last[1])) return true;
		}
	}
	return false;
}

CfaInstance trivially_unsat_cfa() {
	CfaInstance c;
	c.target = 1;
	return c;
}

}

TpCompressResult tp_tc_compress(const Graph& g, const std::vector<int>& twin_cover,
                                const Guardrails& lim) {
	TpCompressResult res;
	res.state = tp_tc_prepare(g, twin_cover);
	if (res.state.immediate_no) {
		res.immediate_no = true;
		res.reason = res.state.reason;
		res.cfa = trivially_unsat_cfa();
		return res;
	}

	const Graph& h = res.state.graph;
	const std::vector<int>& x = res.state.x_aug;
	const int m = int(x.size());
	if (!lim.unrestricted && m > lim.max_tp_cover_size)
		throw resource_error("tp compression: augmented cover size " + std::to_string(m) +
		                     " exceeds guardrail " + std::to_string(lim.max_tp_cover_size));
	if (m > 63)
		throw resource_error("tp compression: augmented cover does not fit a machine word");

	CfaInstance cfa;

	// buyers: every 3-subset and 6-subset of the augmented cover. Ids count
	// up from zero in enumeration order; sellers continue after them.
	std::vector<std::uint64_t> buyer_bits; // membership over x indices
	auto add_buyer = [&](const std::vector<int>& idx) {
		std::vector<int> verts;
		std::uint64_t bits = 0;
		for (int i : idx) {
			verts.push_back(x[i]);
			bits |= std::uint64_t(1) << i;
		}
		const int id = int(res.buyer_sets.size());
		const int sz = int(verts.size());
		cfa.profit[id] = sz;

		CfaWeight w = CfaWeight::inf();
		if (sz == 3) {
			bool edge = h.has_edge(verts[0], verts[1]) || h.has_edge(verts[0], verts[2]) ||
			            h.has_edge(verts[1], verts[2]);
			w = CfaWeight::of(edge ? 3 : 6);
		} else if (has_three_matching(h, verts)) {
			w = CfaWeight::of(3);
		}
		cfa.weight[id] = w;
		res.buyer_sets.push_back(verts);
		buyer_bits.push_back(bits);
	};
	for (int size : {3, 6}) {
		if (m < size) continue;
		std::vector<int> idx(size);
		std::iota(idx.begin(), idx.end(), 0);
		while (true) {
			add_buyer(idx);
			int i = size - 1;
			while (i >= 0 && idx[i] == m - size + i) --i;
			if (i < 0) break;
			++idx[i];
			for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
		}
	}

	// conflicts: buyers whose vertex sets intersect
	{
		std::vector<std::pair<int, int>> pairs;
		const int nb = int(buyer_bits.size());
		for (int i = 0; i < nb; ++i)
			for (int j = i + 1; j < nb; ++j)
				if (buyer_bits[i] & buyer_bits[j]) pairs.push_back({i, j});
		cfa.conflicts = std::set<std::pair<int, int>>(pairs.begin(), pairs.end());
	}

	// sellers: one per bad clique block, capacity its size; plus one slot of
	// capacity 3 per triangle inside the augmented cover
	int next_id = int(res.buyer_sets.size());
	std::vector<int> bad_sellers;          // seller ids
	std::vector<std::set<int>> bad_nbhd;   // common neighborhood of the block
	for (std::size_t i = 0; i < res.state.cliques.size(); ++i) {
		if (res.state.good[i]) continue;
		const auto& block = res.state.cliques[i];
		const int id = next_id++;
		cfa.capacity[id] = int(block.size());
		res.seller_sets.resize(id + 1);
		res.seller_sets[id] = block;
		std::set<int> common;
		for (int u : h.neighbors(block[0])) common.insert(u);
		for (int v : block) {
			std::set<int> mine(h.neighbors(v).begin(), h.neighbors(v).end());
			std::set<int> merged;
			for (int u : common)
				if (mine.count(u)) merged.insert(u);
			common = std::move(merged);
		}
		bad_sellers.push_back(id);
		bad_nbhd.push_back(std::move(common));
	}

	std::map<std::uint64_t, int> triangle_slot; // x-index bits -> seller id
	for (int i = 0; i < m; ++i)
		for (int j = i + 1; j < m; ++j)
			for (int l = j + 1; l < m; ++l) {
				if (!h.has_edge(x[i], x[j]) || !h.has_edge(x[i], x[l]) ||
				    !h.has_edge(x[j], x[l]))
					continue;
				const int id = next_id++;
				cfa.capacity[id] = 3;
				res.seller_sets.resize(id + 1);
				res.seller_sets[id] = {x[i], x[j], x[l]};
				triangle_slot[(std::uint64_t(1) << i) | (std::uint64_t(1) << j) |
				              (std::uint64_t(1) << l)] = id;
			}

	// edges: a triangle 3-set is wired only to its own slot; every other
	// buyer goes to each bad block whose whole neighborhood contains it
	for (std::size_t b = 0; b < res.buyer_sets.size(); ++b) {
		auto tri = triangle_slot.find(buyer_bits[b]);
		if (res.buyer_sets[b].size() == 3 && tri != triangle_slot.end()) {
			cfa.edges.insert({int(b), tri->second});
			continue;
		}
		for (std::size_t s = 0; s < bad_sellers.size(); ++s) {
			bool inside = true;
			for (int v : res.buyer_sets[b])
				if (!bad_nbhd[s].count(v)) {
					inside = false;
					break;
				}
			if (inside) cfa.edges.insert({int(b), bad_sellers[s]});
		}
	}

	cfa.target = m;

	CfaKernelResult kr = kernelize_cfa(cfa);
	res.cfa = std::move(kr.instance);
	res.kernel_trace = std::move(kr.trace);
	return res;
}

// ---------------------------------------------------------------------------
// triangle partition via vertex cover
// ---------------------------------------------------------------------------

TpVcKernel tp_vc_kernel(const Graph& g, const std::vector<int>& vertex_cover) {
	require_distinct(vertex_cover, g.num_vertices(), "tp kernel");
	if (!is_vertex_cover(g, vertex_cover))
		throw argument_error("tp kernel: the given set is not a vertex cover");
	TpVcKernel res;
	const long long outside = g.num_vertices() - long(vertex_cover.size());
	if (outside > long(vertex_cover.size()) / 2) {
		res.immediate_no = true;
		res.reason = "every triangle uses at most one vertex outside the cover";
		return res;
	}
	res.graph = g;
	return res;
}

// ---------------------------------------------------------------------------
// vertex cover via twin cover: collapse blocks, then the half-integral
// relaxation via a maximum matching on the doubled bipartite graph
// ---------------------------------------------------------------------------

namespace {

struct Kuhn {
	const Graph& g;
	std::vector<int> match_l, match_r;
	std::vector<char> used;

	explicit Kuhn(const Graph& gr)
	    : g(gr), match_l(gr.num_vertices(), -1), match_r(gr.num_vertices(), -1) {}

	bool augment(int u) {
		for (int v : g.neighbors(u)) {
			if (used[v]) continue;
			used[v] = 1;
			if (match_r[v] == -1 || augment(match_r[v])) {
				match_l[u] = v;
				match_r[v] = u;
				return true;
			}
		}
		return false;
	}

	int run() {
		int size = 0;
		for (int u = 0; u < g.num_vertices(); ++u) {
			used.assign(g.num_vertices(), 0);
			if (augment(u)) ++size;
		}
		return size;
	}
};

// doubled value per vertex: 0, 1 or 2 (i.e. 0, 1/2, 1)
std::vector<int> half_integral_cover(const Graph& g, int& matching_size) {
	Kuhn kuhn(g);
	matching_size = kuhn.run();

	// König: Z = left vertices reachable from the unmatched ones along
	// alternating paths; the cover is (L without Z) plus (R inside Z)
	const int n = g.num_vertices();
	std::vector<char> zl(n, 0), zr(n, 0);
	std::queue<int> q;
	for (int u = 0; u < n; ++u)
		if (kuhn.match_l[u] == -1) {
			zl[u] = 1;
			q.push(u);
		}
	while (!q.empty()) {
		int u = q.front();
		q.pop();
		for (int v : g.neighbors(u)) {
			if (kuhn.match_l[u] == v || zr[v]) continue;
			zr[v] = 1;
			int w = kuhn.match_r[v];
			if (w != -1 && !zl[w]) {
				zl[w] = 1;
				q.push(w);
			}
		}
	}
	std::vector<int> value(n, 0);
	for (int v = 0; v < n; ++v) value[v] = (zl[v] ? 0 : 1) + (zr[v] ? 1 : 0);
	return value;
}

}

CollapseKernel vc_tc_kernel(const Graph& g, const std::vector<int>& twin_cover, long long k) {
	require_distinct(twin_cover, g.num_vertices(), "vc kernel");
	TcCertificate cert = make_tc_certificate(g, twin_cover);

	CollapseKernel res;
	// a clique block of twins needs all but one of its vertices in any cover,
	// and keeping the lowest id is as good as any choice
	std::vector<char> drop(g.num_vertices(), 0);
	for (const auto& block : cert.cliques) {
		if (block.size() < 2) continue;
		int rep = *std::min_element(block.begin(), block.end());
		for (int v : block)
			if (v != rep) drop[v] = 1;
		res.spent += long(block.size()) - 1;
	}
	std::vector<int> kept;
	for (int v = 0; v < g.num_vertices(); ++v)
		if (!drop[v]) kept.push_back(v);
	InducedSubgraph sub = induced_subgraph(g, kept);
	long long budget = k - res.spent;
	if (budget < 0) {
		res.immediate_no = true;
		res.reason = "clique blocks alone exceed the budget";
		res.k = budget;
		return res;
	}

	int matching_size = 0;
	std::vector<int> value = half_integral_cover(sub.graph, matching_size);
	if (matching_size > 2 * budget) {
		res.immediate_no = true;
		res.reason = "relaxation exceeds the budget";
		res.k = budget;
		return res;
	}

	std::vector<int> half;
	for (int v = 0; v < sub.graph.num_vertices(); ++v) {
		if (value[v] == 2) ++res.forced;
		if (value[v] == 1) half.push_back(v);
	}
	InducedSubgraph core = induced_subgraph(sub.graph, half);
	res.graph = std::move(core.graph);
	res.k = budget - res.forced;
	for (int v : core.orig_ids) res.orig_ids.push_back(sub.orig_ids[v]);
	if (res.k < 0) {
		res.immediate_no = true;
		res.reason = "relaxation exceeds the budget";
		return res;
	}
	if (res.graph.num_vertices() > 2 * res.k)
		throw std::logic_error("vertex cover kernel exceeds twice the residual budget");
	return res;
}

CollapseKernel oct_tc_collapse(const Graph& g, const std::vector<int>& twin_cover,
                               long long k) {
	require_distinct(twin_cover, g.num_vertices(), "oct kernel");
	TcCertificate cert = make_tc_certificate(g, twin_cover);

	CollapseKernel res;
	// any odd cycle transversal keeps at most two vertices per clique block,
	// so all but the two lowest ids go, at |C|-2 budget each
	std::vector<char> drop(g.num_vertices(), 0);
	for (const auto& block : cert.cliques) {
		if (block.size() < 3) continue;
		std::vector<int> c = block;
		std::sort(c.begin(), c.end());
		for (std::size_t i = 2; i < c.size(); ++i) drop[c[i]] = 1;
		res.spent += long(c.size()) - 2;
	}
	std::vector<int> kept;
	for (int v = 0; v < g.num_vertices(); ++v)
		if (!drop[v]) kept.push_back(v);
	InducedSubgraph sub = induced_subgraph(g, kept);
	res.k = k - res.spent;
	if (res.k < 0) {
		res.immediate_no = true;
		res.reason = "clique blocks alone exceed the budget";
		return res;
	}
	res.graph = std::move(sub.graph);
	res.orig_ids = std::move(sub.orig_ids);
	return res;
}

CollapseKernel is_tc_kernel(const Graph& g, const std::vector<int>& twin_cover, long long k) {
	// an independent set of size k is a vertex cover of size n-k
	CollapseKernel res = vc_tc_kernel(g, twin_cover, std::int64_t(g.num_vertices()) - k);
	if (res.immediate_no) return res;
	res.k = res.graph.num_vertices() - res.k;
	return res;
}

// ---------------------------------------------------------------------------
// clique via twin cover: Turing kernelization
// ---------------------------------------------------------------------------

TuringTranscript clique_tc_turing(const Graph& g, const std::vector<int>& twin_cover, int k,
                                  const CliqueOracle& oracle) {
	require_distinct(twin_cover, g.num_vertices(), "turing kernel");
	TcCertificate cert = make_tc_certificate(g, twin_cover);

	TuringTranscript tr;
	if (k <= 0) {
		tr.answer = true;
		return tr;
	}

	std::vector<int> cover = twin_cover;
	std::sort(cover.begin(), cover.end());
	std::set<int> in_cover(cover.begin(), cover.end());

	auto ask = [&](const std::vector<int>& verts, int threshold) {
		if (int(verts.size()) > int(twin_cover.size()) + 1)
			throw std::logic_error("turing query exceeds cover size plus one");
		TuringQuery q;
		q.vertices = verts;
		q.graph = induced_subgraph(g, verts).graph;
		q.threshold = threshold;
		q.answer = oracle(q.graph, threshold);
		tr.queries.push_back(std::move(q));
		return tr.queries.back().answer;
	};

	// cliques avoiding every block live inside the cover
	bool yes = false;
	if (!cover.empty() && ask(cover, k)) yes = true;

	// a clique meeting block C can be assumed to contain all of C (its
	// vertices are twins), leaving k-|C| to find in the block's shared cover
	// neighborhood; one representative stands in for the block
	for (const auto& block : cert.cliques) {
		int rep = *std::min_element(block.begin(), block.end());
		std::vector<int> verts;
		for (int u : g.neighbors(rep))
			if (in_cover.count(u)) verts.push_back(u);
		verts.push_back(rep);
		std::sort(verts.begin(), verts.end());
		if (ask(verts, k - int(block.size()) + 1)) yes = true;
	}

	tr.answer = yes;
	return tr;
}

}
