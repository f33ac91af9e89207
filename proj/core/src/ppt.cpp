#include "pgk/ppt.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "pgk/errors.hpp"
#include "pgk/params.hpp"

namespace pgk {

namespace {

std::string num(long long v) { return std::to_string(v); }

// final self-checks shared by every construction
void seal(PptOutput& out) {
	const Graph& h = out.is_refinement() ? out.refinement->graph : out.instance.graph;
	if (int(out.labels.size()) != h.num_vertices())
		throw std::logic_error("construction labeled the wrong number of vertices");
	if (!is_vertex_cover(h, out.cover))
		throw std::logic_error("construction emitted a non-cover");
	if (long(out.cover.size()) > out.cover_bound)
		throw std::logic_error("construction cover exceeds its declared bound");
	if (out.is_refinement())
		out.refinement->validate();
	else
		out.instance.validate();
}

bool has_literal(const std::vector<int>& clause, int lit) {
	// clauses are kept in (variable, sign) order, not plain numeric order
	return std::find(clause.begin(), clause.end(), lit) != clause.end();
}

}

// ---------------------------------------------------------------------------
// multicolored clique -> induced matching
// ---------------------------------------------------------------------------

PptOutput mcc_to_induced_matching(const Graph& g, const std::vector<int>& coloring, int k) {
	mcc_instance(g, coloring, k).validate();

	const int n = g.num_vertices();
	PptOutput out;

	std::vector<int> class_size(k + 1, 0);
	for (int v = 0; v < n; ++v) ++class_size[coloring[v]];
	for (int c = 1; c <= k; ++c)
		if (class_size[c] == 0) {
			// an empty color class admits no multicolored clique
			out.instance = graph_instance(ProblemKind::induced_matching, Graph(0), 1);
			out.cover_bound = 0;
			seal(out);
			return out;
		}

	int bits = 0;
	while ((1LL << bits) < n) ++bits;

	// edge vertices, one per edge with differently colored ends
	struct EdgeVertex {
		int id;
		int lo_color, hi_color;
		int lo_end, hi_end; // endpoint of lo_color / hi_color
	};
	std::vector<EdgeVertex> evs;
	std::vector<std::string> labels;
	for (auto [u, v] : g.edges()) {
		if (coloring[u] == coloring[v]) continue;
		int a = u, b = v;
		if (coloring[a] > coloring[b]) std::swap(a, b);
		evs.push_back({int(labels.size()), coloring[a], coloring[b], a, b});
		labels.push_back("edge " + num(u) + "-" + num(v));
	}

	std::vector<std::pair<int, int>> edges;
	// collectors, one per color pair
	std::map<std::pair<int, int>, int> collector;
	for (int i = 1; i <= k; ++i)
		for (int j = i + 1; j <= k; ++j) {
			int id = int(labels.size());
			collector[{i, j}] = id;
			labels.push_back("pair " + num(i) + "-" + num(j));
			for (const auto& ev : evs)
				if (ev.lo_color == i && ev.hi_color == j) edges.push_back({ev.id, id});
		}

	// per color i, ordered pair (j, j') and bit position: a triangle whose
	// outer vertices watch the i-colored endpoint's id bit from both sides
	long long triangles = 0;
	for (int i = 1; i <= k; ++i)
		for (int j = 1; j <= k; ++j)
			for (int jp = 1; jp <= k; ++jp) {
				if (j == i || jp == i || jp == j) continue;
				for (int l = 0; l < bits; ++l) {
					int x = int(labels.size());
					std::string stem = "sync " + num(i) + ":" + num(j) + ":" + num(jp) +
					                   " bit " + num(l) + " ";
					labels.push_back(stem + "hi");
					labels.push_back(stem + "lo");
					labels.push_back(stem + "spare");
					edges.push_back({x, x + 1});
					edges.push_back({x, x + 2});
					edges.push_back({x + 1, x + 2});
					++triangles;
					for (const auto& ev : evs) {
						int end_i = -1, other = -1;
						if (ev.lo_color == i)
							end_i = ev.lo_end, other = ev.hi_color;
						else if (ev.hi_color == i)
							end_i = ev.hi_end, other = ev.lo_color;
						else
							continue;
						bool bit = ((end_i + 1) >> l) & 1;
						if (other == j && bit) edges.push_back({ev.id, x});
						if (other == jp && !bit) edges.push_back({ev.id, x + 1});
					}
				}
			}

	Graph h(int(labels.size()), edges);
	long long target = (long long)(k) * (k - 1) / 2 + triangles;
	out.instance = graph_instance(ProblemKind::induced_matching, std::move(h), target);
	out.labels = std::move(labels);
	for (const auto& [pair, id] : collector) out.cover.push_back(id);
	for (int v = int(evs.size()) + int(collector.size()); v < int(out.labels.size()); ++v)
		out.cover.push_back(v);
	std::sort(out.cover.begin(), out.cover.end());
	out.cover_bound =
	    (long long)(k) * (k - 1) / 2 + 3LL * k * (k - 1) * (k - 2) * bits;
	seal(out);
	return out;
}

// ---------------------------------------------------------------------------
// CNF-SAT -> chromatic number
// ---------------------------------------------------------------------------

PptOutput sat_to_chromatic(const CnfFormula& f) {
	const int n = f.num_vars();
	const int m = f.num_clauses();
	// ids: spine 0..n-1, literals n+2i / n+2i+1, clauses 3n+j, apex 3n+m
	auto spine = [&](int i) { return i; };
	auto pos = [&](int i) { return n + 2 * i; };
	auto neg = [&](int i) { return n + 2 * i + 1; };
	auto clause = [&](int j) { return 3 * n + j; };
	const int apex = 3 * n + m;

	std::vector<std::pair<int, int>> edges;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) edges.push_back({spine(i), spine(j)});
	for (int i = 0; i < n; ++i) {
		edges.push_back({pos(i), neg(i)});
		for (int j = 0; j < n; ++j) {
			if (j == i) continue;
			edges.push_back({pos(i), spine(j)});
			edges.push_back({neg(i), spine(j)});
		}
	}
	for (int j = 0; j < m; ++j) {
		const auto& c = f.clauses()[j];
		for (int i = 0; i < n; ++i) {
			if (!has_literal(c, i + 1)) edges.push_back({clause(j), pos(i)});
			if (!has_literal(c, -(i + 1))) edges.push_back({clause(j), neg(i)});
		}
	}
	for (int i = 0; i < n; ++i) edges.push_back({apex, spine(i)});
	for (int j = 0; j < m; ++j) edges.push_back({apex, clause(j)});

	PptOutput out;
	out.instance = graph_instance(ProblemKind::chromatic_number,
	                              Graph(3 * n + m + 1, edges), n + 1);
	for (int i = 0; i < n; ++i) out.labels.push_back("var " + num(i + 1));
	for (int i = 0; i < n; ++i) {
		out.labels.push_back("lit " + num(i + 1));
		out.labels.push_back("lit -" + num(i + 1));
	}
	for (int j = 0; j < m; ++j) out.labels.push_back("clause " + num(j));
	out.labels.push_back("apex");
	for (int v = 0; v < 3 * n; ++v) out.cover.push_back(v);
	out.cover.push_back(apex);
	out.cover_bound = 3LL * n + 1;
	seal(out);
	return out;
}

// ---------------------------------------------------------------------------
// CNF-SAT -> steiner tree / connected dominating set / independent
// dominating set, over the shared variable-triangle wiring
// ---------------------------------------------------------------------------

namespace {

struct SatWiring {
	std::vector<std::pair<int, int>> edges;
	std::vector<std::string> labels;
	int n, m;
	int pos(int i) const { return 2 * i; }
	int neg(int i) const { return 2 * i + 1; }
	int tip(int i) const { return 2 * n + i; }
	int clause(int j) const { return 3 * n + j; }
	int next() const { return 3 * n + m; }
};

// per variable a triangle (pos, neg, tip); clause vertices adjacent to the
// corners of the literals they contain
SatWiring sat_wiring(const CnfFormula& f) {
	SatWiring w;
	w.n = f.num_vars();
	w.m = f.num_clauses();
	for (int i = 0; i < w.n; ++i) {
		w.edges.push_back({w.pos(i), w.neg(i)});
		w.edges.push_back({w.pos(i), w.tip(i)});
		w.edges.push_back({w.neg(i), w.tip(i)});
	}
	for (int j = 0; j < w.m; ++j)
		for (int lit : f.clauses()[j])
			w.edges.push_back({w.clause(j), lit > 0 ? w.pos(lit - 1) : w.neg(-lit - 1)});
	for (int i = 0; i < w.n; ++i) {
		w.labels.push_back("lit " + num(i + 1));
		w.labels.push_back("lit -" + num(i + 1));
	}
	for (int i = 0; i < w.n; ++i) w.labels.push_back("tip " + num(i + 1));
	for (int j = 0; j < w.m; ++j) w.labels.push_back("clause " + num(j));
	return w;
}

}

PptOutput sat_to_steiner(const CnfFormula& f) {
	SatWiring w = sat_wiring(f);
	const int apex = w.next();
	for (int i = 0; i < w.n; ++i) {
		w.edges.push_back({apex, w.pos(i)});
		w.edges.push_back({apex, w.neg(i)});
	}
	w.labels.push_back("apex");

	std::vector<int> terminals;
	for (int i = 0; i < w.n; ++i) terminals.push_back(w.tip(i));
	for (int j = 0; j < w.m; ++j) terminals.push_back(w.clause(j));
	terminals.push_back(apex);

	PptOutput out;
	out.instance = steiner_instance(Graph(apex + 1, w.edges), std::move(terminals),
	                                2LL * w.n + w.m);
	out.labels = std::move(w.labels);
	for (int i = 0; i < 2 * w.n; ++i) out.cover.push_back(i);
	if (w.n == 0)
		out.cover.push_back(apex); // no corners: nothing else covers apex edges
	out.cover_bound = 2LL * w.n + (w.n == 0 ? 1 : 0);
	seal(out);
	return out;
}

PptOutput sat_to_cds(const CnfFormula& f, bool independent_variant) {
	SatWiring w = sat_wiring(f);
	PptOutput out;
	if (independent_variant) {
		out.instance = graph_instance(ProblemKind::independent_dominating_set,
		                              Graph(w.next(), w.edges), w.n);
		out.labels = std::move(w.labels);
		for (int i = 0; i < 2 * w.n; ++i) out.cover.push_back(i);
		out.cover_bound = 2LL * w.n;
	} else {
		const int hub = w.next();
		const int pendant = hub + 1;
		for (int i = 0; i < w.n; ++i) {
			w.edges.push_back({hub, w.pos(i)});
			w.edges.push_back({hub, w.neg(i)});
		}
		w.edges.push_back({hub, pendant});
		w.labels.push_back("hub");
		w.labels.push_back("pendant");
		out.instance = graph_instance(ProblemKind::connected_dominating_set,
		                              Graph(pendant + 1, w.edges), w.n + 1);
		out.labels = std::move(w.labels);
		for (int i = 0; i < 2 * w.n; ++i) out.cover.push_back(i);
		out.cover.push_back(hub);
		out.cover_bound = 2LL * w.n + 1;
	}
	seal(out);
	return out;
}

// ---------------------------------------------------------------------------
// decision problem -> refinement problem
// ---------------------------------------------------------------------------

namespace {

void check_refine_range(const Graph& g, long long k, long long lo, long long hi,
                        const char* what) {
	if (k < lo || k > hi)
		throw argument_error(std::string(what) + ": threshold " + num(k) +
		                     " outside [" + num(lo) + ", " + num(hi) + "]" +
		                     (k > hi ? " (such thresholds answer themselves)" : ""));
}

}

PptOutput refine_vc(const Graph& g, long long k) {
	const int n = g.num_vertices();
	check_refine_range(g, k, 0, n - 2, "vertex cover refinement");
	const int pads = int(n - 1 - k);

	std::vector<std::pair<int, int>> edges(g.edges());
	for (int p = 0; p < pads; ++p)
		for (int v = 0; v < n; ++v) edges.push_back({n + p, v});

	PptOutput out;
	RefinementInstance ref;
	ref.kind = RefinementKind::vcr;
	ref.graph = Graph(n + pads, edges);
	for (int v = 0; v < n; ++v) ref.base.push_back(v);
	out.refinement = std::move(ref);
	for (int v = 0; v < n; ++v) {
		out.labels.push_back("v " + num(v));
		out.cover.push_back(v);
	}
	for (int p = 0; p < pads; ++p) out.labels.push_back("pad " + num(p));
	out.cover_bound = n;
	seal(out);
	return out;
}

namespace {

// shared gadget: pads joined to every input vertex, plus one private
// triangle vertex per (pad, input) pair; the input vertex set is the baseline
PptOutput refine_by_triangles(const Graph& g, long long k, RefinementKind kind,
                              const char* what) {
	const int n = g.num_vertices();
	check_refine_range(g, k, 0, n - 2, what);
	const int pads = int(n - 1 - k);

	std::vector<std::pair<int, int>> edges(g.edges());
	auto pad = [&](int p) { return n + p; };
	auto link = [&](int p, int v) { return n + pads + p * n + v; };
	for (int p = 0; p < pads; ++p)
		for (int v = 0; v < n; ++v) {
			edges.push_back({pad(p), v});
			edges.push_back({link(p, v), pad(p)});
			edges.push_back({link(p, v), v});
		}

	PptOutput out;
	RefinementInstance ref;
	ref.kind = kind;
	ref.graph = Graph(n + pads + pads * n, edges);
	for (int v = 0; v < n; ++v) ref.base.push_back(v);
	out.refinement = std::move(ref);
	for (int v = 0; v < n; ++v) {
		out.labels.push_back("v " + num(v));
		out.cover.push_back(v);
	}
	for (int p = 0; p < pads; ++p) {
		out.labels.push_back("pad " + num(p));
		out.cover.push_back(pad(p));
	}
	for (int p = 0; p < pads; ++p)
		for (int v = 0; v < n; ++v) out.labels.push_back("link " + num(p) + "-" + num(v));
	out.cover_bound = 2LL * n;
	seal(out);
	return out;
}

}

PptOutput refine_fvs(const Graph& g, long long k) {
	return refine_by_triangles(g, k, RefinementKind::fvsr, "feedback vertex set refinement");
}

PptOutput refine_oct(const Graph& g, long long k) {
	return refine_by_triangles(g, k, RefinementKind::octr,
	                           "odd cycle transversal refinement");
}

PptOutput refine_im(const Graph& g, long long k) {
	const int n = g.num_vertices();
	if (k < 2 || 2 * k > n)
		throw argument_error("induced matching refinement: threshold " + num(k) +
		                     " outside [2, " + num(n / 2) + "]");

	// dom_i sees every input vertex and its private tag_i; pins attach to the
	// tags so that exactly n-k+1 extra matching edges exist iff the input has
	// an induced matching of size k
	auto dom = [&](int i) { return n + i; };
	auto tag = [&](int i) { return 2 * n + i; };
	auto pin = [&](int t) { return 3 * n + t; };
	const int pins = int(n - k + 1);

	std::vector<std::pair<int, int>> edges(g.edges());
	for (int i = 0; i < n; ++i) {
		for (int v = 0; v < n; ++v) edges.push_back({dom(i), v});
		edges.push_back({dom(i), tag(i)});
	}
	for (int t = 0; t + 1 < pins; ++t) edges.push_back({pin(t), tag(t)});
	for (int j = int(n - k); j < n; ++j) edges.push_back({pin(pins - 1), tag(j)});

	PptOutput out;
	RefinementInstance ref;
	ref.kind = RefinementKind::imr;
	ref.graph = Graph(3 * n + pins, edges);
	for (int i = 0; i < n; ++i) ref.base_edges.push_back({dom(i), tag(i)});
	out.refinement = std::move(ref);
	for (int v = 0; v < n; ++v) {
		out.labels.push_back("v " + num(v));
		out.cover.push_back(v);
	}
	for (int i = 0; i < n; ++i) out.labels.push_back("dom " + num(i));
	for (int i = 0; i < n; ++i) out.labels.push_back("tag " + num(i));
	for (int t = 0; t < pins; ++t) out.labels.push_back("pin " + num(t));
	for (int i = 0; i < 2 * n; ++i) out.cover.push_back(n + i);
	out.cover_bound = 3LL * n;
	seal(out);
	return out;
}

// ---------------------------------------------------------------------------
// hamiltonian path -> hamiltonian cycle
// ---------------------------------------------------------------------------

PptOutput hp_to_hc(const Graph& g) {
	const int n = g.num_vertices();
	if (n <= 1)
		throw argument_error("path to cycle: a " + num(n + 1) +
		                     "-vertex graph cannot carry a cycle");

	std::vector<std::pair<int, int>> edges(g.edges());
	for (int v = 0; v < n; ++v) edges.push_back({n, v});

	PptOutput out;
	out.instance =
	    graph_instance(ProblemKind::hamiltonian_cycle, Graph(n + 1, edges), 0);
	for (int v = 0; v < n; ++v) {
		out.labels.push_back("v " + num(v));
		out.cover.push_back(v);
	}
	out.labels.push_back("hub");
	out.cover_bound = n;
	seal(out);
	return out;
}

}
