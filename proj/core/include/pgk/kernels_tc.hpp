#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pgk/cfa.hpp"
#include "pgk/graph.hpp"
#include "pgk/guardrails.hpp"
#include "pgk/params.hpp"

namespace pgk {

// ---------------------------------------------------------------------------
// Triangle partition, parameterized by twin cover
// ---------------------------------------------------------------------------

// Result of the preprocessing pipeline: clique trimming, good-clique count
// check, cover augmentation. Vertex ids live in the trimmed graph; orig_ids
// maps them back to the input.
struct TpTcState {
	bool immediate_no = false;
	std::string reason;

	Graph graph;                  // input graph after trimming
	std::vector<int> orig_ids;    // trimmed id -> input id
	std::vector<int> cover;       // the given twin cover, trimmed ids
	std::vector<std::vector<int>> cliques; // clique blocks of graph - cover
	std::vector<bool> good;       // per clique: size not divisible by 3
	std::vector<int> x_aug;       // cover plus all good cliques, ascending
};

// Trims every clique block with more than 2tc+2 vertices down into the
// [2tc, 2tc+2] window by deleting 3 vertices at a time (highest ids first;
// the argument works for any choice), flags good cliques, and augments the
// cover. Declares immediate-no when |V| is not divisible by 3 or when more
// good cliques exist than the cover could serve.
TpTcState tp_tc_prepare(const Graph& g, const std::vector<int>& twin_cover);

struct TpCompressResult {
	bool immediate_no = false;
	std::string reason;
	TpTcState state;
	CfaInstance cfa;                         // kernelized assignment instance
	std::vector<CfaKernelStep> kernel_trace;
	// provenance: buyer id -> the cover subset it stands for, seller id ->
	// the clique it stands for (or the triangle, for triangle slots)
	std::vector<std::vector<int>> buyer_sets;
	std::vector<std::vector<int>> seller_sets;
};

// The full compression: prepare, then emit the assignment instance whose
// buyers are the 3- and 6-subsets of the augmented cover, whose sellers are
// the remaining (bad) cliques plus one capacity-3 slot per triangle inside
// the augmented cover, and whose target is the augmented cover size; then
// kernelize it. On immediate-no the returned instance is a fixed trivially
// unsatisfiable one (no buyers, target 1).
TpCompressResult tp_tc_compress(const Graph& g, const std::vector<int>& twin_cover,
                                const Guardrails& lim = {});

// ---------------------------------------------------------------------------
// Triangle partition, parameterized by vertex cover
// ---------------------------------------------------------------------------

struct TpVcKernel {
	bool immediate_no = false;
	std::string reason;
	Graph graph; // unchanged input when not immediate-no
};

// Vertices outside a vertex cover are independent, so every triangle of a
// partition uses at least two cover vertices and at most one outside vertex:
// more than floor(|cover|/2) outside vertices is an immediate no. Otherwise
// the instance is already small (n <= 3|cover|) and is returned unchanged.
TpVcKernel tp_vc_kernel(const Graph& g, const std::vector<int>& vertex_cover);

// ---------------------------------------------------------------------------
// Vertex cover / odd cycle transversal / independent set, twin cover
// ---------------------------------------------------------------------------

struct CollapseKernel {
	bool immediate_no = false;
	std::string reason;
	Graph graph;
	std::vector<int> orig_ids; // kernel id -> input id
	long long k = 0;           // residual budget
	long long spent = 0;       // budget consumed by collapsing blocks
	long long forced = 0;      // vertices fixed into the cover by the LP (vc only)
};

// Collapses every clique block to its lowest-id vertex, paying |C|-1 per
// block, then shrinks further with the classic half-integral relaxation
// (solved as a maximum matching on the doubled bipartite graph): vertices
// valued 1 are taken, vertices valued 0 dropped, and the half-valued rest is
// the kernel, at most 2k' vertices.
CollapseKernel vc_tc_kernel(const Graph& g, const std::vector<int>& twin_cover, long long k);

// Keeps two lowest-id vertices per clique block of size >= 3, paying |C|-2:
// a block contributes min(|C|-1, |C|-2 + its transversal use) and two twins
// preserve the parity obstruction.
CollapseKernel oct_tc_collapse(const Graph& g, const std::vector<int>& twin_cover, long long k);

// Independent set via its complement identity: kernelizes the vertex cover
// instance (g, n-k) and converts the threshold back.
CollapseKernel is_tc_kernel(const Graph& g, const std::vector<int>& twin_cover, long long k);

// ---------------------------------------------------------------------------
// Clique, twin cover: Turing kernelization
// ---------------------------------------------------------------------------

using CliqueOracle = std::function<bool(const Graph&, int)>;

struct TuringQuery {
	Graph graph;
	int threshold = 0;
	bool answer = false;
	std::vector<int> vertices; // query graph vertices, input ids
};

struct TuringTranscript {
	std::vector<TuringQuery> queries;
	bool answer = false;
};

// Decides Clique(g, k) with oracle queries on graphs of at most |cover|+1
// vertices. A maximum clique meets at most one clique block C, and can be
// assumed to contain all of C, so per block one query on the block's shared
// cover neighborhood plus one representative settles it; one further query
// on the cover alone covers cliques avoiding every block.
TuringTranscript clique_tc_turing(const Graph& g, const std::vector<int>& twin_cover,
                                  int k, const CliqueOracle& oracle);

}
