#pragma once

#include <vector>

#include "pgk/graph.hpp"
#include "pgk/guardrails.hpp"

namespace pgk {

struct VcCertificate {
	std::vector<int> cover;
};

/// Twin cover: removing `cover` leaves a disjoint union of cliques and any
// two vertices in the same clique have the same neighbourhood in the cover.
struct TcCertificate {
	std::vector<int> cover;
	std::vector<std::vector<int>> cliques;	// partition of the remaining vertices
};

enum class NdClassKind { independent, clique };

struct NdClass {
	std::vector<int> members;
	NdClassKind kind;
};

struct NdPartition {
	std::vector<NdClass> classes;	// ordered by smallest member id
	int width() const { return int(classes.size()); }
};

// Modular decomposition tree. Children of a prime node induce a quotient
// with no nontrivial modules.
struct MdNode {
	enum Kind { leaf, parallel, series, prime } kind;
	int vertex = -1;	// for leaves
	std::vector<int> children;
	std::vector<int> module_vertices;	// sorted
};

struct MdTree {
	std::vector<MdNode> nodes;
	int root = -1;
};

bool is_vertex_cover(const Graph& g, const std::vector<int>& s);
bool is_twin_cover(const Graph& g, const std::vector<int>& s);
bool is_module(const Graph& g, const std::vector<int>& m);

// Exact minimum vertex cover by bounded search on edges.
VcCertificate vertex_cover_exact(const Graph& g);

// Exact minimum twin cover. An edge uv with N(u)\{v} != N(v)\{u} must have an
// endpoint in the cover; branching over those edges is exhaustive, and the
// leaf remainder is verified to be a valid cluster.
TcCertificate twin_cover_exact(const Graph& g, const Guardrails& limits = {});

// Derive the clique partition for a given valid cover (argument_error if the
// set is not a twin cover).
TcCertificate make_tc_certificate(const Graph& g, const std::vector<int>& cover);

// Minimum-width neighbourhood partition via the twin relation
// N(u)\{v} == N(v)\{u}. Singleton classes are marked independent.
NdPartition nd_partition(const Graph& g);

MdTree modular_decomposition(const Graph& g);

// Max number of children over prime nodes; 0 when the tree has no prime node.
int modular_width(const MdTree& t);
int modular_width(const Graph& g);

struct QuotientResult {
	Graph graph;	// one vertex per part, in the order given
	std::vector<std::vector<int>> parts;
};

// Requires every part to be a module; otherwise argument_error naming a
// violating vertex/part pair.
QuotientResult quotient_graph(const Graph& g, const std::vector<std::vector<int>>& partition);

// Rebuild the adjacency encoded by a decomposition tree (series = join,
// parallel = union, prime = quotient expansion). Used to validate trees.
Graph reconstruct_from_md(const Graph& g, const MdTree& t);

}
