#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pgk {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted; construction rejects self-loops and out-of-range endpoints and
// deduplicates parallel edges.
class Graph {
public:
	Graph() = default;
	explicit Graph(int n);
	Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

	int num_vertices() const { return n_; }
	int num_edges() const { return m_; }
	bool has_edge(int u, int v) const;
	int degree(int v) const { return int(adj_[v].size()); }
	const std::vector<int>& neighbors(int v) const { return adj_[v]; }

	// Edges as (u, v) with u < v, sorted lexicographically.
	std::vector<std::pair<int, int>> edges() const;

	bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
	int n_ = 0;
	int m_ = 0;
	std::vector<std::vector<int>> adj_;
};

struct InducedSubgraph {
	Graph graph;
	std::vector<int> orig_ids;	// new id -> old id
	std::vector<int> new_ids;	// old id -> new id, -1 if dropped
};

// Keeps the selected vertices in ascending id order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

Graph complement(const Graph& g);

struct DisjointUnion {
	Graph graph;
	std::vector<int> offsets;	// offsets[i] = first id of part i
};

DisjointUnion disjoint_union(const std::vector<Graph>& parts);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// DIMACS edge format ("p edge n m" / "e u v", 1-indexed on the wire).
// Duplicate edges are tolerated and deduplicated; self-loops are an error.
Graph parse_dimacs(const std::string& text);
std::string to_dimacs(const Graph& g);

// small named constructors used throughout the tests and benchmarks
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

}
