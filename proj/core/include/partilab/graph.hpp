#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace partilab {

using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Immutable simple undirected graph over vertex ids 0..n-1.
// Edges are kept in canonical form (u < v, sorted) plus an adjacency bit
// matrix and sorted neighbour lists for queries.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const noexcept
    {
        return bit(static_cast<std::size_t>(u) * n_ + v);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // canonical: each pair (u, v) with u < v, sorted lexicographically
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool operator==(const Graph& other) const noexcept
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    bool bit(std::size_t idx) const noexcept
    {
        return (matrix_[idx >> 6] >> (idx & 63)) & 1;
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> matrix_;
};

Graph make_graph(int n, std::vector<Edge> edges);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

// vertices reindexed 0..|s|-1 preserving the order of s
Graph induced_subgraph(const Graph& g, const VertexSet& s);

Graph delete_vertex(const Graph& g, int v);

struct IdentifyResult {
    Graph graph;
    std::vector<int> vertex_map; // old id -> new id
};

// Merges each class to a single vertex. Classes must be pairwise disjoint.
// Parallel edges collapse; merging two adjacent vertices is an error
// (loop_created), it signals a broken gadget identification.
IdentifyResult identify_vertices(const Graph& g, const std::vector<VertexSet>& classes);

struct Triangle {
    int a, b, c; // a < b < c
    bool operator==(const Triangle&) const = default;
};

struct InducedP3 {
    int u, v, w; // path u - v - w, centre v, u < w, uw non-edge
    bool operator==(const InducedP3&) const = default;
};

std::vector<Triangle> enumerate_triangles(const Graph& g);
std::vector<InducedP3> enumerate_induced_p3(const Graph& g);

bool is_clique(const Graph& g);
bool is_independent(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_cluster(const Graph& g); // disjoint union of cliques
bool is_bipartite(const Graph& g);
bool is_split(const Graph& g);
bool is_threshold(const Graph& g);
bool is_connected(const Graph& g);
bool co_connected(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

// Every induced (chordless) cycle of length 4..max_len, each reported once
// in canonical orientation: minimum vertex first, smaller neighbour second.
std::vector<std::vector<int>> find_induced_cycles_up_to(const Graph& g, int max_len);

} // namespace partilab
