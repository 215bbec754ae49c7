#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mvd/errors.hpp"

namespace mvd {

// Set of vertex indices of some Graph, kept sorted ascending and unique.
using VertexSet = std::vector<int>;

// Immutable undirected simple graph with stable string labels.
// Vertex i always refers to labels()[i]; all operations are pure.
class Graph {
  public:
    Graph() = default;

    static Graph from_edge_list(const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& edges);
    static Graph from_adjacency_matrix(const std::vector<std::string>& labels,
                                       const std::vector<std::vector<int>>& matrix);

    int order() const { return n_; }  // n
    int size() const { return m_; }   // m

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<size_t>(v)); }
    // Index of a label, -1 when absent.
    int index_of(const std::string& label) const;

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
    const std::vector<int>& neighbors(int v) const { return nbrs_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(nbrs_[static_cast<size_t>(v)].size()); }

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Graph with one edge removed; labels unchanged.
    Graph without_edge(int u, int v) const;

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::string> labels_;
    std::vector<uint8_t> adj_;             // dense n*n, symmetric, zero diagonal
    std::vector<std::vector<int>> nbrs_;   // sorted neighbor lists

    void rebuild_neighbors();
};

Graph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// True iff g - s has no path from x to y. Requires x != y and x, y not in s.
bool is_separated(const Graph& g, const VertexSet& s, int x, int y);

// kappa(x, y): minimum x-y vertex cut size = max internally disjoint x-y paths,
// computed by unit-capacity flow on the vertex-split digraph. x, y must be
// distinct and nonadjacent.
int local_connectivity(const Graph& g, int x, int y);

// kappa+: max of local_connectivity over all nonadjacent pairs.
// Requires g connected and not complete.
int kappa_plus(const Graph& g);

bool is_complete(const Graph& g);
bool is_2_connected(const Graph& g);
// 2-connected and every single-edge deletion destroys 2-connectedness.
// False for n < 3.
bool is_minimally_2_connected(const Graph& g);
bool is_triangle_free(const Graph& g);

// Number of triangles through vertex v.
int triangle_count(const Graph& g, int v);

namespace detail {
// Adjacency rows as bitmasks; requires g.order() <= 64.
std::vector<uint64_t> adjacency_masks(const Graph& g);
}  // namespace detail

}  // namespace mvd
