#pragma once

#include <vector>

#include "mvd/graph.hpp"

namespace mvd {

// Blocks, cut vertices and the block-cut tree of a connected graph.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;            // sorted vertex sets, in pop order
    std::vector<std::vector<int>> pop_orders; // same blocks, vertices as popped off the DFS stack
    std::vector<Graph> block_graphs;          // induced subgraphs, labels preserved
    VertexSet cut_vertices;                   // sorted
    // block-cut tree: cut vertices contained in each block, sorted
    std::vector<std::vector<int>> block_cuts;

    int block_count() const { return static_cast<int>(blocks.size()); }  // r
    int trivial_block_count() const;                                     // t, blocks of order 2
    bool is_cut_vertex(int v) const;
};

// Depth-first block decomposition. Deterministic: DFS starts at vertex 0 and
// scans neighbors in index order. Throws InputError on disconnected input.
BlockDecomposition decompose(const Graph& g);

// One step of a block-cut tree traversal: a block plus the cut vertex through
// which it was entered (-1 for the root block).
struct BlockVisit {
    int block;
    int entry_cut;
};

// BFS order over the block-cut tree from the given root block.
std::vector<BlockVisit> block_cut_order(const BlockDecomposition& d, int root_block);

}  // namespace mvd
