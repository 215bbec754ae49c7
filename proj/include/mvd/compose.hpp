#pragma once

#include <string>

#include "mvd/block_decomposition.hpp"
#include "mvd/catalog.hpp"
#include "mvd/graph.hpp"
#include "mvd/solver.hpp"

namespace mvd {

struct BlockSolve {
    int value;
    Coloring coloring;   // over the block graph's own vertex indices
    std::string source;  // complete | cycle | catalog:<name> | exact
};

// Resolution ladder for one block (K_2 or 2-connected): complete graphs and
// cycles by their closed forms, then a catalog isomorph, then the exact
// solver. Throws CapacityError when nothing applies.
BlockSolve solve_block(const Graph& block, const CatalogStore* store, int cap = kDefaultCap);

// mvd via block decomposition: sum of block values minus r plus 1. The
// witness gives every block fresh colors and unifies them at cut vertices by
// walking the block-cut tree from the block containing vertex 0.
SolveReport mvd_compose(const Graph& g, const CatalogStore* store, int cap = kDefaultCap);

// Bounds reported when some block exceeds the cap: unresolved blocks
// contribute 1 to the lower bound and their order-based bound to the upper.
struct PartialBounds {
    int lower = 0;
    int upper = 0;
    std::vector<BlockLine> per_block;
};

PartialBounds mvd_partial(const Graph& g, const CatalogStore* store, int cap = kDefaultCap);

}  // namespace mvd
