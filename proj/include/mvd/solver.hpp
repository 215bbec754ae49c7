#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvd/graph.hpp"

namespace mvd {

// Total vertex coloring; colors are positive integers whose identity does not
// matter, only the induced partition into classes.
struct Coloring {
    std::vector<int> colors;  // per vertex index, >= 1

    int color_count() const;
    // Classes grouped by color, in ascending color order.
    std::vector<VertexSet> classes() const;
    // Same partition with colors renamed 1..k by first appearance.
    Coloring normalized() const;

    static Coloring uniform(int n) { return Coloring{std::vector<int>(static_cast<size_t>(n), 1)}; }
};

// Monochromatic x-y vertex cut under coloring c, or nullopt if none exists.
// A monochromatic cut exists iff removing some full color class (minus x, y)
// separates the pair, so only whole classes are tried. x, y must be distinct
// and nonadjacent.
std::optional<VertexSet> has_monochromatic_cut(const Graph& g, const Coloring& c, int x, int y);

struct MvdCheck {
    bool ok;
    int fail_x = -1;  // first failing nonadjacent pair when !ok
    int fail_y = -1;
};

// True iff every nonadjacent pair admits a monochromatic cut. Pairs already
// separated in g itself count as satisfied, so restrictions to disconnected
// induced subgraphs verify cleanly.
MvdCheck is_mvd_coloring(const Graph& g, const Coloring& c);

// n for complete graphs, else n - kappa_plus(g) + 1.
int mvd_upper_bound(const Graph& g);

enum class SolveMethod { exact, compose, formula, catalog };
const char* to_string(SolveMethod m);

struct BlockLine {
    int block;
    int order;
    int value;
    std::string source;
};

struct SolveReport {
    int value = 0;
    Coloring witness;
    SolveMethod method = SolveMethod::exact;
    std::vector<BlockLine> per_block;  // filled by the compose path
};

inline constexpr int kDefaultCap = 11;

// Exact mvd by enumerating set partitions as restricted growth strings.
// The witness is the lexicographically first maximum partition, for any
// worker count. Throws CapacityError when g.order() > cap.
SolveReport mvd_exact(const Graph& g, int cap = kDefaultCap, int jobs = 1);

namespace detail {

// Enumerates set partitions of {0..n-1} in restricted-growth lexicographic
// order. The current string maps element -> part id (by first appearance).
// With a prefix, only its completions are produced (prefix positions never
// change).
class PartitionEnumerator {
  public:
    explicit PartitionEnumerator(int n);
    PartitionEnumerator(int n, const std::vector<int>& prefix);
    const std::vector<int>& current() const { return a_; }
    int part_count() const { return max_ + 1; }
    bool next();  // false once exhausted

  private:
    int n_;
    int floor_;  // first position allowed to change
    int max_;
    std::vector<int> a_;
    std::vector<int> prefix_max_;  // max of a_[0..i]
};

// All valid restricted-growth prefixes of the given length, in
// lexicographic order.
std::vector<std::vector<int>> rgs_prefixes(int n, int length);

// Value-only exact solve on adjacency bitmasks (n <= 64 by construction of
// the masks). upper_bound enables early exit.
int mvd_value_masks(const std::vector<uint64_t>& adj, int n, int upper_bound);

// Whether removing the class-minus-endpoints sets of `parts` leaves some part
// that separates x and y.
bool masks_pair_has_cut(const std::vector<uint64_t>& adj, int n,
                        const std::vector<uint64_t>& parts, int x, int y);

}  // namespace detail

}  // namespace mvd
