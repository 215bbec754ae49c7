#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvd/graph.hpp"
#include "mvd/solver.hpp"

namespace mvd {

enum class Family {
    cycle,                 // params: n >= 3
    path,                  // params: n >= 1
    complete,              // params: n >= 1
    complete_multipartite, // params: part sizes, each >= 1
    wheel,                 // params: n >= 4; order n, hub joined to C_{n-1}
    grid,                  // params: m, n >= 1
    petersen,              // no params
    theta,                 // params: n_1..n_k, k >= 2, each >= 1; two hubs joined by k paths
    complete_minus_edges,  // params: pattern 1..6, n; K_n minus a fixed small edge pattern
    near_complete,         // params: n, k; K_{n-1} plus a vertex joined by k edges, k <= n-2
};

struct FamilySpec {
    Family family;
    std::vector<int> params;
};

const char* family_name(Family f);
// Parses names as used by the CLI ("cycle", "multipartite", "kminus", ...).
std::optional<Family> family_from_name(const std::string& name);

Graph generate(const FamilySpec& spec);

// Join of two vertex-disjoint graphs: all edges between them added.
Graph join(const Graph& g, const Graph& h);
// Cartesian product; labels are "<gl>.<hl>".
Graph cartesian_product(const Graph& g, const Graph& h);

// Closed-form mvd where one is known; nullopt otherwise (e.g. theta).
std::optional<int> mvd_formula(const FamilySpec& spec);

// Minimum size that forces mvd >= k on order-n connected graphs.
// nullopt marks cells the source tables leave undefined; k outside [1, n]
// is an InputError.
std::optional<int> f_v(int n, int k);
// Maximum size of a connected order-n graph with mvd exactly k; nullopt when
// no such graph exists.
std::optional<int> emax(int n, int k);
// floor((n + 2t - r + 1) / 2) for a graph with r blocks of which t trivial.
int block_bound(int n, int r, int t);

// Structure recognition used by the solve ladder: identifies inputs belonging
// to a family with a closed form and builds the matching witness coloring.
struct FormulaSolve {
    int value;
    Coloring witness;
    std::string family;  // human-readable family description
};
std::optional<FormulaSolve> formula_solve(const Graph& g);

// First partition with exactly k parts (restricted-growth order) that is an
// MVD-coloring, if any. Requires g.order() <= 64.
std::optional<Coloring> find_k_coloring(const Graph& g, int k);

}  // namespace mvd
