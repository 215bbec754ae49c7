#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mvd/graph.hpp"

namespace mvd::testing {

// Graph over labels v1..vn from index pairs.
inline Graph make(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> named;
    for (const auto& [a, b] : edges) {
        named.emplace_back(labels[static_cast<size_t>(a)], labels[static_cast<size_t>(b)]);
    }
    return Graph::from_edge_list(labels, named);
}

// Uniform random connected graph: random spanning tree plus each remaining
// pair independently with probability p.
inline Graph random_connected(std::mt19937& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        edges.emplace_back(order[static_cast<size_t>(pick(rng))], order[static_cast<size_t>(i)]);
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (coin(rng) < p) edges.emplace_back(a, b);
        }
    }
    return make(n, edges);
}

// Smallest x-y vertex cut by exhaustive subset search (independent of the
// flow-based implementation).
inline int brute_min_cut(const Graph& g, int x, int y) {
    const int n = g.order();
    for (int size = 0; size <= n - 2; ++size) {
        // all subsets of V \ {x, y} of the given size
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v) {
            if (v != x && v != y) candidates.push_back(v);
        }
        std::vector<int> choose(candidates.size(), 0);
        std::fill(choose.end() - size, choose.end(), 1);
        do {
            VertexSet s;
            for (size_t i = 0; i < candidates.size(); ++i) {
                if (choose[i]) s.push_back(candidates[i]);
            }
            if (is_separated(g, s, x, y)) return size;
        } while (std::next_permutation(choose.begin(), choose.end()));
    }
    return n - 1;  // unreachable for nonadjacent pairs
}

// Blocks as maximal vertex sets inducing a connected subgraph without a cut
// vertex; brute force over all subsets.
inline std::vector<VertexSet> brute_blocks(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> candidates;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) s.push_back(v);
        }
        const Graph sub = induced_subgraph(g, s);
        if (!is_connected(sub)) continue;
        if (s.size() == 1) {
            candidates.push_back(s);
            continue;
        }
        bool has_cut = false;
        for (size_t r = 0; r < s.size() && !has_cut; ++r) {
            VertexSet rest;
            for (size_t i = 0; i < s.size(); ++i) {
                if (i != r) rest.push_back(static_cast<int>(i));
            }
            if (!rest.empty() && !is_connected(induced_subgraph(sub, rest))) has_cut = true;
        }
        if (!has_cut) candidates.push_back(s);
    }
    std::vector<VertexSet> blocks;
    for (const auto& a : candidates) {
        if (a.size() < 2 && g.order() > 1) continue;
        bool maximal = true;
        for (const auto& b : candidates) {
            if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) blocks.push_back(a);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// Labeled connected graph counts by the complement recurrence.
inline std::vector<uint64_t> connected_graph_counts(int up_to) {
    auto choose = [](int a, int b) {
        uint64_t r = 1;
        for (int i = 1; i <= b; ++i) r = r * static_cast<uint64_t>(a - b + i) / static_cast<uint64_t>(i);
        return r;
    };
    std::vector<uint64_t> total(static_cast<size_t>(up_to + 1), 1);
    for (int n = 0; n <= up_to; ++n) total[static_cast<size_t>(n)] = uint64_t{1} << (n * (n - 1) / 2);
    std::vector<uint64_t> connected(static_cast<size_t>(up_to + 1), 0);
    for (int n = 1; n <= up_to; ++n) {
        uint64_t c = total[static_cast<size_t>(n)];
        for (int k = 1; k < n; ++k) {
            c -= choose(n - 1, k - 1) * connected[static_cast<size_t>(k)] *
                 total[static_cast<size_t>(n - k)];
        }
        connected[static_cast<size_t>(n)] = c;
    }
    return connected;
}

// Isomorphism by trying all vertex permutations.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const int n = a.order();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if (a.adjacent(u, v) !=
                    b.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                    ok = false;
                }
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace mvd::testing
