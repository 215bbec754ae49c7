#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "mvd/compose.hpp"
#include "mvd/families.hpp"
#include "mvd/formats.hpp"

using namespace mvd;
using testing::make;
using testing::random_connected;

namespace {

CatalogStore shipped() { return CatalogStore::load_directory(MVD_CATALOG_DIR); }

// Glues `extra` onto `base` at one shared vertex; labels of extra get a
// suffix to stay distinct.
Graph glue(const Graph& base, int base_vertex, const Graph& extra, int extra_vertex,
           const std::string& suffix) {
    std::vector<std::string> labels = base.labels();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : base.edges()) edges.emplace_back(base.label(u), base.label(v));
    auto name = [&](int v) {
        return v == extra_vertex ? base.label(base_vertex) : extra.label(v) + suffix;
    };
    for (int v = 0; v < extra.order(); ++v) {
        if (v != extra_vertex) labels.push_back(name(v));
    }
    for (const auto& [u, v] : extra.edges()) edges.emplace_back(name(u), name(v));
    return Graph::from_edge_list(labels, edges);
}

}  // namespace

TEST_CASE("solve_block resolution ladder") {
    const CatalogStore store = shipped();

    const BlockSolve k2 = solve_block(make(2, {{0, 1}}), &store);
    CHECK(k2.value == 2);
    CHECK(k2.source == "complete");

    const BlockSolve c7 = solve_block(generate({Family::cycle, {7}}), &store);
    CHECK(c7.value == 3);
    CHECK(c7.source == "cycle");

    const BlockSolve theta = solve_block(generate({Family::theta, {3, 1, 1}}), &store);
    CHECK(theta.value == 3);
    CHECK(theta.source == "catalog:theta_3_1_1");

    // not complete, not a cycle, not in the catalog: exact fallback
    const Graph diamond = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const BlockSolve exact = solve_block(diamond, &store);
    CHECK(exact.source == "exact");
    CHECK(exact.value == mvd_exact(diamond).value);

    // block solves always return valid MVD-colorings with `value` classes
    for (const BlockSolve* s : {&k2, &c7, &theta, &exact}) {
        CHECK(s->coloring.color_count() == s->value);
    }

    // cycles resolve by the closed form at any order, even past the cap
    const Graph c12 = generate({Family::cycle, {12}});
    CHECK(solve_block(c12, nullptr, 11).value == 6);
    // a chorded 12-cycle has no rung left below cap 11
    std::vector<std::pair<int, int>> chorded;
    for (int i = 0; i < 12; ++i) chorded.emplace_back(i, (i + 1) % 12);
    chorded.emplace_back(0, 6);
    CHECK_THROWS_AS(solve_block(make(12, chorded), &store, 11), CapacityError);
}

TEST_CASE("worked-example block resolves through the catalog") {
    const CatalogStore store = shipped();
    const Graph g = load_graph_file(std::string(MVD_DATA_DIR) + "/two_blocks_17.mvdg");
    const BlockDecomposition d = decompose(g);
    REQUIRE(d.block_count() == 2);
    for (const auto& bg : d.block_graphs) {
        const BlockSolve s = solve_block(bg, &store);
        CHECK(s.value == 2);
        CHECK(s.source.rfind("catalog:graph_9Vertex", 0) == 0);
    }
}

TEST_CASE("compose on the worked example gives 3 with a valid witness") {
    const CatalogStore store = shipped();
    const Graph g = load_graph_file(std::string(MVD_DATA_DIR) + "/two_blocks_17.mvdg");
    const SolveReport r = mvd_compose(g, &store);
    CHECK(r.value == 3);
    CHECK(r.witness.color_count() == 3);
    CHECK(is_mvd_coloring(g, r.witness).ok);
    CHECK(r.per_block.size() == 2);
}

TEST_CASE("trees compose to n") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph tree = random_connected(rng, n, 0.0);
        const SolveReport r = mvd_compose(tree, nullptr);
        CHECK(r.value == n);
        CHECK(r.witness.color_count() == n);
        CHECK(is_mvd_coloring(tree, r.witness).ok);
    }
}

TEST_CASE("two C5 sharing a vertex give 3") {
    const Graph c5 = generate({Family::cycle, {5}});
    const Graph g = glue(c5, 2, c5, 0, "'");
    REQUIRE(g.order() == 9);
    const SolveReport composed = mvd_compose(g, nullptr);
    CHECK(composed.value == 3);
    CHECK(mvd_exact(g).value == 3);
}

TEST_CASE("compose equals exact on all connected graphs up to order 6") {
    const CatalogStore store = shipped();
    for (int n = 1; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        for (uint64_t code = 0; code < (uint64_t{1} << bits); ++code) {
            // decode
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j, ++bit) {
                    if (code >> bit & 1) edges.emplace_back(i, j);
                }
            }
            const Graph g = make(n, edges);
            if (!is_connected(g)) continue;
            const SolveReport composed = mvd_compose(g, &store);
            CHECK(composed.value == mvd_exact(g).value);
            CHECK(composed.witness.color_count() == composed.value);
            CHECK(is_mvd_coloring(g, composed.witness).ok);
        }
    }
}

TEST_CASE("fresh colors meet only through cut vertices") {
    // Disjoint blocks can be forced to share a color (see the chained-C4
    // case below), so the checkable discipline is: blocks sharing a cut
    // vertex share exactly its color, and any color common to two blocks is
    // carried by a cut vertex of each.
    std::mt19937 rng(67);
    const CatalogStore store = shipped();
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const Graph g = random_connected(rng, n, 0.25);
        const BlockDecomposition d = decompose(g);
        const SolveReport r = mvd_compose(g, &store);
        auto color_of = [&](int v) { return r.witness.colors[static_cast<size_t>(v)]; };

        std::vector<std::set<int>> block_colors(d.blocks.size());
        std::vector<std::set<int>> block_cut_colors(d.blocks.size());
        for (size_t b = 0; b < d.blocks.size(); ++b) {
            for (int v : d.blocks[b]) {
                block_colors[b].insert(color_of(v));
                if (d.is_cut_vertex(v)) block_cut_colors[b].insert(color_of(v));
            }
        }
        int total = 0;
        for (const auto& colors : block_colors) total += static_cast<int>(colors.size());
        CHECK(total - d.block_count() + 1 == r.value);

        for (size_t a = 0; a < d.blocks.size(); ++a) {
            for (size_t b = a + 1; b < d.blocks.size(); ++b) {
                std::set<int> shared_colors;
                for (int c : block_colors[a]) {
                    if (block_colors[b].count(c)) shared_colors.insert(c);
                }
                VertexSet shared_vertices;
                std::set_intersection(d.blocks[a].begin(), d.blocks[a].end(),
                                      d.blocks[b].begin(), d.blocks[b].end(),
                                      std::back_inserter(shared_vertices));
                for (int v : shared_vertices) {
                    CHECK(shared_colors.count(color_of(v)) == 1);
                }
                for (int c : shared_colors) {
                    CHECK(block_cut_colors[a].count(c) == 1);
                    CHECK(block_cut_colors[b].count(c) == 1);
                }
                if (!shared_vertices.empty()) {
                    // blocks meet in at most one vertex, and tree-adjacent
                    // blocks share exactly its color
                    CHECK(shared_vertices.size() == 1);
                    CHECK(shared_colors == std::set<int>{color_of(shared_vertices[0])});
                }
            }
        }
    }
}

TEST_CASE("chained C4 blocks force a color shared by disjoint blocks") {
    // Three C4s, each glued at the vertex opposite the previous cut vertex.
    // C4 has a unique two-class MVD partition (opposite pairs), so every
    // maximum coloring gives both cut vertices of the middle block the same
    // color. Vertex 3 lies only in the first block and vertex 5 only in the
    // middle and last ones, so the disjoint end blocks {0,1,2,3} and
    // {5,7,8,9} always share that color.
    const Graph g = make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                              {3, 4}, {4, 5}, {5, 6}, {6, 3},
                              {5, 7}, {7, 8}, {8, 9}, {9, 5}});
    const SolveReport exact = mvd_exact(g);
    CHECK(exact.value == 4);
    const SolveReport composed = mvd_compose(g, nullptr);
    CHECK(composed.value == 4);
    CHECK(composed.witness.color_count() == 4);
    CHECK(is_mvd_coloring(g, composed.witness).ok);
    CHECK(composed.witness.colors[3] == composed.witness.colors[5]);
    CHECK(exact.witness.colors[3] == exact.witness.colors[5]);
}

TEST_CASE("block tree composition agrees with exact on random gluings") {
    std::mt19937 rng(71);
    const CatalogStore store = shipped();
    std::vector<Graph> parts;
    parts.push_back(generate({Family::cycle, {4}}));
    parts.push_back(generate({Family::cycle, {5}}));
    parts.push_back(generate({Family::theta, {1, 1, 1}}));
    parts.push_back(generate({Family::theta, {2, 1, 1}}));
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = parts[rng() % parts.size()];
        while (true) {
            const Graph& extra = parts[rng() % parts.size()];
            if (g.order() + extra.order() - 1 > 10) break;
            const int at = static_cast<int>(rng() % g.order());
            const int from = static_cast<int>(rng() % extra.order());
            g = glue(g, at, extra, from, "_" + std::to_string(trial) + std::to_string(g.order()));
        }
        const SolveReport composed = mvd_compose(g, &store);
        CHECK(composed.value == mvd_exact(g).value);
        CHECK(is_mvd_coloring(g, composed.witness).ok);
    }
}

TEST_CASE("compose handles graphs past the 64-vertex mask fast path") {
    std::mt19937 rng(73);
    const int n = 70;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(rng() % i), i);
    const Graph tree = make(n, edges);
    const SolveReport r = mvd_compose(tree, nullptr);
    CHECK(r.value == n);
    CHECK(is_mvd_coloring(tree, r.witness).ok);
}

TEST_CASE("auto ladder value equals exact on random inputs") {
    std::mt19937 rng(79);
    const CatalogStore store = shipped();
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Graph g = random_connected(rng, n, 0.3);
        const auto formula = formula_solve(g);
        const int auto_value = formula ? formula->value : mvd_compose(g, &store).value;
        CHECK(auto_value == mvd_exact(g).value);
    }
}

TEST_CASE("method reporting") {
    const CatalogStore store = shipped();
    CHECK(mvd_compose(generate({Family::theta, {2, 2, 1}}), &store).method == SolveMethod::catalog);
    CHECK(mvd_compose(make(2, {{0, 1}}), &store).method == SolveMethod::compose);
}

TEST_CASE("partial bounds when a block exceeds the cap") {
    // a 12-cycle with one chord is neither complete, a cycle, nor in the
    // catalog, so with cap 11 it cannot be resolved; glue on a K2 tail
    std::vector<std::pair<int, int>> chorded;
    for (int i = 0; i < 12; ++i) chorded.emplace_back(i, (i + 1) % 12);
    chorded.emplace_back(0, 6);
    const Graph block = make(12, chorded);
    const Graph g = glue(block, 1, make(2, {{0, 1}}), 0, "t");
    CHECK_THROWS_AS(mvd_compose(g, nullptr, 11), CapacityError);

    const PartialBounds bounds = mvd_partial(g, nullptr, 11);
    CHECK(bounds.lower == 1 + 2 - 2 + 1);
    CHECK(bounds.upper == (12 - kappa_plus(block) + 1) + 2 - 2 + 1);
    CHECK(bounds.lower <= bounds.upper);
    REQUIRE(bounds.per_block.size() == 2);
    const int unresolved =
        static_cast<int>(std::count_if(bounds.per_block.begin(), bounds.per_block.end(),
                                       [](const BlockLine& l) { return l.value < 0; }));
    CHECK(unresolved == 1);

    // with a raised cap the same graph resolves exactly and lands in range
    const SolveReport full = mvd_compose(g, nullptr, 12);
    CHECK(bounds.lower <= full.value);
    CHECK(full.value <= bounds.upper);
}
