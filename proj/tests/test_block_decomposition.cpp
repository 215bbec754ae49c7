#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "mvd/block_decomposition.hpp"
#include "mvd/formats.hpp"

using namespace mvd;
using testing::brute_blocks;
using testing::make;
using testing::random_connected;

namespace {

std::set<VertexSet> block_set(const BlockDecomposition& d) {
    return {d.blocks.begin(), d.blocks.end()};
}

void check_invariants(const Graph& g, const BlockDecomposition& d) {
    // every edge in exactly one block
    for (const auto& [u, v] : g.edges()) {
        int containing = 0;
        for (const auto& b : d.blocks) {
            if (std::binary_search(b.begin(), b.end(), u) &&
                std::binary_search(b.begin(), b.end(), v)) {
                ++containing;
            }
        }
        CHECK(containing == 1);
    }
    // each block is K2 or 2-connected
    for (const auto& bg : d.block_graphs) {
        if (bg.order() >= 3) {
            CHECK(is_2_connected(bg));
        } else if (g.order() > 1) {
            CHECK(bg.order() == 2);
            CHECK(bg.size() == 1);
        }
    }
    // order identity
    int total = 0;
    for (const auto& b : d.blocks) total += static_cast<int>(b.size());
    CHECK(g.order() == total - d.block_count() + 1);
    // vertex in >= 2 blocks iff cut vertex
    for (int v = 0; v < g.order(); ++v) {
        int in_blocks = 0;
        for (const auto& b : d.blocks) {
            if (std::binary_search(b.begin(), b.end(), v)) ++in_blocks;
        }
        CHECK((in_blocks >= 2) == d.is_cut_vertex(v));
    }
}

}  // namespace

TEST_CASE("path decomposition") {
    const Graph p3 = Graph::from_edge_list({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    const BlockDecomposition d = decompose(p3);
    CHECK(d.block_count() == 2);
    CHECK(d.trivial_block_count() == 2);
    CHECK(block_set(d) == std::set<VertexSet>{{0, 1}, {1, 2}});
    CHECK(d.cut_vertices == VertexSet{1});
}

TEST_CASE("2-connected graphs are a single block") {
    const Graph k3 = make(3, {{0, 1}, {1, 2}, {0, 2}});
    const BlockDecomposition d = decompose(k3);
    CHECK(d.block_count() == 1);
    CHECK(d.cut_vertices.empty());
    CHECK(d.trivial_block_count() == 0);
}

TEST_CASE("K1 is its own block") {
    const BlockDecomposition d = decompose(make(1, {}));
    CHECK(d.block_count() == 1);
    CHECK(d.blocks[0] == VertexSet{0});
    CHECK(d.cut_vertices.empty());
}

TEST_CASE("disconnected input is rejected") {
    CHECK_THROWS_AS(decompose(make(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("worked example: one cut vertex, two order-9 blocks") {
    const Graph g = load_graph_file(std::string(MVD_DATA_DIR) + "/two_blocks_17.mvdg");
    REQUIRE(g.order() == 17);
    REQUIRE(g.size() == 23);
    const BlockDecomposition d = decompose(g);
    REQUIRE(d.block_count() == 2);
    CHECK(d.cut_vertices.size() == 1);
    CHECK(g.label(d.cut_vertices[0]) == "H");

    auto labels_of = [&](const VertexSet& b) {
        std::set<std::string> out;
        for (int v : b) out.insert(g.label(v));
        return out;
    };
    const std::set<std::string> expect1{"I", "M", "D", "O", "C", "L", "Q", "B", "H"};
    const std::set<std::string> expect2{"K", "P", "J", "N", "H", "G", "F", "E", "A"};
    const std::set<std::set<std::string>> got{labels_of(d.blocks[0]), labels_of(d.blocks[1])};
    CHECK(got == std::set<std::set<std::string>>{expect1, expect2});
    check_invariants(g, d);
}

TEST_CASE("agrees with brute-force blocks on random graphs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);  // up to 9
        const Graph g = random_connected(rng, n, 0.3);
        const BlockDecomposition d = decompose(g);
        check_invariants(g, d);
        const auto expected = brute_blocks(g);
        CHECK(block_set(d) == std::set<VertexSet>(expected.begin(), expected.end()));
    }
}

TEST_CASE("agrees with brute-force blocks on every connected graph up to order 5") {
    for (int n = 1; n <= 5; ++n) {
        const int bits = n * (n - 1) / 2;
        for (uint64_t code = 0; code < (uint64_t{1} << bits); ++code) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j, ++bit) {
                    if (code >> bit & 1) edges.emplace_back(i, j);
                }
            }
            const Graph g = make(n, edges);
            if (!is_connected(g)) continue;
            const BlockDecomposition d = decompose(g);
            check_invariants(g, d);
            const auto expected = brute_blocks(g);
            CHECK(block_set(d) == std::set<VertexSet>(expected.begin(), expected.end()));
        }
    }
}

TEST_CASE("worked-example block-cut order enters the second block through H") {
    const Graph g = load_graph_file(std::string(MVD_DATA_DIR) + "/two_blocks_17.mvdg");
    const BlockDecomposition d = decompose(g);
    for (int root = 0; root < d.block_count(); ++root) {
        const auto order = block_cut_order(d, root);
        REQUIRE(order.size() == 2);
        CHECK(order[0].block == root);
        CHECK(order[0].entry_cut == -1);
        CHECK(order[1].block == 1 - root);
        CHECK(g.label(order[1].entry_cut) == "H");
    }
}

TEST_CASE("re-decomposing a block yields itself") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Graph g = random_connected(rng, n, 0.35);
        for (const auto& bg : decompose(g).block_graphs) {
            const BlockDecomposition again = decompose(bg);
            CHECK(again.block_count() == 1);
            CHECK(again.cut_vertices.empty());
            CHECK(again.block_graphs[0].order() == bg.order());
        }
    }
}

TEST_CASE("block-cut tree is a tree and BFS order pairs blocks with entries") {
    const Graph p3 = Graph::from_edge_list({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    const BlockDecomposition d = decompose(p3);
    // root at the block containing 'a'
    int root = d.blocks[0][0] == 0 ? 0 : 1;
    if (!std::binary_search(d.blocks[static_cast<size_t>(root)].begin(),
                            d.blocks[static_cast<size_t>(root)].end(), 0)) {
        root = 1 - root;
    }
    const auto order = block_cut_order(d, root);
    REQUIRE(order.size() == 2);
    CHECK(order[0].block == root);
    CHECK(order[0].entry_cut == -1);
    CHECK(order[1].entry_cut == 1);  // enters through b

    const BlockDecomposition single = decompose(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    const auto one = block_cut_order(single, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].entry_cut == -1);

    CHECK_THROWS_AS(block_cut_order(single, 5), InputError);
}

TEST_CASE("block-cut order covers every block exactly once") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 7);
        const Graph g = random_connected(rng, n, 0.25);
        const BlockDecomposition d = decompose(g);
        const auto order = block_cut_order(d, 0);
        REQUIRE(static_cast<int>(order.size()) == d.block_count());
        std::set<int> seen;
        for (const auto& visit : order) seen.insert(visit.block);
        CHECK(static_cast<int>(seen.size()) == d.block_count());
        for (size_t i = 1; i < order.size(); ++i) {
            // the entry vertex lies in the block and is a cut vertex
            CHECK(order[i].entry_cut >= 0);
            CHECK(d.is_cut_vertex(order[i].entry_cut));
            const auto& b = d.blocks[static_cast<size_t>(order[i].block)];
            CHECK(std::binary_search(b.begin(), b.end(), order[i].entry_cut));
        }
    }
}
