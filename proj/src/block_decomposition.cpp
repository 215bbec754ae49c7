#include "mvd/block_decomposition.hpp"

#include <algorithm>
#include <queue>

namespace mvd {

int BlockDecomposition::trivial_block_count() const {
    int t = 0;
    for (const auto& b : blocks) {
        if (b.size() == 2) ++t;
    }
    return t;
}

bool BlockDecomposition::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition decompose(const Graph& g) {
    if (!is_connected(g)) {
        throw InputError("block decomposition requires a connected graph");
    }
    const int n = g.order();
    BlockDecomposition d;

    if (n == 1) {
        d.blocks.push_back({0});
        d.pop_orders.push_back({0});
        d.block_graphs.push_back(g);
        d.block_cuts.push_back({});
        return d;
    }

    std::vector<int> disc(static_cast<size_t>(n), 0);  // discovery index, 0 = unvisited
    std::vector<int> low(static_cast<size_t>(n), 0);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<size_t> next_nbr(static_cast<size_t>(n), 0);
    std::vector<int> vstack;  // vertices in discovery order, popped per block
    std::vector<char> is_cut(static_cast<size_t>(n), 0);

    int counter = 1;
    disc[0] = low[0] = counter;
    vstack.push_back(0);

    std::vector<int> dfs{0};
    int root_children = 0;

    while (!dfs.empty()) {
        const int v = dfs.back();
        const auto& nb = g.neighbors(v);
        if (next_nbr[static_cast<size_t>(v)] < nb.size()) {
            const int w = nb[next_nbr[static_cast<size_t>(v)]++];
            if (disc[static_cast<size_t>(w)] == 0) {
                parent[static_cast<size_t>(w)] = v;
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = ++counter;
                vstack.push_back(w);
                dfs.push_back(w);
                if (v == 0) ++root_children;
            } else if (w != parent[static_cast<size_t>(v)]) {
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
            }
        } else {
            dfs.pop_back();
            const int p = parent[static_cast<size_t>(v)];
            if (p < 0) break;
            if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(p)]) {
                // p closes a block: everything discovered after v, plus p.
                std::vector<int> popped;
                while (true) {
                    const int u = vstack.back();
                    vstack.pop_back();
                    popped.push_back(u);
                    if (u == v) break;
                }
                popped.push_back(p);
                d.pop_orders.push_back(popped);
                if (p != 0) is_cut[static_cast<size_t>(p)] = 1;
            } else {
                low[static_cast<size_t>(p)] =
                    std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
            }
        }
    }

    // The root is a cut vertex iff it has more than one DFS child.
    is_cut[0] = root_children > 1 ? 1 : 0;

    for (const auto& popped : d.pop_orders) {
        VertexSet b(popped.begin(), popped.end());
        std::sort(b.begin(), b.end());
        d.block_graphs.push_back(induced_subgraph(g, b));
        d.blocks.push_back(std::move(b));
    }
    for (int v = 0; v < n; ++v) {
        if (is_cut[static_cast<size_t>(v)]) d.cut_vertices.push_back(v);
    }
    d.block_cuts.resize(d.blocks.size());
    for (size_t i = 0; i < d.blocks.size(); ++i) {
        for (int v : d.blocks[i]) {
            if (is_cut[static_cast<size_t>(v)]) d.block_cuts[i].push_back(v);
        }
    }
    return d;
}

std::vector<BlockVisit> block_cut_order(const BlockDecomposition& d, int root_block) {
    if (root_block < 0 || root_block >= d.block_count()) {
        throw InputError("invalid root block index");
    }
    std::vector<BlockVisit> order;
    std::vector<char> block_seen(d.blocks.size(), 0);
    std::vector<char> cut_seen(d.cut_vertices.size(), 0);

    auto cut_slot = [&](int v) {
        return static_cast<size_t>(std::lower_bound(d.cut_vertices.begin(), d.cut_vertices.end(), v) -
                                   d.cut_vertices.begin());
    };

    std::queue<BlockVisit> q;
    q.push({root_block, -1});
    block_seen[static_cast<size_t>(root_block)] = 1;
    while (!q.empty()) {
        const BlockVisit cur = q.front();
        q.pop();
        order.push_back(cur);
        for (int c : d.block_cuts[static_cast<size_t>(cur.block)]) {
            const size_t slot = cut_slot(c);
            if (cut_seen[slot]) continue;
            cut_seen[slot] = 1;
            for (size_t b = 0; b < d.blocks.size(); ++b) {
                if (block_seen[b]) continue;
                if (std::binary_search(d.blocks[b].begin(), d.blocks[b].end(), c)) {
                    block_seen[b] = 1;
                    q.push({static_cast<int>(b), c});
                }
            }
        }
    }
    return order;
}

}  // namespace mvd
