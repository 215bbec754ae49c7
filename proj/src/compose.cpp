#include "mvd/compose.hpp"

#include <algorithm>
#include <map>

#include "mvd/errors.hpp"

namespace mvd {

namespace {

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

// Periodic floor(n/2)-coloring along the cycle.
Coloring cycle_block_coloring(const Graph& g) {
    const int n = g.order();
    const int k = n / 2;
    Coloring c;
    c.colors.assign(static_cast<size_t>(n), 0);
    int prev = -1;
    int cur = 0;
    for (int j = 0; j < n; ++j) {
        c.colors[static_cast<size_t>(cur)] = j % k + 1;
        const auto& nb = g.neighbors(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return c;
}

}  // namespace

BlockSolve solve_block(const Graph& block, const CatalogStore* store, int cap) {
    const int n = block.order();
    if (is_complete(block)) {
        Coloring c;
        for (int i = 1; i <= n; ++i) c.colors.push_back(i);
        return {n, std::move(c), "complete"};
    }
    if (n >= 4 && is_cycle_graph(block)) {
        return {n / 2, cycle_block_coloring(block), "cycle"};
    }
    if (store != nullptr) {
        if (auto match = find_isomorphic(*store, block)) {
            return {match->entry->mvd_value, transfer_coloring(*match->entry, match->mapping, 0),
                    "catalog:" + match->entry->name};
        }
    }
    if (n <= cap) {
        SolveReport report = mvd_exact(block, cap);
        return {report.value, std::move(report.witness), "exact"};
    }
    std::string labels;
    for (int v = 0; v < std::min(n, 5); ++v) {
        if (v) labels += ", ";
        labels += block.label(v);
    }
    throw CapacityError("block of order " + std::to_string(n) + " ({" + labels +
                        (n > 5 ? ", ..." : "") + "}) exceeds cap " + std::to_string(cap) +
                        " and matches no catalog entry");
}

namespace {

int root_block_of(const BlockDecomposition& d) {
    for (int b = 0; b < d.block_count(); ++b) {
        if (std::binary_search(d.blocks[static_cast<size_t>(b)].begin(),
                               d.blocks[static_cast<size_t>(b)].end(), 0)) {
            return b;
        }
    }
    return 0;
}

}  // namespace

SolveReport mvd_compose(const Graph& g, const CatalogStore* store, int cap) {
    const BlockDecomposition d = decompose(g);
    const int r = d.block_count();

    std::vector<BlockSolve> solved;
    solved.reserve(static_cast<size_t>(r));
    int total = 0;
    for (int b = 0; b < r; ++b) {
        solved.push_back(solve_block(d.block_graphs[static_cast<size_t>(b)], store, cap));
        total += solved.back().value;
    }

    SolveReport report;
    report.value = total - r + 1;
    report.method = SolveMethod::compose;
    bool all_catalog = true;
    for (int b = 0; b < r; ++b) {
        report.per_block.push_back({b, d.block_graphs[static_cast<size_t>(b)].order(),
                                    solved[static_cast<size_t>(b)].value,
                                    solved[static_cast<size_t>(b)].source});
        all_catalog = all_catalog && solved[static_cast<size_t>(b)].source.rfind("catalog:", 0) == 0;
    }
    if (all_catalog) report.method = SolveMethod::catalog;

    // Witness assembly. Every non-root block has exactly one vertex that is
    // already colored: the cut vertex it was entered through. Its class takes
    // that color, every other class a fresh one.
    report.witness.colors.assign(static_cast<size_t>(g.order()), 0);
    int next_color = 1;
    for (const BlockVisit& visit : block_cut_order(d, root_block_of(d))) {
        const VertexSet& members = d.blocks[static_cast<size_t>(visit.block)];
        const Coloring& local = solved[static_cast<size_t>(visit.block)].coloring;

        std::map<int, int> to_global;
        if (visit.entry_cut >= 0) {
            const size_t pos = static_cast<size_t>(
                std::lower_bound(members.begin(), members.end(), visit.entry_cut) - members.begin());
            to_global[local.colors[pos]] =
                report.witness.colors[static_cast<size_t>(visit.entry_cut)];
        }
        for (size_t i = 0; i < members.size(); ++i) {
            auto [it, inserted] = to_global.emplace(local.colors[i], next_color);
            if (inserted) ++next_color;
            report.witness.colors[static_cast<size_t>(members[i])] = it->second;
        }
    }
    return report;
}

PartialBounds mvd_partial(const Graph& g, const CatalogStore* store, int cap) {
    const BlockDecomposition d = decompose(g);
    const int r = d.block_count();
    PartialBounds bounds;
    int lo = 0;
    int hi = 0;
    for (int b = 0; b < r; ++b) {
        const Graph& block = d.block_graphs[static_cast<size_t>(b)];
        try {
            const BlockSolve s = solve_block(block, store, cap);
            lo += s.value;
            hi += s.value;
            bounds.per_block.push_back({b, block.order(), s.value, s.source});
        } catch (const CapacityError&) {
            const int block_ub = is_complete(block) ? block.order()
                                                    : block.order() - kappa_plus(block) + 1;
            lo += 1;
            hi += block_ub;
            bounds.per_block.push_back({b, block.order(), -1, "unresolved"});
        }
    }
    bounds.lower = lo - r + 1;
    bounds.upper = hi - r + 1;
    return bounds;
}

}  // namespace mvd
