#include "mvd/scan.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "mvd/compose.hpp"
#include "mvd/errors.hpp"
#include "mvd/families.hpp"

namespace mvd {

std::vector<std::pair<int, int>> edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    return slots;
}

Graph graph_from_edge_code(int n, uint64_t code) {
    if (n < 1 || n * (n - 1) / 2 > 64) {
        throw InputError("edge codes cover orders 1..11 only");
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    const auto slots = edge_slots(n);
    for (size_t b = 0; b < slots.size(); ++b) {
        if (code >> b & 1) {
            edges.emplace_back(labels[static_cast<size_t>(slots[b].first)],
                               labels[static_cast<size_t>(slots[b].second)]);
        }
    }
    return Graph::from_edge_list(labels, edges);
}

uint64_t edge_code(const Graph& g) {
    if (g.order() * (g.order() - 1) / 2 > 64) {
        throw InputError("edge codes cover orders 1..11 only");
    }
    uint64_t code = 0;
    const auto slots = edge_slots(g.order());
    for (size_t b = 0; b < slots.size(); ++b) {
        if (g.adjacent(slots[b].first, slots[b].second)) code |= uint64_t{1} << b;
    }
    return code;
}

namespace {

std::vector<uint64_t> masks_from_code(int n, uint64_t code,
                                      const std::vector<std::pair<int, int>>& slots) {
    std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
    for (size_t b = 0; b < slots.size(); ++b) {
        if (code >> b & 1) {
            adj[static_cast<size_t>(slots[b].first)] |= uint64_t{1} << slots[b].second;
            adj[static_cast<size_t>(slots[b].second)] |= uint64_t{1} << slots[b].first;
        }
    }
    return adj;
}

bool masks_connected(const std::vector<uint64_t>& adj, int n) {
    const uint64_t all = (uint64_t{1} << n) - 1;
    uint64_t seen = 1;
    uint64_t frontier = 1;
    while (frontier != 0) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f != 0) {
            const int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= adj[static_cast<size_t>(v)];
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all;
}

// Cache key: the edge code after relabeling vertices in (degree, index)
// order. Equal keys imply isomorphic graphs; different labelings of the same
// graph may still miss, which only costs a recompute.
uint64_t degree_sorted_code(const std::vector<uint64_t>& adj, int n,
                            const std::vector<std::pair<int, int>>& slots) {
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return __builtin_popcountll(adj[static_cast<size_t>(a)]) <
               __builtin_popcountll(adj[static_cast<size_t>(b)]);
    });
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    uint64_t code = 0;
    for (size_t b = 0; b < slots.size(); ++b) {
        const int u = pos[static_cast<size_t>(slots[b].first)];
        const int v = pos[static_cast<size_t>(slots[b].second)];
        const int lo = std::min(u, v);
        const int hi = std::max(u, v);
        // slot index of (lo, hi) in lexicographic order
        const size_t idx = static_cast<size_t>(lo) * (2 * n - lo - 1) / 2 + (hi - lo - 1);
        if (adj[static_cast<size_t>(slots[b].first)] >> slots[b].second & 1) {
            code |= uint64_t{1} << idx;
        }
    }
    return code;
}

struct ExtremalShard {
    uint64_t connected = 0;
    // per mvd value k (1..n): best edge count and a witness code
    std::vector<int> best_size;
    std::vector<uint64_t> witness;
};

ExtremalShard extremal_worker(int n, uint64_t lo, uint64_t hi) {
    const auto slots = edge_slots(n);
    ExtremalShard shard;
    shard.best_size.assign(static_cast<size_t>(n + 1), -1);
    shard.witness.assign(static_cast<size_t>(n + 1), 0);
    std::unordered_map<uint64_t, int> memo;
    for (uint64_t code = lo; code < hi; ++code) {
        const auto adj = masks_from_code(n, code, slots);
        if (!masks_connected(adj, n)) continue;
        ++shard.connected;
        const uint64_t key = degree_sorted_code(adj, n, slots);
        int value;
        if (auto it = memo.find(key); it != memo.end()) {
            value = it->second;
        } else {
            value = detail::mvd_value_masks(adj, n, n);
            memo.emplace(key, value);
        }
        const int edges = static_cast<int>(__builtin_popcountll(code));
        if (edges > shard.best_size[static_cast<size_t>(value)]) {
            shard.best_size[static_cast<size_t>(value)] = edges;
            shard.witness[static_cast<size_t>(value)] = code;
        }
    }
    return shard;
}

template <typename Shard, typename Worker>
std::vector<Shard> run_sharded(uint64_t total, int jobs, Worker worker) {
    jobs = std::max(1, jobs);
    const uint64_t chunk = (total + static_cast<uint64_t>(jobs) - 1) / static_cast<uint64_t>(jobs);
    std::vector<Shard> shards(static_cast<size_t>(jobs));
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
        const uint64_t lo = std::min(total, static_cast<uint64_t>(j) * chunk);
        const uint64_t hi = std::min(total, lo + chunk);
        threads.emplace_back([&shards, j, lo, hi, &worker] {
            shards[static_cast<size_t>(j)] = worker(lo, hi);
        });
    }
    for (auto& t : threads) t.join();
    return shards;
}

}  // namespace

bool ScanResult::ok() const {
    auto rows_ok = [](const std::vector<ScanRow>& rows) {
        return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.ok; });
    };
    return rows_ok(emax_rows) && rows_ok(fv_rows);
}

std::vector<uint64_t> ScanResult::counterexamples() const {
    std::vector<uint64_t> out;
    for (const auto& rows : {emax_rows, fv_rows}) {
        for (const auto& r : rows) {
            if (!r.ok) out.push_back(r.witness_code);
        }
    }
    return out;
}

ScanResult scan_extremal(int n, int cap, int jobs, int max_n) {
    if (n < 1) throw InputError("scan needs n >= 1");
    if (n > max_n) {
        throw CapacityError("extremal scan of order " + std::to_string(n) + " exceeds limit " +
                            std::to_string(max_n));
    }
    if (n > cap) throw CapacityError("scan order exceeds the exact solver cap");

    const int bits = n * (n - 1) / 2;
    const uint64_t total = uint64_t{1} << bits;
    const auto shards = run_sharded<ExtremalShard>(
        total, jobs, [n](uint64_t lo, uint64_t hi) { return extremal_worker(n, lo, hi); });

    ScanResult result;
    result.n = n;
    result.total_codes = total;
    std::vector<int> best_size(static_cast<size_t>(n + 1), -1);
    std::vector<uint64_t> witness(static_cast<size_t>(n + 1), 0);
    for (const auto& shard : shards) {
        result.connected_count += shard.connected;
        for (int k = 1; k <= n; ++k) {
            if (shard.best_size[static_cast<size_t>(k)] > best_size[static_cast<size_t>(k)]) {
                best_size[static_cast<size_t>(k)] = shard.best_size[static_cast<size_t>(k)];
                witness[static_cast<size_t>(k)] = shard.witness[static_cast<size_t>(k)];
            }
        }
    }

    for (int k = 1; k <= n; ++k) {
        ScanRow row;
        row.k = k;
        row.expected = emax(n, k);
        if (best_size[static_cast<size_t>(k)] >= 0) {
            row.observed = best_size[static_cast<size_t>(k)];
            row.witness_code = witness[static_cast<size_t>(k)];
        }
        row.ok = row.expected == row.observed;
        result.emax_rows.push_back(row);
    }
    for (int k = 1; k <= n; ++k) {
        // Smallest m >= n-1 such that every connected graph with at least m
        // edges has mvd >= k: one past the largest size seen with mvd < k.
        int below = -1;
        uint64_t below_witness = 0;
        for (int j = 1; j < k; ++j) {
            if (best_size[static_cast<size_t>(j)] > below) {
                below = best_size[static_cast<size_t>(j)];
                below_witness = witness[static_cast<size_t>(j)];
            }
        }
        ScanRow row;
        row.k = k;
        row.expected = f_v(n, k);
        row.observed = std::max(n - 1, below + 1);
        row.witness_code = below_witness;
        row.ok = row.expected == row.observed;
        result.fv_rows.push_back(row);
    }
    return result;
}

namespace {

bool all_blocks_complete(const Graph& g) {
    for (const auto& block : decompose(g).block_graphs) {
        if (!is_complete(block)) return false;
    }
    return true;
}

bool check_property(const Graph& g, int prop, int n) {
    switch (prop) {
        case 0: {  // bound
            const int value = mvd_exact(g).value;
            return value >= 1 && value <= mvd_upper_bound(g);
        }
        case 1: {  // blocks-complete-iff-n
            const int value = mvd_exact(g).value;
            return (value == n) == all_blocks_complete(g);
        }
        case 2: {  // compose-agrees-exact
            const SolveReport composed = mvd_compose(g, nullptr);
            if (composed.value != mvd_exact(g).value) return false;
            if (composed.witness.color_count() != composed.value) return false;
            return is_mvd_coloring(g, composed.witness).ok;
        }
        case 3: {  // restriction
            const Coloring witness = mvd_exact(g).witness;
            for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
                VertexSet s;
                for (int v = 0; v < n; ++v) {
                    if (mask >> v & 1) s.push_back(v);
                }
                const Graph sub = induced_subgraph(g, s);
                if (!is_connected(sub)) continue;
                Coloring restricted;
                for (int v : s) restricted.colors.push_back(witness.colors[static_cast<size_t>(v)]);
                if (!is_mvd_coloring(sub, restricted).ok) return false;
            }
            return true;
        }
        default:
            return false;
    }
}

struct PropertyShard {
    uint64_t connected = 0;
    std::vector<uint64_t> violations;
};

}  // namespace

const std::vector<std::string>& scan_property_names() {
    static const std::vector<std::string> names{"bound", "blocks-complete-iff-n",
                                                "compose-agrees-exact", "restriction"};
    return names;
}

PropertyScan scan_property(int n, const std::string& property, int jobs, int max_n) {
    if (n < 1) throw InputError("scan needs n >= 1");
    if (n > max_n) {
        throw CapacityError("property scan of order " + std::to_string(n) + " exceeds limit " +
                            std::to_string(max_n));
    }
    const auto& names = scan_property_names();
    const auto it = std::find(names.begin(), names.end(), property);
    if (it == names.end()) {
        throw InputError("unknown property '" + property + "'");
    }
    const int prop = static_cast<int>(it - names.begin());

    const int bits = n * (n - 1) / 2;
    const uint64_t total = uint64_t{1} << bits;
    const auto slots = edge_slots(n);
    const auto shards = run_sharded<PropertyShard>(total, jobs, [&](uint64_t lo, uint64_t hi) {
        PropertyShard shard;
        for (uint64_t code = lo; code < hi; ++code) {
            const auto adj = masks_from_code(n, code, slots);
            if (!masks_connected(adj, n)) continue;
            ++shard.connected;
            if (!check_property(graph_from_edge_code(n, code), prop, n)) {
                shard.violations.push_back(code);
            }
        }
        return shard;
    });

    PropertyScan result;
    result.n = n;
    result.property = property;
    for (const auto& shard : shards) {
        result.connected_checked += shard.connected;
        result.violations.insert(result.violations.end(), shard.violations.begin(),
                                 shard.violations.end());
    }
    return result;
}

}  // namespace mvd
