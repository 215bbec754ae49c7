#include "mvd/solver.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "mvd/errors.hpp"

namespace mvd {

int Coloring::color_count() const {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::vector<VertexSet> Coloring::classes() const {
    std::map<int, VertexSet> by_color;
    for (size_t v = 0; v < colors.size(); ++v) {
        by_color[colors[v]].push_back(static_cast<int>(v));
    }
    std::vector<VertexSet> out;
    out.reserve(by_color.size());
    for (auto& [color, members] : by_color) out.push_back(std::move(members));
    return out;
}

Coloring Coloring::normalized() const {
    std::map<int, int> rename;
    Coloring out;
    out.colors.reserve(colors.size());
    for (int c : colors) {
        auto [it, inserted] = rename.emplace(c, static_cast<int>(rename.size()) + 1);
        out.colors.push_back(it->second);
    }
    return out;
}

namespace {

void check_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) {
        throw InputError("coloring covers " + std::to_string(c.colors.size()) +
                         " vertices, graph has " + std::to_string(g.order()));
    }
    for (int color : c.colors) {
        if (color < 1) throw InputError("colors must be positive integers");
    }
}

}  // namespace

std::optional<VertexSet> has_monochromatic_cut(const Graph& g, const Coloring& c, int x, int y) {
    check_coloring(g, c);
    if (x == y) throw InputError("cut query for a vertex with itself");
    if (g.adjacent(x, y)) throw InputError("no vertex cut exists for adjacent vertices");
    for (const auto& cls : c.classes()) {
        VertexSet candidate;
        candidate.reserve(cls.size());
        for (int v : cls) {
            if (v != x && v != y) candidate.push_back(v);
        }
        if (is_separated(g, candidate, x, y)) return candidate;
    }
    return std::nullopt;
}

MvdCheck is_mvd_coloring(const Graph& g, const Coloring& c) {
    check_coloring(g, c);
    const int n = g.order();
    if (n <= 64) {
        // Mask fast path, same contract as the generic one below.
        const auto adj = detail::adjacency_masks(g);
        std::map<int, uint64_t> parts_by_color;
        for (int v = 0; v < n; ++v) parts_by_color[c.colors[static_cast<size_t>(v)]] |= uint64_t{1} << v;
        std::vector<uint64_t> parts;
        parts.reserve(parts_by_color.size());
        for (const auto& [color, mask] : parts_by_color) parts.push_back(mask);
        for (int x = 0; x < n; ++x) {
            for (int y = x + 1; y < n; ++y) {
                if (g.adjacent(x, y)) continue;
                if (!detail::masks_pair_has_cut(adj, n, parts, x, y)) return {false, x, y};
            }
        }
        return {true};
    }
    const auto classes = c.classes();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            bool found = false;
            for (const auto& cls : classes) {
                VertexSet candidate;
                candidate.reserve(cls.size());
                for (int v : cls) {
                    if (v != x && v != y) candidate.push_back(v);
                }
                if (is_separated(g, candidate, x, y)) {
                    found = true;
                    break;
                }
            }
            if (!found) return {false, x, y};
        }
    }
    return {true};
}

int mvd_upper_bound(const Graph& g) {
    if (!is_connected(g)) throw InputError("mvd bound requires a connected graph");
    if (is_complete(g)) return g.order();
    return g.order() - kappa_plus(g) + 1;
}

const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::exact: return "exact";
        case SolveMethod::compose: return "compose";
        case SolveMethod::formula: return "formula";
        case SolveMethod::catalog: return "catalog";
    }
    return "?";
}

namespace detail {

PartitionEnumerator::PartitionEnumerator(int n)
    : n_(n), floor_(1), max_(0), a_(static_cast<size_t>(n), 0),
      prefix_max_(static_cast<size_t>(n), 0) {}

PartitionEnumerator::PartitionEnumerator(int n, const std::vector<int>& prefix)
    : PartitionEnumerator(n) {
    floor_ = std::max(1, static_cast<int>(prefix.size()));
    for (size_t i = 0; i < prefix.size(); ++i) {
        a_[i] = prefix[i];
        prefix_max_[i] = i == 0 ? prefix[0] : std::max(prefix_max_[i - 1], prefix[i]);
    }
    for (size_t i = prefix.size(); i < a_.size(); ++i) {
        prefix_max_[i] = i == 0 ? 0 : prefix_max_[i - 1];
    }
    max_ = prefix_max_[static_cast<size_t>(n_ - 1)];
}

bool PartitionEnumerator::next() {
    // Rightmost position that can still grow: a_[i] may rise to
    // prefix_max_[i-1] + 1. Positions after it reset to 0.
    for (int i = n_ - 1; i >= floor_; --i) {
        if (a_[static_cast<size_t>(i)] <= prefix_max_[static_cast<size_t>(i - 1)]) {
            ++a_[static_cast<size_t>(i)];
            prefix_max_[static_cast<size_t>(i)] =
                std::max(prefix_max_[static_cast<size_t>(i - 1)], a_[static_cast<size_t>(i)]);
            for (int j = i + 1; j < n_; ++j) {
                a_[static_cast<size_t>(j)] = 0;
                prefix_max_[static_cast<size_t>(j)] = prefix_max_[static_cast<size_t>(j - 1)];
            }
            max_ = prefix_max_[static_cast<size_t>(n_ - 1)];
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> rgs_prefixes(int n, int length) {
    const int len = std::max(1, std::min(n, length));
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    auto rec = [&](auto&& self, int mx) -> void {
        if (static_cast<int>(prefix.size()) == len) {
            out.push_back(prefix);
            return;
        }
        const int hi = prefix.empty() ? 0 : mx + 1;
        for (int v = 0; v <= hi; ++v) {
            prefix.push_back(v);
            self(self, std::max(mx, v));
            prefix.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool masks_pair_has_cut(const std::vector<uint64_t>& adj, int n,
                        const std::vector<uint64_t>& parts, int x, int y) {
    const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    const uint64_t endpoints = (uint64_t{1} << x) | (uint64_t{1} << y);
    for (uint64_t part : parts) {
        const uint64_t allowed = all & ~(part & ~endpoints);
        // BFS from x over allowed vertices.
        uint64_t seen = uint64_t{1} << x;
        uint64_t frontier = seen;
        bool hit = false;
        while (frontier != 0) {
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f != 0) {
                const int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= adj[static_cast<size_t>(v)];
            }
            next &= allowed & ~seen;
            if (next & (uint64_t{1} << y)) {
                hit = true;
                break;
            }
            seen |= next;
            frontier = next;
        }
        if (!hit) return true;
    }
    return false;
}

namespace {

bool masks_is_mvd(const std::vector<uint64_t>& adj, int n,
                  const std::vector<std::pair<int, int>>& nonadjacent,
                  const std::vector<uint64_t>& parts) {
    for (const auto& [x, y] : nonadjacent) {
        if (!masks_pair_has_cut(adj, n, parts, x, y)) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> nonadjacent_pairs(const std::vector<uint64_t>& adj, int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (!(adj[static_cast<size_t>(x)] >> y & 1)) pairs.emplace_back(x, y);
        }
    }
    return pairs;
}

}  // namespace

int mvd_value_masks(const std::vector<uint64_t>& adj, int n, int upper_bound) {
    const auto pairs = nonadjacent_pairs(adj, n);
    PartitionEnumerator parts_enum(n);
    std::vector<uint64_t> parts;
    int best = 0;
    do {
        const int k = parts_enum.part_count();
        if (k <= best) continue;
        parts.assign(static_cast<size_t>(k), 0);
        const auto& a = parts_enum.current();
        for (int v = 0; v < n; ++v) parts[static_cast<size_t>(a[static_cast<size_t>(v)])] |= uint64_t{1} << v;
        if (masks_is_mvd(adj, n, pairs, parts)) {
            best = k;
            if (best >= upper_bound) break;
        }
    } while (parts_enum.next());
    return best;
}

}  // namespace detail

namespace {

struct ExactShard {
    int best = 0;
    std::vector<int> witness;
};

// Scans one enumerator to exhaustion. shared_best is a lower bound on the
// final value published by all workers; partitions with fewer parts than it
// can never win, but ties must still be tested so each shard keeps its own
// lexicographically first maximum.
void scan_partitions(const std::vector<uint64_t>& adj, int n,
                     const std::vector<std::pair<int, int>>& pairs, int bound,
                     detail::PartitionEnumerator& parts_enum, std::atomic<int>& shared_best,
                     ExactShard& shard) {
    std::vector<uint64_t> parts;
    do {
        const int k = parts_enum.part_count();
        if (k <= shard.best || k < shared_best.load(std::memory_order_relaxed)) continue;
        const auto& a = parts_enum.current();
        parts.assign(static_cast<size_t>(k), 0);
        for (int v = 0; v < n; ++v) {
            parts[static_cast<size_t>(a[static_cast<size_t>(v)])] |= uint64_t{1} << v;
        }
        bool ok = true;
        for (const auto& [x, y] : pairs) {
            if (!detail::masks_pair_has_cut(adj, n, parts, x, y)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            shard.best = k;
            shard.witness = a;
            int seen = shared_best.load(std::memory_order_relaxed);
            while (seen < k && !shared_best.compare_exchange_weak(seen, k)) {
            }
            if (shard.best >= bound) break;
        }
    } while (parts_enum.next());
}

}  // namespace

SolveReport mvd_exact(const Graph& g, int cap, int jobs) {
    if (!is_connected(g)) throw InputError("mvd is defined for connected graphs only");
    if (g.order() > cap || g.order() > 64) {
        throw CapacityError("graph order " + std::to_string(g.order()) +
                            " exceeds the exact solver cap " +
                            std::to_string(std::min(cap, 64)));
    }
    const int n = g.order();
    const int bound = mvd_upper_bound(g);
    const auto adj = detail::adjacency_masks(g);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (!g.adjacent(x, y)) pairs.emplace_back(x, y);
        }
    }

    std::atomic<int> shared_best{0};
    std::vector<ExactShard> shards;
    if (jobs <= 1 || n < 6) {
        shards.resize(1);
        detail::PartitionEnumerator parts_enum(n);
        scan_partitions(adj, n, pairs, bound, parts_enum, shared_best, shards[0]);
    } else {
        // Workers own round-robin slices of the fixed-prefix blocks; each
        // reports its own lexicographically first maximum, so the merge is
        // independent of completion order.
        const auto prefixes = detail::rgs_prefixes(n, 5);
        jobs = std::min<int>(jobs, static_cast<int>(prefixes.size()));
        shards.resize(static_cast<size_t>(jobs));
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) {
            threads.emplace_back([&, j] {
                for (size_t p = static_cast<size_t>(j); p < prefixes.size();
                     p += static_cast<size_t>(jobs)) {
                    detail::PartitionEnumerator parts_enum(n, prefixes[p]);
                    scan_partitions(adj, n, pairs, bound, parts_enum, shared_best,
                                    shards[static_cast<size_t>(j)]);
                    if (shards[static_cast<size_t>(j)].best >= bound) break;
                }
            });
        }
        for (auto& t : threads) t.join();
    }

    const ExactShard* winner = &shards[0];
    for (const ExactShard& shard : shards) {
        if (shard.best > winner->best ||
            (shard.best == winner->best && !shard.witness.empty() &&
             shard.witness < winner->witness)) {
            winner = &shard;
        }
    }

    SolveReport report;
    report.value = winner->best;
    report.method = SolveMethod::exact;
    report.witness.colors.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        report.witness.colors[static_cast<size_t>(v)] =
            winner->witness[static_cast<size_t>(v)] + 1;
    }
    return report;
}

}  // namespace mvd
