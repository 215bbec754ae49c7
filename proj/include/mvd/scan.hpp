#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvd/graph.hpp"
#include "mvd/solver.hpp"

namespace mvd {

// Edge subsets of the n-vertex labeled graph are encoded as integers over the
// fixed lexicographic pair ordering (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::vector<std::pair<int, int>> edge_slots(int n);
Graph graph_from_edge_code(int n, uint64_t code);
uint64_t edge_code(const Graph& g);

struct ScanRow {
    int k = 0;
    std::optional<int> expected;
    std::optional<int> observed;
    uint64_t witness_code = 0;  // a graph achieving the observed value, if any
    bool ok = false;
};

struct ScanResult {
    int n = 0;
    uint64_t total_codes = 0;      // 2^C(n,2)
    uint64_t connected_count = 0;  // connected labeled graphs seen
    std::vector<ScanRow> emax_rows;  // max size with mvd = k, k = 1..n
    std::vector<ScanRow> fv_rows;    // size threshold forcing mvd >= k

    bool ok() const;
    std::vector<uint64_t> counterexamples() const;  // witness codes of failing rows
};

// Enumerates every labeled graph on n vertices, tabulates the extremal size
// per mvd value, and compares against the closed forms. jobs > 1 shards the
// code range; results are identical for any worker count.
ScanResult scan_extremal(int n, int cap = kDefaultCap, int jobs = 1, int max_n = 6);

struct PropertyScan {
    int n = 0;
    std::string property;
    uint64_t connected_checked = 0;
    std::vector<uint64_t> violations;

    bool ok() const { return violations.empty(); }
};

// Checks one invariant over all connected labeled graphs of order n.
// Properties: "bound", "blocks-complete-iff-n", "compose-agrees-exact",
// "restriction".
PropertyScan scan_property(int n, const std::string& property, int jobs = 1, int max_n = 7);

const std::vector<std::string>& scan_property_names();

}  // namespace mvd
