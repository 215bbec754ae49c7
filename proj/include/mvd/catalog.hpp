#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mvd/graph.hpp"
#include "mvd/solver.hpp"

namespace mvd {

// Isomorphism-invariant fingerprint used to prefilter catalog lookups.
struct CatalogKey {
    int n = 0;
    int m = 0;
    std::vector<int> degrees;    // sorted
    std::vector<int> triangles;  // per-vertex triangle counts, sorted

    bool operator==(const CatalogKey&) const = default;
};

CatalogKey catalog_key(const Graph& g);

// Small graph with a known mvd-coloring; the unit of the type set.
struct CatalogEntry {
    std::string name;  // file stem, used for ordering and reporting
    Graph graph;
    Coloring coloring;
    int mvd_value = 0;
    std::vector<std::string> tags;
    CatalogKey key;
};

// Catalog file format, one graph per file:
//   # tags: cycle, minimally-2-connected     (optional comment lines)
//   a:1, b:2, c:1, d:2
//   0, 1, 0, 1
//   1, 0, 1, 0
//   0, 1, 0, 1
//   1, 0, 1, 0
// Throws FormatError on malformed text and IntegrityError when the stored
// coloring is not an MVD-coloring of the stored graph.
CatalogEntry load_entry(std::string_view text, const std::string& name = "");
std::string save_entry(const CatalogEntry& e);

struct CatalogStore {
    std::vector<CatalogEntry> entries;  // file-name lexicographic order

    // Loads every regular file in the directory, sorted by file name.
    static CatalogStore load_directory(const std::filesystem::path& dir);
    bool empty() const { return entries.empty(); }
};

// Adjacency-preserving bijection a -> b, or nullopt. Deterministic: the first
// mapping found by index-order backtracking with degree/triangle/
// neighbor-degree pruning.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

struct CatalogMatch {
    const CatalogEntry* entry;
    std::vector<int> mapping;  // entry vertex i -> g vertex mapping[i]
};

// First entry (store order) isomorphic to g, with its vertex mapping.
std::optional<CatalogMatch> find_isomorphic(const CatalogStore& store, const Graph& g);

// Coloring of the mapping's target: vertex mapping[i] receives the entry
// color of i, shifted by offset. The class structure equals the entry's.
Coloring transfer_coloring(const CatalogEntry& e, const std::vector<int>& mapping, int offset);

struct CatalogIssue {
    std::string entry;
    std::string problem;
    bool warning = false;  // duplicates warn, everything else fails
};

struct CatalogCheckReport {
    int checked = 0;
    std::vector<CatalogIssue> issues;

    bool ok() const {
        for (const auto& i : issues) {
            if (!i.warning) return false;
        }
        return true;
    }
};

// Integrity audit: every coloring is MVD, exact recomputation for entries
// with order <= cap, minimally-2-connected tags hold, duplicate isomorphs
// are flagged.
CatalogCheckReport catalog_check(const CatalogStore& store, int cap = kDefaultCap);

}  // namespace mvd
