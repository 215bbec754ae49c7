#include "mvd/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "mvd/errors.hpp"
#include "mvd/formats.hpp"

namespace mvd {

CatalogKey catalog_key(const Graph& g) {
    CatalogKey key;
    key.n = g.order();
    key.m = g.size();
    for (int v = 0; v < g.order(); ++v) {
        key.degrees.push_back(g.degree(v));
        key.triangles.push_back(triangle_count(g, v));
    }
    std::sort(key.degrees.begin(), key.degrees.end());
    std::sort(key.triangles.begin(), key.triangles.end());
    return key;
}

CatalogEntry load_entry(std::string_view text, const std::string& name) {
    CatalogEntry e;
    e.name = name;

    // Tags ride on comment lines, which the matrix parser ignores.
    for (const auto& raw : detail::split(std::string(text), '\n')) {
        const std::string line = detail::trim(raw);
        const std::string prefix = "# tags:";
        if (line.rfind(prefix, 0) == 0) {
            for (const auto& tok : detail::split(line.substr(prefix.size()), ',')) {
                const std::string tag = detail::trim(tok);
                if (!tag.empty()) e.tags.push_back(tag);
            }
        }
    }

    const auto lines = detail::data_lines(text);
    if (lines.empty()) throw FormatError("empty catalog entry");
    e.graph = parse_matrix_graph(text);

    // Colors come from the header line.
    std::vector<int> colors;
    for (const auto& tok : detail::split(lines[0], ',')) {
        const auto parts = detail::split(tok, ':');
        if (parts.size() != 2) {
            throw FormatError("catalog header entry '" + detail::trim(tok) +
                              "' is not of the form name:color");
        }
        const std::string ctext = detail::trim(parts[1]);
        int color = 0;
        try {
            size_t used = 0;
            color = std::stoi(ctext, &used);
            if (used != ctext.size()) color = 0;
        } catch (const std::exception&) {
            color = 0;
        }
        if (color < 1) {
            throw FormatError("bad color in catalog header entry '" + detail::trim(tok) + "'");
        }
        colors.push_back(color);
    }
    e.coloring.colors = std::move(colors);
    e.mvd_value = e.coloring.color_count();
    e.key = catalog_key(e.graph);

    if (!is_connected(e.graph)) {
        throw IntegrityError("catalog entry '" + name + "' is disconnected");
    }
    const MvdCheck check = is_mvd_coloring(e.graph, e.coloring);
    if (!check.ok) {
        throw IntegrityError("catalog entry '" + name + "' stores a coloring that is not an " +
                             "MVD-coloring; failing pair (" + e.graph.label(check.fail_x) + ", " +
                             e.graph.label(check.fail_y) + ")");
    }
    return e;
}

std::string save_entry(const CatalogEntry& e) {
    std::ostringstream out;
    if (!e.tags.empty()) {
        out << "# tags: ";
        for (size_t i = 0; i < e.tags.size(); ++i) {
            if (i) out << ", ";
            out << e.tags[i];
        }
        out << "\n";
    }
    out << format_coloring(e.graph, e.coloring) << "\n";
    const int n = e.graph.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ", ";
            out << (e.graph.adjacent(i, j) ? 1 : 0);
        }
        out << "\n";
    }
    return out.str();
}

CatalogStore CatalogStore::load_directory(const std::filesystem::path& dir) {
    CatalogStore store;
    if (!std::filesystem::exists(dir)) return store;
    std::vector<std::filesystem::path> files;
    for (const auto& item : std::filesystem::directory_iterator(dir)) {
        if (item.is_regular_file()) files.push_back(item.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    for (const auto& file : files) {
        store.entries.push_back(load_entry(read_text_file(file), file.stem().string()));
    }
    return store;
}

namespace {

// Per-vertex signature: degree, triangle count, sorted neighbor degrees.
struct VertexSig {
    int degree;
    int triangles;
    std::vector<int> nbr_degrees;

    bool operator==(const VertexSig&) const = default;
};

std::vector<VertexSig> signatures(const Graph& g) {
    std::vector<VertexSig> sigs(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto& s = sigs[static_cast<size_t>(v)];
        s.degree = g.degree(v);
        s.triangles = triangle_count(g, v);
        for (int u : g.neighbors(v)) s.nbr_degrees.push_back(g.degree(u));
        std::sort(s.nbr_degrees.begin(), s.nbr_degrees.end());
    }
    return sigs;
}

bool extend(const Graph& a, const Graph& b, const std::vector<VertexSig>& sa,
            const std::vector<VertexSig>& sb, std::vector<int>& mapping,
            std::vector<char>& used, int next) {
    const int n = a.order();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[static_cast<size_t>(cand)]) continue;
        if (!(sa[static_cast<size_t>(next)] == sb[static_cast<size_t>(cand)])) continue;
        bool consistent = true;
        for (int prev = 0; prev < next; ++prev) {
            if (a.adjacent(next, prev) != b.adjacent(cand, mapping[static_cast<size_t>(prev)])) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        mapping[static_cast<size_t>(next)] = cand;
        used[static_cast<size_t>(cand)] = 1;
        if (extend(a, b, sa, sb, mapping, used, next + 1)) return true;
        used[static_cast<size_t>(cand)] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (!(catalog_key(a) == catalog_key(b))) return std::nullopt;
    const auto sa = signatures(a);
    const auto sb = signatures(b);
    std::vector<int> mapping(static_cast<size_t>(a.order()), -1);
    std::vector<char> used(static_cast<size_t>(a.order()), 0);
    if (extend(a, b, sa, sb, mapping, used, 0)) return mapping;
    return std::nullopt;
}

std::optional<CatalogMatch> find_isomorphic(const CatalogStore& store, const Graph& g) {
    const CatalogKey key = catalog_key(g);
    for (const auto& entry : store.entries) {
        if (!(entry.key == key)) continue;
        if (auto mapping = find_isomorphism(entry.graph, g)) {
            return CatalogMatch{&entry, std::move(*mapping)};
        }
    }
    return std::nullopt;
}

Coloring transfer_coloring(const CatalogEntry& e, const std::vector<int>& mapping, int offset) {
    const int n = e.graph.order();
    if (static_cast<int>(mapping.size()) != n) {
        throw InputError("mapping size does not match the catalog entry");
    }
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (int v : mapping) {
        if (v < 0 || v >= n || hit[static_cast<size_t>(v)]) {
            throw InputError("mapping is not a bijection");
        }
        hit[static_cast<size_t>(v)] = 1;
    }
    Coloring out;
    out.colors.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        out.colors[static_cast<size_t>(mapping[static_cast<size_t>(i)])] =
            e.coloring.colors[static_cast<size_t>(i)] + offset;
    }
    return out;
}

CatalogCheckReport catalog_check(const CatalogStore& store, int cap) {
    CatalogCheckReport report;
    for (const auto& e : store.entries) {
        ++report.checked;
        const MvdCheck check = is_mvd_coloring(e.graph, e.coloring);
        if (!check.ok) {
            report.issues.push_back({e.name, "stored coloring is not an MVD-coloring; failing pair (" +
                                                 e.graph.label(check.fail_x) + ", " +
                                                 e.graph.label(check.fail_y) + ")"});
            continue;
        }
        if (e.coloring.color_count() != e.mvd_value) {
            report.issues.push_back({e.name, "color count disagrees with the stored mvd value"});
        }
        if (e.graph.order() <= cap) {
            const int exact = mvd_exact(e.graph, cap).value;
            if (exact != e.mvd_value) {
                report.issues.push_back({e.name, "stored mvd " + std::to_string(e.mvd_value) +
                                                     " but exact solve gives " + std::to_string(exact)});
            }
        }
        for (const auto& tag : e.tags) {
            if (tag == "minimally-2-connected" && !is_minimally_2_connected(e.graph)) {
                report.issues.push_back({e.name, "tagged minimally-2-connected but is not"});
            }
        }
    }
    for (size_t i = 0; i < store.entries.size(); ++i) {
        for (size_t j = i + 1; j < store.entries.size(); ++j) {
            const auto& a = store.entries[i];
            const auto& b = store.entries[j];
            if (a.key == b.key && find_isomorphism(a.graph, b.graph)) {
                report.issues.push_back({b.name, "isomorphic duplicate of '" + a.name + "'", true});
            }
        }
    }
    return report;
}

}  // namespace mvd
