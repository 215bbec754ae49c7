#include "mvd/families.hpp"

#include <algorithm>

#include "mvd/catalog.hpp"
#include "mvd/errors.hpp"

namespace mvd {

namespace {

std::string num_label(const std::string& prefix, int i) { return prefix + std::to_string(i); }

std::vector<std::string> v_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(num_label("v", i));
    return labels;
}

void need_params(const FamilySpec& spec, size_t count) {
    if (spec.params.size() != count) {
        throw InputError(std::string(family_name(spec.family)) + " takes " +
                         std::to_string(count) + " parameter(s)");
    }
}

Graph make_cycle(int n) {
    if (n < 3) throw InputError("cycle needs order >= 3");
    auto labels = v_labels(n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>((i + 1) % n)]);
    return Graph::from_edge_list(labels, edges);
}

Graph make_path(int n) {
    if (n < 1) throw InputError("path needs order >= 1");
    auto labels = v_labels(n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(i + 1)]);
    return Graph::from_edge_list(labels, edges);
}

Graph make_complete(int n) {
    if (n < 1) throw InputError("complete graph needs order >= 1");
    auto labels = v_labels(n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]);
    }
    return Graph::from_edge_list(labels, edges);
}

Graph make_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw InputError("complete multipartite needs part sizes");
    for (int p : parts) {
        if (p < 1) throw InputError("part sizes must be >= 1");
    }
    if (parts.size() == 1 && parts[0] > 1) {
        throw InputError("complete multipartite with one part is edgeless");
    }
    std::vector<std::string> labels;
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int j = 1; j <= parts[i]; ++j) {
            labels.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(j));
            part_of.push_back(static_cast<int>(i));
        }
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t a = 0; a < labels.size(); ++a) {
        for (size_t b = a + 1; b < labels.size(); ++b) {
            if (part_of[a] != part_of[b]) edges.emplace_back(labels[a], labels[b]);
        }
    }
    return Graph::from_edge_list(labels, edges);
}

Graph make_wheel(int n) {
    if (n < 4) throw InputError("wheel needs order >= 4");
    std::vector<std::string> rim;
    for (int i = 1; i < n; ++i) rim.push_back(num_label("c", i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n - 1; ++i) edges.emplace_back(rim[static_cast<size_t>(i)], rim[static_cast<size_t>((i + 1) % (n - 1))]);
    const Graph cycle = Graph::from_edge_list(rim, edges);
    const Graph hub = Graph::from_edge_list({"hub"}, {});
    return join(cycle, hub);
}

Graph make_theta(const std::vector<int>& parts) {
    if (parts.size() < 2) throw InputError("theta needs at least two paths");
    for (int p : parts) {
        if (p < 1) throw InputError("theta path lengths must be >= 1");
    }
    std::vector<std::string> labels{"u", "v"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::string prev = "u";
        for (int j = 1; j <= parts[i]; ++j) {
            const std::string cur = "p" + std::to_string(i + 1) + "_" + std::to_string(j);
            labels.push_back(cur);
            edges.emplace_back(prev, cur);
            prev = cur;
        }
        edges.emplace_back(prev, "v");
    }
    return Graph::from_edge_list(labels, edges);
}

Graph make_petersen() {
    std::vector<std::string> labels;
    for (int i = 1; i <= 5; ++i) labels.push_back(num_label("o", i));
    for (int i = 1; i <= 5; ++i) labels.push_back(num_label("i", i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(num_label("o", i + 1), num_label("o", (i + 1) % 5 + 1));
        edges.emplace_back(num_label("o", i + 1), num_label("i", i + 1));
        edges.emplace_back(num_label("i", i + 1), num_label("i", (i + 2) % 5 + 1));
    }
    return Graph::from_edge_list(labels, edges);
}

Graph make_near_complete(int n, int k) {
    if (n < 3) throw InputError("near-complete graph needs order >= 3");
    if (k < 1 || k > n - 2) throw InputError("near-complete edge count must be in [1, n-2]");
    std::vector<std::string> labels = v_labels(n - 1);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n - 1; ++j) edges.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]);
    }
    labels.push_back("w");
    for (int i = 1; i <= k; ++i) edges.emplace_back("w", num_label("v", i));
    return Graph::from_edge_list(labels, edges);
}

// Edge patterns deleted from K_n, over vertices v1..v6. Patterns follow the
// case split for three and four removed edges: 1 = star at v1, 2 = triangle,
// 3 = three-edge path, 4 = two-edge path plus a disjoint edge, 5 = perfect
// matching on six vertices, 6 = four-edge path.
Graph make_kminus(int pattern, int n) {
    static const std::vector<std::vector<std::pair<int, int>>> patterns = {
        {{1, 2}, {1, 3}, {1, 4}},          // 1
        {{1, 2}, {1, 3}, {2, 3}},          // 2
        {{1, 2}, {2, 3}, {3, 4}},          // 3
        {{1, 2}, {2, 3}, {4, 5}},          // 4
        {{1, 2}, {3, 4}, {5, 6}},          // 5
        {{1, 2}, {2, 3}, {3, 4}, {4, 5}},  // 6
    };
    if (pattern < 1 || pattern > 6) throw InputError("edge pattern must be in 1..6");
    const auto& removed = patterns[static_cast<size_t>(pattern - 1)];
    const int min_n = pattern == 5 || pattern == 6 ? 6 : 5;
    if (n < min_n) {
        throw InputError("pattern " + std::to_string(pattern) + " needs order >= " +
                         std::to_string(min_n));
    }
    auto labels = v_labels(n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const bool drop = std::any_of(removed.begin(), removed.end(), [&](const auto& e) {
                return e.first == i && e.second == j;
            });
            if (!drop) edges.emplace_back(num_label("v", i), num_label("v", j));
        }
    }
    return Graph::from_edge_list(labels, edges);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::complete: return "complete";
        case Family::complete_multipartite: return "multipartite";
        case Family::wheel: return "wheel";
        case Family::grid: return "grid";
        case Family::petersen: return "petersen";
        case Family::theta: return "theta";
        case Family::complete_minus_edges: return "kminus";
        case Family::near_complete: return "nearcomplete";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::cycle, Family::path, Family::complete, Family::complete_multipartite,
                     Family::wheel, Family::grid, Family::petersen, Family::theta,
                     Family::complete_minus_edges, Family::near_complete}) {
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::cycle:
            need_params(spec, 1);
            return make_cycle(spec.params[0]);
        case Family::path:
            need_params(spec, 1);
            return make_path(spec.params[0]);
        case Family::complete:
            need_params(spec, 1);
            return make_complete(spec.params[0]);
        case Family::complete_multipartite:
            return make_multipartite(spec.params);
        case Family::wheel:
            need_params(spec, 1);
            return make_wheel(spec.params[0]);
        case Family::grid:
            need_params(spec, 2);
            if (spec.params[0] < 1 || spec.params[1] < 1) throw InputError("grid sides must be >= 1");
            return cartesian_product(make_path(spec.params[0]), make_path(spec.params[1]));
        case Family::petersen:
            need_params(spec, 0);
            return make_petersen();
        case Family::theta:
            return make_theta(spec.params);
        case Family::complete_minus_edges:
            need_params(spec, 2);
            return make_kminus(spec.params[0], spec.params[1]);
        case Family::near_complete:
            need_params(spec, 2);
            return make_near_complete(spec.params[0], spec.params[1]);
    }
    throw InputError("unknown family");
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<std::string> labels = g.labels();
    labels.insert(labels.end(), h.labels().begin(), h.labels().end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(g.label(u), g.label(v));
    for (const auto& [u, v] : h.edges()) edges.emplace_back(h.label(u), h.label(v));
    for (const auto& gl : g.labels()) {
        for (const auto& hl : h.labels()) edges.emplace_back(gl, hl);
    }
    return Graph::from_edge_list(labels, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    auto name = [&](int a, int b) { return g.label(a) + "." + h.label(b); };
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < h.order(); ++b) labels.push_back(name(a, b));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < h.order(); ++b) {
            for (int b2 : h.neighbors(b)) {
                if (b2 > b) edges.emplace_back(name(a, b), name(a, b2));
            }
            for (int a2 : g.neighbors(a)) {
                if (a2 > a) edges.emplace_back(name(a, b), name(a2, b));
            }
        }
    }
    return Graph::from_edge_list(labels, edges);
}

namespace {

// Multipartite closed form on sorted part sizes.
int multipartite_value(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    const int k = static_cast<int>(parts.size());
    int n = 0;
    for (int p : parts) n += p;
    const int ge2 = static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int p) { return p >= 2; }));
    if (ge2 == 0) return n;            // K_n
    if (ge2 == 1) return n - k + 2;    // one nontrivial part
    if (k == 2) return 2;              // K_{a,b}, a,b >= 2
    return 1;                          // k > 2 with two nontrivial parts
}

}  // namespace

std::optional<int> mvd_formula(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::cycle: {
            need_params(spec, 1);
            const int n = spec.params[0];
            if (n < 3) throw InputError("cycle needs order >= 3");
            return n == 3 ? 3 : n / 2;
        }
        case Family::path:
            need_params(spec, 1);
            if (spec.params[0] < 1) throw InputError("path needs order >= 1");
            return spec.params[0];
        case Family::complete:
            need_params(spec, 1);
            if (spec.params[0] < 1) throw InputError("complete graph needs order >= 1");
            return spec.params[0];
        case Family::complete_multipartite:
            generate(spec);  // validate params
            return multipartite_value(spec.params);
        case Family::wheel:
            need_params(spec, 1);
            if (spec.params[0] < 4) throw InputError("wheel needs order >= 4");
            return spec.params[0] == 4 ? 4 : 1;
        case Family::grid: {
            need_params(spec, 2);
            const int m = spec.params[0];
            const int n = spec.params[1];
            if (m < 1 || n < 1) throw InputError("grid sides must be >= 1");
            if (m == 1) return n;
            if (n == 1) return m;
            return 2;
        }
        case Family::petersen:
            need_params(spec, 0);
            return 2;
        case Family::theta:
            generate(spec);  // validate params
            return std::nullopt;
        case Family::complete_minus_edges: {
            need_params(spec, 2);
            generate(spec);  // validate params
            const int pattern = spec.params[0];
            const int n = spec.params[1];
            // Values the source results pin down; patterns 2 and 3 only have
            // one-sided bounds, so no closed form is claimed for them.
            if (pattern == 1) return 5;
            if (pattern == 4) return n == 5 ? 2 : 1;
            if (pattern == 5) return 1;
            if (pattern == 6) return 2;
            return std::nullopt;
        }
        case Family::near_complete: {
            need_params(spec, 2);
            generate(spec);  // validate params
            return spec.params[0] - spec.params[1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<int> f_v(int n, int k) {
    if (n < 1) throw InputError("f_v needs n >= 1");
    if (k < 1 || k > n) throw InputError("f_v needs 1 <= k <= n");
    if (n >= 5) {
        if (k == 1) return n - 1;
        if (k <= 3) return n * (n - 1) / 2 - 1;
        return n * (n - 1) / 2;
    }
    static const std::optional<int> table[4][4] = {
        {0, {}, {}, {}},
        {1, 1, {}, {}},
        {2, 2, 2, {}},
        {3, 3, 5, 6},
    };
    return table[n - 1][k - 1];
}

std::optional<int> emax(int n, int k) {
    if (n < 1) throw InputError("emax needs n >= 1");
    if (k < 1 || k > n) throw InputError("emax needs 1 <= k <= n");
    if (n >= 5) {
        const int full = n * (n - 1) / 2;
        if (k == 1) return full - 2;
        if (k == 2) return n == 5 ? 7 : full - 4;
        if (k < n) return full - k + 2;
        return full;
    }
    static const std::optional<int> table[4][4] = {
        {0, {}, {}, {}},
        {{}, 1, {}, {}},
        {{}, {}, 3, {}},
        {{}, 4, 5, 6},
    };
    return table[n - 1][k - 1];
}

int block_bound(int n, int r, int t) {
    if (n < 1 || r < 1 || t < 0 || t > r) {
        throw InputError("block bound needs n >= 1 and 0 <= t <= r with r >= 1");
    }
    const int x = n + 2 * t - r + 1;
    if (x < 0) throw InputError("inconsistent block counts for order " + std::to_string(n));
    return x / 2;
}

std::optional<Coloring> find_k_coloring(const Graph& g, int k) {
    const int n = g.order();
    if (n > 64) throw CapacityError("coloring search needs order <= 64");
    if (k < 1 || k > n) return std::nullopt;
    detail::PartitionEnumerator parts(n);
    do {
        if (parts.part_count() != k) continue;
        Coloring c;
        c.colors.reserve(static_cast<size_t>(n));
        for (int id : parts.current()) c.colors.push_back(id + 1);
        if (is_mvd_coloring(g, c).ok) return c;
    } while (parts.next());
    return std::nullopt;
}

namespace {

// Vertex sequence around a cycle graph, starting at index 0.
std::vector<int> cycle_walk(const Graph& g) {
    std::vector<int> walk{0};
    int prev = -1;
    int cur = 0;
    do {
        const auto& nb = g.neighbors(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        if (cur != 0) walk.push_back(cur);
    } while (cur != 0);
    return walk;
}

bool all_degree(const Graph& g, int d) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != d) return false;
    }
    return true;
}

Coloring distinct_colors(int n) {
    Coloring c;
    for (int i = 1; i <= n; ++i) c.colors.push_back(i);
    return c;
}

// floor(n/2) colors assigned periodically along the cycle.
Coloring cycle_coloring(const Graph& g) {
    const int n = g.order();
    const int k = n / 2;
    Coloring c;
    c.colors.assign(static_cast<size_t>(n), 0);
    const auto walk = cycle_walk(g);
    for (int j = 0; j < n; ++j) {
        c.colors[static_cast<size_t>(walk[static_cast<size_t>(j)])] = j % k + 1;
    }
    return c;
}

std::optional<FormulaSolve> recognize_multipartite(const Graph& g) {
    // Complete multipartite iff the complement is a disjoint union of cliques.
    const int n = g.order();
    std::vector<int> part(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        if (part[static_cast<size_t>(v)] >= 0) continue;
        std::vector<int> group{v};
        part[static_cast<size_t>(v)] = static_cast<int>(groups.size());
        for (int u = v + 1; u < n; ++u) {
            if (part[static_cast<size_t>(u)] < 0 && !g.adjacent(v, u)) {
                group.push_back(u);
                part[static_cast<size_t>(u)] = static_cast<int>(groups.size());
            }
        }
        groups.push_back(std::move(group));
    }
    for (int v = 0; v < n; ++v) {
        for (int u = v + 1; u < n; ++u) {
            const bool same = part[static_cast<size_t>(v)] == part[static_cast<size_t>(u)];
            if (same == g.adjacent(v, u)) return std::nullopt;
        }
    }
    std::vector<int> sizes;
    for (const auto& gr : groups) sizes.push_back(static_cast<int>(gr.size()));
    const int value = multipartite_value(sizes);
    const int k = static_cast<int>(groups.size());

    Coloring witness;
    witness.colors.assign(static_cast<size_t>(n), 1);
    const int ge2 = static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [](int s) { return s >= 2; }));
    std::string desc = "complete multipartite K_{";
    {
        std::vector<int> sorted = sizes;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (i) desc += ",";
            desc += std::to_string(sorted[i]);
        }
        desc += "}";
    }
    if (ge2 == 0) {
        witness = distinct_colors(n);
    } else if (ge2 == 1) {
        // Big part gets distinct colors, all trivial parts share one more.
        size_t big = 0;
        for (size_t i = 0; i < groups.size(); ++i) {
            if (sizes[i] >= 2) big = i;
        }
        int next = 1;
        for (int v : groups[big]) witness.colors[static_cast<size_t>(v)] = next++;
        for (size_t i = 0; i < groups.size(); ++i) {
            if (i == big) continue;
            for (int v : groups[i]) witness.colors[static_cast<size_t>(v)] = n - k + 2;
        }
    } else if (k == 2) {
        for (int v : groups[1]) witness.colors[static_cast<size_t>(v)] = 2;
    }  // k > 2 with two nontrivial parts: uniform coloring already in place
    return FormulaSolve{value, witness, desc};
}

}  // namespace

std::optional<FormulaSolve> formula_solve(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) throw InputError("mvd is defined for connected graphs only");

    if (is_complete(g)) {
        return FormulaSolve{n, distinct_colors(n), "K_" + std::to_string(n)};
    }
    if (n >= 4 && all_degree(g, 2)) {
        return FormulaSolve{n / 2, cycle_coloring(g), "C_" + std::to_string(n)};
    }
    if (g.size() == n - 1) {
        bool path = true;
        for (int v = 0; v < n; ++v) path = path && g.degree(v) <= 2;
        if (path) return FormulaSolve{n, distinct_colors(n), "P_" + std::to_string(n)};
    }
    if (auto mp = recognize_multipartite(g)) return mp;
    if (n >= 6) {
        // Wheel: a hub adjacent to everything, the rest a cycle. Small wheels
        // are complete multipartite and were caught above.
        for (int hub = 0; hub < n; ++hub) {
            if (g.degree(hub) != n - 1) continue;
            VertexSet rim;
            for (int v = 0; v < n; ++v) {
                if (v != hub) rim.push_back(v);
            }
            const Graph rest = induced_subgraph(g, rim);
            if (rest.order() >= 3 && all_degree(rest, 2) && is_connected(rest)) {
                return FormulaSolve{1, Coloring::uniform(n), "W_" + std::to_string(n)};
            }
            break;
        }
    }
    for (int v = 0; v < n; ++v) {
        const int k = g.degree(v);
        if (k > n - 2) continue;
        VertexSet rest;
        for (int u = 0; u < n; ++u) {
            if (u != v) rest.push_back(u);
        }
        if (!is_complete(induced_subgraph(g, rest))) continue;
        // K_{n-1} plus a vertex on k edges: neighbors share one color, the
        // rest are all distinct.
        Coloring witness;
        witness.colors.assign(static_cast<size_t>(n), 0);
        int next = 1;
        for (int u = 0; u < n; ++u) {
            if (u != v && !g.adjacent(v, u)) witness.colors[static_cast<size_t>(u)] = next++;
        }
        witness.colors[static_cast<size_t>(v)] = next++;
        for (int u : g.neighbors(v)) witness.colors[static_cast<size_t>(u)] = next;
        return FormulaSolve{n - k + 1, witness,
                            "K_" + std::to_string(n - 1) + " plus a vertex on " +
                                std::to_string(k) + " edges"};
    }
    if (n == 10 && g.size() == 15 && all_degree(g, 3)) {
        if (find_isomorphism(generate({Family::petersen, {}}), g)) {
            if (auto witness = find_k_coloring(g, 2)) {
                return FormulaSolve{2, *witness, "Petersen"};
            }
        }
    }
    for (int rows = 2; rows * rows <= n; ++rows) {
        if (n % rows != 0) continue;
        const int cols = n / rows;
        const Graph grid = generate({Family::grid, {rows, cols}});
        if (grid.size() != g.size()) continue;
        if (auto mapping = find_isomorphism(grid, g)) {
            // Checkerboard coloring carried through the isomorphism.
            Coloring witness;
            witness.colors.assign(static_cast<size_t>(n), 0);
            int idx = 0;
            for (int i = 0; i < rows; ++i) {
                for (int j = 0; j < cols; ++j, ++idx) {
                    witness.colors[static_cast<size_t>((*mapping)[static_cast<size_t>(idx)])] =
                        (i + j) % 2 + 1;
                }
            }
            return FormulaSolve{2, witness,
                                "grid " + std::to_string(rows) + "x" + std::to_string(cols)};
        }
    }
    return std::nullopt;
}

}  // namespace mvd
