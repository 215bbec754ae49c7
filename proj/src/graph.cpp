#include "mvd/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace mvd {

namespace {

void check_labels(const std::vector<std::string>& labels) {
    if (labels.empty()) {
        throw InputError("graph needs at least one vertex");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) {
            throw InputError("empty vertex label");
        }
        if (!seen.insert(l).second) {
            throw InputError("duplicate vertex label '" + l + "'");
        }
    }
}

}  // namespace

void Graph::rebuild_neighbors() {
    nbrs_.assign(static_cast<size_t>(n_), {});
    m_ = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            if (adj_[static_cast<size_t>(u) * n_ + v]) {
                nbrs_[static_cast<size_t>(u)].push_back(v);
                if (u < v) ++m_;
            }
        }
    }
}

Graph Graph::from_edge_list(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
    check_labels(labels);
    Graph g;
    g.n_ = static_cast<int>(labels.size());
    g.labels_ = labels;
    g.adj_.assign(static_cast<size_t>(g.n_) * g.n_, 0);

    std::unordered_map<std::string, int> index;
    for (int i = 0; i < g.n_; ++i) index[labels[static_cast<size_t>(i)]] = i;

    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw InputError("edge endpoint '" + a + "' is not a vertex");
        if (ib == index.end()) throw InputError("edge endpoint '" + b + "' is not a vertex");
        if (ia->second == ib->second) throw InputError("self-loop at '" + a + "'");
        g.adj_[static_cast<size_t>(ia->second) * g.n_ + ib->second] = 1;
        g.adj_[static_cast<size_t>(ib->second) * g.n_ + ia->second] = 1;
    }
    g.rebuild_neighbors();
    return g;
}

Graph Graph::from_adjacency_matrix(const std::vector<std::string>& labels,
                                   const std::vector<std::vector<int>>& matrix) {
    check_labels(labels);
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(matrix.size()) != n) {
        throw InputError("adjacency matrix has " + std::to_string(matrix.size()) +
                         " rows for " + std::to_string(n) + " labels");
    }
    Graph g;
    g.n_ = n;
    g.labels_ = labels;
    g.adj_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        const auto& row = matrix[static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != n) {
            throw InputError("adjacency matrix row " + std::to_string(i + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " + std::to_string(n));
        }
        for (int j = 0; j < n; ++j) {
            const int e = row[static_cast<size_t>(j)];
            if (e != 0 && e != 1) {
                throw InputError("adjacency matrix entries must be 0 or 1");
            }
            if (i == j && e != 0) {
                throw InputError("nonzero diagonal at '" + labels[static_cast<size_t>(i)] + "'");
            }
            g.adj_[static_cast<size_t>(i) * n + j] = static_cast<uint8_t>(e);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.adj_[static_cast<size_t>(i) * n + j] != g.adj_[static_cast<size_t>(j) * n + i]) {
                throw InputError("adjacency matrix is not symmetric at (" + std::to_string(i + 1) +
                                 ", " + std::to_string(j + 1) + ")");
            }
        }
    }
    g.rebuild_neighbors();
    return g;
}

int Graph::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i) {
        if (labels_[static_cast<size_t>(i)] == label) return i;
    }
    return -1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : nbrs_[static_cast<size_t>(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g = *this;
    g.adj_[static_cast<size_t>(u) * n_ + v] = 0;
    g.adj_[static_cast<size_t>(v) * n_ + u] = 0;
    g.rebuild_neighbors();
    return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) {
        throw InputError("induced subgraph of empty vertex set");
    }
    std::vector<std::string> labels;
    labels.reserve(s.size());
    for (int v : s) {
        if (v < 0 || v >= g.order()) {
            throw InputError("vertex index " + std::to_string(v) + " out of range");
        }
        labels.push_back(g.label(v));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (g.adjacent(s[i], s[j])) {
                edges.emplace_back(g.label(s[i]), g.label(s[j]));
            }
        }
    }
    return Graph::from_edge_list(labels, edges);
}

namespace {

// BFS reachability from x, ignoring vertices marked removed.
std::vector<char> reach(const Graph& g, int x, const std::vector<char>& removed) {
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::queue<int> q;
    seen[static_cast<size_t>(x)] = 1;
    q.push(x);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!seen[static_cast<size_t>(v)] && !removed[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                q.push(v);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    std::vector<char> removed(static_cast<size_t>(g.order()), 0);
    const auto seen = reach(g, 0, removed);
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> assigned(static_cast<size_t>(g.order()), 0);
    std::vector<char> removed(static_cast<size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) {
        if (assigned[static_cast<size_t>(v)]) continue;
        const auto seen = reach(g, v, removed);
        VertexSet comp;
        for (int u = 0; u < g.order(); ++u) {
            if (seen[static_cast<size_t>(u)]) {
                comp.push_back(u);
                assigned[static_cast<size_t>(u)] = 1;
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_separated(const Graph& g, const VertexSet& s, int x, int y) {
    if (x == y) throw InputError("is_separated requires distinct vertices");
    std::vector<char> removed(static_cast<size_t>(g.order()), 0);
    for (int v : s) {
        if (v == x || v == y) {
            throw InputError("cut set contains an endpoint");
        }
        removed.at(static_cast<size_t>(v)) = 1;
    }
    const auto seen = reach(g, x, removed);
    return !seen[static_cast<size_t>(y)];
}

int local_connectivity(const Graph& g, int x, int y) {
    if (x == y) throw InputError("local connectivity of a vertex with itself");
    if (g.adjacent(x, y)) {
        throw InputError("local connectivity is defined for nonadjacent vertices");
    }
    // Vertex-split digraph: node 2v = v_in, 2v+1 = v_out. Every vertex except
    // x, y gets a unit in->out arc; each edge uv gives wide arcs u_out->v_in
    // and v_out->u_in. Max flow from x_out to y_in equals kappa(x, y).
    const int n = g.order();
    const int nodes = 2 * n;
    const int wide = n + 1;
    std::vector<int> cap(static_cast<size_t>(nodes) * nodes, 0);
    auto at = [&](int a, int b) -> int& { return cap[static_cast<size_t>(a) * nodes + b]; };
    for (int v = 0; v < n; ++v) {
        at(2 * v, 2 * v + 1) = (v == x || v == y) ? wide : 1;
    }
    for (const auto& [u, v] : g.edges()) {
        at(2 * u + 1, 2 * v) = wide;
        at(2 * v + 1, 2 * u) = wide;
    }
    const int source = 2 * x + 1;
    const int sink = 2 * y;
    int flow = 0;
    while (true) {
        std::vector<int> prev(static_cast<size_t>(nodes), -1);
        prev[static_cast<size_t>(source)] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && prev[static_cast<size_t>(sink)] == -1) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < nodes; ++v) {
                if (prev[static_cast<size_t>(v)] == -1 && at(u, v) > 0) {
                    prev[static_cast<size_t>(v)] = u;
                    q.push(v);
                }
            }
        }
        if (prev[static_cast<size_t>(sink)] == -1) break;
        for (int v = sink; v != source; v = prev[static_cast<size_t>(v)]) {
            const int u = prev[static_cast<size_t>(v)];
            --at(u, v);
            ++at(v, u);
        }
        ++flow;
    }
    return flow;
}

int kappa_plus(const Graph& g) {
    if (!is_connected(g)) throw InputError("kappa_plus requires a connected graph");
    if (is_complete(g)) throw DomainError("kappa_plus is undefined for complete graphs");
    int best = 0;
    for (int x = 0; x < g.order(); ++x) {
        for (int y = x + 1; y < g.order(); ++y) {
            if (!g.adjacent(x, y)) {
                best = std::max(best, local_connectivity(g, x, y));
            }
        }
    }
    return best;
}

bool is_complete(const Graph& g) {
    return static_cast<long long>(g.size()) * 2 ==
           static_cast<long long>(g.order()) * (g.order() - 1);
}

bool is_2_connected(const Graph& g) {
    const int n = g.order();
    if (n < 3 || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v) {
        std::vector<char> removed(static_cast<size_t>(n), 0);
        removed[static_cast<size_t>(v)] = 1;
        const int start = v == 0 ? 1 : 0;
        const auto seen = reach(g, start, removed);
        for (int u = 0; u < n; ++u) {
            if (u != v && !seen[static_cast<size_t>(u)]) return false;
        }
    }
    return true;
}

bool is_minimally_2_connected(const Graph& g) {
    if (!is_2_connected(g)) return false;
    for (const auto& [u, v] : g.edges()) {
        if (is_2_connected(g.without_edge(u, v))) return false;
    }
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        for (int w : g.neighbors(u)) {
            if (w != v && g.adjacent(w, v)) return false;
        }
    }
    return true;
}

int triangle_count(const Graph& g, int v) {
    int count = 0;
    const auto& nv = g.neighbors(v);
    for (size_t i = 0; i < nv.size(); ++i) {
        for (size_t j = i + 1; j < nv.size(); ++j) {
            if (g.adjacent(nv[i], nv[j])) ++count;
        }
    }
    return count;
}

namespace detail {

std::vector<uint64_t> adjacency_masks(const Graph& g) {
    assert(g.order() <= 64);
    std::vector<uint64_t> masks(static_cast<size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) {
        for (int u : g.neighbors(v)) {
            masks[static_cast<size_t>(v)] |= uint64_t{1} << u;
        }
    }
    return masks;
}

}  // namespace detail

}  // namespace mvd
