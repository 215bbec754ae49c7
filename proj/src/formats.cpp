#include "mvd/formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "mvd/errors.hpp"

namespace mvd {

namespace detail {

std::string trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(std::string(s.substr(start)));
            break;
        }
        out.push_back(std::string(s.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> data_lines(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& raw : split(text, '\n')) {
        std::string line = raw;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

}  // namespace detail

namespace {

using detail::split;
using detail::trim;

void check_name(const std::string& name) {
    if (name.empty()) throw FormatError("empty vertex name");
    for (char ch : name) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '-' ||
            ch == ':' || ch == '#') {
            throw FormatError("vertex name '" + name + "' contains a reserved character");
        }
    }
}

int parse_positive_int(const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size() || value < 1) throw FormatError("");
        return value;
    } catch (const std::exception&) {
        throw FormatError("expected a positive integer for " + what + ", got '" + text + "'");
    }
}

}  // namespace

Graph parse_mvdg(std::string_view text) {
    const auto lines = detail::data_lines(text);
    if (lines.size() < 1 || lines.size() > 2) {
        throw FormatError("expected a 'vertices:' line and an 'edges:' line");
    }
    const std::string vprefix = "vertices:";
    const std::string eprefix = "edges:";
    if (lines[0].rfind(vprefix, 0) != 0) {
        throw FormatError("first line must start with 'vertices:'");
    }
    std::vector<std::string> labels;
    const std::string vrest = trim(lines[0].substr(vprefix.size()));
    if (!vrest.empty()) {
        for (const auto& tok : split(vrest, ',')) {
            const std::string name = trim(tok);
            check_name(name);
            labels.push_back(name);
        }
    }

    std::vector<std::pair<std::string, std::string>> edges;
    if (lines.size() == 2) {
        if (lines[1].rfind(eprefix, 0) != 0) {
            throw FormatError("second line must start with 'edges:'");
        }
        const std::string rest = trim(lines[1].substr(eprefix.size()));
        if (!rest.empty()) {
            for (const auto& tok : split(rest, ',')) {
                const auto ends = split(tok, '-');
                if (ends.size() != 2) {
                    throw FormatError("edge '" + trim(tok) + "' is not of the form a-b");
                }
                edges.emplace_back(trim(ends[0]), trim(ends[1]));
            }
        }
    }
    try {
        return Graph::from_edge_list(labels, edges);
    } catch (const InputError& e) {
        throw FormatError(e.what());
    }
}

std::string format_mvdg(const Graph& g) {
    std::ostringstream out;
    out << "vertices: ";
    for (int v = 0; v < g.order(); ++v) {
        if (v) out << ", ";
        out << g.label(v);
    }
    out << "\nedges: ";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) out << ", ";
        first = false;
        out << g.label(u) << "-" << g.label(v);
    }
    out << "\n";
    return out.str();
}

Graph parse_matrix_graph(std::string_view text) {
    const auto lines = detail::data_lines(text);
    if (lines.empty()) throw FormatError("empty graph file");
    std::vector<std::string> labels;
    for (const auto& tok : split(lines[0], ',')) {
        std::string name = trim(tok);
        const size_t colon = name.find(':');
        if (colon != std::string::npos) name = trim(name.substr(0, colon));
        check_name(name);
        labels.push_back(name);
    }
    const size_t n = labels.size();
    if (lines.size() != n + 1) {
        throw FormatError("expected " + std::to_string(n) + " matrix rows, found " +
                          std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<int>> matrix;
    for (size_t i = 1; i <= n; ++i) {
        std::vector<int> row;
        for (const auto& tok : split(lines[i], ',')) {
            const std::string cell = trim(tok);
            if (cell != "0" && cell != "1") {
                throw FormatError("matrix entries must be 0 or 1, got '" + cell + "'");
            }
            row.push_back(cell == "1" ? 1 : 0);
        }
        matrix.push_back(std::move(row));
    }
    try {
        return Graph::from_adjacency_matrix(labels, matrix);
    } catch (const InputError& e) {
        throw FormatError(e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << content;
}

Graph load_graph_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    const auto lines = detail::data_lines(text);
    if (!lines.empty() && lines[0].rfind("vertices:", 0) == 0) {
        return parse_mvdg(text);
    }
    return parse_matrix_graph(text);
}

void save_mvdg(const Graph& g, const std::filesystem::path& path) {
    write_text_file(path, format_mvdg(g));
}

Coloring parse_coloring(const Graph& g, std::string_view text) {
    Coloring c;
    c.colors.assign(static_cast<size_t>(g.order()), 0);
    for (const auto& tok : split(text, ',')) {
        const auto parts = split(tok, ':');
        if (parts.size() != 2) {
            throw FormatError("coloring entry '" + trim(tok) + "' is not of the form name:color");
        }
        const std::string name = trim(parts[0]);
        const int v = g.index_of(name);
        if (v < 0) throw FormatError("coloring names unknown vertex '" + name + "'");
        if (c.colors[static_cast<size_t>(v)] != 0) {
            throw FormatError("vertex '" + name + "' colored twice");
        }
        c.colors[static_cast<size_t>(v)] = parse_positive_int(trim(parts[1]), "color of '" + name + "'");
    }
    for (int v = 0; v < g.order(); ++v) {
        if (c.colors[static_cast<size_t>(v)] == 0) {
            throw FormatError("vertex '" + g.label(v) + "' has no color");
        }
    }
    return c;
}

std::string format_coloring(const Graph& g, const Coloring& c) {
    std::ostringstream out;
    for (int v = 0; v < g.order(); ++v) {
        if (v) out << ", ";
        out << g.label(v) << ":" << c.colors[static_cast<size_t>(v)];
    }
    return out.str();
}

}  // namespace mvd
