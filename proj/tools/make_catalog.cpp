// Regenerates the shipped catalog: cycles C4..C11 with their periodic
// colorings, every generalized theta graph with at least three paths and
// order at most 10 with a brute-forced witness, and the two stock 9-vertex
// entries. Usage: mvd-make-catalog <output-dir>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "mvd/catalog.hpp"
#include "mvd/compose.hpp"
#include "mvd/families.hpp"
#include "mvd/formats.hpp"
#include "mvd/solver.hpp"

namespace fs = std::filesystem;

namespace {

// Stock 9-vertex entries, kept byte-for-byte so existing catalogs stay compatible.
const char* kNineVertex9 =
    "a:1, b:2, c:1, d:2, e:1, f:2, g:1, h:1, i:2\n"
    "0, 1, 0, 0, 0, 1, 0, 0, 0\n"
    "1, 0, 1, 0, 0, 0, 1, 0, 0\n"
    "0, 1, 0, 1, 0, 0, 0, 1, 1\n"
    "0, 0, 1, 0, 1, 0, 0, 0, 0\n"
    "0, 0, 0, 1, 0, 1, 0, 0, 1\n"
    "1, 0, 0, 0, 1, 0, 1, 1, 0\n"
    "0, 1, 0, 0, 0, 1, 0, 0, 0\n"
    "0, 0, 1, 0, 0, 1, 0, 0, 0\n"
    "0, 0, 1, 0, 1, 0, 0, 0, 0\n";

const char* kNineVertex11 =
    "a:1, b:2, c:1, d:2, e:1, f:2, g:2, h:1, i:2\n"
    "0, 1, 0, 0, 0, 1, 1, 0, 1\n"
    "1, 0, 1, 0, 0, 0, 0, 0, 0\n"
    "0, 1, 0, 1, 0, 0, 0, 0, 0\n"
    "0, 0, 1, 0, 1, 0, 0, 1, 0\n"
    "0, 0, 0, 1, 0, 1, 0, 0, 0\n"
    "1, 0, 0, 0, 1, 0, 0, 0, 0\n"
    "1, 0, 0, 0, 0, 0, 0, 1, 0\n"
    "0, 0, 0, 1, 0, 0, 1, 0, 1\n"
    "1, 0, 0, 0, 0, 0, 0, 1, 0\n";

void write_entry(const fs::path& dir, const std::string& name, mvd::CatalogEntry entry) {
    entry.name = name;
    const fs::path target = dir / (name + ".txt");
    mvd::write_text_file(target, mvd::save_entry(entry));
    std::cout << "wrote " << target.string() << " (n=" << entry.graph.order()
              << ", mvd=" << entry.mvd_value << ")\n";
}

mvd::CatalogEntry entry_from(mvd::Graph g, mvd::Coloring c, std::vector<std::string> tags) {
    mvd::CatalogEntry e;
    e.graph = std::move(g);
    e.coloring = std::move(c);
    e.mvd_value = e.coloring.color_count();
    e.tags = std::move(tags);
    e.key = mvd::catalog_key(e.graph);
    return e;
}

// All k-part multisets n_1 >= ... >= n_k >= 1 with the given sum.
void partitions_into(int sum, int max_part, int min_parts, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    if (sum == 0) {
        if (static_cast<int>(current.size()) >= min_parts) out.push_back(current);
        return;
    }
    for (int part = std::min(sum, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_into(sum - part, part, min_parts, current, out);
        current.pop_back();
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: mvd-make-catalog <output-dir>\n";
        return 2;
    }
    const fs::path dir = argv[1];
    fs::create_directories(dir);

    for (int n = 4; n <= 11; ++n) {
        const mvd::Graph g = mvd::generate({mvd::Family::cycle, {n}});
        const mvd::BlockSolve s = mvd::solve_block(g, nullptr);
        char name[16];
        std::snprintf(name, sizeof name, "cycle_%02d", n);
        write_entry(dir, name, entry_from(g, s.coloring, {"cycle", "minimally-2-connected"}));
    }

    for (int sum = 3; sum <= 8; ++sum) {
        std::vector<std::vector<int>> specs;
        std::vector<int> current;
        partitions_into(sum, sum, 3, current, specs);
        for (const auto& parts : specs) {
            const mvd::Graph g = mvd::generate({mvd::Family::theta, parts});
            const mvd::SolveReport r = mvd::mvd_exact(g);
            std::string name = "theta";
            for (int p : parts) name += "_" + std::to_string(p);
            write_entry(dir, name,
                        entry_from(g, r.witness, {"theta", "minimally-2-connected"}));
        }
    }

    mvd::write_text_file(dir / "graph_9Vertex-9.txt", kNineVertex9);
    std::cout << "wrote " << (dir / "graph_9Vertex-9.txt").string() << "\n";
    mvd::write_text_file(dir / "graph_9Vertex-11.txt", kNineVertex11);
    std::cout << "wrote " << (dir / "graph_9Vertex-11.txt").string() << "\n";

    // Everything just written must load and audit cleanly.
    const mvd::CatalogStore store = mvd::CatalogStore::load_directory(dir);
    const mvd::CatalogCheckReport report = mvd::catalog_check(store);
    for (const auto& issue : report.issues) {
        std::cerr << issue.entry << ": " << issue.problem << "\n";
    }
    if (!report.ok()) return 1;
    std::cout << report.checked << " entries verified\n";
    return 0;
}
