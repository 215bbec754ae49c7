#include "mvd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvd/block_decomposition.hpp"
#include "mvd/catalog.hpp"
#include "mvd/compose.hpp"
#include "mvd/errors.hpp"
#include "mvd/families.hpp"
#include "mvd/formats.hpp"
#include "mvd/scan.hpp"
#include "mvd/solver.hpp"

namespace mvd {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

std::string braced(const std::string& label) { return "{'" + label + "'}"; }

std::string braced(const std::string& label, int color) {
    return "{'" + label + "':" + std::to_string(color) + "}";
}

void print_cut_vertices(const Graph& g, const BlockDecomposition& d, std::ostream& out) {
    out << "cutVerticesSet:[";
    for (size_t i = 0; i < d.cut_vertices.size(); ++i) {
        if (i) out << ", ";
        out << braced(g.label(d.cut_vertices[i]));
    }
    out << "]\n";
}

void print_block_matrix(const Graph& g, const std::vector<int>& members, std::ostream& out) {
    for (int u : members) {
        bool first = true;
        for (int v : members) {
            if (!first) out << "\t";
            first = false;
            out << (u != v && g.adjacent(u, v) ? 1 : 0);
        }
        out << "\n";
    }
}

Graph load_connected_graph(const std::string& path, std::ostream& err, int* exit_code) {
    const Graph g = load_graph_file(path);
    if (!is_connected(g)) {
        err << "error: input graph is disconnected; components:";
        for (const auto& comp : components(g)) {
            err << " {";
            for (size_t i = 0; i < comp.size(); ++i) {
                if (i) err << ", ";
                err << g.label(comp[i]);
            }
            err << "}";
        }
        err << "\n";
        *exit_code = kExitInput;
    }
    return g;
}

std::vector<int> parse_int_params(const std::vector<std::string>& tokens) {
    std::vector<int> params;
    for (const auto& t : tokens) {
        try {
            size_t used = 0;
            params.push_back(std::stoi(t, &used));
            if (used != t.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("expected an integer parameter, got '" + t + "'");
        }
    }
    return params;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path, std::ostream& out) {
    Graph g;
    if (family == "join" || family == "product") {
        if (params.size() != 2) {
            throw InputError(family + " takes two graph files");
        }
        const Graph a = load_graph_file(params[0]);
        const Graph b = load_graph_file(params[1]);
        g = family == "join" ? join(a, b) : cartesian_product(a, b);
    } else {
        const auto fam = family_from_name(family);
        if (!fam) throw InputError("unknown family '" + family + "'");
        g = generate({*fam, parse_int_params(params)});
    }
    const std::string text = format_mvdg(g);
    if (out_path.empty()) {
        out << text;
    } else {
        write_text_file(out_path, text);
        out << "wrote " << out_path << " (n=" << g.order() << ", m=" << g.size() << ")\n";
    }
    return kExitOk;
}

int cmd_blocks(const std::string& path, std::ostream& out, std::ostream& err) {
    int exit_code = kExitOk;
    const Graph g = load_connected_graph(path, err, &exit_code);
    if (exit_code != kExitOk) return exit_code;
    const BlockDecomposition d = decompose(g);

    out << "### Input Graph ###\n";
    out << "n = " << g.order() << ", m = " << g.size() << "\n\n";
    out << "### CutVertices and Blocks  ###\n";
    out << "cutVertices of Input Graph:\n";
    print_cut_vertices(g, d, out);
    out << "\nBlock generated from Graph:\n";
    for (int b = 0; b < d.block_count(); ++b) {
        out << "Block num " << b + 1 << "\n";
        out << "[";
        const auto& order = d.pop_orders[static_cast<size_t>(b)];
        for (size_t i = 0; i < order.size(); ++i) {
            if (i) out << ", ";
            out << braced(g.label(order[i]));
        }
        out << "]\n";
        print_block_matrix(g, order, out);
    }
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_text, std::ostream& out,
               std::ostream& err) {
    int exit_code = kExitOk;
    const Graph g = load_connected_graph(graph_path, err, &exit_code);
    if (exit_code != kExitOk) return exit_code;
    const Coloring c = parse_coloring(g, coloring_text);
    const MvdCheck check = is_mvd_coloring(g, c);
    if (check.ok) {
        out << "OK: coloring with " << c.color_count() << " color(s) is an MVD-coloring\n";
        return kExitOk;
    }
    out << "FAIL: no monochromatic cut separates (" << g.label(check.fail_x) << ", "
        << g.label(check.fail_y) << ")\n";
    return kExitFail;
}

struct SolveOptions {
    std::string input;
    std::string method = "auto";
    int cap = kDefaultCap;
    int jobs = 1;
    std::string catalog_dir = "catalog";
    std::string output;
    std::string format = "text";
    bool partial = false;
};

void print_solve_text(const Graph& g, const BlockDecomposition& d, const SolveReport& report,
                      std::ostream& out) {
    out << "### CutVertices and Blocks  ###\n";
    print_cut_vertices(g, d, out);
    for (const auto& line : report.per_block) {
        out << "Block num " << line.block + 1 << ": order " << line.order << ", mvd " << line.value
            << ", source " << line.source << "\n";
    }
    out << "\nmvd = " << report.value << " (method " << to_string(report.method) << ")\n\n";
    out << "### Coloring Vertices Results ###\n";
    for (int v = 0; v < g.order(); ++v) {
        if (v) out << " ";
        out << braced(g.label(v), report.witness.colors[static_cast<size_t>(v)]);
    }
    out << "\n";
}

void print_solve_jsonl(const Graph& g, const BlockDecomposition& d, const SolveReport& report,
                       std::ostream& out) {
    json graph_line{{"record", "graph"}, {"n", g.order()}, {"m", g.size()}};
    out << graph_line.dump() << "\n";
    json cuts{{"record", "cut_vertices"}};
    cuts["labels"] = json::array();
    for (int v : d.cut_vertices) cuts["labels"].push_back(g.label(v));
    out << cuts.dump() << "\n";
    for (const auto& line : report.per_block) {
        json block{{"record", "block"},
                   {"id", line.block + 1},
                   {"order", line.order},
                   {"value", line.value},
                   {"source", line.source}};
        block["vertices"] = json::array();
        for (int v : d.blocks[static_cast<size_t>(line.block)]) block["vertices"].push_back(g.label(v));
        out << block.dump() << "\n";
    }
    json result{{"record", "result"},
                {"mvd", report.value},
                {"method", to_string(report.method)},
                {"coloring", format_coloring(g, report.witness)}};
    out << result.dump() << "\n";
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.cap < 1) throw InputError("cap must be at least 1");
    int exit_code = kExitOk;
    const Graph g = load_connected_graph(opt.input, err, &exit_code);
    if (exit_code != kExitOk) return exit_code;
    const CatalogStore store = CatalogStore::load_directory(opt.catalog_dir);
    const CatalogStore* store_ptr = store.empty() ? nullptr : &store;

    SolveReport report;
    try {
        if (opt.method == "exact") {
            report = mvd_exact(g, opt.cap, opt.jobs);
        } else if (opt.method == "compose") {
            report = mvd_compose(g, store_ptr, opt.cap);
        } else if (opt.method == "auto") {
            if (auto formula = formula_solve(g)) {
                report.value = formula->value;
                report.witness = std::move(formula->witness);
                report.method = SolveMethod::formula;
            } else {
                report = mvd_compose(g, store_ptr, opt.cap);
            }
        } else {
            throw InputError("unknown method '" + opt.method + "'");
        }
    } catch (const CapacityError& e) {
        if (!opt.partial) throw;
        const PartialBounds bounds = mvd_partial(g, store_ptr, opt.cap);
        err << "capacity: " << e.what() << "\n";
        out << "partial result: " << bounds.lower << " <= mvd <= " << bounds.upper << "\n";
        for (const auto& line : bounds.per_block) {
            out << "Block num " << line.block + 1 << ": order " << line.order << ", ";
            if (line.value >= 0) {
                out << "mvd " << line.value << ", source " << line.source << "\n";
            } else {
                out << "unresolved\n";
            }
        }
        return kExitCapacity;
    }

    const BlockDecomposition d = decompose(g);
    std::ostringstream buffer;
    if (opt.format == "jsonl" || opt.format == "json-lines") {
        print_solve_jsonl(g, d, report, buffer);
    } else if (opt.format == "text") {
        print_solve_text(g, d, report, buffer);
    } else {
        throw InputError("unknown output format '" + opt.format + "'");
    }
    if (opt.output.empty()) {
        out << buffer.str();
    } else {
        write_text_file(opt.output, buffer.str());
        out << "wrote " << opt.output << "\n";
    }
    return kExitOk;
}

int cmd_formula(const std::string& kind, const std::vector<std::string>& params, std::ostream& out) {
    auto print_opt = [&out](std::optional<int> v) {
        if (v) {
            out << *v << "\n";
        } else {
            out << "undefined\n";
        }
        return kExitOk;
    };
    if (kind == "mvd") {
        if (params.empty()) throw InputError("formula mvd takes a family and its parameters");
        const auto fam = family_from_name(params[0]);
        if (!fam) throw InputError("unknown family '" + params[0] + "'");
        const std::vector<std::string> rest(params.begin() + 1, params.end());
        return print_opt(mvd_formula({*fam, parse_int_params(rest)}));
    }
    const auto nums = parse_int_params(params);
    if (kind == "fv") {
        if (nums.size() != 2) throw InputError("formula fv takes n and k");
        return print_opt(f_v(nums[0], nums[1]));
    }
    if (kind == "emax") {
        if (nums.size() != 2) throw InputError("formula emax takes n and k");
        return print_opt(emax(nums[0], nums[1]));
    }
    if (kind == "blockbound") {
        if (nums.size() != 3) throw InputError("formula blockbound takes n, r and t");
        out << block_bound(nums[0], nums[1], nums[2]) << "\n";
        return kExitOk;
    }
    throw InputError("unknown formula '" + kind + "' (mvd, fv, emax, blockbound)");
}

int cmd_catalog(const std::string& action, const std::string& file, const std::string& dir,
                int cap, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    if (cap < 1) throw InputError("cap must be at least 1");
    if (action == "list") {
        const CatalogStore store = CatalogStore::load_directory(dir);
        for (const auto& e : store.entries) {
            out << e.name << ": n=" << e.graph.order() << ", m=" << e.graph.size()
                << ", mvd=" << e.mvd_value;
            if (!e.tags.empty()) {
                out << ", tags=";
                for (size_t i = 0; i < e.tags.size(); ++i) {
                    if (i) out << ",";
                    out << e.tags[i];
                }
            }
            out << "\n";
        }
        out << store.entries.size() << " entr" << (store.entries.size() == 1 ? "y" : "ies") << "\n";
        return kExitOk;
    }
    if (action == "check") {
        CatalogStore store;
        int load_failures = 0;
        if (fs::exists(dir)) {
            std::vector<fs::path> files;
            for (const auto& item : fs::directory_iterator(dir)) {
                if (item.is_regular_file()) files.push_back(item.path());
            }
            std::sort(files.begin(), files.end(),
                      [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
            for (const auto& f : files) {
                try {
                    store.entries.push_back(load_entry(read_text_file(f), f.stem().string()));
                } catch (const Error& e) {
                    err << f.filename().string() << ": " << e.what() << "\n";
                    ++load_failures;
                }
            }
        }
        const CatalogCheckReport report = catalog_check(store, cap);
        for (const auto& issue : report.issues) {
            (issue.warning ? out : err)
                << issue.entry << ": " << (issue.warning ? "warning: " : "") << issue.problem << "\n";
        }
        out << report.checked << " entries checked, " << load_failures << " load failure(s), "
            << report.issues.size() << " issue(s)\n";
        return report.ok() && load_failures == 0 ? kExitOk : kExitFail;
    }
    if (action == "add") {
        if (file.empty()) throw InputError("catalog add takes a file");
        CatalogEntry entry = load_entry(read_text_file(file), fs::path(file).stem().string());
        const CatalogStore store = CatalogStore::load_directory(dir);
        if (auto match = find_isomorphic(store, entry.graph)) {
            out << "warning: isomorphic to existing entry '" << match->entry->name << "'\n";
        }
        if (entry.graph.order() <= cap) {
            const int exact = mvd_exact(entry.graph, cap).value;
            if (exact != entry.mvd_value) {
                throw IntegrityError("entry stores " + std::to_string(entry.mvd_value) +
                                     " colors but mvd is " + std::to_string(exact));
            }
        }
        fs::create_directories(dir);
        const fs::path target = fs::path(dir) / fs::path(file).filename();
        write_text_file(target, save_entry(entry));
        out << "added " << target.string() << "\n";
        return kExitOk;
    }
    throw InputError("unknown catalog action '" + action + "' (list, check, add)");
}

int cmd_scan_extremal(int n, int cap, int jobs, int max_n, std::ostream& out) {
    const ScanResult result = scan_extremal(n, cap, jobs, max_n);
    out << "scan extremal n=" << n << ": " << result.total_codes << " graphs, "
        << result.connected_count << " connected\n";
    auto opt_str = [](std::optional<int> v) { return v ? std::to_string(*v) : "undefined"; };
    auto cell = [](const std::string& s) {
        return s.size() >= 10 ? s : s + std::string(10 - s.size(), ' ');
    };
    out << cell("k") << cell("emax") << cell("expect") << cell("fv") << cell("expect") << "\n";
    for (int k = 1; k <= n; ++k) {
        const auto& e = result.emax_rows[static_cast<size_t>(k - 1)];
        const auto& f = result.fv_rows[static_cast<size_t>(k - 1)];
        out << cell(std::to_string(k)) << cell(opt_str(e.observed)) << cell(opt_str(e.expected))
            << cell(opt_str(f.observed)) << cell(opt_str(f.expected)) << "\n";
    }
    for (const auto& row : result.emax_rows) {
        out << "k=" << row.k << " emax=" << opt_str(row.observed) << " expect="
            << opt_str(row.expected) << " " << (row.ok ? "ok" : "FAIL") << "\n";
    }
    for (const auto& row : result.fv_rows) {
        out << "k=" << row.k << " fv=" << opt_str(row.observed) << " expect="
            << opt_str(row.expected) << " " << (row.ok ? "ok" : "FAIL") << "\n";
    }
    if (!result.ok()) {
        out << "counterexample codes:";
        for (uint64_t code : result.counterexamples()) out << " " << code;
        out << "\n";
        return kExitFail;
    }
    out << "all rows match\n";
    return kExitOk;
}

int cmd_scan_property(int n, const std::string& prop, int jobs, int max_n, std::ostream& out) {
    const PropertyScan result = scan_property(n, prop, jobs, max_n);
    out << "scan property n=" << n << " prop=" << prop << ": " << result.connected_checked
        << " connected graphs checked\n";
    out << "violations: " << result.violations.size() << "\n";
    if (!result.ok()) {
        for (uint64_t code : result.violations) {
            out << "violation code " << code << ": " << format_mvdg(graph_from_edge_code(n, code));
        }
        return kExitFail;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monochromatic vertex-disconnection toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family as .mvdg");
    std::string gen_family;
    std::vector<std::string> gen_params;
    std::string gen_out;
    gen->add_option("family", gen_family,
                    "cycle|path|complete|multipartite|wheel|grid|petersen|theta|kminus|"
                    "nearcomplete|join|product")
        ->required();
    gen->add_option("params", gen_params, "family parameters (join/product take two .mvdg files)");
    gen->add_option("-o,--output", gen_out, "write to file instead of stdout");

    // blocks
    auto* blocks = app.add_subcommand("blocks", "print cut vertices and blocks");
    std::string blocks_input;
    blocks->add_option("graph", blocks_input, "input graph file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
    std::string verify_input;
    std::string verify_coloring;
    verify->add_option("graph", verify_input, "input graph file")->required();
    verify->add_option("coloring", verify_coloring, "coloring as 'a:1, b:2, ...'")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "compute mvd and a witness coloring");
    SolveOptions solve_opt;
    solve->add_option("graph", solve_opt.input, "input graph file")->required();
    solve->add_option("--method", solve_opt.method, "auto|exact|compose (default auto)");
    solve->add_option("--cap", solve_opt.cap, "exact solver order cap (default 11)");
    solve->add_option("--jobs", solve_opt.jobs, "worker threads for --method exact (default 1)");
    solve->add_option("--catalog", solve_opt.catalog_dir, "catalog directory (default ./catalog)");
    solve->add_option("-o,--output", solve_opt.output, "write the report to a file");
    solve->add_option("--format", solve_opt.format, "text|jsonl (default text)");
    solve->add_flag("--partial", solve_opt.partial, "report bounds when a block exceeds the cap");

    // formula
    auto* formula = app.add_subcommand("formula", "closed-form values: mvd, fv, emax, blockbound");
    std::string formula_kind;
    std::vector<std::string> formula_params;
    formula->add_option("kind", formula_kind, "mvd|fv|emax|blockbound")->required();
    formula->add_option("params", formula_params, "parameters");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "list, check or extend the type set");
    std::string catalog_action;
    std::string catalog_file;
    std::string catalog_dir = "catalog";
    int catalog_cap = kDefaultCap;
    catalog->add_option("action", catalog_action, "list|check|add")->required();
    catalog->add_option("file", catalog_file, "entry file for 'add'");
    catalog->add_option("--catalog", catalog_dir, "catalog directory (default ./catalog)");
    catalog->add_option("--cap", catalog_cap, "exact recheck cap (default 11)");

    // scan
    auto* scan = app.add_subcommand("scan", "exhaustive small-order verification");
    auto* scan_ext = scan->add_subcommand("extremal", "size extremes per mvd value");
    int scan_n = 0;
    int scan_cap = kDefaultCap;
    int scan_jobs = 1;
    int scan_max_n = 6;
    scan_ext->add_option("--n", scan_n, "graph order")->required();
    scan_ext->add_option("--cap", scan_cap, "exact solver cap");
    scan_ext->add_option("--jobs", scan_jobs, "worker threads (default 1)");
    scan_ext->add_option("--max-n", scan_max_n, "raise the default order limit of 6");
    auto* scan_prop = scan->add_subcommand("property", "check one invariant exhaustively");
    int prop_n = 0;
    int prop_jobs = 1;
    int prop_max_n = 7;
    std::string prop_name;
    scan_prop->add_option("--n", prop_n, "graph order")->required();
    scan_prop->add_option("--prop", prop_name,
                          "bound|blocks-complete-iff-n|compose-agrees-exact|restriction")
        ->required();
    scan_prop->add_option("--jobs", prop_jobs, "worker threads (default 1)");
    scan_prop->add_option("--max-n", prop_max_n, "raise the default order limit of 7");
    scan->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("mvd");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_params, gen_out, out);
        if (blocks->parsed()) return cmd_blocks(blocks_input, out, err);
        if (verify->parsed()) return cmd_verify(verify_input, verify_coloring, out, err);
        if (solve->parsed()) return cmd_solve(solve_opt, out, err);
        if (formula->parsed()) return cmd_formula(formula_kind, formula_params, out);
        if (catalog->parsed()) {
            return cmd_catalog(catalog_action, catalog_file, catalog_dir, catalog_cap, out, err);
        }
        if (scan->parsed()) {
            if (scan_ext->parsed()) return cmd_scan_extremal(scan_n, scan_cap, scan_jobs, scan_max_n, out);
            return cmd_scan_property(prop_n, prop_name, prop_jobs, prop_max_n, out);
        }
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const IntegrityError& e) {
        err << "integrity: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace mvd
