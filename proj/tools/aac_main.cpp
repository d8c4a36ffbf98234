// Command-line front end for the assembly addition chains library.
//
// Subcommands:
//   oac    — shortest integer addition chains, optionally all optimal
//            chains and the classical length brackets
//   ai     — exact assembly index of one object, with an optimal witness
//            chain and its pathway DAG
//   glue   — every result of gluing two objects
//   bounds — the bound bracket for one object size in one space
//   sweep  — per-size summary rows over a size range, as CSV or JSON
//
// Exit codes: 0 success, 2 parse error (bad flags, malformed object
// literals, out-of-range parameters), 3 search budget exceeded, 4
// internal invariant violation.

#include <array>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aac/addition_chains.hpp"
#include "aac/bounds.hpp"
#include "aac/chain.hpp"
#include "aac/dag.hpp"
#include "aac/errors.hpp"
#include "aac/solver.hpp"
#include "aac/space.hpp"

namespace {

// ---------------------------------------------------------------- helpers

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long to_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw aac::ParseError("bad integer '" + s + "' in object literal");
    }
    if (pos != s.size())
        throw aac::ParseError("bad integer '" + s + "' in object literal");
    return v;
}

// "0-1,1-2:1" -> {"vertices":3,"edges":[[0,1,0],[1,2,1]]}; the colon
// suffix selects the edge color (default 0).
std::string edges_to_json(const std::string& literal) {
    nlohmann::json edges = nlohmann::json::array();
    long long max_vertex = -1;
    for (const std::string& tok : split(literal, ',')) {
        std::string body = tok;
        long long color = 0;
        if (auto p = tok.find(':'); p != std::string::npos) {
            color = to_int(tok.substr(p + 1));
            body = tok.substr(0, p);
        }
        auto dash = body.find('-');
        if (dash == std::string::npos || dash == 0)
            throw aac::ParseError("edge '" + tok +
                                  "' must look like u-v or u-v:color");
        long long u = to_int(body.substr(0, dash));
        long long v = to_int(body.substr(dash + 1));
        if (u < 0 || v < 0)
            throw aac::ParseError("edge endpoints must be non-negative");
        edges.push_back({u, v, color});
        max_vertex = std::max({max_vertex, u, v});
    }
    nlohmann::json j;
    j["vertices"] = max_vertex + 1;
    j["edges"] = edges;
    return j.dump();
}

// "0,0;1,0;1,1,2" -> {"cells":[[0,0,0],[1,0,0],[1,1,2]]}; each group is
// x,y or x,y,color (default color 0). Coordinates may be negative.
std::string cells_to_json(const std::string& literal) {
    nlohmann::json cells = nlohmann::json::array();
    for (const std::string& group : split(literal, ';')) {
        std::vector<std::string> parts = split(group, ',');
        if (parts.size() != 2 && parts.size() != 3)
            throw aac::ParseError("cell '" + group +
                                  "' must look like x,y or x,y,color");
        long long x = to_int(parts[0]);
        long long y = to_int(parts[1]);
        long long color = parts.size() == 3 ? to_int(parts[2]) : 0;
        cells.push_back({x, y, color});
    }
    nlohmann::json j;
    j["cells"] = cells;
    return j.dump();
}

std::string iso_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string real_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// ------------------------------------------------------- space selection

struct SpaceSel {
    bool strings = false;
    bool graphs = false;
    bool poly = false;
    int symbols = 2;   // alphabet size for strings
    int colors = 1;    // colors for graphs / polyominoes
    bool undirected = false;

    std::string id() const {
        if (strings)
            return (undirected ? "su:" : "sd:") + std::to_string(symbols);
        if (graphs) return "g:" + std::to_string(colors);
        return "p:" + std::to_string(colors);
    }
};

void add_space_options(CLI::App* cmd, SpaceSel& sel) {
    auto* family = cmd->add_option_group("family", "object family");
    family->add_flag("--strings", sel.strings, "strings over a finite alphabet");
    family->add_flag("--graphs", sel.graphs, "edge-colored connected graphs");
    family->add_flag("--poly", sel.poly, "colored free polyominoes");
    family->require_option(1);
    cmd->add_option("-j,--symbols", sel.symbols,
                    "alphabet size for --strings (default 2)");
    cmd->add_option("--colors", sel.colors,
                    "color count for --graphs / --poly (default 1)");
    cmd->add_flag("--undirected", sel.undirected,
                  "treat strings as reversal-invariant");
}

// Turns a family-specific literal into the text the space parser accepts.
std::string literal_to_parse_text(const SpaceSel& sel, const std::string& lit) {
    if (sel.graphs) return edges_to_json(lit);
    if (sel.poly) return cells_to_json(lit);
    return lit;  // strings parse as-is
}

// ----------------------------------------------------------- row schema

// One summary row; absent optionals render as empty CSV cells (or "err"
// for a paper-literal bound that is degenerate at this space).
struct RowOut {
    std::uint64_t size = 0;
    std::optional<std::uint64_t> count;
    std::optional<std::uint64_t> ai_min;
    std::optional<std::uint64_t> ai_max;
    std::uint64_t ell = 0;
    std::optional<std::uint64_t> ma_lit;
    std::optional<std::uint64_t> ma_der;
    std::uint64_t coarse_lo = 0;
    std::uint64_t coarse_hi = 0;
    std::string status = "ok";
};

RowOut bounds_row(const std::string& space_id, std::uint64_t size) {
    aac::BoundBracket b = aac::bracket_for(space_id, size);
    RowOut row;
    row.size = b.size;
    row.ell = b.ell;
    row.ma_lit = b.ma_literal;
    row.ma_der = b.ma_derived;
    row.coarse_lo = b.coarse_lower;
    row.coarse_hi = b.coarse_upper;
    return row;
}

std::string opt_cell(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

// The paper-literal column shows "err" where the formula is degenerate
// (derived value exists but the literal one does not).
std::string lit_cell(const RowOut& row) {
    if (row.ma_lit) return std::to_string(*row.ma_lit);
    return row.ma_der ? "err" : "";
}

void write_rows_csv(std::ostream& os, const std::string& echo, bool timestamp,
                    const std::vector<RowOut>& rows) {
    if (timestamp) os << "# generated " << iso_utc_now() << "\n";
    if (!echo.empty()) os << "# " << echo << "\n";
    os << "size,count,ai_min,ai_max,ell,ma_paper_literal,ma_derived_count,"
          "coarse_lo,coarse_hi,status\n";
    for (const RowOut& r : rows) {
        os << r.size << ',' << opt_cell(r.count) << ',' << opt_cell(r.ai_min)
           << ',' << opt_cell(r.ai_max) << ',' << r.ell << ',' << lit_cell(r)
           << ',' << opt_cell(r.ma_der) << ',' << r.coarse_lo << ','
           << r.coarse_hi << ',' << r.status << "\n";
    }
}

nlohmann::ordered_json row_json(const RowOut& r) {
    auto opt = [](const std::optional<std::uint64_t>& v) {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    nlohmann::ordered_json j;
    j["size"] = r.size;
    j["count"] = opt(r.count);
    j["ai_min"] = opt(r.ai_min);
    j["ai_max"] = opt(r.ai_max);
    j["ell"] = r.ell;
    j["ma_paper_literal"] = opt(r.ma_lit);
    j["ma_derived_count"] = opt(r.ma_der);
    j["coarse_lo"] = r.coarse_lo;
    j["coarse_hi"] = r.coarse_hi;
    j["status"] = r.status;
    return j;
}

void write_rows_json(std::ostream& os, const std::string& space_id,
                     const std::string& mode, bool timestamp,
                     const std::vector<RowOut>& rows) {
    nlohmann::ordered_json doc;
    if (timestamp) doc["generated"] = iso_utc_now();
    doc["space"] = space_id;
    doc["mode"] = mode;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const RowOut& r : rows) doc["rows"].push_back(row_json(r));
    os << doc.dump(2) << "\n";
}

// --------------------------------------------------------------- reports

std::string ref_str(const aac::ParentRef& p) {
    return p.is_step() ? "#" + std::to_string(p.step) : p.block;
}

void print_witness(std::ostream& os, const aac::AssemblyChain& chain) {
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const aac::ChainStep& st = chain.steps[i];
        os << "  " << i + 1 << ": " << st.object.code << " = "
           << ref_str(st.left_parent) << " + " << ref_str(st.right_parent)
           << "\n";
    }
}

void print_bound_lines(std::ostream& os, const RowOut& row) {
    os << "ell: " << row.ell << "\n";
    os << "coarse: [" << row.coarse_lo << ", " << row.coarse_hi << "]\n";
    std::string lit = lit_cell(row);
    os << "ma_paper_literal: " << (lit.empty() ? "-" : lit) << "\n";
    os << "ma_derived_count: "
       << (row.ma_der ? std::to_string(*row.ma_der) : std::string("-")) << "\n";
}

// -------------------------------------------------------------- commands

int run_oac(std::uint64_t n, bool all, bool brackets, std::uint64_t budget) {
    int ell = aac::shortest_length(n);  // validates n before any output
    std::cout << "n: " << n << "\n";
    std::cout << "ell: " << ell << "\n";
    if (all) {
        if (n == 1) {
            // The only chain for 1 is the bare start element.
            std::cout << "optimal chains: 1\n1\n";
        } else {
            std::vector<aac::Chain> chains = aac::optimal_chains(n, budget);
            std::cout << "optimal chains: " << chains.size() << "\n";
            for (const aac::Chain& c : chains) {
                for (std::size_t i = 0; i < c.size(); ++i)
                    std::cout << (i ? " " : "") << c[i];
                std::cout << "\n";
            }
        }
    }
    if (brackets) {
        aac::RealBracket sb = aac::schonhage_bracket(n);
        std::cout << "schonhage: [" << real_str(sb.lower) << ", "
                  << real_str(sb.upper) << "]\n";
        if (n >= 3) {
            aac::IntBracket ib = aac::scholz_bracket(n);
            std::cout << "scholz: [" << ib.lower << ", " << ib.upper << "]\n";
        } else {
            std::cout << "scholz: n/a (needs n >= 3)\n";
        }
    }
    return 0;
}

int run_ai(const SpaceSel& sel, const std::string& literal,
           std::uint64_t budget, const std::string& memo_path) {
    std::unique_ptr<aac::Space> space = aac::make_space(sel.id());
    aac::Obj target = space->parse(literal_to_parse_text(sel, literal));

    std::cout << "space: " << space->id() << "\n";
    std::cout << "object: " << target.code << "\n";
    std::string shown = space->display(target);
    if (shown != target.code) std::cout << "display: " << shown << "\n";
    std::cout << "size: " << target.size << "\n";
    print_bound_lines(std::cout, bounds_row(space->id(), target.size));

    std::optional<aac::MemoCache> memo;
    aac::SolveOptions opts;
    opts.node_budget = budget;
    if (!memo_path.empty()) {
        memo.emplace(memo_path);
        opts.memo = &*memo;
    }

    aac::SolveResult result;
    try {
        result = aac::assembly_index(*space, target, opts);
    } catch (const aac::BudgetExceeded& e) {
        std::cout << "assembly_index: unknown (budget exceeded)\n";
        std::cout << "best_upper: " << e.best_upper << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    std::cout << "assembly_index: " << result.index << "\n";
    std::cout << "nodes: " << result.nodes << "\n";
    if (result.index == 0) {
        std::cout << "witness: (building block, nothing to assemble)\n";
        return 0;
    }
    if (!result.witness_available) {
        std::cout << "witness: (served from memo cache; re-run without "
                     "--memo for a chain)\n";
        return 0;
    }
    std::cout << "witness:\n";
    print_witness(std::cout, result.witness);
    std::cout << "dag:\n" << aac::to_dot(aac::to_dag(result.witness));
    return 0;
}

int run_glue(const SpaceSel& sel, const std::string& left_lit,
             const std::string& right_lit) {
    std::unique_ptr<aac::Space> space = aac::make_space(sel.id());
    aac::Obj a = space->parse(literal_to_parse_text(sel, left_lit));
    aac::Obj b = space->parse(literal_to_parse_text(sel, right_lit));
    std::cout << "space: " << space->id() << "\n";
    std::cout << "left: " << a.code << " (size " << a.size << ")\n";
    std::cout << "right: " << b.code << " (size " << b.size << ")\n";
    std::vector<aac::Obj> results = space->glue(a, b);
    std::cout << "results: " << results.size() << "\n";
    for (const aac::Obj& o : results) {
        std::cout << o.code;
        std::string shown = space->display(o);
        if (shown != o.code) std::cout << "\t" << shown;
        std::cout << "\n";
    }
    return 0;
}

int run_bounds(const SpaceSel& sel, std::uint64_t size,
               const std::string& format) {
    std::string id = sel.id();
    aac::make_space(id);  // validate the space parameters up front
    RowOut row = bounds_row(id, size);
    if (format == "csv") {
        write_rows_csv(std::cout, "", false, {row});
    } else if (format == "json") {
        write_rows_json(std::cout, id, "bounds", false, {row});
    } else {
        std::cout << "space: " << id << "\n";
        std::cout << "size: " << size << "\n";
        print_bound_lines(std::cout, row);
    }
    return 0;
}

int run_sweep(const SpaceSel& sel, const std::string& sizes_arg,
              bool bounds_only, std::uint64_t budget, std::uint64_t enum_cap,
              const std::string& out_path, const std::string& format,
              bool no_timestamp, const std::string& memo_path) {
    std::uint64_t lo = 0, hi = 0;
    {
        std::string a = sizes_arg, b = sizes_arg;
        if (auto p = sizes_arg.find(".."); p != std::string::npos) {
            a = sizes_arg.substr(0, p);
            b = sizes_arg.substr(p + 2);
        }
        long long la = to_int(a), lb = to_int(b);
        if (la < 1 || lb < la)
            throw aac::ParseError("--sizes wants MIN..MAX with 1 <= MIN <= MAX");
        lo = static_cast<std::uint64_t>(la);
        hi = static_cast<std::uint64_t>(lb);
    }

    std::unique_ptr<aac::Space> space = aac::make_space(sel.id());
    std::optional<aac::MemoCache> memo;
    aac::SolveOptions opts;
    opts.node_budget = budget;
    if (!memo_path.empty()) {
        memo.emplace(memo_path);
        opts.memo = &*memo;
    }

    std::vector<RowOut> rows;
    for (std::uint64_t s = lo; s <= hi; ++s) {
        RowOut row = bounds_row(space->id(), s);
        if (!bounds_only) {
            std::vector<aac::Obj> objs;
            bool enumerated = false;
            try {
                objs = space->enumerate(s, enum_cap);
                enumerated = true;
            } catch (const aac::BudgetExceeded&) {
                row.status = "partial";
            }
            if (enumerated) {
                row.count = objs.size();
                std::uint64_t mn = ~std::uint64_t{0}, mx = 0, solved = 0;
                try {
                    for (const aac::Obj& o : objs) {
                        aac::SolveResult r = aac::assembly_index(*space, o, opts);
                        mn = std::min(mn, r.index);
                        mx = std::max(mx, r.index);
                        ++solved;
                    }
                } catch (const aac::BudgetExceeded&) {
                    row.status = "partial";
                }
                if (solved > 0) {
                    row.ai_min = mn;
                    row.ai_max = mx;
                }
            }
            // Row sandwich: min AI is bounded below by the addition-chain
            // floor, max AI by the sound (derived-count) upper bound and
            // the trivial size-1 ceiling. The paper-literal variant is
            // reported but not enforced — where it disagrees it
            // undercounts the available pieces.
            if (row.ai_min && *row.ai_min < row.ell)
                throw std::logic_error(
                    "sweep row invariant violated at size " + std::to_string(s) +
                    ": ai_min " + std::to_string(*row.ai_min) + " below ell " +
                    std::to_string(row.ell));
            std::uint64_t cap = s - 1;
            if (row.ma_der) cap = std::min(cap, *row.ma_der);
            if (row.ai_max && *row.ai_max > cap)
                throw std::logic_error(
                    "sweep row invariant violated at size " + std::to_string(s) +
                    ": ai_max " + std::to_string(*row.ai_max) + " above bound " +
                    std::to_string(cap));
        }
        rows.push_back(std::move(row));
    }

    std::string echo = "aac sweep space=" + space->id() + " sizes=" +
                       std::to_string(lo) + ".." + std::to_string(hi) +
                       " mode=" + (bounds_only ? "bounds" : "exact");
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file " + out_path);
        os = &file;
    }
    if (format == "json") {
        write_rows_json(*os, space->id(), bounds_only ? "bounds" : "exact",
                        !no_timestamp, rows);
    } else {
        write_rows_csv(*os, echo, !no_timestamp, rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "assembly addition chains: shortest construction sequences for "
        "integers, strings, graphs, and polyominoes"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config", "",
                   "read option defaults from a key=value file "
                   "(sections [ai]/[sweep]/... set subcommand options)");

    // oac ------------------------------------------------------------
    auto* oac = app.add_subcommand(
        "oac", "shortest addition chains for an integer");
    std::uint64_t oac_n = 0;
    bool oac_all = false, oac_brackets = false;
    std::uint64_t oac_budget = 50'000'000;
    oac->add_option("n", oac_n, "target integer (>= 1)")->required();
    oac->add_flag("--all", oac_all, "list every optimal chain");
    oac->add_flag("--brackets", oac_brackets,
                  "print the classical length brackets");
    oac->add_option("--budget", oac_budget,
                    "search-node budget for chain enumeration")
        ->envname("AAC_NODE_BUDGET");

    // ai -------------------------------------------------------------
    auto* ai = app.add_subcommand(
        "ai", "exact assembly index of one object, with witness");
    SpaceSel ai_sel;
    std::string ai_object, ai_edges, ai_cells, ai_memo;
    std::uint64_t ai_budget = 100'000'000;
    add_space_options(ai, ai_sel);
    ai->add_option("object", ai_object,
                   "string literal, e.g. \"0010\" (strings only)");
    ai->add_option("--edges", ai_edges,
                   "graph literal: u-v[:color] pairs, e.g. \"0-1,1-2\"");
    ai->add_option("--cells", ai_cells,
                   "polyomino literal: x,y[,color] groups, e.g. \"0,0;1,0\"");
    ai->add_option("--budget", ai_budget, "search-node budget")
        ->envname("AAC_NODE_BUDGET");
    ai->add_option("--memo", ai_memo,
                   "persistent index cache file (read and appended)");

    // glue -----------------------------------------------------------
    auto* glue = app.add_subcommand("glue", "print the gluing set of two objects");
    SpaceSel glue_sel;
    std::string glue_left, glue_right;
    add_space_options(glue, glue_sel);
    glue->add_option("left", glue_left,
                     "first object (string, edge list, or cell list)")
        ->required();
    glue->add_option("right", glue_right, "second object")->required();

    // bounds ----------------------------------------------------------
    auto* bounds = app.add_subcommand(
        "bounds", "bound bracket for one object size");
    SpaceSel bounds_sel;
    std::uint64_t bounds_size = 0;
    std::string bounds_format = "text";
    add_space_options(bounds, bounds_sel);
    bounds->add_option("size", bounds_size, "object size (>= 1)")->required();
    bounds->add_option("--format", bounds_format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // sweep ------------------------------------------------------------
    auto* sweep = app.add_subcommand(
        "sweep", "per-size summary rows over a size range");
    SpaceSel sweep_sel;
    std::string sweep_sizes, sweep_out, sweep_format = "csv", sweep_memo;
    bool sweep_bounds_only = false, sweep_no_timestamp = false;
    std::uint64_t sweep_budget = 100'000'000, sweep_enum_cap = 1'000'000;
    add_space_options(sweep, sweep_sel);
    sweep->add_option("--sizes", sweep_sizes, "size range MIN..MAX (inclusive)")
        ->required();
    sweep->add_flag("--bounds-only", sweep_bounds_only,
                    "skip enumeration and exact solving; emit bounds only");
    sweep->add_option("--budget", sweep_budget,
                      "search-node budget per object; exhaustion marks the "
                      "row partial")
        ->envname("AAC_NODE_BUDGET");
    sweep->add_option("--enum-cap", sweep_enum_cap,
                      "max objects enumerated per size");
    sweep->add_option("-o,--output", sweep_out, "output file (default stdout)");
    sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_flag("--no-timestamp", sweep_no_timestamp,
                    "omit the generated-at header line so reruns are "
                    "byte-identical");
    sweep->add_option("--memo", sweep_memo,
                      "persistent index cache file (read and appended)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(oac))
            return run_oac(oac_n, oac_all, oac_brackets, oac_budget);
        if (app.got_subcommand(ai)) {
            int sources = !ai_object.empty() + !ai_edges.empty() + !ai_cells.empty();
            if (sources != 1)
                throw aac::ParseError(
                    "provide exactly one object: a positional string, "
                    "--edges, or --cells");
            std::string literal = ai_object;
            if (ai_sel.graphs) {
                if (ai_edges.empty())
                    throw aac::ParseError("--graphs wants the object as --edges");
                literal = ai_edges;
            } else if (ai_sel.poly) {
                if (ai_cells.empty())
                    throw aac::ParseError("--poly wants the object as --cells");
                literal = ai_cells;
            } else if (ai_object.empty()) {
                throw aac::ParseError(
                    "--strings wants the object as a positional argument");
            }
            return run_ai(ai_sel, literal, ai_budget, ai_memo);
        }
        if (app.got_subcommand(glue))
            return run_glue(glue_sel, glue_left, glue_right);
        if (app.got_subcommand(bounds))
            return run_bounds(bounds_sel, bounds_size, bounds_format);
        if (app.got_subcommand(sweep))
            return run_sweep(sweep_sel, sweep_sizes, sweep_bounds_only,
                             sweep_budget, sweep_enum_cap, sweep_out,
                             sweep_format, sweep_no_timestamp, sweep_memo);
        return 2;  // unreachable: require_subcommand(1)
    } catch (const aac::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const aac::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
