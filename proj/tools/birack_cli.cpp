// Command-line front end: enumeration, classification, pair analysis,
// fixed-point invariants, writhe series, and the verification suites.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input errors.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "birack/braid.hpp"
#include "birack/catalog.hpp"
#include "birack/core.hpp"
#include "birack/enumerate.hpp"
#include "birack/pairs.hpp"
#include "birack/plat.hpp"
#include "birack/verify.hpp"

namespace {

using namespace birack;

int g_status = 0;

// ---- enumerate --------------------------------------------------------------

struct EnumerateArgs {
    int size = 0;
    std::string cls = "full";
    std::string related_to;
    std::string out;
    std::string format = "text";
    std::string checkpoint;
    int workers = 1;
    bool force = false;
};

void run_enumerate(const EnumerateArgs& a) {
    SearchConfig cfg;
    cfg.workers = a.workers;
    cfg.checkpoint_path = a.checkpoint;
    cfg.force = a.force;

    CatalogBuild build;
    if (!a.related_to.empty()) {
        if (a.related_to != "quandles")
            throw domain_error("--related-to only supports 'quandles'");
        build = enumerate_related(a.size, enumerate_quandles(a.size, cfg).catalog,
                                  cfg);
    } else if (a.cls == "full") {
        build = enumerate_full(a.size, cfg);
    } else if (a.cls == "quandles") {
        build = enumerate_quandles(a.size, cfg);
    } else if (a.cls == "racks") {
        build = enumerate_racks(a.size, cfg);
    } else {
        throw domain_error("--class must be one of full, quandles, racks");
    }

    const CatalogFormat fmt =
        a.format == "json" ? CatalogFormat::json : CatalogFormat::paper_text;
    if (!a.out.empty()) {
        save_catalog(build.catalog, a.out, fmt);
    } else {
        std::cout << (fmt == CatalogFormat::json
                          ? catalog_to_json(build.catalog)
                          : catalog_to_paper_text(build.catalog));
    }
    std::cerr << "classes: " << build.counts.quandles << " quandles, "
              << build.counts.racks << " racks, " << build.counts.biquandles
              << " biquandles, " << build.counts.biracks << " biracks ("
              << build.raw_tables << " labeled tables, "
              << build.relabel_classes << " relabeling classes)\n";
}

// ---- classify ---------------------------------------------------------------

void run_classify(const std::string& in, const std::string& builtin) {
    if (!builtin.empty()) {
        std::cout << paper_line(builtin_entry(builtin)) << "\n";
        return;
    }
    Catalog c = load_catalog(resolve_catalog_path(in));
    for (const CatalogEntry& e : c.entries) std::cout << paper_line(e) << "\n";
}

// ---- pairs ------------------------------------------------------------------

std::string perm_1based(const Perm& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i] + 1);
    }
    return s;
}

// cycle notation with 1-based labels, matching the catalog text
std::string perm_cycles(const Perm& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (size_t start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == (int)start) continue;
        out += '(';
        size_t cur = start;
        while (!seen[cur]) {
            if (cur != start) out += ' ';
            out += std::to_string(cur + 1);
            seen[cur] = 1;
            cur = p[cur];
        }
        out += ')';
    }
    return out.empty() ? "ι" : out;
}

void run_pairs(const std::string& catalog_path, bool essential, bool csv) {
    Catalog c = load_catalog(resolve_catalog_path(catalog_path));
    if (essential) {
        auto hits = find_essential(c);
        if (csv) std::cout << "s,t,t_relabeling\n";
        for (const EssentialHit& h : hits) {
            if (csv)
                std::cout << h.s_name << "," << h.t_name << ","
                          << perm_1based(h.t_sigma) << "\n";
            else
                std::cout << h.s_name << " with " << h.t_name
                          << " relabeled by " << perm_cycles(h.t_sigma)
                          << ": essential\n";
        }
        std::cerr << hits.size() << " essential pairs\n";
        return;
    }
    if (csv) std::cout << "s,t,v,w1,w2,order_t,label\n";
    for (const CatalogEntry& s : c.entries)
        for (const CatalogEntry& t : c.entries) {
            if (s.table.n != t.table.n) continue;
            PairStatus st = pair_status({s.table, t.table});
            if (!st.v) continue;
            if (csv)
                std::cout << s.name << "," << t.name << "," << st.v << ","
                          << st.w1 << "," << st.w2 << "," << st.order_t << ","
                          << st.label() << "\n";
            else
                std::cout << s.name << " with " << t.name << ": " << st.label()
                          << "\n";
        }
}

// ---- invariant --------------------------------------------------------------

struct InvariantArgs {
    std::string braid;
    bool braid_given = false;
    std::string builtin;
    std::string pair;
    std::string switch_name;
    bool use_twist = false;
    int strands = 0;
    int workers = 1;
    long long budget = 50'000'000;
};

braid::Word resolve_word(const std::string& text, bool text_given,
                         const std::string& builtin) {
    if (text_given == !builtin.empty())
        throw domain_error("give exactly one of --braid or --builtin");
    if (!builtin.empty()) return builtin_word(builtin);
    std::vector<std::string> warnings;
    braid::Word w = braid::parse(text, &warnings);
    for (const std::string& warn : warnings)
        std::cerr << "warning: " << warn << "\n";
    return w;
}

SwitchPair resolve_pair(const std::string& pair, const std::string& sw,
                        bool use_twist) {
    if (pair.empty() == (sw.empty() && !use_twist))
        throw domain_error(
            "give exactly one of --pair or --switch with --twist");
    if (!pair.empty()) {
        const NamedPair& p = builtin_pair(pair);
        return {p.s, p.t};
    }
    if (sw.empty() || !use_twist)
        throw domain_error("--switch needs --twist for the virtual operation");
    const Birack& s = builtin_entry(sw).table;
    return {s, twist(s.n)};
}

void run_invariant(const InvariantArgs& a) {
    braid::Word w = resolve_word(a.braid, a.braid_given, a.builtin);
    SwitchPair p = resolve_pair(a.pair, a.switch_name, a.use_twist);
    int k = a.strands > 0 ? a.strands : braid::strands(w);
    braid::CountOptions co{a.budget, a.workers};
    std::cout << braid::fixed_point_count(w, p, k, co) << "\n";
}

// ---- series -----------------------------------------------------------------

struct SeriesArgs {
    std::string braid;
    bool braid_given = false;
    std::string builtin;
    std::string switch_name;
    int half_width = 0;
    bool csv = false;
    bool dump_program = false;
    bool orientation_diagnostic = false;
    int workers = 1;
    long long budget = 50'000'000;
};

void dump_program(const plat::PlatProgram& p) {
    std::cout << "# " << p.strands << " strands, base writhe "
              << p.base_writhe << "\n";
    for (const plat::LevelOp& op : p.ops) {
        std::cout << plat::level_op_name(op.kind);
        if (op.kind == plat::LevelOp::Kind::route)
            std::cout << " " << perm_1based(op.route);
        else
            std::cout << " @" << op.pos + 1;
        std::cout << "\n";
    }
}

void run_series(const SeriesArgs& a) {
    braid::Word w = resolve_word(a.braid, a.braid_given, a.builtin);
    const Birack& s = builtin_entry(a.switch_name).table;
    braid::CountOptions co{a.budget, a.workers};

    plat::PlatProgram p = plat::closure_to_plat(w);
    if (a.dump_program) dump_program(p);
    plat::WritheSeries ws = plat::series(p, s, a.half_width, co);

    if (a.csv) {
        std::cout << "writhe,phi\n";
        for (const auto& [writhe, phi] : ws.values)
            std::cout << writhe << "," << phi << "\n";
        std::cout << "period," << ws.period << "\n";
    } else {
        // the forward half from the base writhe up, as published
        bool first = true;
        for (const auto& [writhe, phi] : ws.values) {
            if (writhe < ws.base_writhe) continue;
            std::cout << (first ? "" : " ") << phi;
            first = false;
        }
        std::cout << " (period " << ws.period << ")\n";
    }

    if (a.orientation_diagnostic) {
        plat::PlatProgram q = plat::closure_to_plat(w, true);
        plat::WritheSeries flipped = plat::series(q, s, a.half_width, co);
        if (flipped.values == ws.values)
            std::cerr << "orientation diagnostic: flipping the seed "
                         "orientation leaves every value unchanged\n";
        else
            for (size_t i = 0; i < ws.values.size(); ++i)
                if (flipped.values[i] != ws.values[i])
                    std::cerr << "orientation diagnostic: phi at writhe "
                              << ws.values[i].first << " changes from "
                              << ws.values[i].second << " to "
                              << flipped.values[i].second
                              << " under the flipped seed\n";
    }
}

// ---- verify -----------------------------------------------------------------

void run_verify(const std::string& suite, bool extended, int workers) {
    SuiteOptions opts;
    opts.extended = extended;
    opts.workers = workers;
    SuiteResult r = run_suite(suite, opts);
    for (const std::string& line : r.lines) std::cout << line << "\n";
    std::cout << "suite " << r.name << ": " << (r.ok ? "ok" : "FAILED")
              << "\n";
    if (!r.ok) g_status = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite biracks, switch pairs and virtual knot invariants"};
    app.require_subcommand(1);

    EnumerateArgs en;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "search biracks of one size up to isomorphism");
    enumerate->add_option("--size", en.size, "number of elements")->required();
    enumerate->add_option("--class", en.cls, "full, quandles or racks");
    enumerate->add_option("--related-to", en.related_to,
                          "biracks whose down action is one of a source "
                          "class (only 'quandles')");
    enumerate->add_option("--out", en.out, "write the catalog to this file");
    enumerate->add_option("--format", en.format, "json or text");
    enumerate->add_option("--checkpoint", en.checkpoint,
                          "JSONL checkpoint file for long searches");
    enumerate->add_option("--workers", en.workers, "worker threads");
    enumerate->add_flag("--force", en.force,
                        "lift the size gate on full searches");
    enumerate->callback([&] { run_enumerate(en); });

    std::string classify_in, classify_builtin;
    CLI::App* classify = app.add_subcommand(
        "classify", "print classification lines for stored tables");
    classify->add_option("--in", classify_in, "catalog file");
    classify->add_option("--builtin", classify_builtin,
                         "name of a built-in table");
    classify->callback([&] {
        if (classify_in.empty() == classify_builtin.empty())
            throw domain_error("give exactly one of --in or --builtin");
        run_classify(classify_in, classify_builtin);
    });

    std::string pairs_catalog;
    bool pairs_essential = false, pairs_csv = false;
    CLI::App* pairs =
        app.add_subcommand("pairs", "detour-move analysis of switch pairs");
    pairs->add_option("--catalog", pairs_catalog, "catalog file")->required();
    pairs->add_flag("--essential", pairs_essential,
                    "search for essential pairs over all relabelings");
    pairs->add_flag("--csv", pairs_csv, "machine-readable output");
    pairs->callback(
        [&] { run_pairs(pairs_catalog, pairs_essential, pairs_csv); });

    InvariantArgs inv;
    CLI::App* invariant = app.add_subcommand(
        "invariant", "fixed points of a braid word under a switch pair");
    auto* braid_opt =
        invariant->add_option("--braid", inv.braid, "braid word, e.g. "
                                                    "\"s1 -s2 t1\"");
    invariant->add_option("--builtin", inv.builtin,
                          "name of a built-in braid word");
    invariant->add_option("--pair", inv.pair, "name of a built-in pair");
    invariant->add_option("--switch", inv.switch_name,
                          "built-in table for the classical crossings");
    invariant->add_flag("--twist", inv.use_twist,
                        "use the twist at virtual crossings");
    invariant->add_option("--strands", inv.strands, "strand count override");
    invariant->add_option("--workers", inv.workers, "worker threads");
    invariant->add_option("--budget", inv.budget,
                          "largest tuple count to attempt");
    invariant->callback([&] {
        inv.braid_given = braid_opt->count() > 0;
        run_invariant(inv);
    });

    SeriesArgs se;
    CLI::App* series = app.add_subcommand(
        "series", "writhe coefficient series of a braid closure");
    CLI::Option* se_braid =
        series->add_option("--braid", se.braid, "braid word");
    series->add_option("--builtin", se.builtin, "built-in braid word name")
        ->excludes(se_braid);
    series->add_option("--switch", se.switch_name, "built-in table name")
        ->required();
    series->add_option("--half-width", se.half_width,
                       "writhe offsets on both sides of the base")
        ->required();
    series->add_flag("--csv", se.csv, "machine-readable output");
    series->add_flag("--dump-program", se.dump_program,
                     "print the compiled level operators");
    series->add_flag("--orientation-diagnostic", se.orientation_diagnostic,
                     "re-run with flipped seed orientation and report "
                     "differences");
    series->add_option("--workers", se.workers, "worker threads");
    series->add_option("--budget", se.budget,
                       "largest tuple count to attempt");
    series->callback([&] {
        se.braid_given = se_braid->count() > 0;
        run_series(se);
    });

    std::string verify_suite;
    bool verify_extended = false;
    int verify_workers = 1;
    CLI::App* verify =
        app.add_subcommand("verify", "recompute one published battery");
    verify->add_option("--suite", verify_suite, "suite name")->required();
    verify->add_flag("--extended", verify_extended,
                     "include the gated n=6 related search");
    verify->add_option("--workers", verify_workers, "worker threads");
    verify->callback(
        [&] { run_verify(verify_suite, verify_extended, verify_workers); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << " (at offset " << e.position
                  << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_status;
}
