#include "birack/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "birack/braid.hpp"
#include "birack/catalog.hpp"
#include "birack/core.hpp"
#include "birack/enumerate.hpp"
#include "birack/pairs.hpp"
#include "birack/plat.hpp"

namespace birack {

namespace {

struct Reporter {
    SuiteResult r;

    explicit Reporter(std::string name) {
        r.name = std::move(name);
        r.ok = true;
    }

    void note(std::string line) { r.lines.push_back(std::move(line)); }

    bool check(bool cond, const std::string& line) {
        r.lines.push_back((cond ? "ok    " : "FAIL  ") + line);
        if (!cond) r.ok = false;
        return cond;
    }
};

std::string counts_str(const ClassCounts& c) {
    std::ostringstream os;
    os << c.quandles << " quandles, " << c.racks << " racks, "
       << c.biquandles << " biquandles, " << c.biracks << " biracks";
    return os.str();
}

SearchConfig search_config(const SuiteOptions& opts) {
    SearchConfig cfg;
    cfg.workers = opts.workers;
    return cfg;
}

braid::CountOptions count_options(const SuiteOptions& opts) {
    braid::CountOptions co;
    co.workers = opts.workers;
    return co;
}

// does `got` name the catalog entry that stores the named built-in table?
bool resolves_to(const Catalog& c, const std::string& got,
                 const std::string& builtin_name) {
    const CatalogEntry* e = c.find(got);
    if (!e) return false;
    if (e->name == builtin_name) return true;
    return std::find(e->aliases.begin(), e->aliases.end(), builtin_name) !=
           e->aliases.end();
}

// check that the catalog reproduces one published table verbatim, with the
// same classification line
void check_published_entry(Reporter& rep, const Catalog& c,
                           const std::string& name) {
    const CatalogEntry* got = c.find(name);
    if (!rep.check(got != nullptr, name + " appears in the catalog")) return;
    const CatalogEntry& ref = builtin_entry(name);
    rep.check(got->table == ref.table, name + " table is stored verbatim");
    rep.check(got->cls == ref.cls,
              name + " classification matches: " + paper_line(*got));
}

// ---- appendix2: the complete n=2 catalog ----------------------------------

SuiteResult suite_appendix2(const SuiteOptions& opts) {
    Reporter rep("appendix2");
    CatalogBuild b = enumerate_full(2, search_config(opts));
    rep.check(b.counts == ClassCounts{1, 1, 1, 0},
              "n=2 class counts: " + counts_str(b.counts) +
                  " (published 1/1/1/0)");
    rep.check(b.catalog.entries.size() == 3, "exactly 3 classes in total");
    const std::pair<const char*, int> expected[] = {
        {"Q2_1", 2}, {"BQ2_1", 2}, {"R2_1", 4}};
    for (const auto& [name, order] : expected) {
        check_published_entry(rep, b.catalog, name);
        const CatalogEntry* e = b.catalog.find(name);
        if (e)
            rep.check(e->cls.order == order,
                      std::string(name) + " has switch order " +
                          std::to_string(e->cls.order) + " (published " +
                          std::to_string(order) + ")");
    }
    return rep.r;
}

// ---- appendix3: the complete n=3 catalog ----------------------------------

SuiteResult suite_appendix3(const SuiteOptions& opts) {
    Reporter rep("appendix3");
    CatalogBuild b = enumerate_full(3, search_config(opts));
    rep.check(b.counts == ClassCounts{3, 3, 7, 3},
              "n=3 class counts: " + counts_str(b.counts) +
                  " (published 3/3/7/3)");
    rep.check(b.catalog.entries.size() == 16, "exactly 16 classes in total");
    const char* names[] = {"Q3_1",  "Q3_2",  "Q3_3",  "R3_1",  "R3_2",
                           "R3_3",  "BQ3_1", "BQ3_2", "BQ3_3", "BQ3_4",
                           "BQ3_5", "BQ3_6", "BQ3_7", "BR3_1", "BR3_2",
                           "BR3_3"};
    for (const char* name : names) check_published_entry(rep, b.catalog, name);
    return rep.r;
}

// ---- counts4: class counts of the full n=4 search --------------------------

SuiteResult suite_counts4(const SuiteOptions& opts) {
    Reporter rep("counts4");
    CatalogBuild b = enumerate_full(4, search_config(opts));
    rep.note("raw labeled tables: " + std::to_string(b.raw_tables) +
             ", relabeling classes: " + std::to_string(b.relabel_classes));
    rep.check(b.counts == ClassCounts{7, 12, 57, 71},
              "n=4 class counts: " + counts_str(b.counts) +
                  " (published 7/12/57/71)");
    return rep.r;
}

// ---- counts56: trivial-down and quandle-related searches at n=5,6 ----------

void check_count(Reporter& rep, const std::string& what, long long got,
                 long long want, long long quandles_beside) {
    bool ok = rep.check(got == want,
                        what + ": " + std::to_string(got) + " (published " +
                            std::to_string(want) + ")");
    if (!ok && got == want + quandles_beside)
        rep.note(
            "      the deviation equals the quandle count: the rack column "
            "must exclude quandles rather than contain them");
}

SuiteResult suite_counts56(const SuiteOptions& opts) {
    Reporter rep("counts56");
    SearchConfig cfg = search_config(opts);
    CatalogBuild q5 = enumerate_quandles(5, cfg);
    CatalogBuild r5 = enumerate_racks(5, cfg);
    check_count(rep, "n=5 quandles", q5.counts.quandles, 21, 0);
    check_count(rep, "n=5 racks", r5.counts.racks, 52, q5.counts.quandles);
    CatalogBuild q6 = enumerate_quandles(6, cfg);
    CatalogBuild r6 = enumerate_racks(6, cfg);
    check_count(rep, "n=6 quandles", q6.counts.quandles, 72, 0);
    check_count(rep, "n=6 racks", r6.counts.racks, 280, q6.counts.quandles);
    CatalogBuild rel5 = enumerate_related(5, q5.catalog, cfg);
    check_count(rep, "n=5 quandle-related biquandles", rel5.counts.biquandles,
                113, 0);
    check_count(rep, "n=5 quandle-related biracks", rel5.counts.biracks, 517,
                0);
    if (opts.extended) {
        CatalogBuild rel6 = enumerate_related(6, q6.catalog, cfg);
        check_count(rep, "n=6 quandle-related biquandles",
                    rel6.counts.biquandles, 1506, 0);
        check_count(rep, "n=6 quandle-related biracks", rel6.counts.biracks,
                    11704, 0);
    } else {
        rep.note(
            "skipped the n=6 quandle-related search (pass --extended to run "
            "it)");
        rep.r.skipped = true;
    }
    return rep.r;
}

// ---- essential34: the essential-pair searches -------------------------------

void check_hits(Reporter& rep, const Catalog& c,
                const std::vector<EssentialHit>& hits,
                const std::vector<std::pair<std::string, std::string>>& want,
                const std::string& what) {
    rep.check(hits.size() == want.size(),
              what + ": " + std::to_string(hits.size()) +
                  " essential pairs found (published " +
                  std::to_string(want.size()) + ")");
    if (hits.size() != want.size())
        rep.note(
            "      the published count pairs each class's stored table "
            "verbatim, so it depends on the representative tables chosen; "
            "the search here admits a relabeling of T and counts ordered "
            "class pairs, which also catches pairs like (BQ4_51, BQ4_50) "
            "whose witness needs a nontrivial relabeling");
    for (const auto& [s, t] : want) {
        bool found = false;
        for (const EssentialHit& h : hits)
            if (resolves_to(c, h.s_name, s) && resolves_to(c, h.t_name, t)) {
                found = true;
                break;
            }
        rep.check(found, what + ": pair (" + s + ", " + t + ") found");
    }
}

SuiteResult suite_essential34(const SuiteOptions& opts) {
    Reporter rep("essential34");
    SearchConfig cfg = search_config(opts);

    CatalogBuild f3 = enumerate_full(3, cfg);
    check_hits(rep, f3.catalog, find_essential(f3.catalog),
               {{"BQ3_3", "Q3_1"}, {"Q3_3", "BQ3_5"}}, "n=3");

    CatalogBuild f4 = enumerate_full(4, cfg);
    check_hits(rep, f4.catalog, find_essential(f4.catalog),
               {{"BQ4_3", "Q4_1"},
                {"BQ4_19", "Q4_1"},
                {"BQ4_34", "BQ4_23"},
                {"BQ4_38", "BQ4_39"},
                {"BQ4_41", "BQ4_39"},
                {"BQ4_56", "BQ4_50"},
                {"Q4_6", "BQ4_50"},
                {"BQ4_51", "Q4_1"}},
               "n=4");

    CatalogBuild q5 = enumerate_quandles(5, cfg);
    CatalogBuild rel5 = enumerate_related(5, q5.catalog, cfg);
    auto hits5 = find_essential(rel5.catalog);
    rep.check(hits5.size() == 17,
              "n=5 quandle-related: " + std::to_string(hits5.size()) +
                  " essential pairs found (published 17)");
    if (hits5.size() != 17)
        rep.note(
            "      same protocol difference as above: the count is over "
            "ordered class pairs with a relabeling of T allowed, while the "
            "published figure pairs the original stored tables verbatim");
    return rep.r;
}

// ---- bigelow: the two Bigelow-kernel separations ----------------------------

void check_separation(Reporter& rep, const std::string& word_name,
                      const NamedPair& p, int strands, long long want,
                      const braid::CountOptions& co) {
    const braid::Word& w = builtin_word(word_name);
    long long got = braid::fixed_point_count(w, {p.s, p.t}, strands, co);
    long long trivial = 1;
    for (int i = 0; i < strands; ++i) trivial *= p.s.n;
    rep.check(got == want, word_name + " with " + p.name + ": " +
                               std::to_string(got) + " fixed colorings "
                               "(published " +
                               std::to_string(want) + ")");
    if (got != trivial)
        rep.note("      differs from the trivial-braid value " +
                 std::to_string(trivial) + ": the closure is detected");
}

SuiteResult suite_bigelow(const SuiteOptions& opts) {
    Reporter rep("bigelow");
    braid::CountOptions co = count_options(opts);
    const NamedPair& p = builtin_pair("bigelow-pair");
    check_separation(rep, "bigelow-b1", p, 5, 736, co);
    check_separation(rep, "bigelow-b2", p, 6, 1648, co);
    return rep.r;
}

// ---- theorem53: the 7-strand separation braid -------------------------------

SuiteResult suite_theorem53(const SuiteOptions& opts) {
    Reporter rep("theorem53");
    braid::CountOptions co = count_options(opts);
    const braid::Word& w = builtin_word("theorem53");
    rep.check((int)w.letters.size() == 150 && braid::strands(w) == 7,
              "the braid has 150 letters on 7 strands");

    const NamedPair& essential = builtin_pair("theorem53-pair");
    long long a =
        braid::fixed_point_count(w, {essential.s, essential.t}, 7, co);
    rep.check(a == 9, "with (" + essential.s_name + ", " + essential.t_name +
                          "): " + std::to_string(a) +
                          " fixed colorings (published 9)");

    const NamedPair& twistlike = builtin_pair("P1");
    long long b =
        braid::fixed_point_count(w, {twistlike.s, twistlike.t}, 7, co);
    rep.check(b == 9, "with (" + twistlike.s_name + ", " + twistlike.t_name +
                          "): " + std::to_string(b) +
                          " fixed colorings (published 9)");

    long long base =
        braid::fixed_point_count(braid::Word{}, {essential.s, essential.t}, 1,
                                 co);
    rep.check(base == 3, "unknot baseline: " + std::to_string(base) +
                             " colorings (published 3)");
    return rep.r;
}

// ---- welded: the fixed-point table of the welded test words -----------------

SuiteResult suite_welded(const SuiteOptions& opts) {
    Reporter rep("welded");
    const char* pair_names[] = {"P3", "P4", "P11", "P12", "P13"};
    std::vector<NamedPair> pairs;
    for (const char* p : pair_names) pairs.push_back(builtin_pair(p));

    // -1 marks a cell with no published value
    struct ExpectedRow {
        const char* word;
        long long cells[5];
    };
    const ExpectedRow expected[] = {
        {"w3.1", {10, 4, 6, 6, 6}},   {"w3.2", {10, 16, 6, 6, 6}},
        {"w4.1", {10, 4, 26, 6, 6}},  {"w4.2", {10, 4, 6, 6, 26}},
        {"w4.3", {4, 4, 26, 26, 6}},  {"w4.4", {4, 4, 6, 26, 6}},
        {"w4.5", {4, 16, 6, 6, 6}},   {"w4.6", {4, 4, 6, 26, 26}},
        {"w6.1", {28, 28, -1, -1, -1}}};

    std::vector<std::pair<std::string, braid::Word>> words;
    for (const ExpectedRow& row : expected)
        words.emplace_back(row.word, builtin_word(row.word));

    auto rows = welded_table(pairs, words, count_options(opts));
    for (size_t i = 0; i < rows.size(); ++i) {
        const WeldedRow& row = rows[i];
        for (size_t j = 0; j < row.cells.size(); ++j) {
            const WeldedCell& cell = row.cells[j];
            long long want = expected[i].cells[j];
            std::string label = row.word_name + " x " +
                                std::string(pair_names[j]) + ": " +
                                std::to_string(cell.count);
            if (want < 0) {
                rep.note("      " + label + " (no published value)");
                continue;
            }
            rep.check(cell.count == want,
                      label + " fixed colorings (published " +
                          std::to_string(want) + ")");
            if (cell.count == want && want != cell.baseline)
                rep.note("      differs from the trivial value " +
                         std::to_string(cell.baseline) +
                         ": certifies a nontrivial welded knot");
        }
    }
    return rep.r;
}

// ---- lemma61: the unknot writhe series -------------------------------------

// |{x : x^z = z where z solves z_x = x}|, the closed form for the value of
// the series one kink above the unknot
long long one_kink_closed_form(const Birack& t) {
    long long count = 0;
    for (int x = 0; x < t.n; ++x) {
        int z = inverse_perm(t.dn[x])[x];
        if (t.up[z][x] == z) ++count;
    }
    return count;
}

void check_series(Reporter& rep, const CatalogEntry& e, bool check_mirror,
                  const braid::CountOptions& co) {
    const Birack& t = e.table;
    const int n = t.n;
    bool ok = true;
    std::string why;

    plat::PlatProgram flat = plat::unknot_tower(0);
    if (plat::phi(flat, t, co) != n) {
        ok = false;
        why = "phi at writhe 0 is not |X|";
    }

    plat::PlatProgram kink = plat::unknot_tower(1);
    long long direct = plat::phi(kink, t, co);
    if (ok && direct != one_kink_closed_form(t)) {
        ok = false;
        why = "phi at writhe 1 misses its closed form (" +
              std::to_string(direct) + " vs " +
              std::to_string(one_kink_closed_form(t)) + ")";
    }

    plat::WritheSeries ws = plat::series(flat, t, check_mirror ? 2 * n : 0, co);
    if (ok && check_mirror)
        for (int w = 1; w <= 2 * n; ++w)
            if (ws.at(w) != ws.at(-w)) {
                ok = false;
                why = "phi differs between writhes " + std::to_string(w) +
                      " and -" + std::to_string(w);
                break;
            }
    if (ok && (ws.period < 1 || ws.period > n)) {
        ok = false;
        why = "series period " + std::to_string(ws.period) +
              " escapes 1..|X|";
    }
    if (ok && (e.cls.cls == StructureClass::quandle ||
               e.cls.cls == StructureClass::biquandle))
        for (const auto& [w, v] : ws.values)
            if (v != n) {
                ok = false;
                why = "biquandle series is not constant |X|";
                break;
            }

    rep.check(ok, e.name + (ok ? "" : ": " + why));
}

SuiteResult suite_lemma61(const SuiteOptions& opts) {
    Reporter rep("lemma61");
    SearchConfig cfg = search_config(opts);
    braid::CountOptions co = count_options(opts);

    for (int n : {2, 3}) {
        CatalogBuild b = enumerate_full(n, cfg);
        int checked = 0;
        size_t before = rep.r.lines.size();
        for (const CatalogEntry& e : b.catalog.entries) {
            check_series(rep, e, true, co);
            ++checked;
        }
        // collapse the per-entry lines into one when everything passed
        if (rep.r.ok) {
            rep.r.lines.resize(before);
            rep.check(true, "n=" + std::to_string(n) + ": all " +
                                std::to_string(checked) +
                                " catalog tables satisfy the series lemma");
        }
    }

    CatalogBuild f4 = enumerate_full(4, cfg);
    std::vector<size_t> idx(f4.catalog.entries.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937 rng(61);
    const size_t sample = std::min<size_t>(50, idx.size());
    for (size_t i = 0; i < sample; ++i) {
        size_t j = i + rng() % (idx.size() - i);
        std::swap(idx[i], idx[j]);
    }
    size_t before = rep.r.lines.size();
    bool ok_before = rep.r.ok;
    for (size_t i = 0; i < sample; ++i)
        check_series(rep, f4.catalog.entries[idx[i]], true, co);
    if (rep.r.ok && ok_before) {
        rep.r.lines.resize(before);
        rep.check(true, "n=4: a deterministic sample of " +
                            std::to_string(sample) +
                            " tables satisfies the series lemma");
    }
    return rep.r;
}

// ---- kishino: the Kishino-knot detection battery ----------------------------

SuiteResult suite_kishino(const SuiteOptions& opts) {
    Reporter rep("kishino");
    braid::CountOptions co = count_options(opts);
    const NamedPair& kp = builtin_pair("kishino-pair");
    for (const char* name : {"K1", "K2"}) {
        const braid::Word& w = builtin_word(name);
        long long got =
            braid::fixed_point_count(w, {kp.s, kp.t}, braid::strands(w), co);
        rep.check(got == 16, std::string(name) + " with " + kp.name + ": " +
                                 std::to_string(got) +
                                 " fixed colorings (published 16, unknot "
                                 "value 4)");
    }

    const char* env = std::getenv("BIRACK_K3_FILE");
    std::string path = env ? env : "kishino_k3.words";
    std::ifstream probe(path);
    if (!probe) {
        rep.note("NOTICE: no external word file at '" + path +
                 "' (set BIRACK_K3_FILE to supply the third Kishino braid); "
                 "skipping that check");
        rep.r.skipped = true;
        return rep.r;
    }
    probe.close();
    auto words = braid::load_words_file(path);
    auto it = words.find("K3");
    if (it == words.end()) it = words.begin();
    if (!rep.check(it != words.end(), "the word file contains a braid word"))
        return rep.r;
    long long got = braid::fixed_point_count(
        it->second, {kp.s, kp.t}, braid::strands(it->second), co);
    rep.check(got == 16, it->first + " from '" + path + "' with " + kp.name +
                             ": " + std::to_string(got) +
                             " fixed colorings (published 16, unknot value "
                             "4)");
    return rep.r;
}

// ---- twistweld: the table criterion against the move check ------------------

SuiteResult suite_twistweld(const SuiteOptions& opts) {
    Reporter rep("twistweld");
    SearchConfig cfg = search_config(opts);
    for (int n : {2, 3, 4}) {
        CatalogBuild b = enumerate_full(n, cfg);
        int checked = 0;
        bool all = true;
        for (const CatalogEntry& e : b.catalog.entries) {
            if (e.cls.cls != StructureClass::quandle &&
                e.cls.cls != StructureClass::biquandle)
                continue;
            ++checked;
            SwitchPair p{e.table, twist(n)};
            if (check_W1(p) != twist_weld_criterion(e.table)) {
                all = false;
                rep.check(false, e.name +
                                     ": table criterion disagrees with the "
                                     "move check");
            }
        }
        if (all)
            rep.check(true, "n=" + std::to_string(n) +
                                ": the table criterion matches the move "
                                "check on all " +
                                std::to_string(checked) + " biquandles");
    }
    return rep.r;
}

// ---- axioms: derived relations, canonical invariance, unlink counts ---------

SuiteResult suite_axioms(const SuiteOptions& opts) {
    Reporter rep("axioms");
    SearchConfig cfg = search_config(opts);
    braid::CountOptions co = count_options(opts);
    std::mt19937 rng(12345);

    for (int n : {2, 3}) {
        CatalogBuild b = enumerate_full(n, cfg);
        const auto& perms = all_perms(n);
        bool relations = true, canonical = true;
        for (const CatalogEntry& e : b.catalog.entries) {
            if (!check_derived_relations(e.table)) relations = false;
            const std::vector<int> canon = canonical_form(e.table);
            for (int k = 0; k < 20; ++k) {
                const Perm& sigma = perms[rng() % perms.size()];
                Birack moved = relabel(e.table, sigma);
                if (!check_derived_relations(moved)) relations = false;
                if (canonical_form(moved) != canon) canonical = false;
            }
        }
        rep.check(relations, "n=" + std::to_string(n) +
                                 ": the derived action relations hold on "
                                 "every catalog table and relabeling");
        rep.check(canonical, "n=" + std::to_string(n) +
                                 ": canonical forms are relabel-invariant "
                                 "(20 random relabelings per table)");
    }

    for (const char* pair_name : {"P1", "P3"}) {
        const NamedPair& p = builtin_pair(pair_name);
        for (int c = 1; c <= 3; ++c) {
            long long got = braid::fixed_point_count(braid::Word{},
                                                     {p.s, p.t}, c, co);
            long long want = 1;
            for (int i = 0; i < c; ++i) want *= p.s.n;
            rep.check(got == want,
                      std::string(pair_name) + ": the trivial " +
                          std::to_string(c) + "-strand braid has " +
                          std::to_string(got) + " colorings (expected " +
                          std::to_string(want) + ")");
        }
    }
    return rep.r;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"appendix2", suite_appendix2},   {"appendix3", suite_appendix3},
        {"counts4", suite_counts4},       {"counts56", suite_counts56},
        {"essential34", suite_essential34}, {"bigelow", suite_bigelow},
        {"theorem53", suite_theorem53},   {"welded", suite_welded},
        {"lemma61", suite_lemma61},       {"kishino", suite_kishino},
        {"twistweld", suite_twistweld},   {"axioms", suite_axioms}};
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    for (const auto& [key, fn] : suite_table())
        if (key == name) return fn(opts);
    throw domain_error("unknown verification suite '" + name +
                       "' (available: appendix2 appendix3 counts4 counts56 "
                       "essential34 bigelow theorem53 welded lemma61 kishino "
                       "twistweld axioms)");
}

}  // namespace birack
