#include "birack/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

namespace birack {

namespace {

using nlohmann::json;
using Flat = std::vector<int>;

// ---- permutation arithmetic over lexicographic indices ---------------------

int perm_rank(const Perm& p) {
    const int n = (int)p.size();
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < n; ++j) smaller_after += p[j] < p[i];
        rank = rank * (n - i) + smaller_after;
    }
    return rank;
}

struct PermTables {
    int n = 0;
    int fact = 1;
    std::vector<Perm> perms;  // lexicographic, index == perm_rank
    std::vector<int> comp;    // comp[i * fact + j]: apply j first, then i
    std::vector<int> inv;

    int compose(int i, int j) const { return comp[(size_t)i * fact + j]; }
};

const PermTables& perm_tables(int n) {
    if (n < 1 || n > 6)
        throw capacity_error("enumeration handles 1 to 6 elements");
    static std::mutex m;
    static std::map<int, std::unique_ptr<PermTables>> cache;
    std::lock_guard lock(m);
    auto& slot = cache[n];
    if (!slot) {
        auto t = std::make_unique<PermTables>();
        t->n = n;
        t->perms = all_perms(n);
        t->fact = (int)t->perms.size();
        t->comp.resize((size_t)t->fact * t->fact);
        t->inv.resize(t->fact);
        Perm c(n);
        for (int i = 0; i < t->fact; ++i) {
            t->inv[i] = perm_rank(inverse_perm(t->perms[i]));
            for (int j = 0; j < t->fact; ++j) {
                for (int x = 0; x < n; ++x) c[x] = t->perms[i][t->perms[j][x]];
                t->comp[(size_t)i * t->fact + j] = perm_rank(c);
            }
        }
        slot = std::move(t);
    }
    return *slot;
}

// ---- the row search: all up tables completing a fixed down table -----------
//
// Prunes with three exact consequences of the axioms:
//   * the down row of c^b is determined by rows b and c (cell domains),
//   * the up row of a^b is determined once rows a, b and the row of b_a are
//     known (row forcing),
//   * the switch must stay injective as rows fill in.
// Completed tables still run the full exchange-law check before emission.

struct RowSearch {
    const PermTables& pt;
    int n;
    std::vector<int> drow;               // down rows as perm indices
    std::vector<std::vector<int>> dn;    // dn[b][a]
    std::vector<uint32_t> dom;           // dom[x * n + y]: value bitmask
    std::vector<std::vector<int>> candidates;
    std::vector<int> row;                // up rows as perm indices, -1 open
    std::vector<char> seen;              // switch images hit so far
    std::vector<int> trail;

    explicit RowSearch(int size) : pt(perm_tables(size)), n(size) {}

    // returns false when some cell has no possible value under this down
    // table, i.e. no up table can exist
    bool reset(const std::vector<int>& drow_idx) {
        drow = drow_idx;
        dn.assign(n, std::vector<int>(n));
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) dn[b][a] = pt.perms[drow[b]][a];
        dom.assign((size_t)n * n, 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int g = pt.compose(pt.inv[drow[dn[y][x]]],
                                         pt.compose(drow[y], drow[x]));
                uint32_t mask = 0;
                for (int v = 0; v < n; ++v)
                    if (drow[v] == g) mask |= 1u << v;
                if (!mask) return false;
                dom[(size_t)x * n + y] = mask;
            }
        candidates.assign(n, {});
        for (int x = 0; x < n; ++x) {
            for (int k = 0; k < pt.fact; ++k) {
                const Perm& p = pt.perms[k];
                bool ok = true;
                for (int y = 0; y < n && ok; ++y)
                    ok = (dom[(size_t)x * n + y] >> p[y]) & 1;
                if (ok) candidates[x].push_back(k);
            }
            if (candidates[x].empty()) return false;
        }
        row.assign(n, -1);
        seen.assign((size_t)n * n, 0);
        trail.clear();
        return true;
    }

    bool assign(int x, int k) {
        if (row[x] >= 0) return row[x] == k;
        const Perm& p = pt.perms[k];
        for (int y = 0; y < n; ++y)
            if (!((dom[(size_t)x * n + y] >> p[y]) & 1)) return false;
        for (int y = 0; y < n; ++y) {
            char& cell = seen[(size_t)p[y] * n + dn[y][x]];
            if (cell) {
                for (int z = 0; z < y; ++z)
                    seen[(size_t)p[z] * n + dn[z][x]] = 0;
                return false;
            }
            cell = 1;
        }
        row[x] = k;
        trail.push_back(x);
        return true;
    }

    void rewind(size_t mark) {
        while (trail.size() > mark) {
            const int x = trail.back();
            trail.pop_back();
            const Perm& p = pt.perms[row[x]];
            for (int y = 0; y < n; ++y)
                seen[(size_t)p[y] * n + dn[y][x]] = 0;
            row[x] = -1;
        }
    }

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < n; ++a) {
                if (row[a] < 0) continue;
                for (int b = 0; b < n; ++b) {
                    if (row[b] < 0) continue;
                    const int t1 = pt.perms[row[b]][a];  // a^b
                    const int t2 = dn[a][b];             // b_a
                    const int both = pt.compose(row[b], row[a]);
                    if (row[t1] >= 0 && row[t2] >= 0) {
                        if (pt.compose(row[t1], row[t2]) != both) return false;
                    } else if (row[t1] >= 0) {
                        if (!assign(t2, pt.compose(pt.inv[row[t1]], both)))
                            return false;
                        changed = true;
                    } else if (row[t2] >= 0) {
                        if (!assign(t1, pt.compose(both, pt.inv[row[t2]])))
                            return false;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    void search(std::vector<Flat>& sink) {
        int x = 0;
        while (x < n && row[x] >= 0) ++x;
        if (x == n) {
            Birack b;
            b.n = n;
            b.up.reserve(n);
            b.dn.reserve(n);
            for (int r = 0; r < n; ++r) {
                b.up.push_back(pt.perms[row[r]]);
                b.dn.push_back(pt.perms[drow[r]]);
            }
            if (check_B3(b)) sink.push_back(flat_encoding(b));
            return;
        }
        const size_t mark = trail.size();
        for (int k : candidates[x]) {
            if (assign(x, k) && propagate()) search(sink);
            rewind(mark);
        }
    }
};

// ---- partition bodies -------------------------------------------------------

std::vector<Flat> full_partition(int n, int first_down_row) {
    const PermTables& pt = perm_tables(n);
    RowSearch rs(n);
    std::vector<Flat> out;
    std::vector<int> drow(n, 0);
    drow[0] = first_down_row;
    std::vector<int> odo(std::max(0, n - 1), 0);
    while (true) {
        for (int i = 1; i < n; ++i) drow[i] = odo[i - 1];
        if (rs.reset(drow)) rs.search(out);
        int i = 0;
        while (i < n - 1 && ++odo[i] == pt.fact) odo[i++] = 0;
        if (i >= n - 1) break;
    }
    return out;
}

std::vector<Flat> trivial_down_partition(int n, int first_up_row) {
    const PermTables& pt = perm_tables(n);
    RowSearch rs(n);
    std::vector<Flat> out;
    const std::vector<int> drow(n, perm_rank(identity_perm(n)));
    if (!rs.reset(drow)) return out;
    if (rs.assign(0, first_up_row) && rs.propagate()) rs.search(out);
    (void)pt;
    return out;
}

// does relabeling t by sigma give a strictly smaller flat encoding than
// `flat` (the encoding of t itself)?
bool relabeled_smaller(const Birack& t, const Perm& sigma,
                       const Perm& sigma_inv, const Flat& flat) {
    const int n = t.n;
    size_t idx = 0;
    for (int part = 0; part < 2; ++part) {
        const auto& rows = part == 0 ? t.up : t.dn;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j, ++idx) {
                const int v = sigma[rows[sigma_inv[i]][sigma_inv[j]]];
                if (v != flat[idx]) return v < flat[idx];
            }
    }
    return false;
}

std::vector<Flat> related_partition(int n, const Flat& down_rep) {
    const Birack rep = from_flat_encoding(n, down_rep);
    const PermTables& pt = perm_tables(n);
    std::vector<int> drow(n);
    for (int b = 0; b < n; ++b) drow[b] = perm_rank(rep.up[b]);

    RowSearch rs(n);
    std::vector<Flat> found;
    if (rs.reset(drow)) rs.search(found);
    if (found.empty()) return found;

    // keep one table per orbit of the down table's automorphisms
    std::vector<std::pair<Perm, Perm>> aut;
    for (const Perm& sigma : all_perms(n)) {
        if (sigma == identity_perm(n)) continue;
        if (relabel(rep, sigma) == rep)
            aut.emplace_back(sigma, inverse_perm(sigma));
    }
    (void)pt;
    if (aut.empty()) return found;
    std::vector<Flat> kept;
    kept.reserve(found.size());
    for (Flat& f : found) {
        const Birack t = from_flat_encoding(n, f);
        bool least = true;
        for (const auto& [sigma, sigma_inv] : aut)
            if (relabeled_smaller(t, sigma, sigma_inv, f)) {
                least = false;
                break;
            }
        if (least) kept.push_back(std::move(f));
    }
    return kept;
}

// ---- checkpointing -----------------------------------------------------------
//
// JSONL: a header line {version, mode, n, partitions, source_hash} followed
// by one {partition, tables} line per completed partition.  A truncated
// trailing line (interrupted write) is dropped on resume; a header that does
// not match the requested search is an error.

struct CheckpointFile {
    std::string path;
    std::map<int, std::vector<Flat>> done;
    std::mutex io;

    void open(const std::string& p, const std::string& mode, int n,
              int partitions, const std::string& source_hash) {
        path = p;
        json expected = {{"version", "birack-search-v1"},
                         {"mode", mode},
                         {"n", n},
                         {"partitions", partitions},
                         {"source_hash", source_hash}};
        std::ifstream in(path);
        if (!in) {
            std::ofstream out(path);
            if (!out)
                throw validation_error("cannot create checkpoint file '" +
                                       path + "'");
            out << expected.dump() << "\n";
            return;
        }
        std::string line;
        if (!std::getline(in, line))
            throw validation_error("checkpoint file '" + path + "' is empty");
        json header = json::parse(line, nullptr, false);
        if (header.is_discarded() || header != expected)
            throw validation_error(
                "checkpoint file '" + path +
                "' does not match the requested search; remove it or point "
                "the search elsewhere");
        const size_t flat_size = (size_t)2 * n * n;
        while (std::getline(in, line)) {
            json rec = json::parse(line, nullptr, false);
            if (rec.is_discarded()) break;  // interrupted write, drop the tail
            if (!rec.is_object() || !rec.contains("partition") ||
                !rec.contains("tables"))
                throw validation_error("checkpoint file '" + path +
                                       "' has an unexpected record");
            const int part = rec["partition"].get<int>();
            if (part < 0 || part >= partitions)
                throw validation_error("checkpoint file '" + path +
                                       "' names partition " +
                                       std::to_string(part) +
                                       " outside the search");
            std::vector<Flat> tables;
            for (const json& jt : rec["tables"]) {
                Flat f = jt.get<Flat>();
                if (f.size() != flat_size)
                    throw validation_error("checkpoint file '" + path +
                                           "' holds a table of the wrong "
                                           "size");
                tables.push_back(std::move(f));
            }
            done.emplace(part, std::move(tables));
        }
    }

    void record(int partition, const std::vector<Flat>& tables) {
        if (path.empty()) return;
        std::lock_guard lock(io);
        std::ofstream out(path, std::ios::app);
        json rec = {{"partition", partition}, {"tables", tables}};
        out << rec.dump() << "\n";
    }
};

// ---- partition runner --------------------------------------------------------

std::vector<std::vector<Flat>> run_partitions(
    int total, const std::function<std::vector<Flat>(int)>& body,
    const SearchConfig& cfg, const std::string& mode, int n,
    const std::string& source_hash) {
    std::vector<std::vector<Flat>> results((size_t)total);
    CheckpointFile ck;
    if (!cfg.checkpoint_path.empty())
        ck.open(cfg.checkpoint_path, mode, n, total, source_hash);

    std::vector<int> todo;
    for (int k = 0; k < total; ++k) {
        auto it = ck.done.find(k);
        if (it != ck.done.end())
            results[k] = std::move(it->second);
        else
            todo.push_back(k);
    }

    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const size_t i = next.fetch_add(1);
            if (i >= todo.size()) break;
            try {
                std::vector<Flat> r = body(todo[i]);
                ck.record(todo[i], r);
                results[todo[i]] = std::move(r);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!err) err = std::current_exception();
                failed = true;
            }
        }
    };

    const int workers =
        std::max(1, std::min(cfg.workers, (int)todo.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);
    return results;
}

// ---- assembling the catalog ---------------------------------------------------

int class_rank(StructureClass c) {
    switch (c) {
        case StructureClass::quandle: return 0;
        case StructureClass::rack: return 1;
        default: return 2;
    }
}

const char* class_prefix(StructureClass c) {
    switch (c) {
        case StructureClass::quandle: return "Q";
        case StructureClass::rack: return "R";
        case StructureClass::biquandle: return "BQ";
        case StructureClass::birack: return "BR";
        case StructureClass::invalid: break;
    }
    throw structural_error("search produced a table failing the axioms");
}

CatalogBuild assemble(int n, const std::vector<std::vector<Flat>>& parts) {
    CatalogBuild out;
    std::set<Flat> labeled;
    for (const auto& part : parts)
        for (const Flat& f : part) labeled.insert(f);
    out.raw_tables = (long long)labeled.size();

    std::set<Flat> canonicals;
    for (const Flat& f : labeled)
        canonicals.insert(canonical_form(from_flat_encoding(n, f)));
    out.relabel_classes = (long long)canonicals.size();

    std::set<Flat> keys;
    for (const Flat& c : canonicals)
        keys.insert(iso_key(from_flat_encoding(n, c)));

    // built-in tables claim their classes so the stored representatives stay
    // in the catalogued form
    std::map<Flat, const CatalogEntry*> claimed;
    for (const CatalogEntry& e : builtin_catalog().entries)
        if (e.table.n == n) claimed.emplace(iso_key(e.table), &e);

    std::map<StructureClass, int> counter;
    for (const Flat& key : keys) {  // ascending: deterministic names
        CatalogEntry entry;
        auto hit = claimed.find(key);
        if (hit != claimed.end()) {
            entry.table = hit->second->table;
            entry.aliases.push_back(hit->second->name);
            entry.aliases.insert(entry.aliases.end(),
                                 hit->second->aliases.begin(),
                                 hit->second->aliases.end());
        } else {
            const Birack member = from_flat_encoding(n, key);
            int best_rank = 0;
            Flat best;
            for (const Birack& v : symmetry_variants(member)) {
                const Birack nv = normalize_rack_form(v);
                const int rank = class_rank(classify(nv).cls);
                Flat cf = canonical_form(nv);
                if (best.empty() || rank < best_rank ||
                    (rank == best_rank && cf < best)) {
                    best_rank = rank;
                    best = std::move(cf);
                }
            }
            entry.table = from_flat_encoding(n, best);
        }
        entry.cls = classify(entry.table);
        switch (entry.cls.cls) {
            case StructureClass::quandle: ++out.counts.quandles; break;
            case StructureClass::rack: ++out.counts.racks; break;
            case StructureClass::biquandle: ++out.counts.biquandles; break;
            case StructureClass::birack: ++out.counts.biracks; break;
            case StructureClass::invalid:
                throw structural_error(
                    "search produced a table failing the axioms");
        }
        entry.name = std::string(class_prefix(entry.cls.cls)) +
                     std::to_string(n) + "c" +
                     std::to_string(++counter[entry.cls.cls]);
        out.catalog.entries.push_back(std::move(entry));
    }
    validate_catalog(out.catalog);
    return out;
}

// ---- shared trivial-down enumeration ------------------------------------------

const std::vector<Flat>& trivial_down_all(int n, const SearchConfig& cfg) {
    static std::mutex m;
    static std::map<int, std::vector<Flat>> cache;
    {
        std::lock_guard lock(m);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const PermTables& pt = perm_tables(n);
    auto parts = run_partitions(
        pt.fact, [n](int k) { return trivial_down_partition(n, k); }, cfg,
        "trivial-down", n, "none");
    std::vector<Flat> all;
    for (auto& part : parts)
        for (Flat& f : part) all.push_back(std::move(f));
    std::lock_guard lock(m);
    return cache.emplace(n, std::move(all)).first->second;
}

bool diagonal_fixed(int n, const Flat& f) {
    for (int a = 0; a < n; ++a)
        if (f[(size_t)a * n + a] != a) return false;
    return true;
}

CatalogBuild filtered_trivial_down(int n, const SearchConfig& cfg,
                                   bool want_quandles) {
    const auto& all = trivial_down_all(n, cfg);
    std::vector<std::vector<Flat>> parts(1);
    for (const Flat& f : all)
        if (diagonal_fixed(n, f) == want_quandles) parts[0].push_back(f);
    return assemble(n, parts);
}

std::string fnv1a(const std::vector<Flat>& flats) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const Flat& f : flats) {
        mix(f.size());
        for (int v : f) mix((uint64_t)v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

// searches are deterministic, so finished builds are memoized per mode/size;
// checkpointed runs bypass the cache because they must touch their file
template <class Compute>
CatalogBuild memoized(const std::string& key, const SearchConfig& cfg,
                      Compute&& compute) {
    static std::mutex m;
    static std::map<std::string, CatalogBuild> cache;
    if (cfg.checkpoint_path.empty()) {
        std::lock_guard lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CatalogBuild b = compute();
    if (cfg.checkpoint_path.empty()) {
        std::lock_guard lock(m);
        cache.emplace(key, b);
    }
    return b;
}

}  // namespace

CatalogBuild enumerate_full(int n, const SearchConfig& cfg) {
    if (n > 4 && !cfg.force)
        throw capacity_error(
            "a full search above 4 elements multiplies the down-table space "
            "beyond practical reach; pass force to run it regardless");
    return memoized("full/" + std::to_string(n), cfg, [&] {
        const PermTables& pt = perm_tables(n);
        auto parts = run_partitions(
            pt.fact, [n](int k) { return full_partition(n, k); }, cfg, "full",
            n, "none");
        return assemble(n, parts);
    });
}

CatalogBuild enumerate_quandles(int n, const SearchConfig& cfg) {
    return memoized("quandles/" + std::to_string(n), cfg,
                    [&] { return filtered_trivial_down(n, cfg, true); });
}

CatalogBuild enumerate_racks(int n, const SearchConfig& cfg) {
    return memoized("racks/" + std::to_string(n), cfg,
                    [&] { return filtered_trivial_down(n, cfg, false); });
}

CatalogBuild enumerate_related(int n, const Catalog& down_source,
                               const SearchConfig& cfg) {
    perm_tables(n);  // size gate
    std::set<Flat> reps;
    for (const CatalogEntry& e : down_source.entries) {
        if (e.table.n != n) continue;
        if (classify(e.table).cls != StructureClass::quandle) continue;
        for (const Birack& v : symmetry_variants(e.table)) {
            const Birack nv = normalize_rack_form(v);
            if (classify(nv).cls == StructureClass::quandle)
                reps.insert(canonical_form(nv));
        }
    }
    const std::vector<Flat> rep_list(reps.begin(), reps.end());
    const std::string hash = fnv1a(rep_list);
    return memoized("related/" + std::to_string(n) + "/" + hash, cfg, [&] {
        auto parts = run_partitions(
            (int)rep_list.size(),
            [n, &rep_list](int r) { return related_partition(n, rep_list[r]); },
            cfg, "related", n, hash);
        return assemble(n, parts);
    });
}

}  // namespace birack
