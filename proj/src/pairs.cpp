#include "birack/pairs.hpp"

#include <array>
#include <utility>

#include "birack/braid.hpp"

namespace birack {

namespace {

// apply the switch map of `m` to tuple slots (pos, pos+1)
void apply_at(const Birack& m, int pos, std::array<int, 3>& t) {
    auto [c, d] = switch_apply(m, t[pos], t[pos + 1]);
    t[pos] = c;
    t[pos + 1] = d;
}

using Factor = std::pair<const Birack*, int>;

// the action on every triple of a word of positioned switch maps, leftmost
// factor applied first
std::vector<std::array<int, 3>> triple_action(
    int n, std::initializer_list<Factor> word) {
    std::vector<std::array<int, 3>> out;
    out.reserve((size_t)n * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::array<int, 3> t{a, b, c};
                for (const auto& [m, pos] : word) apply_at(*m, pos, t);
                out.push_back(t);
            }
    return out;
}

bool order_at_most_2(const Birack& t) {
    for (int a = 0; a < t.n; ++a)
        for (int x = 0; x < t.n; ++x) {
            auto [c, d] = switch_apply(t, a, x);
            auto [e, f] = switch_apply(t, c, d);
            if (e != a || f != x) return false;
        }
    return true;
}

void require_same_size(const SwitchPair& p) {
    if (p.s.n != p.t.n)
        throw domain_error("switch pair tables must have the same size");
}

}  // namespace

bool check_V(const SwitchPair& p) {
    require_same_size(p);
    if (!order_at_most_2(p.t)) return false;
    const Birack *S = &p.s, *T = &p.t;
    return triple_action(p.s.n, {{T, 0}, {S, 1}, {T, 0}}) ==
           triple_action(p.s.n, {{T, 1}, {S, 0}, {T, 1}});
}

bool check_W1(const SwitchPair& p) {
    require_same_size(p);
    const Birack *S = &p.s, *T = &p.t;
    return triple_action(p.s.n, {{T, 0}, {S, 1}, {S, 0}}) ==
           triple_action(p.s.n, {{S, 1}, {S, 0}, {T, 1}});
}

bool check_W2(const SwitchPair& p) {
    require_same_size(p);
    const Birack *S = &p.s, *T = &p.t;
    return triple_action(p.s.n, {{S, 0}, {S, 1}, {T, 0}}) ==
           triple_action(p.s.n, {{T, 1}, {S, 0}, {S, 1}});
}

PairStatus pair_status(const SwitchPair& p) {
    PairStatus st;
    st.v = check_V(p);
    st.w1 = check_W1(p);
    st.w2 = check_W2(p);
    st.order_t = switch_order(p.t);
    return st;
}

bool twist_weld_criterion(const Birack& s) {
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b)
            for (int c = 0; c < s.n; ++c) {
                if (s.up[c][s.up[b][a]] != s.up[b][s.up[c][a]]) return false;
                if (s.dn[s.up[c][b]][a] != s.dn[b][a]) return false;
            }
    return true;
}

std::vector<EssentialHit> find_essential(const Catalog& c,
                                         const FindOptions& opts) {
    std::vector<EssentialHit> hits;
    for (const CatalogEntry& se : c.entries) {
        if (!opts.include_non_b1 && !check_B1(se.table)) continue;
        for (const CatalogEntry& te : c.entries) {
            if (te.table.n != se.table.n) continue;
            if (!opts.include_non_b1 && !check_B1(te.table)) continue;
            // order on X^2 is relabeling-invariant, so filter once here
            if (!order_at_most_2(te.table)) continue;
            for (const Perm& sigma : all_perms(se.table.n)) {
                SwitchPair p{se.table, relabel(te.table, sigma)};
                if (!check_V(p) || !check_W1(p) || check_W2(p)) continue;
                EssentialHit hit;
                hit.s_name = se.name;
                hit.t_name = te.name;
                hit.s = p.s;
                hit.t = p.t;
                hit.t_sigma = sigma;
                hits.push_back(std::move(hit));
                break;  // one witness per name pair
            }
        }
    }
    return hits;
}

std::vector<WeldedRow> welded_table(
    const std::vector<NamedPair>& pairs,
    const std::vector<std::pair<std::string, braid::Word>>& words,
    const braid::CountOptions& opts) {
    std::vector<WeldedRow> rows;
    rows.reserve(words.size());
    for (const auto& [name, word] : words) {
        WeldedRow row;
        row.word_name = name;
        int k = braid::strands(word);
        for (const NamedPair& p : pairs) {
            WeldedCell cell;
            cell.baseline = p.s.n;
            cell.count = braid::fixed_point_count(word, {p.s, p.t}, k, opts);
            row.nontrivial = row.nontrivial || cell.count != cell.baseline;
            row.cells.push_back(cell);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace birack
