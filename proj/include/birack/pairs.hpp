#pragma once

// Detour-move analysis of switch pairs (S, T).
//
// The three checks compare the two ways of sliding a strand past a crossing,
// as equations between maps on X^3 built from the switch maps of S and T
// applied at pair positions (leftmost factor applied first):
//
//   V :  T has order <= 2 on X^2 and  T1 S2 T1 = T2 S1 T2
//   W1:  T1 S2 S1 = S2 S1 T2          (slide over the crossing)
//   W2:  S1 S2 T1 = T2 S1 S2          (slide under the crossing)
//
// A pair that passes V is a virtual pair; adding W1 and W2 gives a weld
// pair; V and W1 without W2 is the interesting ("essential") case that
// separates welded from virtual behaviour.

#include <vector>

#include "birack/catalog.hpp"
#include "birack/core.hpp"

namespace birack {

bool check_V(const SwitchPair& p);
bool check_W1(const SwitchPair& p);
bool check_W2(const SwitchPair& p);
PairStatus pair_status(const SwitchPair& p);

// table-level criterion for when (S, twist) admits the over-strand slide:
// the up action commutes with itself ((a^b)^c = (a^c)^b) and the down action
// ignores raising of its actor (a_{b^c} = a_b).  Cross-validated against
// check_W1({S, twist}) on every catalog biquandle; the under-strand slide is
// a separate condition and can still fail.
bool twist_weld_criterion(const Birack& s);

struct EssentialHit {
    std::string s_name, t_name;  // catalog names
    Birack s, t;                 // t carries the witness relabeling
    Perm t_sigma;                // the relabeling applied to the catalog t
};

struct FindOptions {
    // search all entries, not only the quandle/biquandle ones
    bool include_non_b1 = false;
};

// scan ordered pairs of catalog entries for essential pairs: S is taken as
// stored, T runs over all relabelings of entries whose switch has order <= 2
// on X^2; one hit is reported per (S name, T name) with the first witness
// relabeling found.  Results are sorted by entry order in the catalog.
std::vector<EssentialHit> find_essential(const Catalog& c,
                                         const FindOptions& opts = {});

// welded-table row: the fixed point counts of one word under each pair,
// with the per-pair coloring baseline |X|
struct WeldedCell {
    long long count = 0;
    int baseline = 0;
};

struct WeldedRow {
    std::string word_name;
    std::vector<WeldedCell> cells;
    bool nontrivial = false;  // some cell differs from its baseline
};

std::vector<WeldedRow> welded_table(
    const std::vector<NamedPair>& pairs,
    const std::vector<std::pair<std::string, braid::Word>>& words,
    const braid::CountOptions& opts = {});

}  // namespace birack
