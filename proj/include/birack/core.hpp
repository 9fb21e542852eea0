#pragma once

// Finite biracks and biquandles as a pair of action tables.
//
// A switch on X = {0,...,n-1} is an invertible map S : X^2 -> X^2 written
//   S(a, b) = (b^a, a_b)
// where b -> b^a is the "up" action of a and a -> a_b is the "down" action
// of b.  We store the two actions row-wise:
//
//   up[b][a] = a^b   (row b is the permutation "act up by b")
//   dn[b][a] = a_b   (row b is the permutation "act down by b")
//
// so S(a, b) = (up[a][b], dn[b][a]).  Everything in the library is 0-based;
// serialization and the command line speak 1-based labels.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace birack {

// ---- error taxonomy ------------------------------------------------------

// bad values fed to a constructor or operation (non-unit parameter, label
// out of range, ...)
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a table that is not even a birack where one was required
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a computation was asked to exceed its configured bound
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// text input that does not scan; carries a 0-based offset into the input
struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what), position(pos) {}
};

// a loaded file whose content contradicts itself
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- permutations --------------------------------------------------------

using Perm = std::vector<int>;  // image list: sigma maps i to sigma[i]

bool is_perm(const Perm& p);
Perm identity_perm(int n);
Perm inverse_perm(const Perm& p);
// all permutations of {0..n-1} in lexicographic order, cached per n (n <= 8)
const std::vector<Perm>& all_perms(int n);

// ---- the core structure --------------------------------------------------

struct Birack {
    int n = 0;
    std::vector<Perm> up;  // up[b][a] = a^b
    std::vector<Perm> dn;  // dn[b][a] = a_b

    bool operator==(const Birack&) const = default;
};

// throws domain_error unless both tables are n rows of permutations of size n
void validate_rows(const Birack& b);

bool trivial_table(const std::vector<Perm>& rows);

std::pair<int, int> switch_apply(const Birack& b, int a, int x);
std::pair<int, int> switch_inverse_apply(const Birack& b, int c, int d);

// the sideways maps used at plat caps and for sideways-oriented crossings:
//   P(a, b) = (z, a^z)          with z the unique solution of z_a = b
//   Q(a, b) = (b_y, y)          with y the unique solution of y^b = a
// together with their inverses.  They require B2 to be well defined.
std::pair<int, int> sideways_P(const Birack& b, int a, int x);
std::pair<int, int> sideways_P_inv(const Birack& b, int c, int d);
std::pair<int, int> sideways_Q(const Birack& b, int a, int x);
std::pair<int, int> sideways_Q_inv(const Birack& b, int c, int d);

// ---- axioms ---------------------------------------------------------------

// B1 (the quandle-type axiom): for every a, the x solving x_a = a also
// satisfies a^x = x, and the y solving y^a = a also satisfies a_y = y.
bool check_B1(const Birack& b);
// B2: S is a bijection of X^2 (all n^2 switch outputs distinct)
bool check_B2(const Birack& b);
// B3: the set-theoretic Yang-Baxter equation S1 S2 S1 = S2 S1 S2 on X^3
bool check_B3(const Birack& b);
// consequences of B2+B3 that the actions must satisfy; checked on all
// (a,b,c):  (a^b)^c = (a^{c_b})^{b^c},  (a^b)_{c^{b_a}} = (a_c)^{b_{c^a}},
// (a_b)_c = (a_{c^b})_{b_c}
bool check_derived_relations(const Birack& b);

// ---- classification -------------------------------------------------------

enum class StructureClass { invalid, quandle, rack, biquandle, birack };

const char* class_name(StructureClass c);
StructureClass class_from_name(const std::string& name);

struct Classification {
    StructureClass cls = StructureClass::invalid;
    bool flag_s = false;    // up table equals down table
    bool flag_pq = false;   // biquandle with exactly one constant-row table
    bool flag_dpq = false;  // biquandle with both tables constant-row
    int order = 0;          // order of S as a permutation of X^2
    int u = 0;              // #columns of up that are constant
    int d = 0;              // #columns of dn that are constant
    int c1 = 0;             // u + d
    int c2 = 0;             // |u - d|

    bool operator==(const Classification&) const = default;
    // flags in print order, e.g. "S, DPQ, " (empty when no flag is set)
    std::string flags_prefix() const;
};

// a rack stored "up-side-down" (trivial up, nontrivial down) is flipped to
// the conventional orientation before anything else looks at it
Birack normalize_rack_form(const Birack& b);

Classification classify(const Birack& b);

int switch_order(const Birack& b);

// ---- relabeling, canonical forms, symmetries ------------------------------

Birack relabel(const Birack& b, const Perm& sigma);

// up rows then down rows, concatenated
std::vector<int> flat_encoding(const Birack& b);
Birack from_flat_encoding(int n, const std::vector<int>& flat);

// lexicographically least flat encoding over all relabelings; n <= 8 or
// capacity_error
std::vector<int> canonical_form(const Birack& b);

enum class SymmetryKind { crossing_sign, orientation, both };

// crossing_sign: the switch of S^{-1}; orientation: swap the two tables;
// both: the composite.  Each sends biracks to biracks.
Birack symmetry(const Birack& b, SymmetryKind kind);

// b itself plus its three symmetry images, in the order
// {id, crossing_sign, orientation, both}
std::array<Birack, 4> symmetry_variants(const Birack& b);

// least canonical form over the four symmetry variants; two tables get the
// same key exactly when they agree up to relabeling, mirror image and
// orientation reversal
std::vector<int> iso_key(const Birack& b);

// ---- constructors ----------------------------------------------------------

// S(a,b) = (b,a): both actions trivial
Birack twist(int n);

// Alexander switch on Z/m:  a^b = lambda a + (1 - lambda mu) b,  a_b = mu a.
// lambda and mu must be units mod m.
Birack alexander(int m, int lambda, int mu);

// the Burau switch is the mu = 1 Alexander switch
Birack burau(int m, int lambda);

// a finite group given by its multiplication table
struct GroupTable {
    int n = 0;
    std::vector<std::vector<int>> mul;  // mul[x][y] = x*y
    int identity = 0;
    Perm inverse;

    static GroupTable cyclic(int n);
    // validates associativity and existence of identity/inverses
    static GroupTable from_mul(std::vector<std::vector<int>> mul);
};

// Wada's group switch: S(a,b) = (a^2 b, b^{-1} a^{-1} b)
Birack wada(const GroupTable& g);

// ---- switch pairs ----------------------------------------------------------

// a classical switch S together with the operation T used at virtual
// crossings (usually the twist)
struct SwitchPair {
    Birack s;
    Birack t;

    bool operator==(const SwitchPair&) const = default;
};

// outcome of the detour-move axioms for a pair (S, T); see pairs.hpp for the
// individual checks
struct PairStatus {
    bool v = false;   // virtual moves hold
    bool w1 = false;  // first weld (over-strand forbidden) move holds
    bool w2 = false;  // second weld (under-strand forbidden) move holds
    int order_t = 0;  // order of T on X^2

    bool is_virtual() const { return v && !w1; }
    bool is_weld() const { return v && w1 && w2; }
    bool is_essential() const { return v && w1 && !w2; }
    const char* label() const {
        if (!v) return "none";
        if (!w1) return "virtual";
        return w2 ? "weld" : "essential";
    }

    bool operator==(const PairStatus&) const = default;
};

}  // namespace birack
