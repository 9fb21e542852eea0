#include <algorithm>
#include <numeric>
#include <random>

#include "birack/catalog.hpp"
#include "birack/core.hpp"
#include "doctest.h"

using namespace birack;

namespace {

Perm compose(const Perm& outer, const Perm& inner) {
    Perm out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

// the switch as one permutation of X^2, for brute-force order checks
std::vector<int> switch_as_permutation(const Birack& b) {
    std::vector<int> s((size_t)b.n * b.n);
    for (int a = 0; a < b.n; ++a)
        for (int x = 0; x < b.n; ++x) {
            auto [c, d] = switch_apply(b, a, x);
            s[(size_t)a * b.n + x] = c * b.n + d;
        }
    return s;
}

int permutation_order(const std::vector<int>& p) {
    long long order = 1;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (size_t j = i; !seen[j]; j = (size_t)p[j]) {
            seen[j] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return (int)order;
}

std::vector<const CatalogEntry*> builtin_entries_of_size(int n) {
    std::vector<const CatalogEntry*> out;
    for (const CatalogEntry& e : builtin_catalog().entries)
        if (e.table.n == n) out.push_back(&e);
    return out;
}

}  // namespace

TEST_CASE("permutation helpers") {
    CHECK(is_perm({2, 0, 1}));
    CHECK_FALSE(is_perm({0, 0, 1}));
    CHECK_FALSE(is_perm({0, 3, 1}));
    CHECK(identity_perm(4) == Perm{0, 1, 2, 3});
    CHECK(inverse_perm({2, 0, 1}) == Perm{1, 2, 0});

    const auto& s3 = all_perms(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == Perm{0, 1, 2});
    CHECK(s3.back() == Perm{2, 1, 0});
    CHECK(std::is_sorted(s3.begin(), s3.end()));
    CHECK_THROWS_AS(all_perms(9), capacity_error);
}

TEST_CASE("switch application inverts") {
    for (const CatalogEntry& e : builtin_catalog().entries) {
        if (e.table.n > 4) continue;
        for (int a = 0; a < e.table.n; ++a)
            for (int x = 0; x < e.table.n; ++x) {
                auto [c, d] = switch_apply(e.table, a, x);
                auto [a2, x2] = switch_inverse_apply(e.table, c, d);
                CHECK(a2 == a);
                CHECK(x2 == x);
            }
    }
}

TEST_CASE("sideways maps invert") {
    for (const CatalogEntry* e : builtin_entries_of_size(3)) {
        const Birack& b = e->table;
        for (int a = 0; a < b.n; ++a)
            for (int x = 0; x < b.n; ++x) {
                {
                    auto [c, d] = sideways_P(b, a, x);
                    CHECK(sideways_P_inv(b, c, d) == std::pair{a, x});
                }
                {
                    auto [c, d] = sideways_Q(b, a, x);
                    CHECK(sideways_Q_inv(b, c, d) == std::pair{a, x});
                }
            }
    }
}

TEST_CASE("every built-in table satisfies the axioms") {
    for (const CatalogEntry& e : builtin_catalog().entries) {
        CAPTURE(e.name);
        CHECK_NOTHROW(validate_rows(e.table));
        CHECK(check_B2(e.table));
        CHECK(check_B3(e.table));
        CHECK(check_derived_relations(e.table));
        const bool b1 = check_B1(e.table);
        const bool b1_class = e.cls.cls == StructureClass::quandle ||
                              e.cls.cls == StructureClass::biquandle;
        CHECK(b1 == b1_class);
    }
}

TEST_CASE("a joint collision fails B2") {
    // S(0,1) = S(1,0) = (1,0) even though every row is a permutation
    Birack b;
    b.n = 2;
    b.up = {{0, 1}, {1, 0}};
    b.dn = {{1, 0}, {0, 1}};
    CHECK_FALSE(check_B2(b));
}

TEST_CASE("B1 holds exactly when the diagonal fixed points pair up") {
    for (const CatalogEntry& e : builtin_catalog().entries) {
        const Birack& b = e.table;
        bool direct = true;
        for (int a = 0; a < b.n && direct; ++a) {
            const int x = inverse_perm(b.dn[a])[a];  // x_a = a
            if (b.up[x][a] != x) direct = false;     // need a^x = x
            const int y = inverse_perm(b.up[a])[a];  // y^a = a
            if (b.dn[y][a] != y) direct = false;     // need a_y = y
        }
        CHECK(direct == check_B1(b));
    }
}

TEST_CASE("constructor identities") {
    for (int m : {2, 3, 4, 5}) CHECK(alexander(m, 1, 1) == twist(m));
    CHECK(burau(3, 2) == alexander(3, 2, 1));
    CHECK(wada(GroupTable::cyclic(2)) == twist(2));

    CHECK(alexander(3, 1, 2) == builtin_entry("BQ3_3").table);
    CHECK(alexander(3, 2, 2) == builtin_entry("BQ3_5").table);
    CHECK(canonical_form(burau(3, 2)) ==
          canonical_form(builtin_entry("Q3_3").table));

    CHECK_THROWS_AS(alexander(4, 2, 1), domain_error);  // 2 is no unit mod 4
    CHECK_THROWS_AS(alexander(6, 1, 3), domain_error);
    CHECK_THROWS_AS(alexander(0, 1, 1), domain_error);

    const Birack w3 = wada(GroupTable::cyclic(3));
    CHECK(check_B2(w3));
    CHECK(check_B3(w3));
}

TEST_CASE("group table validation") {
    GroupTable z3 = GroupTable::cyclic(3);
    CHECK(z3.mul[1][2] == 0);
    CHECK(z3.inverse[1] == 2);
    CHECK_NOTHROW(GroupTable::from_mul(z3.mul));

    auto broken = z3.mul;
    broken[1][2] = 1;  // no longer a group
    CHECK_THROWS_AS(GroupTable::from_mul(broken), domain_error);
}

TEST_CASE("relabeling is a group action") {
    const Birack& b = builtin_entry("BQ3_3").table;
    for (const Perm& sigma : all_perms(3))
        for (const Perm& tau : all_perms(3))
            CHECK(relabel(relabel(b, sigma), tau) ==
                  relabel(b, compose(tau, sigma)));
    CHECK(relabel(b, identity_perm(3)) == b);
}

TEST_CASE("canonical form is relabel-invariant and minimal") {
    for (const CatalogEntry* e : builtin_entries_of_size(3)) {
        const std::vector<int> canon = canonical_form(e->table);
        for (const Perm& sigma : all_perms(3)) {
            const Birack moved = relabel(e->table, sigma);
            CHECK(canonical_form(moved) == canon);
            CHECK(canon <= flat_encoding(moved));
        }
        CHECK(from_flat_encoding(3, flat_encoding(e->table)) == e->table);
    }
}

TEST_CASE("classification is relabel-invariant") {
    for (const CatalogEntry* e : builtin_entries_of_size(4)) {
        const Classification cls = classify(e->table);
        for (const Perm& sigma : all_perms(4))
            CHECK(classify(relabel(e->table, sigma)) == cls);
    }
}

TEST_CASE("classifying the twist") {
    const Classification cls = classify(twist(3));
    CHECK(cls.cls == StructureClass::quandle);
    CHECK(cls.order == 2);
    CHECK(cls.flag_s);
    CHECK(cls.u == 3);
    CHECK(cls.d == 3);
    CHECK(cls.c1 == 6);
    CHECK(cls.c2 == 0);
}

TEST_CASE("symmetries are involutions and preserve the class key") {
    using K = SymmetryKind;
    for (const CatalogEntry* e : builtin_entries_of_size(3)) {
        const Birack& b = e->table;
        for (K k : {K::crossing_sign, K::orientation, K::both})
            CHECK(symmetry(symmetry(b, k), k) == b);
        CHECK(symmetry(symmetry(b, K::crossing_sign), K::orientation) ==
              symmetry(b, K::both));

        const std::vector<int> key = iso_key(b);
        for (const Birack& v : symmetry_variants(b)) {
            CHECK(check_B2(v));
            CHECK(check_B3(v));
            CHECK(iso_key(v) == key);
        }
        for (const Perm& sigma : all_perms(3))
            CHECK(iso_key(relabel(b, sigma)) == key);
    }
}

TEST_CASE("switch order matches the brute-force cycle order") {
    for (const CatalogEntry& e : builtin_catalog().entries) {
        if (e.table.n > 4) continue;
        CHECK(switch_order(e.table) ==
              permutation_order(switch_as_permutation(e.table)));
    }
}

TEST_CASE("rack normalization flips upside-down storage only") {
    const Birack& r = builtin_entry("R3_1").table;  // conventional: trivial dn
    CHECK(normalize_rack_form(r) == r);
    CHECK(normalize_rack_form(twist(3)) == twist(3));

    Birack flipped;
    flipped.n = 3;
    flipped.up = twist(3).up;  // trivial
    flipped.dn = r.up;
    const Birack fixed = normalize_rack_form(flipped);
    CHECK(trivial_table(fixed.dn));
    CHECK_FALSE(trivial_table(fixed.up));
    CHECK(classify(fixed).cls == classify(r).cls);
}

TEST_CASE("row validation and capacity limits") {
    Birack bad;
    bad.n = 2;
    bad.up = {{0, 0}, {0, 1}};
    bad.dn = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(validate_rows(bad), domain_error);

    Birack big = twist(9);
    CHECK_THROWS_AS(canonical_form(big), capacity_error);
}

TEST_CASE("structure class names round-trip") {
    for (StructureClass c :
         {StructureClass::quandle, StructureClass::rack,
          StructureClass::biquandle, StructureClass::birack})
        CHECK(class_from_name(class_name(c)) == c);
    CHECK_THROWS_AS(class_from_name("knot"), domain_error);
}
