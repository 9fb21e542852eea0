#include <vector>

#include "birack/braid.hpp"
#include "birack/catalog.hpp"
#include "birack/core.hpp"
#include "birack/plat.hpp"
#include "doctest.h"

using namespace birack;
using plat::LevelOp;
using plat::PlatProgram;

namespace {

std::vector<LevelOp::Kind> op_kinds(const PlatProgram& p) {
    std::vector<LevelOp::Kind> out;
    for (const LevelOp& op : p.ops) out.push_back(op.kind);
    return out;
}

std::vector<const CatalogEntry*> size3_entries() {
    std::vector<const CatalogEntry*> out;
    for (const CatalogEntry& e : builtin_catalog().entries)
        if (e.table.n == 3) out.push_back(&e);
    return out;
}

long long one_kink_closed_form(const Birack& t) {
    long long count = 0;
    for (int x = 0; x < t.n; ++x) {
        int z = inverse_perm(t.dn[x])[x];
        if (t.up[z][x] == z) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("the unknot tower alternates its sideways factors") {
    using K = LevelOp::Kind;
    CHECK(op_kinds(plat::unknot_tower(0)).empty());
    CHECK(op_kinds(plat::unknot_tower(1)) == std::vector{K::P});
    CHECK(op_kinds(plat::unknot_tower(2)) == std::vector{K::P, K::Q});
    CHECK(op_kinds(plat::unknot_tower(5)) ==
          std::vector{K::P, K::Q, K::P, K::Q, K::P});
    for (int w : {-2, -1, 0, 1, 2, 5})
        CHECK(plat::unknot_tower(w).base_writhe == w);
    CHECK(plat::unknot_tower(3).strands == 2);
}

TEST_CASE("inverting a program reverses and inverts its factors") {
    using K = LevelOp::Kind;
    CHECK(plat::invert_ops(plat::unknot_tower(2).ops) ==
          std::vector<LevelOp>{{K::Q_inv, 0, {}}, {K::P_inv, 0, {}}});
}

TEST_CASE("a hand-built negative-crossing stack is the unknot tower") {
    for (int w : {1, 2, 5}) {
        PlatProgram p;
        p.strands = 2;
        for (int i = 0; i < w; ++i)
            p.levels.push_back(
                {plat::DiagramLevel::Kind::crossing, 1, -1, {}});
        plat::assign_orientations(p);
        CHECK(p == plat::unknot_tower(w));
    }
}

TEST_CASE("component counting") {
    CHECK(plat::component_count(2, {}) == 1);
    CHECK(plat::component_count(4, {}) == 2);
    PlatProgram closed = plat::closure_to_plat(braid::parse("s1 s1 s1"));
    CHECK(closed.strands == 4);
    CHECK(plat::component_count(closed.strands, closed.levels) == 1);
    PlatProgram split = plat::closure_to_plat(braid::parse("s1 s1"));
    CHECK(plat::component_count(split.strands, split.levels) == 2);
}

TEST_CASE("phi on flat and one-kink towers") {
    CHECK(plat::phi(plat::unknot_tower(0), twist(5)) == 5);
    CHECK(plat::phi(plat::unknot_tower(1), twist(4)) == 4);
    CHECK(plat::phi(plat::unknot_tower(1), builtin_entry("R3_1").table) == 0);
    CHECK(plat::phi(plat::unknot_tower(1), builtin_entry("BQ3_3").table) == 3);
    for (const CatalogEntry* e : size3_entries())
        CHECK(plat::phi(plat::unknot_tower(0), e->table) == 3);
}

TEST_CASE("one kink matches its closed form on every printed table") {
    for (const CatalogEntry& e : builtin_catalog().entries) {
        CAPTURE(e.name);
        CHECK(plat::phi(plat::unknot_tower(1), e.table) ==
              one_kink_closed_form(e.table));
    }
}

TEST_CASE("phi of the inverse program always agrees") {
    const Birack& b = builtin_entry("BR3_2").table;
    for (const PlatProgram& p :
         {plat::unknot_tower(3), plat::closure_to_plat(builtin_word("w3.1")),
          plat::closure_to_plat(braid::parse("s1 s1 s1"))})
        CHECK(plat::phi_negative(p, b) == plat::phi(p, b));
}

TEST_CASE("plat closures count the same colorings as the braid sweep") {
    const char* words[] = {"s1 s1 s1", "-s1 s2", "s1 t2 s1 -s2", "t1 t2"};
    const char* tables[] = {"BQ3_3", "R3_1", "Q3_2", "BR3_1", "BQ4_19"};
    for (const char* wtext : words)
        for (const char* name : tables) {
            const Birack& b = builtin_entry(name).table;
            braid::Word w = braid::parse(wtext);
            PlatProgram p = plat::closure_to_plat(w);
            CAPTURE(wtext);
            CAPTURE(name);
            CHECK(plat::phi(p, b) ==
                  braid::fixed_point_count(w, {b, twist(b.n)},
                                           braid::strands(w)));
        }
}

TEST_CASE("an all-virtual closure is a pure routing") {
    PlatProgram p = plat::closure_to_plat(braid::parse("t1 t2 t1"));
    for (const LevelOp& op : p.ops)
        CHECK(op.kind == LevelOp::Kind::route);
    const int components =
        plat::component_count(p.strands, p.levels);
    long long expect = 1;
    for (int i = 0; i < components; ++i) expect *= 3;
    CHECK(plat::phi(p, builtin_entry("BQ3_3").table) == expect);
}

TEST_CASE("a one-crossing closure reduces to the one-kink tower") {
    for (const CatalogEntry* e : size3_entries())
        CHECK(plat::phi(plat::closure_to_plat(braid::parse("-s1")),
                        e->table) ==
              plat::phi(plat::unknot_tower(1), e->table));
}

TEST_CASE("closures carry the word writhe") {
    CHECK(plat::closure_to_plat(braid::parse("-s1")).base_writhe == -1);
    CHECK(plat::closure_to_plat(builtin_word("w3.1")).base_writhe == -1);
    CHECK(plat::closure_to_plat(braid::parse("t1")).base_writhe == 0);
}

TEST_CASE("phi is invariant under rerouting") {
    const Birack& b = builtin_entry("BQ3_5").table;
    PlatProgram base = plat::closure_to_plat(braid::parse("s1 s1 s1"));
    const long long reference = plat::phi(base, b);

    // insert route o route^-1 in the middle of the level stack
    PlatProgram rerouted;
    rerouted.strands = base.strands;
    rerouted.levels = base.levels;
    plat::DiagramLevel fwd{plat::DiagramLevel::Kind::route, 0, 1,
                           {2, 0, 3, 1}};
    plat::DiagramLevel back{plat::DiagramLevel::Kind::route, 0, 1,
                            {1, 3, 0, 2}};
    rerouted.levels.insert(rerouted.levels.begin() + 2, back);
    rerouted.levels.insert(rerouted.levels.begin() + 2, fwd);
    plat::assign_orientations(rerouted);
    CHECK(plat::phi(rerouted, b) == reference);

    // conjugate the whole program by a route exchanging the two cap pairs
    plat::DiagramLevel exchange{plat::DiagramLevel::Kind::route, 0, 1,
                                {2, 3, 0, 1}};
    PlatProgram conjugated;
    conjugated.strands = base.strands;
    conjugated.levels.push_back(exchange);
    for (const auto& lv : base.levels) conjugated.levels.push_back(lv);
    conjugated.levels.push_back(exchange);
    plat::assign_orientations(conjugated);
    CHECK(plat::phi(conjugated, b) == reference);
}

TEST_CASE("series on the unknot") {
    for (const CatalogEntry* e : size3_entries()) {
        CAPTURE(e->name);
        plat::WritheSeries ws =
            plat::series(plat::unknot_tower(0), e->table, 6);
        CHECK(ws.base_writhe == 0);
        CHECK(ws.values.size() == 13);
        CHECK(ws.at(0) == 3);
        CHECK(ws.period >= 1);
        CHECK(ws.period <= 3);
        for (int w = 1; w <= 6; ++w) CHECK(ws.at(w) == ws.at(-w));
        if (e->cls.cls == StructureClass::quandle ||
            e->cls.cls == StructureClass::biquandle)
            for (const auto& [w, v] : ws.values) CHECK(v == 3);
    }
    plat::WritheSeries tw = plat::series(plat::unknot_tower(0), twist(4), 3);
    CHECK(tw.period == 1);
    for (const auto& [w, v] : tw.values) CHECK(v == 4);
}

TEST_CASE("series values are indexed by writhe") {
    plat::WritheSeries ws = plat::series(plat::unknot_tower(0), twist(3), 2);
    CHECK(ws.at(2) == 3);
    CHECK_THROWS_AS(ws.at(3), domain_error);
    CHECK_THROWS_AS(plat::series(plat::unknot_tower(0), twist(3), -1),
                    domain_error);
}

TEST_CASE("series of a closure starts at the word writhe") {
    const Birack& b = builtin_entry("BQ3_3").table;
    braid::Word w = braid::parse("s1 s1 s1");
    plat::WritheSeries ws = plat::series(plat::closure_to_plat(w), b, 2);
    CHECK(ws.base_writhe == 3);
    CHECK(ws.at(3) == plat::phi(plat::closure_to_plat(w), b));
    CHECK(ws.values.size() == 5);
}

TEST_CASE("diagram validation") {
    PlatProgram odd;
    odd.strands = 3;
    CHECK_THROWS_AS(plat::assign_orientations(odd), domain_error);

    PlatProgram bad_index;
    bad_index.strands = 2;
    bad_index.levels.push_back(
        {plat::DiagramLevel::Kind::crossing, 2, 1, {}});
    CHECK_THROWS_AS(plat::assign_orientations(bad_index), domain_error);

    PlatProgram unassigned = plat::unknot_tower(2);
    unassigned.orientations.clear();
    CHECK_THROWS_AS(plat::phi(unassigned, twist(3)), domain_error);
}
