#include <cstdio>
#include <fstream>

#include "birack/braid.hpp"
#include "birack/catalog.hpp"
#include "birack/core.hpp"
#include "doctest.h"

using namespace birack;
using braid::Word;

namespace {

SwitchPair twist_pair(const std::string& name) {
    const Birack& s = builtin_entry(name).table;
    return {s, twist(s.n)};
}

}  // namespace

TEST_CASE("parsing and formatting braid words") {
    Word w = braid::parse("s1 -s2 t1");
    REQUIRE(w.letters.size() == 3);
    CHECK(w.letters[0].index == 1);
    CHECK(w.letters[0].sign == 1);
    CHECK_FALSE(w.letters[0].is_virtual);
    CHECK(w.letters[1].sign == -1);
    CHECK(w.letters[2].is_virtual);
    CHECK(braid::format(w) == "s1 -s2 t1");

    CHECK(braid::format(braid::parse("s2^3")) == "s2 s2 s2");
    CHECK(braid::format(braid::parse("-s2^2")) == "-s2 -s2");
    CHECK(braid::format(braid::parse("  s1\n\ts2  ")) == "s1 s2");
    CHECK(braid::parse("").letters.empty());
}

TEST_CASE("parse errors carry their position") {
    CHECK_THROWS_AS(braid::parse("x1"), parse_error);
    CHECK_THROWS_AS(braid::parse("s0"), parse_error);
    CHECK_THROWS_AS(braid::parse("s"), parse_error);
    CHECK_THROWS_AS(braid::parse("s1^"), parse_error);
    CHECK_THROWS_AS(braid::parse("s1 q2"), parse_error);
    try {
        braid::parse("s1 q2");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("a negative virtual letter warns and is kept positive") {
    std::vector<std::string> warnings;
    Word w = braid::parse("-t1", &warnings);
    REQUIRE(w.letters.size() == 1);
    CHECK(w.letters[0].is_virtual);
    CHECK(w.letters[0].sign == 1);
    CHECK(warnings.size() == 1);
}

TEST_CASE("word algebra") {
    Word w = braid::parse("s1 -s2 t1");
    Word wi = braid::inverse(w);
    CHECK(braid::format(wi) == "t1 s2 -s1");
    CHECK(braid::power(w, 3).letters.size() == 9);
    CHECK(braid::power(w, -1) == wi);
    CHECK(braid::power(w, 0).letters.empty());

    Word x = braid::parse("s1");
    Word y = braid::parse("s2 t1");
    CHECK(braid::format(braid::commutator(x, y)) == "-s1 t1 -s2 s1 s2 t1");
}

TEST_CASE("writhe and strand counts") {
    CHECK(braid::writhe(builtin_word("w3.1")) == -1);
    CHECK(braid::writhe(braid::parse("t1 t2")) == 0);
    CHECK(braid::strands(braid::parse("s1 t3")) == 4);
    CHECK(braid::strands(builtin_word("bigelow-b1")) == 5);
    CHECK(braid::strands(builtin_word("bigelow-b2")) == 6);
}

TEST_CASE("evaluation inverts and respects concatenation") {
    SwitchPair p{builtin_entry("BQ3_3").table, builtin_entry("Q3_1").table};
    Word w = braid::parse("s1 -s2 t1 s2 s2 -s1 t2");
    Word round = w;
    Word wi = braid::inverse(w);
    round.letters.insert(round.letters.end(), wi.letters.begin(),
                         wi.letters.end());
    std::vector<int> tuple = {0, 1, 2};
    for (int v0 = 0; v0 < 3; ++v0) {
        tuple[0] = v0;
        CHECK(braid::evaluate(round, p, 3, tuple) == tuple);
    }
    CHECK(braid::fixed_point_count(round, p, 3) == 27);
}

TEST_CASE("letters act only on their two strands") {
    SwitchPair p = twist_pair("BQ3_3");
    Word w = braid::parse("s1");
    std::vector<int> tuple = {1, 2, 0, 1};
    auto out = braid::evaluate(w, p, 4, tuple);
    CHECK(out[2] == 0);
    CHECK(out[3] == 1);
}

TEST_CASE("fixed points of the trefoil braid") {
    CHECK(braid::fixed_point_count(braid::parse("s1 s1 s1"),
                                   twist_pair("BQ3_3"), 2) == 9);
}

TEST_CASE("the empty word fixes everything") {
    SwitchPair p = twist_pair("Q3_1");
    CHECK(braid::fixed_point_count(Word{}, p, 1) == 3);
    CHECK(braid::fixed_point_count(Word{}, p, 3) == 27);
}

TEST_CASE("conjugation preserves the count") {
    SwitchPair p{builtin_entry("BQ3_3").table, builtin_entry("Q3_1").table};
    Word w = braid::parse("s1 s1 t2 -s1");
    for (const char* conj : {"s1", "-s2", "t1", "s2 t1"}) {
        Word g = braid::parse(conj);
        Word moved = braid::inverse(g);
        moved.letters.insert(moved.letters.end(), w.letters.begin(),
                             w.letters.end());
        moved.letters.insert(moved.letters.end(), g.letters.begin(),
                             g.letters.end());
        CHECK(braid::fixed_point_count(moved, p, 3) ==
              braid::fixed_point_count(w, p, 3));
    }
}

TEST_CASE("stabilization preserves the count for biquandle pairs") {
    SwitchPair p = twist_pair("BQ3_3");  // satisfies B1: kinks are transparent
    Word w = braid::parse("s1 s1 s1");
    Word stab = w;
    stab.letters.push_back({false, 2, 1});  // s2 on a fresh strand
    CHECK(braid::fixed_point_count(stab, p, 3) ==
          braid::fixed_point_count(w, p, 2));
    Word stab_neg = w;
    stab_neg.letters.push_back({false, 2, -1});
    CHECK(braid::fixed_point_count(stab_neg, p, 3) ==
          braid::fixed_point_count(w, p, 2));
}

TEST_CASE("declared strand counts gate evaluation") {
    Word w = braid::parse("s1");
    CHECK_THROWS_AS(braid::fixed_point_count(w, twist_pair("Q3_1"), 1),
                    domain_error);
}

TEST_CASE("the separation braid has the published shape") {
    Word w = braid::theorem53_braid();
    CHECK(w.letters.size() == 150);
    CHECK(braid::strands(w) == 7);
    CHECK(builtin_word("theorem53") == w);
}

TEST_CASE("word files load by name") {
    const std::string path = "test_words_tmp.words";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "K3 s1 -s2 t1\n";
        out << "other t1 t1\n";
    }
    auto words = braid::load_words_file(path);
    REQUIRE(words.count("K3") == 1);
    CHECK(braid::format(words.at("K3")) == "s1 -s2 t1");
    CHECK(words.count("other") == 1);
    std::remove(path.c_str());
    CHECK_THROWS_AS(braid::load_words_file("no_such_file.words"),
                    domain_error);
}

TEST_CASE("budget overruns throw") {
    braid::CountOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(braid::fixed_point_count(braid::parse("s1"),
                                             twist_pair("Q3_1"), 3, tiny),
                    capacity_error);
}
