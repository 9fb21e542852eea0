// The built-in registry: the named tables, switch pairs and braid words that
// the reproduction suites refer to.  Tables are entered in cycle notation,
// row by row, exactly as catalogued; see tests for the cross-checks against
// the algebraic constructors.

#include <map>

#include "birack/catalog.hpp"
#include "birack/pairs.hpp"

namespace birack {

namespace {

// a permutation of {1..n} given by disjoint cycles, e.g. pc(4, {{1,2},{3,4}})
Perm pc(int n, std::initializer_list<std::initializer_list<int>> cycles) {
    Perm p = identity_perm(n);
    for (const auto& cyc : cycles) {
        std::vector<int> c(cyc);
        for (size_t i = 0; i < c.size(); ++i)
            p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    }
    return p;
}

Perm id3() { return identity_perm(3); }
Perm id4() { return identity_perm(4); }
Perm id6() { return identity_perm(6); }

CatalogEntry entry(std::string name, Birack table,
                   std::vector<std::string> aliases = {}) {
    CatalogEntry e;
    e.name = std::move(name);
    e.table = std::move(table);
    e.aliases = std::move(aliases);
    e.cls = classify(e.table);
    return e;
}

Catalog make_builtin_catalog() {
    Catalog c;
    auto add = [&](CatalogEntry e) { c.entries.push_back(std::move(e)); };

    // --- two elements ---
    add(entry("Q2_1", twist(2)));
    add(entry("BQ2_1", {2, {pc(2, {{1, 2}}), pc(2, {{1, 2}})},
                           {pc(2, {{1, 2}}), pc(2, {{1, 2}})}}));
    add(entry("R2_1", {2, {pc(2, {{1, 2}}), pc(2, {{1, 2}})},
                          {identity_perm(2), identity_perm(2)}}));

    // --- three elements: the full catalog ---
    std::vector<Perm> triv3(3, id3());
    add(entry("Q3_1", twist(3)));
    add(entry("Q3_2", {3, {pc(3, {{2, 3}}), id3(), id3()}, triv3}));
    add(entry("Q3_3",
              {3, {pc(3, {{2, 3}}), pc(3, {{1, 3}}), pc(3, {{1, 2}})}, triv3},
              {"B2(Z3)"}));
    add(entry("R3_1", {3, std::vector<Perm>(3, pc(3, {{1, 3, 2}})), triv3}));
    add(entry("R3_2", {3, {pc(3, {{1, 3}}), id3(), pc(3, {{1, 3}})}, triv3}));
    add(entry("R3_3", {3, std::vector<Perm>(3, pc(3, {{1, 3}})), triv3}));
    add(entry("BQ3_1", {3, {id3(), pc(3, {{2, 3}}), pc(3, {{2, 3}})},
                           {id3(), pc(3, {{2, 3}}), pc(3, {{2, 3}})}}));
    add(entry("BQ3_2", {3, {id3(), pc(3, {{2, 3}}), pc(3, {{2, 3}})},
                           std::vector<Perm>(3, pc(3, {{2, 3}}))}));
    add(entry("BQ3_3", {3, {id3(), pc(3, {{1, 3, 2}}), pc(3, {{1, 2, 3}})},
                           std::vector<Perm>(3, pc(3, {{2, 3}}))},
              {"A12(Z3)"}));
    add(entry("BQ3_4", {3, {id3(), id3(), pc(3, {{1, 2}})},
                           {id3(), id3(), pc(3, {{1, 2}})}}));
    add(entry("BQ3_5", {3, std::vector<Perm>(3, pc(3, {{2, 3}})),
                           std::vector<Perm>(3, pc(3, {{2, 3}}))},
              {"A22(Z3)"}));
    add(entry("BQ3_6",
              {3, {pc(3, {{1, 2}}), pc(3, {{2, 3}}), pc(3, {{1, 3}})},
                  std::vector<Perm>(3, pc(3, {{1, 2, 3}}))}));
    add(entry("BQ3_7", {3, std::vector<Perm>(3, pc(3, {{1, 2, 3}})),
                           std::vector<Perm>(3, pc(3, {{1, 3, 2}}))}));
    add(entry("BR3_1", {3, {id3(), pc(3, {{2, 3}}), pc(3, {{2, 3}})},
                           {pc(3, {{2, 3}}), id3(), id3()}}));
    add(entry("BR3_2", {3, {pc(3, {{2, 3}}), id3(), id3()},
                           std::vector<Perm>(3, pc(3, {{2, 3}}))}));
    add(entry("BR3_3", {3, std::vector<Perm>(3, pc(3, {{1, 2, 3}})),
                           std::vector<Perm>(3, pc(3, {{1, 2, 3}}))}));

    // --- four elements: the named tables of the pair searches ---
    std::vector<Perm> triv4(4, id4());
    add(entry("Q4_1", twist(4)));
    add(entry("Q4_6", {4, {pc(4, {{2, 4}}), pc(4, {{1, 3}}), pc(4, {{2, 4}}),
                           pc(4, {{1, 3}})},
                          triv4}));
    add(entry("BQ4_3", {4, {id4(), id4(), pc(4, {{2, 4, 3}}), pc(4, {{2, 3, 4}})},
                           {id4(), pc(4, {{3, 4}}), pc(4, {{3, 4}}),
                            pc(4, {{3, 4}})}}));
    add(entry("BQ4_9", {4, {id4(), pc(4, {{3, 4}}), pc(4, {{3, 4}}),
                            pc(4, {{3, 4}})},
                           {id4(), pc(4, {{3, 4}}), pc(4, {{3, 4}}),
                            pc(4, {{3, 4}})}}));
    add(entry("BQ4_19",
              {4, {id4(), pc(4, {{1, 3}, {2, 4}}), pc(4, {{1, 4}, {2, 3}}),
                   pc(4, {{1, 2}, {3, 4}})},
                  std::vector<Perm>(4, pc(4, {{2, 4, 3}}))}));
    add(entry("BQ4_23", {4, {id4(), id4(), id4(), pc(4, {{1, 3, 2}})},
                            {id4(), id4(), id4(), pc(4, {{1, 2, 3}})}}));
    add(entry("BQ4_26",
              {4, {id4(), id4(), pc(4, {{1, 2}, {3, 4}}), pc(4, {{1, 2}, {3, 4}})},
                  {id4(), id4(), pc(4, {{1, 2}, {3, 4}}),
                   pc(4, {{1, 2}, {3, 4}})}}));
    add(entry("BQ4_34", {4, {id4(), id4(), id4(), pc(4, {{1, 3, 2}})},
                            {pc(4, {{2, 3}}), pc(4, {{1, 3}}), pc(4, {{1, 2}}),
                             pc(4, {{1, 2, 3}})}}));
    add(entry("BQ4_38", {4, std::vector<Perm>(4, pc(4, {{2, 3, 4}})),
                            {pc(4, {{2, 4, 3}}), pc(4, {{2, 3}}),
                             pc(4, {{3, 4}}), pc(4, {{2, 4}})}}));
    add(entry("BQ4_39", {4, std::vector<Perm>(4, pc(4, {{2, 3, 4}})),
                            std::vector<Perm>(4, pc(4, {{2, 4, 3}}))}));
    add(entry("BQ4_41", {4, {pc(4, {{2, 3, 4}}), pc(4, {{1, 3, 2}}),
                             pc(4, {{1, 4, 3}}), pc(4, {{1, 2, 4}})},
                            std::vector<Perm>(4, pc(4, {{2, 3, 4}}))}));
    add(entry("BQ4_50", {4, std::vector<Perm>(4, pc(4, {{1, 2}, {3, 4}})),
                            std::vector<Perm>(4, pc(4, {{1, 2}, {3, 4}}))}));
    add(entry("BQ4_51",
              {4, {pc(4, {{1, 2}, {3, 4}}), pc(4, {{1, 3}, {2, 4}}),
                   pc(4, {{1, 3}, {2, 4}}), pc(4, {{1, 2}, {3, 4}})},
                  std::vector<Perm>(4, pc(4, {{1, 2, 4, 3}}))}));
    add(entry("BQ4_53", {4, {pc(4, {{1, 2, 3, 4}}), pc(4, {{1, 4, 3, 2}}),
                             pc(4, {{1, 2, 3, 4}}), pc(4, {{1, 4, 3, 2}})},
                            {pc(4, {{1, 2, 3, 4}}), pc(4, {{1, 4, 3, 2}}),
                             pc(4, {{1, 2, 3, 4}}), pc(4, {{1, 4, 3, 2}})}}));
    add(entry("BQ4_56", {4, std::vector<Perm>(4, pc(4, {{1, 2}, {3, 4}})),
                            {pc(4, {{1, 3, 2}}), pc(4, {{1, 2, 4}}),
                             pc(4, {{1, 4, 3}}), pc(4, {{2, 3, 4}})}}));

    // --- six elements: tables behind the last three pairs ---
    add(entry("BQ6_10",
              {6, {id6(), pc(6, {{1, 3, 4, 5, 6}}), id6(), id6(), id6(), id6()},
                  {pc(6, {{3, 4, 6, 5}}), pc(6, {{1, 6, 5, 4, 3}}),
                   pc(6, {{1, 6, 4, 5}}), pc(6, {{1, 5, 6, 3}}),
                   pc(6, {{1, 4, 3, 6}}), pc(6, {{1, 3, 5, 4}})}}));
    add(entry("BQ6_22",
              {6, {id6(), pc(6, {{1, 3, 4, 5, 6}}), id6(), id6(), id6(), id6()},
                  {pc(6, {{3, 6}, {4, 5}}), pc(6, {{1, 6, 5, 4, 3}}),
                   pc(6, {{1, 4}, {5, 6}}), pc(6, {{1, 6}, {3, 5}}),
                   pc(6, {{1, 3}, {4, 6}}), pc(6, {{1, 5}, {3, 4}})}}));
    add(entry("BQ6_49",
              {6, {pc(6, {{3, 4, 5, 6}}), id6(), id6(), id6(), id6(), id6()},
                  {pc(6, {{3, 6, 5, 4}}), pc(6, {{3, 4, 5, 6}}),
                   pc(6, {{2, 4, 6, 5}}), pc(6, {{2, 5, 3, 6}}),
                   pc(6, {{2, 6, 4, 3}}), pc(6, {{2, 3, 5, 4}})}}));
    add(entry("BQ6_230",
              {6, {pc(6, {{3, 4, 5, 6}}), id6(), id6(), id6(), id6(), id6()},
                  {pc(6, {{3, 6, 5, 4}}), id6(), id6(), id6(), id6(), id6()}}));
    add(entry("BQ6_1494",
              {6, {id6(), pc(6, {{1, 3, 4, 5, 6}}), id6(), id6(), id6(), id6()},
                  {id6(), pc(6, {{1, 6, 5, 4, 3}}), id6(), id6(), id6(), id6()}}));

    validate_catalog(c);
    return c;
}

NamedPair make_pair(const std::string& name, const std::string& s_name,
                    const std::string& t_name) {
    const Catalog& c = builtin_catalog();
    NamedPair p;
    p.name = name;
    p.s_name = s_name;
    p.t_name = t_name;
    p.s = c.at(s_name).table;
    p.t = c.at(t_name).table;
    p.status = pair_status({p.s, p.t});
    return p;
}

std::vector<NamedPair> make_builtin_pairs() {
    return {
        make_pair("P1", "BQ3_3", "Q3_1"),
        make_pair("P2", "Q3_3", "BQ3_5"),
        make_pair("P3", "BQ4_3", "Q4_1"),
        make_pair("P4", "BQ4_19", "Q4_1"),
        make_pair("P5", "BQ4_34", "BQ4_23"),
        make_pair("P6", "BQ4_38", "BQ4_39"),
        make_pair("P7", "BQ4_41", "BQ4_39"),
        make_pair("P8", "BQ4_56", "BQ4_50"),
        make_pair("P9", "Q4_6", "BQ4_50"),
        make_pair("P10", "BQ4_51", "Q4_1"),
        make_pair("P11", "BQ6_10", "BQ6_1494"),
        make_pair("P12", "BQ6_22", "BQ6_1494"),
        make_pair("P13", "BQ6_49", "BQ6_230"),
        make_pair("bigelow-pair", "BQ4_3", "BQ4_9"),
        make_pair("kishino-pair", "BQ4_53", "BQ4_26"),
        make_pair("theorem53-pair", "BQ3_3", "BQ3_5"),
    };
}

std::map<std::string, braid::Word> make_builtin_words() {
    using braid::parse;
    std::map<std::string, braid::Word> w;
    w["w3.1"] = parse("s1 t2 s3 -s2 -s2 -s1 t2 -s3 s2");
    w["w3.2"] = parse("t1 -s2 t1 -s1 -s1 t2");
    w["w4.1"] = parse("s1 t1 -s1 s2 s1 t1 -s1 -s2");
    w["w4.2"] = parse("-s1 -s2 s3 t2 s1 -s4 s3 t2 s3 s4 -s3 -s2");
    w["w4.3"] = parse("-s1 s2 s3 t2 s1 -s4 s3 t2 s3 s4 -s3 s2");
    w["w4.4"] = parse("-s1 s2 s3 t2 s1 -s4 s3 -s2 s3 s4 -s3 t2");
    w["w4.5"] = parse("t1 s2 -s1 t1 s1 s2");
    w["w4.6"] = parse("-s1 -s2 t3 -s2 s1 -s4 t3 -s2 -s3 s4 -s3 s2");
    w["w6.1"] = parse("-s1 -s2 -s2 -s2 s1 -s3 -s2 -s2 -s2 s3 t2");
    w["K1"] = parse("s1 -s2 -s1 t2 s1 s2 -s1 t2");
    w["K2"] = parse("-s1 -s2 s1 t2 -s1 s2 s1 t2");
    w["psi1"] = parse("-s3 s2 s1 s1 s2 s4 s4 s4 s3 s2");
    w["psi2"] = parse("-s4 s3 s2 -s1 -s1 s2 s1 s1 s2 s2 s1 s4 s4 s4 s4 s4");
    w["phi1"] = parse("s4 -s5 -s2 s1");
    w["phi2"] = parse("-s4 s5 s5 s2 -s1 -s1");

    // the two commutator braids of the faithfulness separation computation
    auto conj = [](const braid::Word& g, const braid::Word& mid,
                   const braid::Word& g2) {
        braid::Word out = braid::inverse(g);
        out.letters.insert(out.letters.end(), mid.letters.begin(),
                           mid.letters.end());
        out.letters.insert(out.letters.end(), g2.letters.begin(),
                           g2.letters.end());
        return out;
    };
    braid::Word b1 =
        braid::commutator(conj(w["psi1"], parse("s4"), w["psi1"]),
                          conj(w["psi2"], parse("s4 s3 s2 s1 s1 s2 s3 s4"),
                               w["psi2"]));
    b1.declared_strands = 5;
    braid::Word b2 = braid::commutator(conj(w["phi1"], parse("s3"), w["phi1"]),
                                       conj(w["phi2"], parse("s3"), w["phi2"]));
    b2.declared_strands = 6;
    w["bigelow-b1"] = b1;
    w["b1"] = b1;
    w["bigelow-b2"] = b2;
    w["b2"] = b2;
    w["theorem53"] = braid::theorem53_braid();
    return w;
}

}  // namespace

const Catalog& builtin_catalog() {
    static const Catalog c = make_builtin_catalog();
    return c;
}

const std::vector<NamedPair>& builtin_pairs() {
    static const std::vector<NamedPair> p = make_builtin_pairs();
    return p;
}

const std::map<std::string, braid::Word>& builtin_words() {
    static const std::map<std::string, braid::Word> w = make_builtin_words();
    return w;
}

const CatalogEntry& builtin_entry(const std::string& name) {
    const CatalogEntry* e = builtin_catalog().find(name);
    if (!e) throw domain_error("unknown builtin table '" + name + "'");
    return *e;
}

const NamedPair& builtin_pair(const std::string& name) {
    for (const NamedPair& p : builtin_pairs())
        if (p.name == name) return p;
    throw domain_error("unknown builtin pair '" + name + "'");
}

const braid::Word& builtin_word(const std::string& name) {
    const auto& words = builtin_words();
    auto it = words.find(name);
    if (it == words.end())
        throw domain_error("unknown builtin word '" + name + "'");
    return it->second;
}

}  // namespace birack
