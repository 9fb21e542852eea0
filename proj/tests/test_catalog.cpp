#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "birack/catalog.hpp"
#include "birack/core.hpp"
#include "doctest.h"

using namespace birack;

namespace {

Catalog small_catalog() {
    Catalog c;
    for (const char* name : {"Q3_1", "Q3_2", "BQ3_3", "R3_1", "BR3_1"})
        c.entries.push_back(builtin_entry(name));
    return c;
}

}  // namespace

TEST_CASE("the built-in registry is complete and valid") {
    const Catalog& c = builtin_catalog();
    CHECK(c.entries.size() == 39);  // 3 + 16 + 15 + 5 printed tables
    CHECK_NOTHROW(validate_catalog(c));

    int by_n[7] = {};
    for (const CatalogEntry& e : c.entries) ++by_n[e.table.n];
    CHECK(by_n[2] == 3);
    CHECK(by_n[3] == 16);
    CHECK(by_n[4] == 15);
    CHECK(by_n[6] == 5);
}

TEST_CASE("aliases resolve to their entries") {
    CHECK(builtin_catalog().at("B2(Z3)").name == "Q3_3");
    CHECK(builtin_catalog().at("A12(Z3)").name == "BQ3_3");
    CHECK(builtin_catalog().at("A22(Z3)").name == "BQ3_5");
    CHECK(builtin_catalog().find("nonesuch") == nullptr);
    CHECK_THROWS_AS(builtin_catalog().at("nonesuch"), domain_error);
    CHECK_THROWS_AS(builtin_entry("nonesuch"), domain_error);
    CHECK_THROWS_AS(builtin_pair("nonesuch"), domain_error);
    CHECK_THROWS_AS(builtin_word("nonesuch"), domain_error);
}

TEST_CASE("the appendix line of a known entry") {
    CHECK(paper_line(builtin_entry("Q3_2")) ==
          "Q3_2 U=((2 3), ι, ι) D=ι order 4 c1 = 4, c2 = 2");
}

TEST_CASE("json round trip") {
    Catalog c = small_catalog();
    Catalog back = catalog_from_json(catalog_to_json(c));
    CHECK(back == c);
}

TEST_CASE("paper text round trip") {
    Catalog c = small_catalog();
    c.entries.push_back(builtin_entry("Q3_3"));  // carries an alias
    Catalog back = catalog_from_paper_text(catalog_to_paper_text(c));
    CHECK(back == c);
}

TEST_CASE("files round trip with format sniffing") {
    Catalog c = small_catalog();
    const std::string j = "test_catalog_tmp.json";
    const std::string t = "test_catalog_tmp.txt";
    save_catalog(c, j, CatalogFormat::json);
    save_catalog(c, t, CatalogFormat::paper_text);
    CHECK(load_catalog(j) == c);
    CHECK(load_catalog(t) == c);
    std::remove(j.c_str());
    std::remove(t.c_str());
    CHECK_THROWS_AS(load_catalog("no_such_catalog.json"), domain_error);
}

TEST_CASE("generated names parse like printed ones") {
    Catalog c;
    CatalogEntry e = builtin_entry("Q3_1");
    e.name = "Q3c1";
    e.aliases = {"Q3_1"};
    c.entries.push_back(e);
    CHECK_NOTHROW(validate_catalog(c));
    Catalog back = catalog_from_json(catalog_to_json(c));
    CHECK(back == c);
}

TEST_CASE("validation rejects inconsistent catalogs") {
    Catalog dup = small_catalog();
    dup.entries.push_back(dup.entries.front());
    CHECK_THROWS_AS(validate_catalog(dup), validation_error);

    Catalog wrong_cls = small_catalog();
    wrong_cls.entries[0].cls.order += 1;
    CHECK_THROWS_AS(validate_catalog(wrong_cls), validation_error);

    Catalog wrong_prefix = small_catalog();
    wrong_prefix.entries[0].name = "R3_9";  // a quandle under a rack name
    CHECK_THROWS_AS(validate_catalog(wrong_prefix), validation_error);

    Catalog wrong_size = small_catalog();
    wrong_size.entries[0].name = "Q4_1";
    CHECK_THROWS_AS(validate_catalog(wrong_size), validation_error);

    Catalog relabeled_twin = small_catalog();
    CatalogEntry twin = relabeled_twin.entries[2];
    twin.name = "BQ3_99";
    twin.aliases.clear();
    twin.table = relabel(twin.table, {1, 0, 2});
    twin.cls = classify(twin.table);
    relabeled_twin.entries.push_back(twin);
    CHECK_THROWS_AS(validate_catalog(relabeled_twin), validation_error);
}

TEST_CASE("malformed files raise parse or validation errors") {
    CHECK_THROWS(catalog_from_json("{\"entries\": \"oops\"}"));
    CHECK_THROWS(catalog_from_paper_text("Q3_1 U=nonsense\n"));
}

TEST_CASE("the catalog directory environment variable") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "birack_catalog_dir_test";
    fs::create_directories(dir);
    const std::string inside = (dir / "inside.json").string();
    save_catalog(small_catalog(), inside, CatalogFormat::json);
    setenv("BIRACK_CATALOG_DIR", dir.c_str(), 1);
    CHECK(resolve_catalog_path("inside.json") == inside);
    CHECK(load_catalog(resolve_catalog_path("inside.json")) ==
          small_catalog());
    unsetenv("BIRACK_CATALOG_DIR");
    fs::remove_all(dir);
}

TEST_CASE("built-in words store the published letters") {
    CHECK(braid::format(builtin_word("w3.1")) ==
          "s1 t2 s3 -s2 -s2 -s1 t2 -s3 s2");
    CHECK(braid::format(builtin_word("w3.2")) == "t1 -s2 t1 -s1 -s1 t2");
    CHECK(braid::format(builtin_word("w4.5")) == "t1 s2 -s1 t1 s1 s2");
    CHECK(braid::format(builtin_word("w6.1")) ==
          "-s1 -s2 -s2 -s2 s1 -s3 -s2 -s2 -s2 s3 t2");
    CHECK(braid::format(builtin_word("K1")) ==
          "s1 -s2 -s1 t2 s1 s2 -s1 t2");
    CHECK(braid::format(builtin_word("K2")) ==
          "-s1 -s2 s1 t2 -s1 s2 s1 t2");
    CHECK(builtin_word("bigelow-b1").letters.size() == 122);
    CHECK(builtin_word("bigelow-b2").letters.size() == 44);
    CHECK(builtin_word("b1") == builtin_word("bigelow-b1"));
    CHECK(builtin_word("b2") == builtin_word("bigelow-b2"));
}

TEST_CASE("built-in pairs reference their catalog tables") {
    for (const NamedPair& p : builtin_pairs()) {
        CAPTURE(p.name);
        CHECK(p.s == builtin_entry(p.s_name).table);
        CHECK(p.t == builtin_entry(p.t_name).table);
        CHECK(p.s.n == p.t.n);
    }
    const NamedPair& p1 = builtin_pair("P1");
    CHECK(p1.s_name == "BQ3_3");
    CHECK(p1.t_name == "Q3_1");
    CHECK(builtin_pair("kishino-pair").s_name == "BQ4_53");
    CHECK(builtin_pair("kishino-pair").t_name == "BQ4_26");
    CHECK(builtin_pair("bigelow-pair").s_name == "BQ4_3");
    CHECK(builtin_pair("bigelow-pair").t_name == "BQ4_9");
    CHECK(builtin_pair("theorem53-pair").s_name == "BQ3_3");
    CHECK(builtin_pair("theorem53-pair").t_name == "BQ3_5");
}
