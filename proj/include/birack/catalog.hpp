#pragma once

// Catalogs: named birack tables with their classification, plus the built-in
// registry of named tables, switch pairs and braid words used throughout the
// test batteries.
//
// Two file formats are supported.  JSON is the machine format (1-based
// tables, deterministic key order, round-trip exact).  "paper text" is the
// compact appendix style,
//
//   Q3_2 U=((2 3), ι, ι) D=ι order 4 c1 = 4, c2 = 2
//
// with one entry per line, ι for identity rows/tables, and aliases carried
// on '# alias <name> <alias>' comment lines so that the format round-trips.

#include <map>
#include <string>
#include <vector>

#include "birack/braid.hpp"
#include "birack/core.hpp"

namespace birack {

struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    Birack table;
    Classification cls;

    bool operator==(const CatalogEntry&) const = default;
};

struct Catalog {
    std::vector<CatalogEntry> entries;

    // name or alias lookup; nullptr when absent
    const CatalogEntry* find(const std::string& name) const;
    const CatalogEntry& at(const std::string& name) const;

    bool operator==(const Catalog&) const = default;
};

enum class CatalogFormat { json, paper_text };

// the appendix-style line for one entry
std::string paper_line(const CatalogEntry& e);

std::string catalog_to_json(const Catalog& c);
std::string catalog_to_paper_text(const Catalog& c);
Catalog catalog_from_json(const std::string& text);
Catalog catalog_from_paper_text(const std::string& text);

void save_catalog(const Catalog& c, const std::string& path, CatalogFormat f);
// sniffs the format from the content
Catalog load_catalog(const std::string& path);

// a path argument is tried as given, then under $BIRACK_CATALOG_DIR
std::string resolve_catalog_path(const std::string& path);

// every loaded catalog passes through this: table rows must be permutations,
// the stored classification must match a recomputation, the name prefix
// (Q/R/BQ/BR) must match the class, names/aliases must be unique, and no two
// entries may coincide up to relabeling
void validate_catalog(const Catalog& c);

// ---- built-ins -------------------------------------------------------------

struct NamedPair {
    std::string name;
    std::string s_name, t_name;  // catalog names of the two tables
    Birack s, t;
    PairStatus status;
};

const Catalog& builtin_catalog();
const std::vector<NamedPair>& builtin_pairs();
const std::map<std::string, braid::Word>& builtin_words();

// throw domain_error with a message naming the missing builtin
const CatalogEntry& builtin_entry(const std::string& name);
const NamedPair& builtin_pair(const std::string& name);
const braid::Word& builtin_word(const std::string& name);

}  // namespace birack
