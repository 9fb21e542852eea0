#pragma once

// Exhaustive birack searches up to isomorphism.
//
// Modes:
//   full      every birack on n elements (n <= 4 unless forced)
//   quandles  trivial down table, B1 holds
//   racks     trivial down table, B1 fails (quandles are counted separately,
//             never inside the rack column)
//   related   down table ranges over the relabeling classes of a given list
//             of quandles
//
// Isomorphism throughout is the symmetry quotient of iso_key: relabeling
// together with the crossing-sign and orientation reversals.
// Representatives prefer, over the four symmetry variants, first a quandle
// form, then a rack form, then the least canonical encoding; this keeps the
// familiar tables (trivial down action where possible) in the catalog.  A
// class containing a built-in table stores that table verbatim and carries
// its names as aliases.
//
// Searches are deterministic: entries are sorted by canonical encoding and
// named <prefix><n>c<index> per class, and any worker count produces
// byte-identical catalogs.  Long searches can checkpoint completed
// partitions to a JSONL file and resume.

#include <string>
#include <vector>

#include "birack/catalog.hpp"
#include "birack/core.hpp"

namespace birack {

struct SearchConfig {
    int workers = 1;
    std::string checkpoint_path;  // empty = no checkpointing
    bool force = false;           // lift the n <= 4 gate on full searches
};

struct ClassCounts {
    long long quandles = 0;
    long long racks = 0;
    long long biquandles = 0;
    long long biracks = 0;

    bool operator==(const ClassCounts&) const = default;
};

struct CatalogBuild {
    Catalog catalog;
    ClassCounts counts;      // isomorphism classes per structure class
    long long raw_tables = 0;      // tables passing the axioms, all labelings
                                   // (related searches count these up to the
                                   // automorphisms of each down table)
    long long relabel_classes = 0; // distinct canonical forms before symmetry
};

CatalogBuild enumerate_full(int n, const SearchConfig& cfg = {});
CatalogBuild enumerate_quandles(int n, const SearchConfig& cfg = {});
CatalogBuild enumerate_racks(int n, const SearchConfig& cfg = {});
// biracks whose down table is a quandle from down_source (up to relabeling;
// the source list is closed under the symmetry variants first)
CatalogBuild enumerate_related(int n, const Catalog& down_source,
                               const SearchConfig& cfg = {});

}  // namespace birack
