#pragma once

// Reproduction suites: each one recomputes a published battery (appendix
// catalogs, class counts, essential-pair searches, fixed-point separations,
// the welded-knot table, the unknot series lemma) and reports line-by-line
// what matched.  The command line exposes them via `verify --suite NAME`;
// the acceptance binary drives the same code.

#include <string>
#include <vector>

namespace birack {

struct SuiteOptions {
    bool extended = false;  // include the gated n=6 related search
    int workers = 1;
};

struct SuiteResult {
    std::string name;
    bool ok = false;
    bool skipped = false;
    std::vector<std::string> lines;
};

const std::vector<std::string>& suite_names();

// throws domain_error for an unknown suite name
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace birack
