#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alwyn/identity.hpp"
#include "alwyn/report.hpp"
#include "alwyn/sequence.hpp"

namespace alwyn {

struct HarnessOptions {
    int threads = 0;             // 0 = hardware concurrency
    int counterexample_cap = 10; // archived per report; fail counts stay exact
};

enum class IdentityClass { must_pass, under_test };

struct CatalogEntry {
    std::string name;
    IdentityClass cls;
    std::string description;
};

// The selectable identity catalog. MUST-PASS entries are mathematically
// forced; UNDER-TEST entries adjudicate transcription-suspect statements.
const std::vector<CatalogEntry>& identity_catalog();

const CatalogEntry* find_identity(const std::string& name);

IdentityReport run_identity(const std::string& name, const GridSpec& grid,
                            const HarnessOptions& opts);

// All three product-difference corollaries in one report.
IdentityReport check_corollaries(const GridSpec& grid, const HarnessOptions& opts);

// Named checkers behind the catalog (run_identity dispatches to these).
IdentityReport check_character_formula(const GridSpec& grid, const HarnessOptions& opts);
IdentityReport check_summation(const GridSpec& grid, const HarnessOptions& opts);
IdentityReport check_vajda(const GridSpec& grid, const HarnessOptions& opts);

// Single-point variants with explicit index bounds.
IdentityReport matrix_power_identity_check(const SeqParams& params, int m_max,
                                           const HarnessOptions& opts = {});

enum class CerecedaMode { scalar, hybrid };
IdentityReport cereceda_reconstruction_check(const SeqParams& params, int n_max,
                                             CerecedaMode mode,
                                             const HarnessOptions& opts = {});

// Coefficientwise exponential-generating-function check up to the given
// order for one parameter point.
IdentityReport check_egf(const SeqParams& params, int order,
                         const HarnessOptions& opts = {});

// User-supplied identity over the grid; free index variables n, u, v, m
// range over the grid's index bounds.
IdentityReport run_dsl_identity(const dsl::IdentityAst& ast, const GridSpec& grid,
                                const HarnessOptions& opts);

// Built-in identities expressed in the DSL. Each mirrors a hard-coded
// checker section (rho^2-scaled where the original divides by rho^2, with
// the main product term in homogeneous-part form); verdicts agree point
// for point on the common evaluation domain.
struct DslCatalogEntry {
    std::string name;
    std::string source;
    std::string mirrors_identity;
    std::string mirrors_section;
};
const std::vector<DslCatalogEntry>& builtin_dsl_catalog();

// An identity blocks a run when a strict must-pass section failed or a
// reclassifiable failure could not be confirmed by the second path.
bool identity_blocks(const IdentityReport& report);

// True when a statically under-test identity recorded failures.
bool under_test_failure(const IdentityReport& report, IdentityClass cls);

}  // namespace alwyn
