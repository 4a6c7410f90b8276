#pragma once

// Cross-validation suites: every closed form checked against an independent
// route (shadow sizes, exhaustive decompositions, the subcode oracle).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prmghw/ghw.hpp"

namespace prmghw::verify {

struct SuiteResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
    std::optional<std::string> first_failure;
    std::vector<std::string> notes;

    bool ok() const noexcept { return failed == 0; }
    void fail(std::string message);
};

struct VerifyOptions {
    int max_m = 6;
    std::uint64_t oracle_budget = 10'000'000;
    std::uint64_t family_budget = 10'000'000;
    unsigned jobs = 0;
};

/// Every rho vector of length m - r with entries >= 0 summing to at most r.
std::vector<std::vector<int>> all_rho_vectors(int r, int m);

/// Every term list (m_i, r_i) obeying the canonical-form constraints for
/// (r, m) with m_i > r_i, found by exhaustive search over r_i sequences.
std::vector<std::vector<ghw::CanonicalTerm>> all_canonical_forms(int r, int m);

SuiteResult suite_triple_agreement(int max_m);
SuiteResult suite_kruskal_katona(int max_m, std::uint64_t family_budget);
SuiteResult suite_rho_uniqueness(int max_m);
SuiteResult suite_canonical_uniqueness(int max_m);
/// Checks that the (r-1, m-1) / (r, m-1) recursion never exceeds d_k and
/// records, as a note, how often it is attained.
SuiteResult suite_recursion_bound(int max_m);
SuiteResult suite_special_case(int max_m);
SuiteResult suite_oracle(int max_m, std::uint64_t budget, unsigned jobs);

/// All suites in order; empty when max_m < 1.
std::vector<SuiteResult> run_all(const VerifyOptions& options);

}  // namespace prmghw::verify
