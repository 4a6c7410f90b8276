#pragma once

// Brute-force generalized Hamming weights: d_nu(C) is the minimum support
// size over every nu-dimensional subcode of C, found by walking all RREF
// bases of nu-dimensional subspaces of the message space.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prmghw/gf2.hpp"
#include "prmghw/prm.hpp"

namespace prmghw::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// kDefaultBudget, or the value of GHW_ORACLE_BUDGET when set.
std::uint64_t default_budget();

struct OracleOptions {
    /// Plain scan: cap on the Gaussian binomial [K choose nu]_2, checked
    /// before any work. Pruned scan: cap on search-tree nodes visited.
    std::uint64_t budget = kDefaultBudget;
    /// Branch-and-bound: abandon a partial basis once its union support can
    /// no longer beat the best found so far. Exact, but visits fewer subspaces.
    bool prune = false;
    /// Worker threads; 0 means hardware concurrency.
    unsigned jobs = 0;
};

struct OracleResult {
    std::size_t nu = 0;
    std::uint64_t min_support = 0;
    /// Codeword basis (nu x n) of an achieving subcode.
    gf2::BitMatrix witness;
    /// The same subcode as an RREF basis (nu x K) of the message space.
    gf2::BitMatrix message_basis;
    std::uint64_t subspaces_examined = 0;
    bool exhaustive = false;
};

/// Throws RangeError unless 1 <= nu <= dimension, BudgetExceeded when the
/// scan cannot finish within the budget. The plain scan breaks witness ties
/// by the lexicographically smallest RREF basis.
OracleResult ghw_oracle(const prm::CodeInstance& code, std::size_t nu, const OracleOptions& options = {});

struct GapRow {
    std::size_t nu = 0;
    std::uint64_t d_rm = 0;
    std::uint64_t d_prm = 0;
};

struct GapReport {
    int r = 0;
    int m = 0;
    std::vector<GapRow> rows;
    /// Set when some nu <= max_nu could not be finished within budget.
    std::optional<std::size_t> truncated_at;
    std::string truncation_reason;
};

/// Oracle values for RM(r, m) and PRM(r, m-1) (both on m variables) for
/// nu = 1 .. max_nu, stopping at the first nu that exceeds the budget.
/// Throws std::logic_error if ever d_nu(RM) > d_nu(PRM).
GapReport rm_prm_gap(int r, int m, std::size_t max_nu, const OracleOptions& options = {});

}  // namespace prmghw::oracle
