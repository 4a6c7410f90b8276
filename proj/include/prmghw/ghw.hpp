#pragma once

// Closed-form generalized Hamming weights d_k(r, m) of the binary projective
// Reed-Muller code PRM(r, m-1): the shortening schedule (rho vectors and the
// block-length reduction Gamma), the canonical-form expression, the
// small-k special case, and the lower-bound recursion over (r-1, m-1) and
// (r, m-1).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "prmghw/subsets.hpp"

namespace prmghw::ghw {

using Count = std::uint64_t;

/// Upper limit on m for the closed forms (block lengths stay below 2^63).
inline constexpr int kMaxM = 62;
/// Hierarchies are materialized only up to this many entries.
inline constexpr Count kMaxHierarchyLength = Count{1} << 24;

/// C(m, r): dimension of PRM(r, m-1).
Count code_dimension(int r, int m);
/// sum_{i=r}^{m} C(m, i): length of the non-degenerate PRM(r, m-1).
Count block_length(int r, int m);

/// h(p, r, t) = sum_{i=0}^{p-1} C(r+t-i, r-i), and 0 for p = 0.
Count h_func(int p, int r, int t);

/// Unique representation gamma = sum_t h(rho_t, r_t, t), t = ell-1 .. 0,
/// with rho_t >= 0, sum rho_t <= r and r_t = r - sum_{q>t} rho_q.
struct RhoVector {
    int r = 0;
    int m = 0;
    int ell = 0;  // m - r
    Count gamma = 0;
    std::vector<int> rho;  // rho[t] = rho_t, t in [0, ell)
    std::vector<int> r_t;  // r_t[t]

    /// (rho_{ell-1}, ..., rho_0), the conventional display order.
    std::vector<int> descending() const;
};

/// Greedy from t = ell-1 downward: largest rho_t with h(rho_t, r_t, t) not
/// exceeding what is left of gamma. Requires 0 <= gamma < C(m, r).
RhoVector rho_decompose(Count gamma, int r, int m);

/// Sum of h(rho_t, r_t, t) over t; the inverse check of rho_decompose.
Count rho_value(const std::vector<int>& rho, int r);

/// Reduction contributed by one level: sum_{j=0}^{t} sum_{i=0}^{rho_t-1}
/// C(r_t+t-i, r_t+j-i), 0 when rho_t = 0.
Count g_func(int rho_t, int r_t, int t);

/// Block-length reduction Gamma(r, m, gamma) from shortening the first gamma
/// co-lex message symbols. Requires 0 <= gamma < C(m, r).
Count gamma_reduction(Count gamma, int r, int m);

/// d_k = block_length - Gamma(C(m,r) - k), 1 <= k <= C(m, r). At k = C(m,r)
/// this is the full block length.
Count ghw_closed(Count k, int r, int m);

struct CanonicalTerm {
    int m_i = 0;
    int r_i = 0;
    friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;
};

/// k = sum_i C(m_i, r_i) with r > r_1 >= ... >= r_t >= 0,
/// m_i - r_i = m - r - i + 1 and m_i > r_i (so at most m - r terms).
struct CanonicalForm {
    int r = 0;
    int m = 0;
    Count k = 0;
    std::vector<CanonicalTerm> terms;

    /// Checks the ordering, offset and sum constraints.
    bool valid() const;
};

/// Requires 0 <= k < C(m, r); k = 0 gives the empty form.
CanonicalForm canonical_decompose(Count k, int r, int m);

/// d_k = sum over canonical terms of sum_{j=r_i}^{m_i} C(m_i, j), 1 <= k < C(m,r).
Count ghw_canonical(Count k, int r, int m);

/// d_k = (2^k - 1) 2^{m-r-k+1}, valid for 1 <= k <= m-r+1.
Count ghw_special(Count k, int r, int m);

struct GhwHierarchy;

/// Memoized hierarchies keyed by (r, m). Safe for concurrent use.
class HierarchyCache {
public:
    std::shared_ptr<const GhwHierarchy> get(int r, int m);

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, std::shared_ptr<const GhwHierarchy>> entries_;
};

struct RecursionBound {
    Count value = 0;
    Count s = 0;  // dimension taken from the (r-1, m-1) code
    Count t = 0;  // dimension taken from the (r, m-1) code
};

/// min over s + t = k, s <= C(m-1, r-1), t <= C(m-1, r) of
/// d_s(r-1, m-1) + d_t(r, m-1), using exact smaller hierarchies, d_0 = 0,
/// and excluding splits that would need d_s(0, .) with s > 0. Ties resolve
/// to the smallest s. Requires 1 <= k < C(m, r).
RecursionBound lower_bound_recursion(Count k, int r, int m, HierarchyCache& cache);

struct HierarchyEntry {
    Count k = 0;
    Count d = 0;
    Count gamma = 0;                         // C(m,r) - k
    Count Gamma = 0;                         // gamma_reduction(gamma)
    std::optional<CanonicalForm> canonical;  // absent at k = C(m, r)
};

struct GhwHierarchy {
    int r = 0;
    int m = 0;
    std::vector<Count> values;  // values[k-1] = d_k
    std::vector<HierarchyEntry> per_k;

    Count at(Count k) const;
};

/// (d_1, ..., d_{C(m,r)}) from ghw_closed, each k < C(m,r) cross-checked
/// against ghw_canonical.
GhwHierarchy hierarchy(int r, int m);

struct ShortenRow {
    Count k = 0;
    Count gamma = 0;
    std::optional<subsets::SubsetMask> picked;  // the gamma-th co-lex r-subset
    Count Gamma = 0;
    Count n = 0;
};

/// One row per gamma = 0 .. C(m,r)-1.
std::vector<ShortenRow> shorten_table(int r, int m);

}  // namespace prmghw::ghw
