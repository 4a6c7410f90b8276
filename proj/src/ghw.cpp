#include "prmghw/ghw.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "prmghw/binomial.hpp"
#include "prmghw/errors.hpp"

namespace prmghw::ghw {

namespace {

void check_params(int r, int m) {
    if (m < 1 || m > kMaxM) throw RangeError("m=" + std::to_string(m) + " outside [1, " + std::to_string(kMaxM) + "]");
    if (r < 1 || r > m) {
        throw RangeError("r=" + std::to_string(r) + " outside [1, m] for m=" + std::to_string(m));
    }
}

std::string triple(Count k, int r, int m) {
    return "(k=" + std::to_string(k) + ", r=" + std::to_string(r) + ", m=" + std::to_string(m) + ")";
}

// Binomial that tolerates negative arguments in sums (treated as 0).
Count C(int n, int k) { return n < 0 ? 0 : binomial(n, k); }

}  // namespace

Count code_dimension(int r, int m) {
    check_params(r, m);
    return binomial(m, r);
}

Count block_length(int r, int m) {
    check_params(r, m);
    Count n = 0;
    for (int i = r; i <= m; ++i) n += binomial(m, i);
    return n;
}

Count h_func(int p, int r, int t) {
    if (p < 0 || r < 0 || t < 0) throw RangeError("h_func: negative argument");
    Count sum = 0;
    for (int i = 0; i < p; ++i) sum += C(r + t - i, r - i);
    return sum;
}

std::vector<int> RhoVector::descending() const { return {rho.rbegin(), rho.rend()}; }

RhoVector rho_decompose(Count gamma, int r, int m) {
    check_params(r, m);
    if (gamma >= binomial(m, r)) {
        throw RangeError("rho_decompose: gamma=" + std::to_string(gamma) + " must be < C(m, r)=" +
                         std::to_string(binomial(m, r)));
    }
    RhoVector v;
    v.r = r;
    v.m = m;
    v.ell = m - r;
    v.gamma = gamma;
    v.rho.assign(v.ell, 0);
    v.r_t.assign(v.ell, 0);

    Count left = gamma;
    int r_cur = r;
    for (int t = v.ell - 1; t >= 0; --t) {
        int p = 0;
        while (p < r_cur && h_func(p + 1, r_cur, t) <= left) ++p;
        v.rho[t] = p;
        v.r_t[t] = r_cur;
        left -= h_func(p, r_cur, t);
        r_cur -= p;
    }
    if (left != 0) throw std::logic_error("rho_decompose: greedy left a remainder for gamma=" + std::to_string(gamma));
    return v;
}

Count rho_value(const std::vector<int>& rho, int r) {
    Count sum = 0;
    int r_cur = r;
    for (int t = static_cast<int>(rho.size()) - 1; t >= 0; --t) {
        sum += h_func(rho[t], r_cur, t);
        r_cur -= rho[t];
    }
    return sum;
}

Count g_func(int rho_t, int r_t, int t) {
    Count sum = 0;
    for (int j = 0; j <= t; ++j) {
        for (int i = 0; i < rho_t; ++i) sum += C(r_t + t - i, r_t + j - i);
    }
    return sum;
}

Count gamma_reduction(Count gamma, int r, int m) {
    const RhoVector v = rho_decompose(gamma, r, m);
    Count total = 0;
    for (int t = 0; t < v.ell; ++t) total += g_func(v.rho[t], v.r_t[t], t);
    return total;
}

Count ghw_closed(Count k, int r, int m) {
    check_params(r, m);
    const Count dim = binomial(m, r);
    if (k < 1 || k > dim) throw RangeError("ghw_closed: k out of [1, C(m,r)] " + triple(k, r, m));
    return block_length(r, m) - gamma_reduction(dim - k, r, m);
}

bool CanonicalForm::valid() const {
    Count sum = 0;
    int prev = r;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [mi, ri] = terms[i];
        const int idx = static_cast<int>(i) + 1;
        if (ri < 0 || mi < 0) return false;
        if (i == 0 ? ri >= prev : ri > prev) return false;
        if (mi - ri != m - r - idx + 1) return false;
        if (mi <= ri) return false;
        sum += binomial(mi, ri);
        prev = ri;
    }
    return sum == k;
}

CanonicalForm canonical_decompose(Count k, int r, int m) {
    check_params(r, m);
    if (k >= binomial(m, r)) {
        throw RangeError("canonical_decompose: k must be < C(m, r) " + triple(k, r, m));
    }
    CanonicalForm form{r, m, k, {}};
    Count left = k;
    int rr = r;
    int mm = m;
    while (left > 0) {
        const Count head = binomial(mm - 1, rr - 1);
        if (left >= head) {
            form.terms.push_back({mm - 1, rr - 1});
            left -= head;
            mm -= 1;
        } else {
            rr -= 1;
            mm -= 1;
        }
    }
    return form;
}

Count ghw_canonical(Count k, int r, int m) {
    check_params(r, m);
    if (k < 1 || k >= binomial(m, r)) throw RangeError("ghw_canonical: k out of [1, C(m,r)) " + triple(k, r, m));
    Count d = 0;
    for (const auto& [mi, ri] : canonical_decompose(k, r, m).terms) {
        for (int j = ri; j <= mi; ++j) d += binomial(mi, j);
    }
    return d;
}

Count ghw_special(Count k, int r, int m) {
    check_params(r, m);
    const Count limit = static_cast<Count>(m - r + 1);
    if (k < 1 || k > limit) throw RangeError("ghw_special: needs 1 <= k <= m-r+1 " + triple(k, r, m));
    const int shift = m - r - static_cast<int>(k) + 1;
    return ((Count{1} << k) - 1) << shift;
}

std::shared_ptr<const GhwHierarchy> HierarchyCache::get(int r, int m) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find({r, m});
    if (it != entries_.end()) return it->second;
    auto h = std::make_shared<const GhwHierarchy>(hierarchy(r, m));
    entries_.emplace(std::make_pair(r, m), h);
    return h;
}

RecursionBound lower_bound_recursion(Count k, int r, int m, HierarchyCache& cache) {
    check_params(r, m);
    if (k < 1 || k >= binomial(m, r)) {
        throw RangeError("lower_bound_recursion: k out of [1, C(m,r)) " + triple(k, r, m));
    }
    constexpr Count kInf = std::numeric_limits<Count>::max();
    // d_s at (rr, mm); kInf where the subproblem is undefined.
    auto sub = [&cache](Count s, int rr, int mm) -> Count {
        if (s == 0) return 0;
        if (rr < 1 || mm < rr) return kInf;
        return cache.get(rr, mm)->at(s);
    };
    const Count s_max = binomial(m - 1, r - 1);
    const Count t_max = binomial(m - 1, r);

    RecursionBound best{kInf, 0, 0};
    for (Count s = 0; s <= std::min(k, s_max); ++s) {
        const Count t = k - s;
        if (t > t_max) continue;
        const Count a = sub(s, r - 1, m - 1);
        const Count b = sub(t, r, m - 1);
        if (a == kInf || b == kInf) continue;
        if (a + b < best.value) best = {a + b, s, t};
    }
    if (best.value == kInf) throw std::logic_error("lower_bound_recursion: no admissible split " + triple(k, r, m));
    return best;
}

Count GhwHierarchy::at(Count k) const {
    if (k < 1 || k > values.size()) throw RangeError("hierarchy index k out of range");
    return values[k - 1];
}

GhwHierarchy hierarchy(int r, int m) {
    check_params(r, m);
    const Count dim = binomial(m, r);
    if (dim > kMaxHierarchyLength) throw RangeError("hierarchy too long to materialize");
    GhwHierarchy h{r, m, {}, {}};
    h.values.reserve(dim);
    h.per_k.reserve(dim);
    const Count n = block_length(r, m);
    for (Count k = 1; k <= dim; ++k) {
        HierarchyEntry e;
        e.k = k;
        e.gamma = dim - k;
        e.Gamma = gamma_reduction(e.gamma, r, m);
        e.d = n - e.Gamma;
        if (k < dim) {
            e.canonical = canonical_decompose(k, r, m);
            const Count alt = ghw_canonical(k, r, m);
            if (alt != e.d) {
                throw std::logic_error("closed and canonical forms disagree at " + triple(k, r, m) + ": " +
                                       std::to_string(e.d) + " vs " + std::to_string(alt));
            }
        }
        h.values.push_back(e.d);
        h.per_k.push_back(std::move(e));
    }
    return h;
}

std::vector<ShortenRow> shorten_table(int r, int m) {
    check_params(r, m);
    const Count dim = binomial(m, r);
    if (dim > kMaxHierarchyLength) throw RangeError("shortening table too long to materialize");
    const Count n = block_length(r, m);
    std::vector<ShortenRow> rows;
    rows.reserve(dim);
    for (Count gamma = 0; gamma < dim; ++gamma) {
        ShortenRow row;
        row.gamma = gamma;
        row.k = dim - gamma;
        if (gamma > 0) row.picked = subsets::colex_unrank(r, m, gamma - 1);
        row.Gamma = gamma_reduction(gamma, r, m);
        row.n = n - row.Gamma;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace prmghw::ghw
