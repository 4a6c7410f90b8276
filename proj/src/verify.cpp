#include "prmghw/verify.hpp"

#include <algorithm>
#include <map>

#include "prmghw/binomial.hpp"
#include "prmghw/errors.hpp"
#include "prmghw/oracle.hpp"
#include "prmghw/prm.hpp"
#include "prmghw/subsets.hpp"

namespace prmghw::verify {

namespace {

std::string at(int r, int m, std::uint64_t k) {
    return "r=" + std::to_string(r) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

std::string vs(std::uint64_t expected, std::uint64_t actual) {
    return "expected " + std::to_string(expected) + ", got " + std::to_string(actual);
}

}  // namespace

void SuiteResult::fail(std::string message) {
    ++failed;
    if (!first_failure) first_failure = std::move(message);
}

std::vector<std::vector<int>> all_rho_vectors(int r, int m) {
    const int ell = m - r;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(ell, 0);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == ell) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, r);
    return out;
}

std::vector<std::vector<ghw::CanonicalTerm>> all_canonical_forms(int r, int m) {
    std::vector<std::vector<ghw::CanonicalTerm>> out;
    std::vector<ghw::CanonicalTerm> cur;
    // Term i (1-based) has m_i = r_i + (m - r - i + 1); terms need m_i > r_i.
    auto rec = [&](auto&& self, int i, int max_r) -> void {
        out.push_back(cur);
        const int offset = m - r - i + 1;
        if (offset < 1) return;
        for (int ri = 0; ri <= max_r; ++ri) {
            cur.push_back({ri + offset, ri});
            self(self, i + 1, ri);
            cur.pop_back();
        }
    };
    rec(rec, 1, r - 1);
    return out;
}

SuiteResult suite_triple_agreement(int max_m) {
    SuiteResult s{"triple-agreement"};
    for (int m = 1; m <= max_m; ++m) {
        for (int r = 1; r <= m; ++r) {
            const auto dim = binomial(m, r);
            std::optional<prm::CodeInstance> code;
            if (m <= prm::kMaxBuildM) code = prm::build_code({prm::Family::PRM, r, m});
            for (std::uint64_t k = 1; k <= dim; ++k) {
                const auto closed = ghw::ghw_closed(k, r, m);
                const auto family = subsets::antilex_prefix(r, m, k);
                const auto sigma = code ? prm::monomial_support_size(*code, family)
                                        : subsets::upward_shadow_size(m, family.masks());
                if (sigma != closed) {
                    s.fail("closed vs shadow at " + at(r, m, k) + ": " + vs(sigma, closed));
                    continue;
                }
                if (k < dim) {
                    const auto canon = ghw::ghw_canonical(k, r, m);
                    if (canon != closed) {
                        s.fail("canonical vs closed at " + at(r, m, k) + ": " + vs(closed, canon));
                        continue;
                    }
                }
                ++s.passed;
            }
        }
    }
    return s;
}

SuiteResult suite_kruskal_katona(int max_m, std::uint64_t family_budget) {
    SuiteResult s{"kruskal-katona"};
    for (int m = 1; m <= max_m; ++m) {
        for (int r = 1; r <= m; ++r) {
            for (std::uint64_t k = 1; k <= binomial(m, r); ++k) {
                std::uint64_t brute = 0;
                try {
                    brute = subsets::min_shadow_bruteforce(r, m, k, family_budget);
                } catch (const BudgetExceeded&) {
                    ++s.skipped;
                    continue;
                }
                const auto family = subsets::antilex_prefix(r, m, k);
                const auto prefix = subsets::upward_shadow_size(m, family.masks());
                if (prefix != brute) {
                    s.fail("anti-lex prefix shadow at " + at(r, m, k) + ": " + vs(brute, prefix));
                } else {
                    ++s.passed;
                }
            }
        }
    }
    return s;
}

SuiteResult suite_rho_uniqueness(int max_m) {
    SuiteResult s{"rho-uniqueness"};
    for (int m = 1; m <= max_m; ++m) {
        for (int r = 1; r <= m; ++r) {
            const auto dim = binomial(m, r);
            std::map<std::uint64_t, std::vector<std::vector<int>>> by_value;
            for (auto& rho : all_rho_vectors(r, m)) by_value[ghw::rho_value(rho, r)].push_back(rho);
            for (std::uint64_t gamma = 0; gamma < dim; ++gamma) {
                const auto it = by_value.find(gamma);
                const std::size_t count = it == by_value.end() ? 0 : it->second.size();
                if (count != 1) {
                    s.fail("gamma=" + std::to_string(gamma) + " r=" + std::to_string(r) + " m=" +
                           std::to_string(m) + " has " + std::to_string(count) + " representations");
                    continue;
                }
                if (ghw::rho_decompose(gamma, r, m).rho != it->second.front()) {
                    s.fail("rho_decompose disagrees with exhaustive search at gamma=" + std::to_string(gamma) +
                           " r=" + std::to_string(r) + " m=" + std::to_string(m));
                    continue;
                }
                ++s.passed;
            }
        }
    }
    return s;
}

SuiteResult suite_canonical_uniqueness(int max_m) {
    SuiteResult s{"canonical-uniqueness"};
    for (int m = 1; m <= max_m; ++m) {
        for (int r = 1; r <= m; ++r) {
            const auto dim = binomial(m, r);
            std::map<std::uint64_t, std::vector<std::vector<ghw::CanonicalTerm>>> by_value;
            for (auto& terms : all_canonical_forms(r, m)) {
                std::uint64_t k = 0;
                for (const auto& t : terms) k += binomial(t.m_i, t.r_i);
                by_value[k].push_back(terms);
            }
            for (std::uint64_t k = 0; k < dim; ++k) {
                const auto it = by_value.find(k);
                const std::size_t count = it == by_value.end() ? 0 : it->second.size();
                if (count != 1) {
                    s.fail(at(r, m, k) + " has " + std::to_string(count) + " canonical forms");
                    continue;
                }
                const auto form = ghw::canonical_decompose(k, r, m);
                if (form.terms != it->second.front() || !form.valid()) {
                    s.fail("canonical_decompose disagrees with exhaustive search at " + at(r, m, k));
                    continue;
                }
                ++s.passed;
            }
        }
    }
    return s;
}

SuiteResult suite_recursion_bound(int max_m) {
    SuiteResult s{"recursion-bound"};
    ghw::HierarchyCache cache;
    std::uint64_t tight = 0;
    std::optional<std::string> first_gap;
    for (int m = 2; m <= max_m; ++m) {
        for (int r = 1; r < m; ++r) {
            for (std::uint64_t k = 1; k < binomial(m, r); ++k) {
                const auto bound = ghw::lower_bound_recursion(k, r, m, cache);
                const auto d = cache.get(r, m)->at(k);
                if (bound.value > d) {
                    s.fail("lower bound exceeds d_k at " + at(r, m, k) + ": bound " + std::to_string(bound.value) +
                           " > " + std::to_string(d));
                    continue;
                }
                ++s.passed;
                if (bound.value == d) {
                    ++tight;
                } else if (!first_gap) {
                    first_gap = at(r, m, k) + ": bound " + std::to_string(bound.value) + " (s=" +
                                std::to_string(bound.s) + ", t=" + std::to_string(bound.t) + ") < d_k " +
                                std::to_string(d);
                }
            }
        }
    }
    s.notes.push_back("attained in " + std::to_string(tight) + " of " + std::to_string(s.passed + s.failed) + " cases");
    if (first_gap) s.notes.push_back("first strict case " + *first_gap);
    return s;
}

SuiteResult suite_special_case(int max_m) {
    SuiteResult s{"special-case"};
    for (int m = 1; m <= max_m; ++m) {
        for (int r = 1; r <= m; ++r) {
            for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(m - r + 1); ++k) {
                const auto special = ghw::ghw_special(k, r, m);
                const auto closed = ghw::ghw_closed(k, r, m);
                if (special != closed) {
                    s.fail("special vs closed at " + at(r, m, k) + ": " + vs(closed, special));
                } else {
                    ++s.passed;
                }
            }
        }
    }
    return s;
}

SuiteResult suite_oracle(int max_m, std::uint64_t budget, unsigned jobs) {
    SuiteResult s{"oracle-equivalence"};
    oracle::OracleOptions opt;
    opt.budget = budget;
    opt.jobs = jobs;
    for (int m = 1; m <= std::min(max_m, prm::kMaxBuildM); ++m) {
        for (int r = 1; r <= m; ++r) {
            const auto dim = binomial(m, r);
            if (dim > 63) {
                s.skipped += dim;
                continue;
            }
            const auto code = prm::build_code({prm::Family::PRM, r, m});
            for (std::uint64_t nu = 1; nu <= dim; ++nu) {
                if (gf2::gaussian_binomial(dim, nu) > budget || code.length() > 1024) {
                    ++s.skipped;
                    continue;
                }
                const auto res = oracle::ghw_oracle(code, nu, opt);
                const auto closed = ghw::ghw_closed(nu, r, m);
                if (res.min_support != closed) {
                    s.fail("oracle vs closed at " + at(r, m, nu) + ": " + vs(closed, res.min_support));
                } else {
                    ++s.passed;
                }
            }
        }
    }
    return s;
}

std::vector<SuiteResult> run_all(const VerifyOptions& o) {
    if (o.max_m < 1) return {};
    return {
        suite_triple_agreement(o.max_m),
        suite_kruskal_katona(o.max_m, o.family_budget),
        suite_rho_uniqueness(o.max_m),
        suite_canonical_uniqueness(o.max_m),
        suite_recursion_bound(o.max_m),
        suite_special_case(o.max_m),
        suite_oracle(o.max_m, o.oracle_budget, o.jobs),
    };
}

}  // namespace prmghw::verify
