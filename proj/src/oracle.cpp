#include "prmghw/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <mutex>
#include <thread>
#include <vector>

#include "prmghw/errors.hpp"

namespace prmghw::oracle {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Lexicographic order on message rows: column 0 is the most significant.
bool row_less(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (b & (diff & (~diff + 1))) != 0;
}

bool basis_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return row_less(a[i], b[i]);
    }
    return false;
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    return std::max(1U, std::thread::hardware_concurrency());
}

template <std::size_t W>
using Word = std::array<std::uint64_t, W>;

template <std::size_t W>
std::vector<Word<W>> generator_words(const gf2::BitMatrix& g) {
    std::vector<Word<W>> out(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const auto words = g.row(i).words();
        Word<W> w{};
        std::copy(words.begin(), words.end(), w.begin());
        out[i] = w;
    }
    return out;
}

template <std::size_t W>
inline std::uint64_t popcount(const Word<W>& w) {
    std::uint64_t c = 0;
    for (auto x : w) c += static_cast<std::uint64_t>(std::popcount(x));
    return c;
}

template <std::size_t W>
inline void xor_into(Word<W>& a, const Word<W>& b) {
    for (std::size_t i = 0; i < W; ++i) a[i] ^= b[i];
}

template <std::size_t W>
inline Word<W> or_of(const Word<W>& a, const Word<W>& b) {
    Word<W> out;
    for (std::size_t i = 0; i < W; ++i) out[i] = a[i] | b[i];
    return out;
}

struct Best {
    std::uint64_t support = kNone;
    std::vector<std::uint64_t> basis;  // message rows, top to bottom
    std::uint64_t examined = 0;
    // Pruned scan only: when non-empty, `basis` is a partial basis whose
    // union support already carries a subcode of full dimension; the union
    // is kept here so the basis can be completed afterwards.
    std::vector<std::uint64_t> closure;
};

// Linear span tracker over GF(2)^K with K <= 64, keyed by leading bit.
class XorBasis {
public:
    bool insert(std::uint64_t v) {
        while (v != 0) {
            const int top = 63 - std::countl_zero(v);
            if (slot_[top] == 0) {
                slot_[top] = v;
                ++rank_;
                return true;
            }
            v ^= slot_[top];
        }
        return false;
    }
    std::size_t rank() const noexcept { return rank_; }

private:
    std::array<std::uint64_t, 64> slot_{};
    std::size_t rank_ = 0;
};

// Runs `work(shard_index)` over all shards with a pool of `jobs` threads.
template <class Work>
void run_shards(std::size_t shards, unsigned jobs, Work&& work) {
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t i = next.fetch_add(1); i < shards; i = next.fetch_add(1)) work(i);
    };
    const unsigned n = std::min<std::size_t>(jobs, std::max<std::size_t>(shards, 1));
    if (n <= 1) {
        loop();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            try {
                loop();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(shards);
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

// Plain scan: every RREF profile, pivot sets as shards, free entries walked
// in Gray-code order so each step changes one row by one generator row.
template <std::size_t W>
Best plain_scan(const gf2::BitMatrix& g, std::size_t nu, unsigned jobs) {
    const std::size_t K = g.rows();
    const auto gen = generator_words<W>(g);
    const auto pivot_sets = gf2::pivot_column_sets(K, nu);
    std::vector<Best> per_shard(pivot_sets.size());

    run_shards(pivot_sets.size(), jobs, [&](std::size_t shard) {
        const auto& pivots = pivot_sets[shard];
        const auto free = gf2::RrefProfile::free_positions(K, pivots);
        std::vector<std::uint64_t> msg(nu);
        std::vector<Word<W>> cw(nu);
        for (std::size_t i = 0; i < nu; ++i) {
            msg[i] = std::uint64_t{1} << pivots[i];
            cw[i] = gen[pivots[i]];
        }
        Best& best = per_shard[shard];
        auto visit = [&] {
            Word<W> u{};
            for (std::size_t i = 0; i < nu; ++i) u = or_of(u, cw[i]);
            const std::uint64_t s = popcount(u);
            ++best.examined;
            if (s < best.support || (s == best.support && basis_less(msg, best.basis))) {
                best.support = s;
                best.basis = msg;
            }
        };
        visit();
        const std::uint64_t steps = std::uint64_t{1} << free.size();
        for (std::uint64_t j = 1; j < steps; ++j) {
            const auto& pos = free[static_cast<std::size_t>(std::countr_zero(j))];
            msg[pos.row] ^= std::uint64_t{1} << pos.col;
            xor_into(cw[pos.row], gen[pos.col]);
            visit();
        }
    });

    Best out;
    for (auto& b : per_shard) {
        out.examined += b.examined;
        if (b.support < out.support || (b.support == out.support && basis_less(b.basis, out.basis))) {
            out.support = b.support;
            out.basis = std::move(b.basis);
        }
    }
    return out;
}

// Branch-and-bound: RREF bases grown from the bottom row upward. Every prefix
// of bottom rows is itself an RREF basis, so each subspace is reached once.
template <std::size_t W>
Best pruned_scan(const gf2::BitMatrix& g, std::size_t nu, unsigned jobs, std::uint64_t budget) {
    const std::size_t K = g.rows();
    const std::size_t n_vectors = std::size_t{1} << K;
    const auto gen = generator_words<W>(g);

    std::vector<Word<W>> cw(n_vectors);
    std::vector<std::uint32_t> weight(n_vectors, 0);
    for (std::size_t v = 1; v < n_vectors; ++v) {
        cw[v] = cw[v & (v - 1)];
        xor_into(cw[v], gen[static_cast<std::size_t>(std::countr_zero(v))]);
        weight[v] = static_cast<std::uint32_t>(popcount(cw[v]));
    }
    auto by_weight = [&](std::uint64_t a, std::uint64_t b) {
        return weight[a] != weight[b] ? weight[a] < weight[b] : a < b;
    };
    // Candidates grouped by pivot (lowest set bit), lightest first.
    std::vector<std::vector<std::uint64_t>> bucket(K);
    for (std::size_t v = 1; v < n_vectors; ++v) bucket[static_cast<std::size_t>(std::countr_zero(v))].push_back(v);
    for (auto& b : bucket) std::sort(b.begin(), b.end(), by_weight);

    std::vector<std::uint64_t> shards;
    for (std::size_t p = nu - 1; p < K; ++p) shards.insert(shards.end(), bucket[p].begin(), bucket[p].end());
    std::sort(shards.begin(), shards.end(), by_weight);

    // Column j of the generator as a K-bit message-space vector.
    const std::size_t n = g.cols();
    std::vector<std::uint64_t> column(n, 0);
    for (std::size_t i = 0; i < K; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (g.get(i, j)) column[j] |= std::uint64_t{1} << i;
        }
    }
    // The subcode supported inside `u` has dimension K minus the rank of the
    // columns outside `u`. Once that dimension reaches nu, |u| is attained
    // and every completion of the partial basis has support at least |u|.
    auto closure_reaches_nu = [&](const Word<W>& u) {
        XorBasis outside;
        for (std::size_t j = 0; j < n; ++j) {
            if ((u[j / 64] >> (j % 64)) & 1U) continue;
            outside.insert(column[j]);
            if (outside.rank() > K - nu) return false;
        }
        return true;
    };

    std::atomic<std::uint64_t> global_best{kNone};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> over_budget{false};
    std::vector<Best> per_shard(shards.size());

    run_shards(shards.size(), jobs, [&](std::size_t shard) {
        if (over_budget.load(std::memory_order_relaxed)) return;
        Best& best = per_shard[shard];
        const std::uint64_t bottom = shards[shard];
        if (weight[bottom] > global_best.load(std::memory_order_relaxed)) return;

        std::vector<std::uint64_t> rows(nu, 0);  // rows[depth] = row chosen at that depth (bottom first)
        std::uint64_t local_nodes = 0;
        auto flush_nodes = [&] {
            if (nodes.fetch_add(local_nodes) + local_nodes > budget) over_budget.store(true);
            local_nodes = 0;
        };

        // threshold: a partial union must be strictly below it to continue.
        auto threshold = [&] {
            const std::uint64_t g_best = global_best.load(std::memory_order_relaxed);
            const std::uint64_t by_global = g_best == kNone ? kNone : g_best + 1;
            return std::min(best.support, by_global);
        };

        auto record = [&](std::size_t depth, const Word<W>& u) {
            const std::uint64_t s = popcount(u);
            if (s >= best.support) return;
            best.support = s;
            best.basis.assign(rows.rend() - static_cast<std::ptrdiff_t>(depth), rows.rend());
            if (depth < nu) {
                best.closure.assign(u.begin(), u.end());
            } else {
                best.closure.clear();
            }
            std::uint64_t cur = global_best.load();
            while (s < cur && !global_best.compare_exchange_weak(cur, s)) {
            }
        };

        auto dfs = [&](auto&& self, std::size_t depth, std::size_t min_pivot, std::uint64_t pivot_mask,
                       const Word<W>& u) -> void {
            if (over_budget.load(std::memory_order_relaxed)) return;
            if (depth == nu) {
                record(depth, u);
                return;
            }
            if (closure_reaches_nu(u)) {
                record(depth, u);
                return;
            }
            for (std::size_t p = min_pivot; p-- > 0;) {
                if (p + 1 < nu - depth) break;  // not enough pivots left above
                for (std::uint64_t v : bucket[p]) {
                    if (weight[v] >= threshold()) break;
                    if ((v & pivot_mask) != 0) continue;
                    const Word<W> nu_union = or_of(u, cw[v]);
                    if (popcount(nu_union) >= threshold()) continue;
                    rows[depth] = v;
                    if (++local_nodes >= 4096) flush_nodes();
                    self(self, depth + 1, p, pivot_mask | (std::uint64_t{1} << p), nu_union);
                }
            }
        };

        rows[0] = bottom;
        ++local_nodes;
        const auto p0 = static_cast<std::size_t>(std::countr_zero(bottom));
        dfs(dfs, 1, p0, std::uint64_t{1} << p0, cw[bottom]);
        flush_nodes();
        best.examined = 0;
    });

    if (over_budget.load()) {
        throw BudgetExceeded("pruned oracle scan visited more than " + std::to_string(budget) +
                                 " search nodes; raise the budget",
                             std::to_string(nodes.load()));
    }
    Best out;
    out.examined = nodes.load();
    for (auto& b : per_shard) {
        if (b.support < out.support) {
            out.support = b.support;
            out.basis = std::move(b.basis);
            out.closure = std::move(b.closure);
        }
    }
    if (!out.closure.empty()) {
        // Extend the partial basis by messages whose codewords stay inside
        // the recorded union.
        XorBasis span;
        for (auto v : out.basis) span.insert(v);
        for (std::size_t v = 1; v < n_vectors && out.basis.size() < nu; ++v) {
            bool inside = true;
            for (std::size_t w = 0; w < W; ++w) inside = inside && (cw[v][w] & ~out.closure[w]) == 0;
            if (inside && span.insert(v)) out.basis.push_back(v);
        }
        if (out.basis.size() != nu) throw std::logic_error("oracle: could not complete a pruned witness");
        out.closure.clear();
    }
    return out;
}

template <std::size_t W>
Best scan(const gf2::BitMatrix& g, std::size_t nu, const OracleOptions& opt, unsigned jobs) {
    return opt.prune ? pruned_scan<W>(g, nu, jobs, opt.budget) : plain_scan<W>(g, nu, jobs);
}

}  // namespace

std::uint64_t default_budget() {
    if (const char* env = std::getenv("GHW_ORACLE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
        throw RangeError(std::string("GHW_ORACLE_BUDGET is not a decimal count: '") + env + "'");
    }
    return kDefaultBudget;
}

OracleResult ghw_oracle(const prm::CodeInstance& code, std::size_t nu, const OracleOptions& options) {
    const auto& g = code.generator;
    const std::size_t K = g.rows();
    const std::size_t n = g.cols();
    if (nu < 1 || nu > K) {
        throw RangeError("oracle: nu=" + std::to_string(nu) + " outside [1, " + std::to_string(K) + "]");
    }
    if (K > 63) throw RangeError("oracle: code dimension above 63 is out of scope");
    if (n > 1024) throw RangeError("oracle: block length above 1024 is out of scope");
    if (options.prune) {
        if (K > 24) throw RangeError("pruned oracle: code dimension above 24 is out of scope");
    } else {
        const auto total = gf2::gaussian_binomial(K, nu);
        if (total > options.budget) {
            throw BudgetExceeded("oracle: [" + std::to_string(K) + " choose " + std::to_string(nu) + "]_2 = " +
                                     total.str() + " subspaces exceed budget " + std::to_string(options.budget),
                                 total.str());
        }
    }
    const unsigned jobs = resolve_jobs(options.jobs);

    Best best;
    if (n <= 64) {
        best = scan<1>(g, nu, options, jobs);
    } else if (n <= 128) {
        best = scan<2>(g, nu, options, jobs);
    } else if (n <= 256) {
        best = scan<4>(g, nu, options, jobs);
    } else if (n <= 512) {
        best = scan<8>(g, nu, options, jobs);
    } else {
        best = scan<16>(g, nu, options, jobs);
    }
    if (best.support == kNone) throw std::logic_error("oracle: search produced no subspace");

    OracleResult result;
    result.nu = nu;
    result.min_support = best.support;
    result.subspaces_examined = best.examined;
    result.exhaustive = true;
    gf2::BitMatrix messages(nu, K);
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t c = 0; c < K; ++c) {
            if ((best.basis[i] >> c) & 1U) messages.set(i, c);
        }
    }
    result.message_basis = gf2::rref(messages);
    if (result.message_basis.rows() != nu) throw std::logic_error("oracle: witness basis is rank deficient");
    result.witness = gf2::BitMatrix(nu, n);
    for (std::size_t i = 0; i < nu; ++i) {
        gf2::BitVector cw(n);
        for (std::size_t c = 0; c < K; ++c) {
            if (result.message_basis.get(i, c)) cw ^= g.row(c);
        }
        result.witness.row(i) = cw;
    }
    return result;
}

GapReport rm_prm_gap(int r, int m, std::size_t max_nu, const OracleOptions& options) {
    const auto rm = prm::build_code({prm::Family::RM, r, m});
    const auto prm_code = prm::build_code({prm::Family::PRM, r, m});
    if (max_nu > prm_code.dimension()) {
        throw RangeError("rm_prm_gap: max_nu exceeds the PRM dimension " + std::to_string(prm_code.dimension()));
    }
    GapReport report{r, m, {}, std::nullopt, {}};
    for (std::size_t nu = 1; nu <= max_nu; ++nu) {
        try {
            const auto d_rm = ghw_oracle(rm, nu, options).min_support;
            const auto d_prm = ghw_oracle(prm_code, nu, options).min_support;
            if (d_rm > d_prm) {
                throw std::logic_error("rm_prm_gap: d_" + std::to_string(nu) + "(RM) = " + std::to_string(d_rm) +
                                       " exceeds d_" + std::to_string(nu) + "(PRM) = " + std::to_string(d_prm));
            }
            report.rows.push_back({nu, d_rm, d_prm});
        } catch (const BudgetExceeded& e) {
            report.truncated_at = nu;
            report.truncation_reason = e.what();
            break;
        }
    }
    return report;
}

}  // namespace prmghw::oracle
