#include "prmghw/subsets.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "prmghw/binomial.hpp"
#include "prmghw/errors.hpp"

namespace prmghw::subsets {

namespace {

constexpr int kMaxOrderGroundSet = 62;

void check_ground_set(int m, int limit) {
    if (m < 0 || m > limit) {
        throw RangeError("ground set size m=" + std::to_string(m) + " outside [0, " + std::to_string(limit) + "]");
    }
}

void check_degree(int r, int m) {
    check_ground_set(m, kMaxOrderGroundSet);
    if (r < 0 || r > m) throw RangeError("subset size r=" + std::to_string(r) + " outside [0, m]");
}

std::uint64_t full_mask(int m) { return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

// Visited table over all 2^m subsets.
class MaskTable {
public:
    explicit MaskTable(int m) : bits_(((std::size_t{1} << m) + 63) / 64, 0) {}
    bool test_and_set(std::uint64_t mask) {
        auto& w = bits_[mask / 64];
        const std::uint64_t bit = std::uint64_t{1} << (mask % 64);
        const bool was = (w & bit) != 0;
        w |= bit;
        return was;
    }
    bool test(std::uint64_t mask) const { return (bits_[mask / 64] >> (mask % 64)) & 1U; }

private:
    std::vector<std::uint64_t> bits_;
};

// Breadth-first superset expansion; returns the visited table and count.
std::pair<MaskTable, std::uint64_t> expand_up(int m, std::span<const std::uint64_t> masks) {
    check_ground_set(m, kMaxGroundSet);
    MaskTable seen(m);
    std::deque<std::uint64_t> queue;
    std::uint64_t count = 0;
    for (auto s : masks) {
        if ((s & ~full_mask(m)) != 0) throw InvalidInput("family member outside ground set [m]");
        if (!seen.test_and_set(s)) {
            queue.push_back(s);
            ++count;
        }
    }
    while (!queue.empty()) {
        const std::uint64_t x = queue.front();
        queue.pop_front();
        for (int i = 0; i < m; ++i) {
            const std::uint64_t y = x | (std::uint64_t{1} << i);
            if (y != x && !seen.test_and_set(y)) {
                queue.push_back(y);
                ++count;
            }
        }
    }
    return {std::move(seen), count};
}

}  // namespace

SubsetMask SubsetMask::from_elements(int m, std::span<const int> elements) {
    check_ground_set(m, 63);
    SubsetMask s{m, 0};
    for (int e : elements) {
        if (e < 1 || e > m) throw RangeError("element " + std::to_string(e) + " not in [1, m]");
        s.mask |= std::uint64_t{1} << (e - 1);
    }
    return s;
}

SubsetMask SubsetMask::from_elements(int m, std::initializer_list<int> elements) {
    return from_elements(m, std::span<const int>(elements.begin(), elements.size()));
}

int SubsetMask::size() const noexcept { return std::popcount(mask); }

bool SubsetMask::contains(int element) const noexcept {
    return element >= 1 && element <= m && ((mask >> (element - 1)) & 1U);
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= m; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string SubsetMask::joined() const {
    std::string s;
    for (int e : elements()) {
        if (!s.empty()) s += ',';
        s += std::to_string(e);
    }
    return s;
}

std::string SubsetMask::brace_string() const { return "{" + joined() + "}"; }

SubsetFamily SubsetFamily::make(int m, std::vector<SubsetMask> members, std::optional<int> uniform_size) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto& s : members) {
        if (s.m != m) throw InvalidInput("family member has a different ground set");
        if (!seen.insert(s.mask).second) throw InvalidInput("duplicate family member " + s.brace_string());
        if (uniform_size && s.size() != *uniform_size) {
            throw InvalidInput("family member " + s.brace_string() + " is not a " + std::to_string(*uniform_size) +
                               "-subset");
        }
    }
    return SubsetFamily{m, std::move(members), uniform_size};
}

std::vector<std::uint64_t> SubsetFamily::masks() const {
    std::vector<std::uint64_t> out;
    out.reserve(members.size());
    for (const auto& s : members) out.push_back(s.mask);
    return out;
}

bool colex_less(const SubsetMask& a, const SubsetMask& b) {
    if (a.m != b.m) throw InvalidInput("colex_less: subsets of different ground sets");
    if (a.mask == b.mask) throw InvalidInput("colex_less: equal subsets are not comparable");
    const std::uint64_t diff = a.mask ^ b.mask;
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(diff));
    return (b.mask & top) != 0;
}

std::uint64_t colex_rank(const SubsetMask& s) {
    std::uint64_t rank = 0;
    int i = 1;
    for (int e : s.elements()) {
        rank += binomial(e - 1, i);
        ++i;
    }
    return rank;
}

SubsetMask colex_unrank(int r, int m, std::uint64_t rank) {
    check_degree(r, m);
    if (rank >= binomial(m, r)) throw RangeError("colex_unrank: rank out of range");
    SubsetMask s{m, 0};
    int upper = m;
    for (int i = r; i >= 1; --i) {
        int b = i - 1;
        while (b + 1 < upper && binomial(b + 1, i) <= rank) ++b;
        rank -= binomial(b, i);
        s.mask |= std::uint64_t{1} << b;
        upper = b;
    }
    return s;
}

SubsetFamily colex_prefix(int r, int m, std::uint64_t gamma) {
    check_degree(r, m);
    if (gamma > binomial(m, r)) throw RangeError("colex_prefix: gamma exceeds C(m, r)");
    std::vector<SubsetMask> out;
    out.reserve(gamma);
    for (std::uint64_t i = 0; i < gamma; ++i) out.push_back(colex_unrank(r, m, i));
    return SubsetFamily{m, std::move(out), r};
}

SubsetFamily antilex_prefix(int r, int m, std::uint64_t k) {
    check_degree(r, m);
    const std::uint64_t total = binomial(m, r);
    if (k > total) throw RangeError("antilex_prefix: k exceeds C(m, r)");
    std::vector<SubsetMask> out;
    out.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) out.push_back(colex_unrank(r, m, total - 1 - i));
    return SubsetFamily{m, std::move(out), r};
}

std::vector<std::uint64_t> masks_by_cardinality(int m, int min_size) {
    check_ground_set(m, kMaxGroundSet);
    std::vector<std::uint64_t> out;
    for (int size = std::max(min_size, 0); size <= m; ++size) {
        if (size == 0) {
            out.push_back(0);
            continue;
        }
        // Gosper's hack walks same-weight masks in increasing (co-lex) order.
        std::uint64_t x = (std::uint64_t{1} << size) - 1;
        while (x <= full_mask(m)) {
            out.push_back(x);
            const std::uint64_t c = x & (~x + 1);
            const std::uint64_t rr = x + c;
            x = (((rr ^ x) >> 2) / c) | rr;
        }
    }
    return out;
}

SubsetFamily upward_shadow(const SubsetFamily& family) {
    const auto masks = family.masks();
    auto [seen, count] = expand_up(family.m, masks);
    std::vector<SubsetMask> out;
    out.reserve(count);
    for (auto x : masks_by_cardinality(family.m, 0)) {
        if (seen.test(x)) out.push_back({family.m, x});
    }
    return SubsetFamily{family.m, std::move(out), std::nullopt};
}

std::uint64_t upward_shadow_size(int m, std::span<const std::uint64_t> masks) {
    return expand_up(m, masks).second;
}

std::uint64_t min_shadow_bruteforce(int r, int m, std::uint64_t k, std::uint64_t budget) {
    check_degree(r, m);
    check_ground_set(m, kMaxGroundSet);
    const std::uint64_t n_sets = binomial(m, r);
    if (k > n_sets) throw RangeError("min_shadow_bruteforce: k exceeds C(m, r)");

    using boost::multiprecision::cpp_int;
    cpp_int families = 1;
    for (std::uint64_t i = 0; i < k; ++i) families = families * (n_sets - i) / (i + 1);
    if (families > budget) {
        throw BudgetExceeded("min_shadow_bruteforce: " + families.str() + " families exceed budget " +
                                 std::to_string(budget),
                             families.str());
    }
    if (k == 0) return 0;

    // Up-set of each r-subset as a bitset over all 2^m subsets.
    const std::size_t words = ((std::size_t{1} << m) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> up(n_sets, std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t i = 0; i < n_sets; ++i) {
        const std::uint64_t base = colex_unrank(r, m, i).mask;
        for (std::uint64_t x = 0; x <= full_mask(m); ++x) {
            if ((x & base) == base) up[i][x / 64] |= std::uint64_t{1} << (x % 64);
        }
    }

    // Depth-first over k-combinations, keeping the running union per depth.
    std::vector<std::vector<std::uint64_t>> unions(k + 1, std::vector<std::uint64_t>(words, 0));
    std::vector<std::uint64_t> pick(k, 0);
    std::uint64_t best = ~std::uint64_t{0};
    std::size_t depth = 0;
    std::uint64_t next = 0;
    while (true) {
        if (depth == k) {
            std::uint64_t size = 0;
            for (auto w : unions[k]) size += static_cast<std::uint64_t>(std::popcount(w));
            best = std::min(best, size);
            --depth;
            next = pick[depth] + 1;
            continue;
        }
        if (next + (k - depth) > n_sets) {
            if (depth == 0) break;
            --depth;
            next = pick[depth] + 1;
            continue;
        }
        pick[depth] = next;
        for (std::size_t w = 0; w < words; ++w) unions[depth + 1][w] = unions[depth][w] | up[next][w];
        ++depth;
        next = next + 1;
    }
    return best;
}

}  // namespace prmghw::subsets
