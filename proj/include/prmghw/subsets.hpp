#pragma once

// Subsets of [m] = {1, ..., m} as bit masks, co-lex / anti-lex orderings of
// r-subsets, and upward shadows of set families.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prmghw::subsets {

/// Largest ground set handled: masks are 64-bit, shadows use a 2^m table.
inline constexpr int kMaxGroundSet = 24;

/// A subset of [m]; element i is present iff bit (i - 1) of `mask` is set.
struct SubsetMask {
    int m = 0;
    std::uint64_t mask = 0;

    static SubsetMask from_elements(int m, std::span<const int> elements);
    static SubsetMask from_elements(int m, std::initializer_list<int> elements);

    int size() const noexcept;
    bool contains(int element) const noexcept;
    std::vector<int> elements() const;

    /// "{1,3}" (the empty set prints as "{}").
    std::string brace_string() const;
    /// "1,3" (empty string for the empty set).
    std::string joined() const;

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
};

/// An ordered, duplicate-free list of subsets of one ground set.
struct SubsetFamily {
    int m = 0;
    std::vector<SubsetMask> members;
    std::optional<int> uniform_size;

    /// Validates ground set, duplicates and (if given) the uniform size.
    static SubsetFamily make(int m, std::vector<SubsetMask> members, std::optional<int> uniform_size);

    std::size_t size() const noexcept { return members.size(); }
    std::vector<std::uint64_t> masks() const;
};

/// True iff A precedes B in co-lex order, i.e. max(A xor B) lies in B.
bool colex_less(const SubsetMask& a, const SubsetMask& b);

/// Position of an r-subset in the co-lex order of all r-subsets of [m]
/// (combinatorial number system); and its inverse.
std::uint64_t colex_rank(const SubsetMask& s);
SubsetMask colex_unrank(int r, int m, std::uint64_t rank);

/// First gamma r-subsets of [m] in ascending co-lex order.
SubsetFamily colex_prefix(int r, int m, std::uint64_t gamma);

/// First k r-subsets of [m] in anti-lex order (reverse co-lex).
SubsetFamily antilex_prefix(int r, int m, std::uint64_t k);

/// Every subset of [m] containing some member of `family`, ordered by
/// (cardinality, co-lex).
SubsetFamily upward_shadow(const SubsetFamily& family);

/// |upward_shadow| without materializing the family.
std::uint64_t upward_shadow_size(int m, std::span<const std::uint64_t> masks);

inline constexpr std::uint64_t kDefaultFamilyBudget = 10'000'000;

/// min |Delta(K)| over all k-member K within the r-subsets of [m], by
/// exhaustive enumeration of the C(C(m,r), k) families. Refuses (throws
/// BudgetExceeded) rather than sampling when that count exceeds `budget`.
std::uint64_t min_shadow_bruteforce(int r, int m, std::uint64_t k,
                                    std::uint64_t budget = kDefaultFamilyBudget);

/// All subsets of [m] of every size ordered by (cardinality, co-lex).
std::vector<std::uint64_t> masks_by_cardinality(int m, int min_size);

}  // namespace prmghw::subsets
