#pragma once

// Dense linear algebra over GF(2): packed bit vectors, row-major bit matrices,
// rank / reduced row-echelon form, and canonical enumeration of subspaces.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prmghw::gf2 {

using BigCount = boost::multiprecision::cpp_int;

/// Fixed-length vector over GF(2), packed little-endian into 64-bit words.
/// Bits past size() are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Parses a string of '0'/'1' characters; character i is coordinate i.
    static BitVector from_string(std::string_view bits);
    /// Builds a vector from the low `len` bits of `word` (len <= 64).
    static BitVector from_word(std::uint64_t word, std::size_t len);

    std::size_t size() const noexcept { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    /// Index of the first nonzero coordinate.
    std::optional<std::size_t> leading_index() const noexcept;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    /// Low 64 coordinates as a word; only meaningful when size() <= 64.
    std::uint64_t to_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    /// Lexicographic on the '0'/'1' string (coordinate 0 most significant).
    friend bool lex_less(const BitVector& a, const BitVector& b);

private:
    void check_same_size(const BitVector& other) const;

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    /// All rows must share one length; `cols` is used when `rows` is empty.
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const noexcept { return data_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const BitVector& row(std::size_t i) const { return data_.at(i); }
    BitVector& row(std::size_t i) { return data_.at(i); }
    std::span<const BitVector> row_span() const noexcept { return data_; }

    bool get(std::size_t r, std::size_t c) const { return data_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_.at(r).set(c, value); }

    void append_row(BitVector row);
    /// Union of the row supports: coordinate j is set iff some row is nonzero at j.
    BitVector row_support() const;

    std::vector<std::string> to_strings() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
    /// Row-by-row lexicographic comparison (row 0 first).
    friend bool lex_less(const BitMatrix& a, const BitMatrix& b);

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

std::size_t rank(const BitMatrix& m);

/// Unique reduced row-echelon form with zero rows dropped.
BitMatrix rref(const BitMatrix& m);

bool is_rref(const BitMatrix& m);

/// Number of nu-dimensional subspaces of GF(2)^K (exact, unbounded).
BigCount gaussian_binomial(std::size_t K, std::size_t nu);

/// A canonical description of one subspace: where the pivots sit and the
/// values at every free (non-pivot, right-of-pivot) position.
struct RrefProfile {
    std::vector<std::size_t> pivot_columns;
    /// Ordered like free_positions(): row-major, columns ascending.
    BitVector free_entries;

    struct Position {
        std::size_t row;
        std::size_t col;
    };
    static std::vector<Position> free_positions(std::size_t K,
                                                std::span<const std::size_t> pivots);

    BitMatrix basis(std::size_t K) const;
};

/// All nu-element pivot sets of [0, K), lexicographic.
std::vector<std::vector<std::size_t>> pivot_column_sets(std::size_t K, std::size_t nu);

/// Visits every subspace whose RREF uses exactly `pivots`, free entries
/// advanced as a binary counter (first free position least significant).
void for_each_subspace_with_pivots(std::size_t K, std::span<const std::size_t> pivots,
                                   const std::function<void(const BitMatrix&)>& visit);

/// Streams every nu-dimensional subspace of GF(2)^K exactly once as its RREF
/// basis. Pivot sets are taken in lexicographic order. Construction throws
/// BudgetExceeded when the Gaussian binomial exceeds `budget`.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(std::size_t K, std::size_t nu, std::uint64_t budget);

    const BigCount& total() const noexcept { return total_; }
    std::uint64_t yielded() const noexcept { return yielded_; }

    /// Writes the next basis into `out`; false once exhausted.
    bool next(BitMatrix& out);

private:
    bool advance_pivots();
    void start_pivot_set();

    std::size_t K_;
    std::size_t nu_;
    BigCount total_;
    std::uint64_t yielded_ = 0;
    bool done_ = false;
    bool fresh_pivots_ = true;
    std::vector<std::size_t> pivots_;
    std::vector<RrefProfile::Position> free_;
    BitVector counter_;
};

std::vector<BitMatrix> enumerate_subspaces(std::size_t K, std::size_t nu, std::uint64_t budget);

}  // namespace prmghw::gf2
