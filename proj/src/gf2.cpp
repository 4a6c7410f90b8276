#include "prmghw/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "prmghw/errors.hpp"

namespace prmghw::gf2 {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw InvalidInput("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVector BitVector::from_word(std::uint64_t word, std::size_t len) {
    if (len > kWordBits) throw RangeError("from_word: length exceeds 64");
    BitVector v(len);
    if (len == 0) return v;
    if (len < kWordBits) word &= (std::uint64_t{1} << len) - 1;
    v.words_[0] = word;
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= len_) throw RangeError("BitVector index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= len_) throw RangeError("BitVector index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= bit;
    } else {
        words_[i / kWordBits] &= ~bit;
    }
}

void BitVector::flip(std::size_t i) {
    if (i >= len_) throw RangeError("BitVector index out of range");
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitVector::leading_index() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
}

void BitVector::check_same_size(const BitVector& other) const {
    if (other.len_ != len_) throw InvalidInput("BitVector length mismatch");
}

BitVector& BitVector::operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

bool lex_less(const BitVector& a, const BitVector& b) {
    a.check_same_size(b);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        const std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff != 0) {
            // First differing coordinate decides; the vector holding a 1 there is larger.
            const std::uint64_t lowest = diff & (~diff + 1);
            return (b.words_[w] & lowest) != 0;
        }
    }
    return false;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) throw InvalidInput("BitMatrix rows must all have length cols");
    }
    BitMatrix m;
    m.cols_ = cols;
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> vs;
    vs.reserve(rows.size());
    for (const auto& s : rows) vs.push_back(BitVector::from_string(s));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return from_rows(std::move(vs), cols);
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) throw InvalidInput("appended row has wrong length");
    data_.push_back(std::move(row));
}

BitVector BitMatrix::row_support() const {
    BitVector s(cols_);
    for (const auto& r : data_) s |= r;
    return s;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(data_.size());
    for (const auto& r : data_) out.push_back(r.to_string());
    return out;
}

bool lex_less(const BitMatrix& a, const BitMatrix& b) {
    const std::size_t n = std::min(a.rows(), b.rows());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.row(i) != b.row(i)) return lex_less(a.row(i), b.row(i));
    }
    return a.rows() < b.rows();
}

BitMatrix rref(const BitMatrix& m) {
    std::vector<BitVector> rows(m.row_span().begin(), m.row_span().end());
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                                  [col](const BitVector& r) { return r.get(col); });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), pivot);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
        }
        ++next;
    }
    rows.resize(next);
    return BitMatrix::from_rows(std::move(rows), m.cols());
}

std::size_t rank(const BitMatrix& m) { return rref(m).rows(); }

bool is_rref(const BitMatrix& m) {
    std::optional<std::size_t> prev;
    std::vector<std::size_t> pivots;
    for (const auto& r : m.row_span()) {
        auto lead = r.leading_index();
        if (!lead) return false;
        if (prev && *lead <= *prev) return false;
        prev = lead;
        pivots.push_back(*lead);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.rows(); ++j) {
            if (i != j && m.get(i, pivots[j])) return false;
        }
    }
    return true;
}

BigCount gaussian_binomial(std::size_t K, std::size_t nu) {
    if (nu > K) return 0;
    BigCount num = 1;
    BigCount den = 1;
    for (std::size_t i = 0; i < nu; ++i) {
        num *= (BigCount(1) << (K - i)) - 1;
        den *= (BigCount(1) << (i + 1)) - 1;
    }
    return num / den;
}

std::vector<RrefProfile::Position> RrefProfile::free_positions(std::size_t K,
                                                               std::span<const std::size_t> pivots) {
    std::vector<Position> out;
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        for (std::size_t col = pivots[row] + 1; col < K; ++col) {
            if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) out.push_back({row, col});
        }
    }
    return out;
}

BitMatrix RrefProfile::basis(std::size_t K) const {
    BitMatrix b(pivot_columns.size(), K);
    for (std::size_t row = 0; row < pivot_columns.size(); ++row) b.set(row, pivot_columns[row]);
    const auto free = free_positions(K, pivot_columns);
    if (free.size() != free_entries.size()) throw InvalidInput("free_entries length does not match pivot set");
    for (std::size_t i = 0; i < free.size(); ++i) {
        if (free_entries.get(i)) b.set(free[i].row, free[i].col);
    }
    return b;
}

std::vector<std::vector<std::size_t>> pivot_column_sets(std::size_t K, std::size_t nu) {
    std::vector<std::vector<std::size_t>> out;
    if (nu > K) return out;
    std::vector<std::size_t> cur(nu);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
        out.push_back(cur);
        // Advance to the next combination in lexicographic order.
        std::size_t i = nu;
        while (i > 0 && cur[i - 1] == K - nu + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < nu; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

// Binary increment; returns false on wrap-around to zero.
bool increment(BitVector& counter) {
    for (std::size_t i = 0; i < counter.size(); ++i) {
        counter.flip(i);
        if (counter.get(i)) return true;
    }
    return false;
}

}  // namespace

void for_each_subspace_with_pivots(std::size_t K, std::span<const std::size_t> pivots,
                                   const std::function<void(const BitMatrix&)>& visit) {
    RrefProfile profile{{pivots.begin(), pivots.end()}, {}};
    profile.free_entries = BitVector(RrefProfile::free_positions(K, pivots).size());
    do {
        visit(profile.basis(K));
    } while (increment(profile.free_entries));
}

SubspaceEnumerator::SubspaceEnumerator(std::size_t K, std::size_t nu, std::uint64_t budget)
    : K_(K), nu_(nu), total_(gaussian_binomial(K, nu)) {
    if (nu > K) throw RangeError("subspace dimension nu exceeds ambient dimension K");
    if (total_ > budget) {
        throw BudgetExceeded("subspace enumeration: [" + std::to_string(K) + " choose " + std::to_string(nu) +
                                 "]_2 = " + total_.str() + " exceeds budget " + std::to_string(budget) +
                                 "; reduce nu or raise the budget",
                             total_.str());
    }
    pivots_.resize(nu);
    std::iota(pivots_.begin(), pivots_.end(), std::size_t{0});
    start_pivot_set();
}

void SubspaceEnumerator::start_pivot_set() {
    free_ = RrefProfile::free_positions(K_, pivots_);
    counter_ = BitVector(free_.size());
    fresh_pivots_ = true;
}

bool SubspaceEnumerator::advance_pivots() {
    std::size_t i = nu_;
    while (i > 0 && pivots_[i - 1] == K_ - nu_ + (i - 1)) --i;
    if (i == 0) return false;
    ++pivots_[i - 1];
    for (std::size_t j = i; j < nu_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    start_pivot_set();
    return true;
}

bool SubspaceEnumerator::next(BitMatrix& out) {
    if (done_) return false;
    if (!fresh_pivots_) {
        if (!increment(counter_)) {
            if (!advance_pivots()) {
                done_ = true;
                return false;
            }
        }
    }
    fresh_pivots_ = false;
    RrefProfile profile{pivots_, counter_};
    out = profile.basis(K_);
    ++yielded_;
    return true;
}

std::vector<BitMatrix> enumerate_subspaces(std::size_t K, std::size_t nu, std::uint64_t budget) {
    SubspaceEnumerator e(K, nu, budget);
    std::vector<BitMatrix> out;
    BitMatrix b;
    while (e.next(b)) out.push_back(b);
    return out;
}

}  // namespace prmghw::gf2
