#pragma once

#include <cstdint>

namespace prmghw {

/// Largest n for which every C(n, k) fits in 64 bits.
inline constexpr int kMaxBinomialN = 66;

/// C(n, k) from a Pascal table; 0 when k < 0 or k > n. Throws RangeError for
/// n outside [0, kMaxBinomialN].
std::uint64_t binomial(int n, int k);

}  // namespace prmghw
