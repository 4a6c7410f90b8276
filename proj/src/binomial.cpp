#include "prmghw/binomial.hpp"

#include <array>

#include "prmghw/errors.hpp"

namespace prmghw {

namespace {

using Row = std::array<std::uint64_t, kMaxBinomialN + 1>;

const std::array<Row, kMaxBinomialN + 1>& pascal() {
    static const auto table = [] {
        std::array<Row, kMaxBinomialN + 1> t{};
        for (int n = 0; n <= kMaxBinomialN; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (n < 0 || n > kMaxBinomialN) throw RangeError("binomial: n out of supported range");
    if (k < 0 || k > n) return 0;
    return pascal()[n][k];
}

}  // namespace prmghw
