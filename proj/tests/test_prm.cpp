#include <random>
#include <sstream>

#include "doctest.h"
#include "prmghw/binomial.hpp"
#include "prmghw/errors.hpp"
#include "prmghw/prm.hpp"

using namespace prmghw;
using prm::Family;

namespace {

// Direct evaluation of prod_{i in R} x_i at point x.
bool monomial_at(std::uint64_t monomial, std::uint64_t point) { return (monomial & point) == monomial; }

std::uint64_t union_support(const gf2::BitMatrix& rows) {
    gf2::BitVector acc(rows.cols());
    for (const auto& row : rows.row_span()) acc |= row;
    return acc.weight();
}

}  // namespace

TEST_CASE("evaluation points") {
    CHECK(prm::evaluation_points(2, 5).size() == 26);
    for (int m = 1; m <= 10; ++m) {
        CHECK(prm::evaluation_points(1, m).size() == (std::size_t{1} << m) - 1);
        CHECK(prm::evaluation_points(m, m).size() == 1);
    }
    const auto pts = prm::evaluation_points(2, 4);
    CHECK(pts.front().brace_string() == "{1,2}");
    CHECK(pts.back().brace_string() == "{1,2,3,4}");
    CHECK_THROWS_AS(prm::evaluation_points(0, 4), RangeError);
    CHECK_THROWS_AS(prm::evaluation_points(5, 4), RangeError);
}

TEST_CASE("build_code examples") {
    const auto prm24 = prm::build_code({Family::PRM, 2, 4});
    CHECK(prm24.generator.rows() == 6);
    CHECK(prm24.generator.cols() == 11);
    CHECK(gf2::rank(prm24.generator) == 6);

    const auto rm25 = prm::build_code({Family::RM, 2, 5});
    CHECK(rm25.generator.rows() == 16);
    CHECK(rm25.generator.cols() == 32);
    CHECK(gf2::rank(rm25.generator) == 16);

    CHECK_THROWS_AS(prm::build_code({Family::PRM, 0, 4}), RangeError);
    CHECK_THROWS_AS(prm::build_code({Family::PRM, 2, prm::kMaxBuildM + 1}), RangeError);
    CHECK(prm::family_from_string("RM") == Family::RM);
    CHECK_THROWS_AS(prm::family_from_string("BCH"), InvalidInput);
}

TEST_CASE("generator entries are monomial evaluations") {
    for (auto family : {Family::PRM, Family::RM}) {
        for (int m = 1; m <= 6; ++m) {
            for (int r = family == Family::PRM ? 1 : 0; r <= m; ++r) {
                const auto code = prm::build_code({family, r, m});
                bool ok = true;
                for (std::size_t i = 0; i < code.dimension(); ++i) {
                    for (std::size_t j = 0; j < code.length(); ++j) {
                        ok = ok && code.generator.get(i, j) == monomial_at(code.monomials[i], code.points[j]);
                    }
                }
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("dimensions and lengths for m <= 8") {
    for (int m = 1; m <= 8; ++m) {
        for (int r = 1; r <= m; ++r) {
            const auto code = prm::build_code({Family::PRM, r, m});
            std::uint64_t n = 0;
            for (int i = r; i <= m; ++i) n += binomial(m, i);
            CHECK(code.dimension() == binomial(m, r));
            CHECK(code.length() == n);
            CHECK(gf2::rank(code.generator) == binomial(m, r));
        }
        for (int r = 0; r <= m; ++r) {
            const auto code = prm::build_code({Family::RM, r, m});
            std::uint64_t k = 0;
            for (int i = 0; i <= r; ++i) k += binomial(m, i);
            CHECK(code.dimension() == k);
            CHECK(gf2::rank(code.generator) == k);
        }
    }
}

TEST_CASE("PRM generator is systematic on the weight-r columns") {
    for (int m = 1; m <= 8; ++m) {
        for (int r = 1; r <= m; ++r) {
            const auto code = prm::build_code({Family::PRM, r, m});
            const std::size_t k = code.dimension();
            bool ok = true;
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) ok = ok && code.generator.get(i, j) == (i == j);
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("monomial_support_size examples") {
    const auto code = prm::build_code({Family::PRM, 2, 5});
    CHECK(prm::monomial_support_size(code, subsets::antilex_prefix(2, 5, 5)) == 19);
    CHECK(prm::monomial_support_size(code, subsets::SubsetFamily{5, {}, 2}) == 0);
    for (int m = 1; m <= 7; ++m) {
        for (int r = 1; r <= m; ++r) {
            const auto c = prm::build_code({Family::PRM, r, m});
            const auto one = subsets::colex_prefix(r, m, 1);
            CHECK(prm::monomial_support_size(c, one) == (std::uint64_t{1} << (m - r)));
        }
    }
    const auto wrong = subsets::SubsetFamily::make(5, {subsets::SubsetMask::from_elements(5, {1, 2, 3})}, 3);
    CHECK_THROWS_AS(prm::monomial_support_size(code, wrong), InvalidInput);
    CHECK_THROWS_AS(prm::monomial_support_size(prm::build_code({Family::RM, 2, 5}), subsets::colex_prefix(2, 5, 1)),
                    InvalidInput);
}

TEST_CASE("support of monomial subcodes matches the row union") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 6);
        const int r = 1 + static_cast<int>(rng() % m);
        const auto code = prm::build_code({Family::PRM, r, m});
        std::vector<subsets::SubsetMask> chosen;
        gf2::BitMatrix rows(0, code.length());
        for (std::uint64_t i = 0; i < code.dimension(); ++i) {
            if (rng() % 2) {
                chosen.push_back(subsets::colex_unrank(r, m, i));
                rows.append_row(code.generator.row(i));
            }
        }
        const auto fam = subsets::SubsetFamily::make(m, chosen, r);
        CHECK(prm::monomial_support_size(code, fam) == union_support(rows));
    }
}

TEST_CASE("generator export") {
    const auto text = prm::generator_text(prm::build_code({Family::PRM, 2, 4}));
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    CHECK(header == "PRM 2 4 6 11");
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        CHECK(line.size() == 11);
        ++lines;
    }
    CHECK(lines == 6);

    CHECK(prm::generator_text(prm::build_code({Family::PRM, 3, 3})) == "PRM 3 3 1 1\n1\n");
    CHECK(prm::generator_text(prm::build_code({Family::RM, 2, 5})).rfind("RM 2 5 16 32\n", 0) == 0);

    // Re-export is byte-identical.
    CHECK(prm::generator_text(prm::build_code({Family::PRM, 2, 4})) == text);
}
