#pragma once

// Generator matrices of the non-degenerate binary projective Reed-Muller code
// PRM(r, m-1) and of the binary Reed-Muller code RM(r, m).
//
// Conventions (fixed so exports are byte-reproducible):
//   * variable x_i corresponds to element i of [m] and to bit (i-1) of a mask;
//   * a point x in GF(2)^m is identified with its support mask;
//   * PRM columns: every point of weight >= r, ordered by (weight, co-lex),
//     so the first C(m,r) columns are the systematic (weight-r) positions;
//   * RM columns: all 2^m points in increasing integer value of the mask;
//   * rows: monomials prod_{i in R} x_i ordered by (degree, co-lex).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prmghw/gf2.hpp"
#include "prmghw/subsets.hpp"

namespace prmghw::prm {

/// Largest m for which generator matrices are materialized.
inline constexpr int kMaxBuildM = 16;

enum class Family { PRM, RM };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct CodeSpec {
    Family family = Family::PRM;
    int r = 1;
    int m = 1;

    /// Throws RangeError unless 1 <= r <= m (PRM) or 0 <= r <= m (RM).
    void validate() const;
};

struct CodeInstance {
    CodeSpec spec;
    std::vector<std::uint64_t> points;     // column labels (support masks)
    std::vector<std::uint64_t> monomials;  // row labels (variable sets)
    gf2::BitMatrix generator;

    std::size_t length() const noexcept { return points.size(); }
    std::size_t dimension() const noexcept { return monomials.size(); }
};

/// Columns of PRM(r, m-1): subsets of [m] with at least r elements.
std::vector<subsets::SubsetMask> evaluation_points(int r, int m);

CodeInstance build_code(const CodeSpec& spec);

/// Support size of the subcode spanned by the monomials in `family`
/// (r-subsets of [m]). Computed from the generator rows and, independently,
/// as the upward shadow of the family; the two must agree.
std::uint64_t monomial_support_size(const CodeInstance& code, const subsets::SubsetFamily& family);

/// Plain-text export: header "FAMILY r m rows cols", then one line of
/// '0'/'1' characters per generator row.
void write_generator(std::ostream& out, const CodeInstance& code);
std::string generator_text(const CodeInstance& code);

}  // namespace prmghw::prm
