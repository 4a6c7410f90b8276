#include "prmghw/prm.hpp"

#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "prmghw/errors.hpp"

namespace prmghw::prm {

std::string to_string(Family f) { return f == Family::PRM ? "PRM" : "RM"; }

Family family_from_string(const std::string& s) {
    if (s == "PRM" || s == "prm") return Family::PRM;
    if (s == "RM" || s == "rm") return Family::RM;
    throw InvalidInput("unknown code family '" + s + "' (expected PRM or RM)");
}

void CodeSpec::validate() const {
    const int lo = family == Family::PRM ? 1 : 0;
    if (m < 1 || m > kMaxBuildM) {
        throw RangeError("m=" + std::to_string(m) + " outside [1, " + std::to_string(kMaxBuildM) + "]");
    }
    if (r < lo || r > m) {
        throw RangeError(to_string(family) + " requires " + std::to_string(lo) + " <= r <= m (got r=" +
                         std::to_string(r) + ", m=" + std::to_string(m) + ")");
    }
}

std::vector<subsets::SubsetMask> evaluation_points(int r, int m) {
    CodeSpec{Family::PRM, r, m}.validate();
    std::vector<subsets::SubsetMask> out;
    for (auto mask : subsets::masks_by_cardinality(m, r)) out.push_back({m, mask});
    return out;
}

CodeInstance build_code(const CodeSpec& spec) {
    spec.validate();
    CodeInstance code;
    code.spec = spec;
    if (spec.family == Family::PRM) {
        code.points = subsets::masks_by_cardinality(spec.m, spec.r);
        for (auto mask : subsets::masks_by_cardinality(spec.m, spec.r)) {
            if (std::popcount(mask) != spec.r) break;
            code.monomials.push_back(mask);
        }
    } else {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << spec.m); ++x) code.points.push_back(x);
        for (auto mask : subsets::masks_by_cardinality(spec.m, 0)) {
            if (std::popcount(mask) > spec.r) break;
            code.monomials.push_back(mask);
        }
    }
    code.generator = gf2::BitMatrix(code.monomials.size(), code.points.size());
    for (std::size_t i = 0; i < code.monomials.size(); ++i) {
        const auto mono = code.monomials[i];
        for (std::size_t j = 0; j < code.points.size(); ++j) {
            if ((code.points[j] & mono) == mono) code.generator.set(i, j);
        }
    }
    return code;
}

std::uint64_t monomial_support_size(const CodeInstance& code, const subsets::SubsetFamily& family) {
    if (code.spec.family != Family::PRM) throw InvalidInput("monomial_support_size expects a PRM code");
    if (family.m != code.spec.m) throw InvalidInput("family ground set does not match the code's m");

    gf2::BitVector support(code.length());
    for (const auto& s : family.members) {
        if (s.size() != code.spec.r) {
            throw InvalidInput("family member " + s.brace_string() + " is not an r-subset (r=" +
                               std::to_string(code.spec.r) + ")");
        }
        // Monomials occupy the first C(m,r) positions in co-lex order.
        const auto row = subsets::colex_rank(s);
        support |= code.generator.row(row);
    }
    const std::uint64_t by_rows = support.weight();
    const auto masks = family.masks();
    const std::uint64_t by_shadow = subsets::upward_shadow_size(code.spec.m, masks);
    if (by_rows != by_shadow) {
        throw std::logic_error("monomial support mismatch: generator rows give " + std::to_string(by_rows) +
                               ", upward shadow gives " + std::to_string(by_shadow));
    }
    return by_rows;
}

void write_generator(std::ostream& out, const CodeInstance& code) {
    out << to_string(code.spec.family) << ' ' << code.spec.r << ' ' << code.spec.m << ' '
        << code.generator.rows() << ' ' << code.generator.cols() << '\n';
    for (const auto& row : code.generator.row_span()) out << row.to_string() << '\n';
}

std::string generator_text(const CodeInstance& code) {
    std::ostringstream os;
    write_generator(os, code);
    return os.str();
}

}  // namespace prmghw::prm
