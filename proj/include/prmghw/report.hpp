#pragma once

// Flat report rows and their CSV / JSON / pretty renderings.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prmghw/ghw.hpp"

namespace prmghw::report {

using Value = std::variant<std::uint64_t, std::string, bool>;

struct ReportRow {
    std::vector<std::pair<std::string, Value>> fields;

    ReportRow& add(std::string key, Value v) {
        fields.emplace_back(std::move(key), std::move(v));
        return *this;
    }
    const Value& get(const std::string& key) const;
};

/// Header from the first row's keys; strings containing ',' or '"' quoted.
std::string to_csv(const std::vector<ReportRow>& rows);
/// JSON array of objects, keys in row order, two-space indent.
std::string to_json(const std::vector<ReportRow>& rows);

/// Rows (r, m, k, gamma, S, Gamma, n); S is the picked set as "2,3".
std::vector<ReportRow> shorten_rows(int r, int m);
/// The shortening schedule laid out like a printed table, sets in braces.
std::string shorten_pretty(int r, int m);

}  // namespace prmghw::report
