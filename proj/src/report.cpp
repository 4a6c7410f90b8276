#include "prmghw/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "prmghw/errors.hpp"

namespace prmghw::report {

namespace {

std::string render(const Value& v) {
    if (const auto* n = std::get_if<std::uint64_t>(&v)) return std::to_string(*n);
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return std::get<std::string>(v);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

const Value& ReportRow::get(const std::string& key) const {
    for (const auto& [k, v] : fields) {
        if (k == key) return v;
    }
    throw InvalidInput("report row has no field '" + key + "'");
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    if (rows.empty()) return {};
    for (std::size_t i = 0; i < rows.front().fields.size(); ++i) {
        os << (i ? "," : "") << rows.front().fields[i].first;
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.fields.size(); ++i) {
            os << (i ? "," : "") << csv_field(render(row.fields[i].second));
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [k, v] : row.fields) {
            std::visit([&obj, &k](const auto& x) { obj[k] = x; }, v);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<ReportRow> shorten_rows(int r, int m) {
    std::vector<ReportRow> out;
    for (const auto& row : ghw::shorten_table(r, m)) {
        ReportRow rr;
        rr.add("r", static_cast<std::uint64_t>(r))
            .add("m", static_cast<std::uint64_t>(m))
            .add("k", row.k)
            .add("gamma", row.gamma)
            .add("S", row.picked ? row.picked->joined() : std::string{})
            .add("Gamma", row.Gamma)
            .add("n", row.n);
        out.push_back(std::move(rr));
    }
    return out;
}

std::string shorten_pretty(int r, int m) {
    const auto rows = ghw::shorten_table(r, m);
    std::size_t set_width = 3;
    for (const auto& row : rows) {
        if (row.picked) set_width = std::max(set_width, row.picked->brace_string().size());
    }
    std::ostringstream os;
    os << std::setw(6) << "k" << ' ' << std::setw(6) << "gamma" << ' ' << std::setw(static_cast<int>(set_width))
       << "S" << ' ' << std::setw(6) << "Gamma" << ' ' << std::setw(6) << "n" << '\n';
    for (const auto& row : rows) {
        const std::string set = row.picked ? row.picked->brace_string() : "{}";
        os << std::setw(6) << row.k << ' ' << std::setw(6) << row.gamma << ' '
           << std::setw(static_cast<int>(set_width)) << set << ' ' << std::setw(6) << row.Gamma << ' '
           << std::setw(6) << row.n << '\n';
    }
    return os.str();
}

}  // namespace prmghw::report
