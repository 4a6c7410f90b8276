// Acceptance gate: one PASS/FAIL line per criterion.
//
//   prmghw_acceptance --cli <path to prmghw> [--only N]
//
// Exit status is 0 iff every selected criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prmghw/binomial.hpp"
#include "prmghw/errors.hpp"
#include "prmghw/ghw.hpp"
#include "prmghw/oracle.hpp"
#include "prmghw/prm.hpp"
#include "prmghw/subsets.hpp"
#include "prmghw/verify.hpp"

using namespace prmghw;
using ghw::Count;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double max_seconds;  // 0 means no runtime bound is enforced
    std::function<Verdict()> check;
};

std::string g_cli;

std::string run_cli(const std::string& args, int& status) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("cannot run " + cmd);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
    status = pclose(pipe.release());
    return out;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// Expected shortening schedule for r = 2, m = 5:
// k, gamma, S, Gamma, n.
const std::vector<std::string> kShortenSchedule = {
    "2,5,10,0,,0,26",       "2,5,9,1,\"1,2\",1,25",  "2,5,8,2,\"1,3\",2,24",   "2,5,7,3,\"2,3\",4,22",
    "2,5,6,4,\"1,4\",5,21", "2,5,5,5,\"2,4\",7,19",  "2,5,4,6,\"3,4\",11,15",  "2,5,3,7,\"1,5\",12,14",
    "2,5,2,8,\"2,5\",14,12", "2,5,1,9,\"3,5\",18,8",
};

struct KnownHierarchy {
    int r;
    int m;
    const char* values;
};

const std::vector<KnownHierarchy> kKnownHierarchies = {
    {1, 2, "2,3"},
    {1, 3, "4,6,7"},
    {2, 3, "2,3,4"},
    {1, 4, "8,12,14,15"},
    {2, 4, "4,6,7,9,10,11"},
    {3, 4, "2,3,4,5"},
    {1, 5, "16,24,28,30,31"},
    {2, 5, "8,12,14,15,19,21,22,24,25,26"},
    {3, 5, "4,6,7,9,10,11,13,14,15,16"},
    {4, 5, "2,3,4,5,6"},
};

Verdict shorten_schedule() {
    int status = 0;
    const auto lines = split_lines(run_cli("shorten --r 2 --m 5 --format csv", status));
    if (status != 0) return {false, "shorten exited with status " + std::to_string(status)};
    if (lines.size() != kShortenSchedule.size() + 1) return {false, "expected 10 data rows, got " + std::to_string(lines.size() - 1)};
    if (lines[0] != "r,m,k,gamma,S,Gamma,n") return {false, "unexpected header '" + lines[0] + "'"};
    for (std::size_t i = 0; i < kShortenSchedule.size(); ++i) {
        if (lines[i + 1] != kShortenSchedule[i]) return {false, "row " + std::to_string(i) + ": got '" + lines[i + 1] + "', want '" + kShortenSchedule[i] + "'"};
    }
    return {true, "10/10 rows exact"};
}

Verdict known_hierarchies() {
    for (const auto& row : kKnownHierarchies) {
        int status = 0;
        auto out = run_cli("ghw --r " + std::to_string(row.r) + " --m " + std::to_string(row.m), status);
        if (!out.empty() && out.back() == '\n') out.pop_back();
        if (status != 0 || out != row.values) {
            return {false, "r=" + std::to_string(row.r) + " m=" + std::to_string(row.m) + ": got '" + out + "', want '" + row.values + "'"};
        }
    }
    return {true, "10/10 hierarchies exact"};
}

Verdict triple_agreement() {
    std::uint64_t checked = 0;
    for (int m = 1; m <= 8; ++m) {
        for (int r = 1; r <= m; ++r) {
            const auto code = prm::build_code({prm::Family::PRM, r, m});
            const Count dim = binomial(m, r);
            for (Count k = 1; k <= dim; ++k) {
                const Count closed = ghw::ghw_closed(k, r, m);
                const Count sigma = prm::monomial_support_size(code, subsets::antilex_prefix(r, m, k));
                const bool canon_ok = k == dim || ghw::ghw_canonical(k, r, m) == closed;
                if (sigma != closed || !canon_ok) {
                    return {false, "(r,m,k)=(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(k) +
                                       "): closed=" + std::to_string(closed) + " sigma=" + std::to_string(sigma)};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " (r,m,k) triples agree"};
}

Verdict oracle_equivalence() {
    std::uint64_t checked = 0;
    auto compare = [&](int r, int m, std::size_t nu, std::uint64_t budget) -> std::optional<std::string> {
        const auto code = prm::build_code({prm::Family::PRM, r, m});
        const auto res = oracle::ghw_oracle(code, nu, {budget, false, 0});
        const Count closed = ghw::ghw_closed(nu, r, m);
        ++checked;
        if (res.min_support != closed || !res.exhaustive) {
            return "(r,m,nu)=(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(nu) +
                   "): oracle=" + std::to_string(res.min_support) + " closed=" + std::to_string(closed);
        }
        return std::nullopt;
    };
    for (int m = 1; m <= 4; ++m) {
        for (int r = 1; r <= m; ++r) {
            for (std::size_t nu = 1; nu <= binomial(m, r); ++nu) {
                if (auto e = compare(r, m, nu, oracle::kDefaultBudget)) return {false, *e};
            }
        }
    }
    for (std::size_t nu : {1, 2, 9, 10}) {
        if (auto e = compare(2, 5, nu, oracle::kDefaultBudget)) return {false, *e};
    }
    if (auto e = compare(2, 5, 3, 20'000'000)) return {false, *e};
    return {true, std::to_string(checked) + " oracle values match, incl. (2,5) nu=1,2,9,10 and nu=3 at budget 2e7"};
}

Verdict kruskal_katona() {
    std::uint64_t checked = 0;
    for (int m = 1; m <= 10; ++m) {
        for (int r = 1; r <= m; ++r) {
            if (binomial(m, r) > 10) continue;
            for (Count k = 1; k <= binomial(m, r); ++k) {
                const Count best = subsets::min_shadow_bruteforce(r, m, k, 10'000'000);
                const Count prefix = subsets::upward_shadow_size(m, subsets::antilex_prefix(r, m, k).masks());
                if (best != prefix) {
                    return {false, "(r,m,k)=(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(k) +
                                       "): min=" + std::to_string(best) + " prefix=" + std::to_string(prefix)};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " (r,m,k) cases minimal (all m <= 10 with C(m,r) <= 10)"};
}

Verdict recursion_tightness() {
    ghw::HierarchyCache cache;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::string first;
    for (int m = 1; m <= 8; ++m) {
        for (int r = 1; r <= m; ++r) {
            for (Count k = 1; k < binomial(m, r); ++k) {
                const auto bound = ghw::lower_bound_recursion(k, r, m, cache);
                const Count closed = ghw::ghw_closed(k, r, m);
                ++checked;
                if (bound.value != closed) {
                    if (mismatches++ == 0) {
                        first = "(r,m,k)=(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(k) +
                                "): recursion=" + std::to_string(bound.value) + " at (s,t)=(" + std::to_string(bound.s) +
                                "," + std::to_string(bound.t) + "), closed=" + std::to_string(closed);
                    }
                }
            }
        }
    }
    if (mismatches) return {false, std::to_string(mismatches) + "/" + std::to_string(checked) + " cases differ; first " + first};
    return {true, std::to_string(checked) + " cases tight"};
}

Verdict special_case() {
    std::uint64_t checked = 0;
    for (int m = 1; m <= 10; ++m) {
        for (int r = 1; r <= m; ++r) {
            const Count top = std::min<Count>(m - r + 1, binomial(m, r));
            for (Count k = 1; k <= top; ++k) {
                const Count s = ghw::ghw_special(k, r, m);
                if (s != ghw::ghw_closed(k, r, m)) {
                    return {false, "(r,m,k)=(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(k) + ")"};
                }
                // d_1 = 2^{m-r}, d_2 = 3*2^{m-r-1}, d_3 = 7*2^{m-r-2}.
                const Count note = ((Count{1} << k) - 1) << (m - r + 1 - k);
                if (k <= 3 && s != note) return {false, "low-k value at (r,m,k)=(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(k) + ")"};
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " cases agree"};
}

Verdict uniqueness() {
    const auto rho = verify::suite_rho_uniqueness(7);
    const auto canon = verify::suite_canonical_uniqueness(7);
    if (!rho.ok()) return {false, "rho: " + rho.first_failure.value_or("")};
    if (!canon.ok()) return {false, "canonical: " + canon.first_failure.value_or("")};
    return {true, "rho " + std::to_string(rho.passed) + " cases, canonical " + std::to_string(canon.passed) + " cases unique"};
}

Verdict fig_gap() {
    int status = 0;
    const auto lines = split_lines(run_cli("gap --r 2 --m 5 --prune --oracle-budget 1000000", status));
    if (status != 0) return {false, "gap exited with status " + std::to_string(status)};
    if (lines.empty() || lines[0] != "nu,d_rm,d_prm,gap") return {false, "missing CSV header"};
    std::size_t covered = 0;
    std::optional<std::string> strict;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i][0] == '#') continue;
        std::uint64_t nu = 0, rm = 0, prm = 0, gap = 0;
        if (std::sscanf(lines[i].c_str(), "%lu,%lu,%lu,%lu", &nu, &rm, &prm, &gap) != 4) return {false, "bad row '" + lines[i] + "'"};
        if (rm > prm || gap != prm - rm) return {false, "row violates d_RM <= d_PRM: " + lines[i]};
        if (nu == 1 && (rm != 8 || prm != 8)) return {false, "d_1 row is " + lines[i]};
        if (nu >= 2 && rm < prm && !strict) strict = lines[i];
        covered = nu;
    }
    if (covered == 0) return {false, "no nu covered"};
    const std::string truncated = lines.back().rfind("# truncated", 0) == 0 ? ", truncated beyond" : "";
    if (!strict) return {false, "no strict gap for nu in [2, " + std::to_string(covered) + "]"};
    return {true, "nu=1.." + std::to_string(covered) + " covered" + truncated + ", first strict gap (nu,d_rm,d_prm,gap)=" + *strict};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::optional<int> only;
    app.add_option("--cli", g_cli, "path to the prmghw executable")->required();
    app.add_option("--only", only, "run a single criterion");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "shortening schedule r=2 m=5", 1.0, shorten_schedule},
        {2, "GHW hierarchies for m <= 5", 1.0, known_hierarchies},
        {3, "closed = canonical = shadow, m <= 8", 30.0, triple_agreement},
        {4, "oracle equivalence", 0.0, oracle_equivalence},
        {5, "Kruskal-Katona minimality", 60.0, kruskal_katona},
        {6, "recursion tightness, m <= 8", 5.0, recursion_tightness},
        {7, "special-case formula, m <= 10", 1.0, special_case},
        {8, "rho and canonical-form uniqueness, m <= 7", 60.0, uniqueness},
        {9, "RM(2,5) vs PRM(2,4) gap", 0.0, fig_gap},
    };

    bool all = true;
    for (const auto& c : criteria) {
        if (only && *only != c.id) continue;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.pass && c.max_seconds > 0 && secs > c.max_seconds) {
            v = {false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.max_seconds) + " s"};
        }
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << secs;
        std::cout << "criterion " << c.id << " [" << c.name << "]: " << (v.pass ? "PASS" : "FAIL") << " (" << v.detail
                  << "; " << time.str() << " s)" << std::endl;
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
