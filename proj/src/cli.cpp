#include "prmghw/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "prmghw/binomial.hpp"
#include "prmghw/errors.hpp"
#include "prmghw/ghw.hpp"
#include "prmghw/oracle.hpp"
#include "prmghw/prm.hpp"
#include "prmghw/report.hpp"
#include "prmghw/subsets.hpp"
#include "prmghw/verify.hpp"

namespace prmghw::cli {

namespace {

using report::ReportRow;

struct Options {
    int r = 0;
    int m = 0;
    std::optional<std::uint64_t> k;
    std::string method = "closed";
    std::string format = "pretty";
    std::string family = "PRM";
    std::string out_path;
    int max_m = 6;
    std::optional<std::uint64_t> oracle_budget;
    unsigned jobs = 0;
    std::optional<std::size_t> max_nu;
    bool prune = false;
};

oracle::OracleOptions oracle_options(const Options& o, bool prune = false) {
    oracle::OracleOptions opt;
    opt.budget = o.oracle_budget ? *o.oracle_budget : oracle::default_budget();
    opt.jobs = o.jobs;
    opt.prune = prune;
    return opt;
}

void check_params(int r, int m) {
    if (m < 1 || m > ghw::kMaxM) throw RangeError("--m must lie in [1, " + std::to_string(ghw::kMaxM) + "]");
    if (r < 1 || r > m) throw RangeError("--r must satisfy 1 <= r <= m");
}

// d_k by one named method.
class Evaluator {
public:
    Evaluator(const Options& o) : opts_(o), r_(o.r), m_(o.m), dim_(binomial(o.m, o.r)) {}

    std::uint64_t value(const std::string& method, std::uint64_t k) {
        if (method == "closed") return ghw::ghw_closed(k, r_, m_);
        if (method == "canonical") return k < dim_ ? ghw::ghw_canonical(k, r_, m_) : ghw::block_length(r_, m_);
        if (method == "sigma") {
            const auto family = subsets::antilex_prefix(r_, m_, k);
            if (m_ <= prm::kMaxBuildM) return prm::monomial_support_size(code(), family);
            return subsets::upward_shadow_size(m_, family.masks());
        }
        if (method == "oracle") return oracle::ghw_oracle(code(), k, oracle_options(opts_)).min_support;
        throw RangeError("unknown method '" + method + "'");
    }

private:
    const prm::CodeInstance& code() {
        if (!code_) code_ = prm::build_code({prm::Family::PRM, r_, m_});
        return *code_;
    }

    const Options& opts_;
    int r_;
    int m_;
    std::uint64_t dim_;
    std::optional<prm::CodeInstance> code_;
};

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void emit_rows(const std::vector<ReportRow>& rows, const std::string& format, std::ostream& out) {
    out << (format == "json" ? report::to_json(rows) : report::to_csv(rows));
}

int cmd_ghw(const Options& o, std::ostream& out) {
    check_params(o.r, o.m);
    const std::uint64_t dim = binomial(o.m, o.r);
    if (o.k && (*o.k < 1 || *o.k > dim)) throw RangeError("--k must lie in [1, C(m,r)] = [1, " + std::to_string(dim) + "]");

    std::vector<std::uint64_t> ks;
    if (o.k) {
        ks.push_back(*o.k);
    } else {
        for (std::uint64_t k = 1; k <= dim; ++k) ks.push_back(k);
    }
    Evaluator eval(o);

    if (o.method != "all") {
        std::vector<std::uint64_t> values;
        std::vector<ReportRow> rows;
        for (auto k : ks) {
            const auto d = eval.value(o.method, k);
            values.push_back(d);
            ReportRow row;
            row.add("r", static_cast<std::uint64_t>(o.r))
                .add("m", static_cast<std::uint64_t>(o.m))
                .add("k", k)
                .add("d", d)
                .add("method", o.method);
            rows.push_back(std::move(row));
        }
        if (o.format == "pretty") {
            out << join(values) << '\n';
        } else {
            emit_rows(rows, o.format, out);
        }
        return kSuccess;
    }

    static const std::vector<std::string> kMethods = {"closed", "canonical", "sigma", "oracle"};
    std::vector<ReportRow> rows;
    bool all_agree = true;
    for (auto k : ks) {
        std::vector<std::pair<std::string, std::optional<std::uint64_t>>> vals;
        for (const auto& method : kMethods) {
            try {
                vals.emplace_back(method, eval.value(method, k));
            } catch (const BudgetExceeded&) {
                vals.emplace_back(method, std::nullopt);
            } catch (const RangeError&) {
                if (method != "oracle") throw;
                vals.emplace_back(method, std::nullopt);
            }
        }
        const auto reference = vals.front().second;
        bool agree = true;
        for (const auto& [_, v] : vals) {
            if (v && v != reference) agree = false;
        }
        all_agree = all_agree && agree;

        if (o.format == "pretty") {
            if (!o.k) out << "k=" << k << ": ";
            for (const auto& [method, v] : vals) out << method << '=' << (v ? std::to_string(*v) : "skipped") << ", ";
            out << "agree=" << (agree ? "true" : "false") << '\n';
        }
        for (const auto& [method, v] : vals) {
            if (!v) continue;
            ReportRow row;
            row.add("r", static_cast<std::uint64_t>(o.r))
                .add("m", static_cast<std::uint64_t>(o.m))
                .add("k", k)
                .add("d", *v)
                .add("method", method)
                .add("agree", agree);
            rows.push_back(std::move(row));
        }
    }
    if (o.format != "pretty") emit_rows(rows, o.format, out);
    return all_agree ? kSuccess : kVerificationFailed;
}

int cmd_shorten(const Options& o, std::ostream& out) {
    check_params(o.r, o.m);
    if (o.format == "pretty") {
        out << report::shorten_pretty(o.r, o.m);
    } else {
        emit_rows(report::shorten_rows(o.r, o.m), o.format, out);
    }
    return kSuccess;
}

int cmd_genmatrix(const Options& o, std::ostream& out) {
    const auto code = prm::build_code({prm::family_from_string(o.family), o.r, o.m});
    if (o.out_path.empty()) {
        prm::write_generator(out, code);
        return kSuccess;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw InvalidInput("cannot open '" + o.out_path + "' for writing");
    prm::write_generator(file, code);
    file.flush();
    if (!file) throw InvalidInput("failed writing '" + o.out_path + "'");
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.max_m < 1) {
        err << "warning: --max-m " << o.max_m << " selects no parameters; no suites run\n";
        out << "verify: 0 suites run\n";
        return kSuccess;
    }
    if (o.max_m > prm::kMaxBuildM) throw RangeError("--max-m must be at most " + std::to_string(prm::kMaxBuildM));
    verify::VerifyOptions vo;
    vo.max_m = o.max_m;
    vo.oracle_budget = o.oracle_budget ? *o.oracle_budget : oracle::default_budget();
    vo.jobs = o.jobs;
    const auto suites = verify::run_all(vo);
    bool ok = true;
    for (const auto& s : suites) {
        out << "suite " << s.name << ": " << (s.ok() ? "PASS" : "FAIL") << " passed=" << s.passed
            << " failed=" << s.failed << " skipped=" << s.skipped << '\n';
        for (const auto& note : s.notes) out << "  note: " << note << '\n';
        if (s.first_failure) out << "  first failure: " << *s.first_failure << '\n';
        ok = ok && s.ok();
    }
    out << "verify: " << (ok ? "all suites passed" : "FAILED") << '\n';
    return ok ? kSuccess : kVerificationFailed;
}

int cmd_gap(const Options& o, std::ostream& out) {
    check_params(o.r, o.m);
    const std::size_t max_nu = o.max_nu ? *o.max_nu : binomial(o.m, o.r);
    const auto gap = oracle::rm_prm_gap(o.r, o.m, max_nu, oracle_options(o, o.prune));
    std::vector<ReportRow> rows;
    for (const auto& row : gap.rows) {
        ReportRow rr;
        rr.add("nu", static_cast<std::uint64_t>(row.nu))
            .add("d_rm", row.d_rm)
            .add("d_prm", row.d_prm)
            .add("gap", row.d_prm - row.d_rm);
        rows.push_back(std::move(rr));
    }
    if (rows.empty()) out << "nu,d_rm,d_prm,gap\n";
    out << report::to_csv(rows);
    if (gap.truncated_at) out << "# truncated at nu=" << *gap.truncated_at << ": " << gap.truncation_reason << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Hamming weights of binary projective Reed-Muller codes", "prmghw"};
    app.require_subcommand(1);
    Options o;

    auto add_rm = [&o](CLI::App* sub) {
        sub->add_option("--r", o.r, "degree r")->required();
        sub->add_option("--m", o.m, "number of variables m")->required();
    };
    const std::vector<std::string> formats = {"pretty", "csv", "json"};

    auto* ghw_cmd = app.add_subcommand("ghw", "GHW hierarchy d_1..d_C(m,r), or one d_k");
    add_rm(ghw_cmd);
    ghw_cmd->add_option("--k", o.k, "single dimension k");
    ghw_cmd->add_option("--method", o.method, "closed | canonical | sigma | oracle | all")
        ->check(CLI::IsMember({"closed", "canonical", "sigma", "oracle", "all"}));
    ghw_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
    ghw_cmd->add_option("--oracle-budget", o.oracle_budget, "max subspaces scanned per oracle call");
    ghw_cmd->add_option("--jobs", o.jobs, "oracle worker threads (0 = all cores)");

    auto* shorten_cmd = app.add_subcommand("shorten", "shortening schedule (k, gamma, S, Gamma, n)");
    add_rm(shorten_cmd);
    shorten_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* gen_cmd = app.add_subcommand("genmatrix", "export a generator matrix as text");
    gen_cmd->add_option("--family", o.family, "PRM or RM")->check(CLI::IsMember({"PRM", "RM", "prm", "rm"}));
    add_rm(gen_cmd);
    gen_cmd->add_option("--out", o.out_path, "output file (default: stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run the cross-validation suites");
    verify_cmd->add_option("--max-m", o.max_m, "largest m to check");
    verify_cmd->add_option("--oracle-budget", o.oracle_budget, "skip oracle cases above this subspace count");
    verify_cmd->add_option("--jobs", o.jobs);

    auto* gap_cmd = app.add_subcommand("gap", "oracle GHW of RM(r,m) next to PRM(r,m-1), as CSV");
    gap_cmd->add_option("--r", o.r)->default_val(2);
    gap_cmd->add_option("--m", o.m)->default_val(5);
    gap_cmd->add_option("--max-nu", o.max_nu, "largest nu (default: PRM dimension)");
    gap_cmd->add_option("--oracle-budget", o.oracle_budget);
    gap_cmd->add_flag("--prune", o.prune, "branch-and-bound scan (budget counts search nodes)");
    gap_cmd->add_option("--jobs", o.jobs);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (ghw_cmd->parsed()) return cmd_ghw(o, out);
        if (shorten_cmd->parsed()) return cmd_shorten(o, out);
        if (gen_cmd->parsed()) return cmd_genmatrix(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out, err);
        if (gap_cmd->parsed()) return cmd_gap(o, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

}  // namespace prmghw::cli
