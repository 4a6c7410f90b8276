#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "prmghw/cli.hpp"

using namespace prmghw;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("ghw command") {
    auto a = run({"ghw", "--r", "2", "--m", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == "8,12,14,15,19,21,22,24,25,26\n");

    CHECK(run({"ghw", "--r", "4", "--m", "5", "--k", "1"}).out == "2\n");

    auto all = run({"ghw", "--r", "2", "--m", "4", "--k", "3", "--method", "all"});
    CHECK(all.code == 0);
    CHECK(all.out == "closed=7, canonical=7, sigma=7, oracle=7, agree=true\n");

    for (const std::string method : {"closed", "canonical", "sigma", "oracle"}) {
        CAPTURE(method);
        CHECK(run({"ghw", "--r", "2", "--m", "4", "--method", method}).out == "4,6,7,9,10,11\n");
    }

    auto csv = run({"ghw", "--r", "1", "--m", "2", "--format", "csv"});
    CHECK(csv.out == "r,m,k,d,method\n1,2,1,2,closed\n1,2,2,3,closed\n");
}

TEST_CASE("ghw errors and exit codes") {
    CHECK(run({"ghw", "--r", "6", "--m", "5"}).code == 2);
    CHECK(run({"ghw", "--r", "2", "--m", "5", "--k", "11"}).code == 2);
    CHECK(run({"ghw", "--r", "2", "--m", "5", "--method", "magic"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);

    auto budget = run({"ghw", "--r", "2", "--m", "5", "--k", "3", "--method", "oracle", "--oracle-budget", "1000"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("6347715") != std::string::npos);
}

TEST_CASE("shorten command") {
    auto csv = run({"shorten", "--r", "2", "--m", "5", "--format", "csv"});
    CHECK(csv.code == 0);
    const auto rows = lines(csv.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "r,m,k,gamma,S,Gamma,n");
    CHECK(rows[4] == "2,5,7,3,\"2,3\",4,22");
    CHECK(rows[8] == "2,5,3,7,\"1,5\",12,14");

    auto pretty = run({"shorten", "--r", "2", "--m", "5"});
    CHECK(pretty.out.find("{2,3}") != std::string::npos);
    CHECK(lines(pretty.out).size() == 11);

    auto one = run({"shorten", "--r", "1", "--m", "1", "--format", "csv"});
    CHECK(one.out == "r,m,k,gamma,S,Gamma,n\n1,1,1,0,,0,1\n");
}

TEST_CASE("json output uses schema keys") {
    std::ifstream in(std::string(PRMGHW_SOURCE_DIR) + "/schemas/report.schema.json");
    REQUIRE(in.good());
    const auto schema = nlohmann::json::parse(in);
    const auto& props = schema["items"]["properties"];

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"ghw", "--r", "2", "--m", "4", "--format", "json"},
             {"ghw", "--r", "2", "--m", "4", "--method", "all", "--format", "json"},
             {"shorten", "--r", "2", "--m", "5", "--format", "json"}}) {
        auto res = run(args);
        REQUIRE(res.code == 0);
        const auto doc = nlohmann::json::parse(res.out);
        REQUIRE(doc.is_array());
        CHECK_FALSE(doc.empty());
        for (const auto& row : doc) {
            for (const auto& [key, _] : row.items()) {
                CAPTURE(key);
                CHECK(props.contains(key));
            }
        }
    }
}

TEST_CASE("genmatrix command") {
    auto a = run({"genmatrix", "--family", "PRM", "--r", "2", "--m", "4"});
    CHECK(a.code == 0);
    CHECK(lines(a.out).front() == "PRM 2 4 6 11");
    CHECK(run({"genmatrix", "--family", "PRM", "--r", "3", "--m", "3"}).out == "PRM 3 3 1 1\n1\n");

    const auto path = std::filesystem::temp_directory_path() / "prmghw_rm25.txt";
    auto b = run({"genmatrix", "--family", "RM", "--r", "2", "--m", "5", "--out", path.string()});
    CHECK(b.code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "RM 2 5 16 32");
    std::filesystem::remove(path);

    CHECK(run({"genmatrix", "--family", "PRM", "--r", "2", "--m", "4", "--out", "/nonexistent/dir/x.txt"}).code != 0);
}

TEST_CASE("verify command") {
    auto zero = run({"verify", "--max-m", "0"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "verify: 0 suites run\n");
    CHECK_FALSE(zero.err.empty());

    auto four = run({"verify", "--max-m", "4"});
    CHECK(four.code == 0);
    CHECK(four.out.find("verify: all suites passed") != std::string::npos);
    CHECK(four.out.find("FAIL ") == std::string::npos);
}

TEST_CASE("gap command") {
    auto a = run({"gap", "--r", "2", "--m", "4", "--max-nu", "2"});
    CHECK(a.code == 0);
    const auto rows = lines(a.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "nu,d_rm,d_prm,gap");
    CHECK(rows[1] == "1,4,4,0");
}
