#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = nilcx::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const std::string& file) { return (testing::corpus_dir() / file).string(); }

nlohmann::json json_of(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    return nlohmann::json::parse(run(args).out);
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("series of the ten-dimensional example") {
    const Result r = run({"series", corpus("ex2_6.nla")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(2,6,10)"));
    const auto j = json_of({"series", corpus("ex2_6.nla")});
    CHECK(j["result"]["type"] == nlohmann::json::array({2, 6, 10}));
}

TEST_CASE("jseries text") {
    const Result r = run({"jseries", corpus("ex2_5.nla"), "--j", "J"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "weakly non-nilpotent, a_1 = span{e7,e8}"));
    const Result hat = run({"jseries", corpus("ex2_5.nla"), "--j", "Jhat"});
    CHECK(contains(hat.out, "nilpotent"));
    CHECK(run({"jseries", corpus("ex2_5.nla"), "--j", "Nope"}).code == 2);
}

TEST_CASE("obstruct exit codes") {
    const Result fil = run({"obstruct", corpus("filiform8.nla")});
    CHECK(fil.code == 1);
    CHECK(contains(fil.out, "filiform"));
    CHECK(run({"obstruct", corpus("abelian8.nla")}).code == 0);
}

TEST_CASE("check, nijenhuis and audit") {
    CHECK(run({"check", corpus("ex2_5.nla")}).code == 0);
    const auto nij = json_of({"nijenhuis", corpus("ex3_18.nla")});
    CHECK(nij["result"]["integrable"] == true);
    const auto audit = json_of({"audit", "--all", testing::corpus_dir().string()});
    CHECK(audit["exit_code"] == 0);
    for (const auto& rep : audit["reports"]) CHECK(rep["result"]["failures"] == 0);
}

TEST_CASE("quotient and product") {
    const auto q = json_of({"quotient", corpus("ex3_17.nla"), "--ideal", "7;8"});
    CHECK(q["result"]["nla"] == "dim 6\n[1,2] = 3\n[1,3] = 4\n[1,4] = 5\n[2,3] = 6\n");
    CHECK(q["result"]["type"] == nlohmann::json::array({2, 3, 4, 6}));
    CHECK(run({"quotient", corpus("ex3_17.nla"), "--ideal", "1"}).code == 1);
    CHECK(run({"quotient", corpus("ex3_17.nla")}).code == 2);

    const auto p = json_of({"product", corpus("h3.nla"), corpus("abelian4.nla")});
    CHECK(p["exit_code"] == 0);
    CHECK(run({"product", corpus("h3.nla")}).code == 2);
}

TEST_CASE("ceq and roundtrip") {
    const auto c = json_of({"ceq", corpus("family_g2dim5_i.nla")});
    CHECK(c["exit_code"] == 0);
    CHECK(c["result"]["has_02_part"] == false);
    CHECK(c["result"]["pairing"] == "4,8;3,7;2,6;1,5");
    CHECK(run({"roundtrip", "--all", testing::corpus_dir().string()}).code == 0);
}

TEST_CASE("ceq files") {
    const auto dir = std::filesystem::temp_directory_path() / "nilcx-cli-test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "g2dim5.ceq";
    std::ofstream(file) << "dim 8\ndw2 = (1) w1^4 + (-1) w1^-4\ndw4 = (i) w1^-1\n";
    CHECK(run({"realify", file.string()}).code == 0);
    CHECK(run({"roundtrip", file.string()}).code == 0);
    const auto bad = dir / "bad.ceq";
    std::ofstream(bad) << "dim 8\ndw9 = 0\n";
    const auto j = json_of({"realify", bad.string()});
    CHECK(j["exit_code"] == 2);
    CHECK(j["error"]["kind"] == "IndexOutOfRange");
    CHECK(j["error"]["line"] == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("family command") {
    const Result ok = run({"family", "G2dim5", "--set", "B=1", "--set", "M=i", "--set", "t=1"});
    CHECK(ok.code == 0);
    CHECK(run({"family", "G2dim3", "--set", "t=1"}).code == 2);
    CHECK(run({"family", "G2dim9"}).code == 2);
    CHECK(run({"family", "G2dim3", "--set", "A=1"}).code == 1);
}

TEST_CASE("input errors") {
    const auto dir = std::filesystem::temp_directory_path() / "nilcx-cli-test-err";
    std::filesystem::create_directories(dir);
    const auto file = dir / "bad.nla";
    std::ofstream(file) << "dim 3\n[1,1] = 2\n";
    const auto j = json_of({"series", file.string()});
    CHECK(j["exit_code"] == 2);
    CHECK(j["status"] == "error");
    CHECK(j["error"]["line"] == 2);
    CHECK(run({"series", (dir / "missing.nla").string()}).code == 2);
    CHECK(run({"nosuchcommand"}).code == 2);
    CHECK(run({}).code == 2);
    std::filesystem::remove_all(dir);

    const auto jac = dir / "jac.nla";
    std::filesystem::create_directories(dir);
    std::ofstream(jac) << "dim 3\n[1,2] = 3\n[1,3] = 1\n";
    CHECK(run({"check", jac.string()}).code == 1);
    CHECK(run({"series", jac.string()}).code == 1);
    std::filesystem::remove_all(dir);
}
