#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "zetakit/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = zetakit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval golden outputs") {
    CHECK(run({"eval", "zeta", "-1"}).out == "-1/12\n");
    CHECK(run({"eval", "zeta", "-1", "--format", "exact"}).out == "-1/12\n");
    CHECK(run({"eval", "eta", "2"}).out == "(1/12)*pi^2\n");
    CHECK(run({"eval", "beta", "1", "--format", "float"}).out == "0.785398163397448\n");
    CHECK(run({"eval", "beta", "1", "--format", "float", "--digits", "3"}).out == "0.785\n");
    CHECK(run({"eval", "zeta", "2", "--format", "both"}).out == "(1/6)*pi^2 ≈ 1.64493406684823\n");

    const auto pole = run({"eval", "zeta", "1"});
    CHECK(pole.code == 3);
    CHECK(pole.out.find("pole") != std::string::npos);
    const auto beta2 = run({"eval", "beta", "2"});
    CHECK(beta2.code == 3);
    CHECK(beta2.out.find("no-closed-form") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"eval", "gamma", "2"}).code == 2);
    CHECK(run({"eval", "zeta"}).code == 2);
    CHECK(run({"eval", "zeta", "2", "--format", "hex"}).code == 2);
    CHECK(run({"eval", "zeta", "2", "--digits", "16"}).code == 2);
    CHECK(run({"eval", "zeta", "100000"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"sum", "--poly", "u^^2", "--from", "1", "--to", "2"}).code == 2);
    CHECK(run({"table", "zeta", "--from", "3", "--to", "1"}).code == 2);
    CHECK(run({"verify", "--suite", "nosuch"}).code == 2);
    CHECK(run({"verify", "--suite", "values", "--tol", "-1"}).code == 2);
    CHECK(run({"order", "cmp", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sum") {
    const auto r = run({"sum", "--poly", "u", "--from", "1", "--to", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    CHECK(run({"sum", "--poly", "u^2", "--from", "1", "--to", "10"}).out == "385\n");
    CHECK(run({"sum", "--poly", "1", "--from", "1", "--to", "-1"}).out == "-1\n");
    CHECK(run({"sum", "--poly", "u^3 - u/2"}).code == 2);
}

TEST_CASE("json and text encode the same exact value") {
    const std::vector<std::vector<std::string>> cases = {
        {"eval", "zeta", "-1"}, {"eval", "eta", "4"}, {"eval", "beta", "5"},
        {"eval", "lambda", "-3"}, {"sum", "--poly", "u^2 + 3*u - 1/2", "--from", "5", "--to", "2"},
    };
    for (auto args : cases) {
        const auto text = run(args);
        args.push_back("--json");
        const auto structured = run(args);
        CAPTURE(args);
        REQUIRE(text.code == 0);
        REQUIRE(structured.code == 0);
        const auto j = nlohmann::json::parse(structured.out);
        CHECK(j["status"] == "ok");
        CHECK(j["exact"]["text"].get<std::string>() + "\n" == text.out);
        CHECK(!j["exact"]["terms"].empty() == (text.out != "0\n"));
    }
    const auto pole = nlohmann::json::parse(run({"eval", "zeta", "1", "--json"}).out);
    CHECK(pole["status"] == "unsupported");
    CHECK(pole["exact"].is_null());
    CHECK(pole["reason"].get<std::string>().rfind("pole", 0) == 0);

    const auto err = nlohmann::json::parse(run({"sum", "--poly", "u^^2", "--from", "1", "--to", "2", "--json"}).out);
    CHECK(err["status"] == "error");
    CHECK(err["exact"].is_null());
}

TEST_CASE("table") {
    const auto r = run({"table", "zeta", "--from", "-2", "--to", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "-2\t0\t0\n"
          "-1\t-1/12\t-0.0833333333333333\n"
          "0\t-1/2\t-0.5\n"
          "1\tunsupported (pole: zeta(1): simple pole at s = 1)\n"
          "2\t(1/6)*pi^2\t1.64493406684823\n");
    const auto j = nlohmann::json::parse(run({"table", "beta", "--from", "0", "--to", "3", "--json"}).out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 4);
    CHECK(j[2]["status"] == "unsupported");
    CHECK(j[3]["exact"]["text"] == "(1/32)*pi^3");
}

TEST_CASE("order cmp") {
    CHECK(run({"order", "cmp", "0", "1"}).out == "a ≺ b\n");
    CHECK(run({"order", "cmp", "7", "-5"}).out == "a ≺ b\n");
    CHECK(run({"order", "cmp", "-1", "-3"}).out == "b ≺ a\n");
    CHECK(run({"order", "cmp", "4", "4"}).out == "a = b\n");
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--suite", "functional-equation"});
    CHECK(r.code == 0);
    CHECK(r.out.find("40/40 passed") != std::string::npos);
    // a tolerance no float summation can meet
    const auto strict = run({"verify", "--suite", "values", "--tol", "1e-30"});
    CHECK(strict.code == 1);
    const auto j = nlohmann::json::parse(run({"verify", "--suite", "values", "--json"}).out);
    CHECK(j.size() == 20);
    for (const auto& rep : j) CHECK(rep["passed"] == true);
}
