#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "figfig/cli.hpp"

using namespace figfig;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "figfig");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("figfig_cli_test_" + name);
}

}  // namespace

TEST_CASE("gen bfile") {
    const Result r = run({"gen", "--seq", "a", "--count", "10", "--format", "bfile"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 1\n2 3\n3 7\n4 12\n5 18\n6 26\n7 35\n8 45\n9 56\n10 69\n");
    CHECK(run({"gen", "--seq", "u", "--count", "4"}).out == "1 1\n2 2\n3 2\n4 2\n");
}

TEST_CASE("gen csv and jsonl") {
    const Result csv = run({"gen", "--seq", "triple", "--count", "2", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "n,a,b,u\n1,1,2,1\n2,3,4,2\n");
    const Result jsonl = run({"gen", "--seq", "b", "--count", "2", "--format", "jsonl"});
    CHECK(jsonl.out == "{\"n\":1,\"b\":2}\n{\"n\":2,\"b\":4}\n");
    CHECK(run({"gen", "--seq", "triple", "--count", "2"}).code == 2);
}

TEST_CASE("gen output is byte-stable") {
    const Result x = run({"gen", "--seq", "b", "--count", "5000"});
    const Result y = run({"gen", "--seq", "b", "--count", "5000"});
    CHECK(x.out == y.out);
}

TEST_CASE("gen --out") {
    const auto path = temp_file("gen.txt");
    const Result r = run({"gen", "--seq", "b", "--count", "3", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "1 2\n2 4\n3 5\n");
    std::filesystem::remove(path);
}

TEST_CASE("coeffs") {
    const Result r = run({"coeffs", "--order", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "2, -4/3, 16/15, -128/135\n");
    CHECK(run({"coeffs", "--order", "2", "--series", "a"}).out == "8/3, -32/15\n");
    const Result csv = run({"coeffs", "--order", "2", "--format", "csv"});
    CHECK(csv.out == "k,coefficient,value\n1,2,2\n2,-4/3,-1.33333333333333\n");
    const Result jsonl = run({"coeffs", "--order", "1", "--format", "jsonl"});
    CHECK(jsonl.out == "{\"k\":1,\"coefficient\":\"2\",\"value\":2}\n");
    CHECK(run({"coeffs", "--order", "65"}).code == 2);
    CHECK(run({"coeffs", "--order", "0"}).code == 2);
}

TEST_CASE("approx") {
    const Result r = run({"approx", "--seq", "u", "--order", "2", "--n", "8", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,K,series\n8,2,2.11438191683587\n2,2,0.666666666666667\n");
    CHECK(run({"approx", "--seq", "a", "--order", "1", "--n", "8"}).out == "n,K,series\n8,1,53.3333333333333\n");
}

TEST_CASE("remainder") {
    const Result r = run({"remainder", "--seq", "u", "--order", "1", "--ns", "2,8"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,K,exact,series,remainder,scaled\n2,1,2,2,0,0\n8,1,3,4,-1,-0.707106781186547\n");
    CHECK(r.err.rfind("#", 0) == 0);

    const Result dec = run({"remainder", "--seq", "u", "--order", "1", "--decades", "1:3", "--format", "jsonl"});
    CHECK(dec.code == 0);
    std::istringstream lines(dec.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.rfind("{\"n\":", 0) == 0);
        CHECK(line.find("\"scaled\":") != std::string::npos);
        ++count;
    }
    CHECK(count == 3);

    CHECK(run({"remainder", "--seq", "u", "--order", "1"}).code == 2);
    CHECK(run({"remainder", "--seq", "u", "--order", "1", "--ns", "8,2"}).code == 2);
    CHECK(run({"remainder", "--seq", "u", "--order", "1", "--decades", "3"}).code == 2);
    CHECK(run({"remainder", "--seq", "u", "--order", "1", "--ns", "2", "--decades", "1:2"}).code == 2);
}

TEST_CASE("verify") {
    const Result r = run({"verify", "--check", "all", "--upto", "10000"});
    CHECK(r.code == 0);
    CHECK(r.out == "partition [1, 10000]: PASS\nidentities [1, 10000]: PASS\nbounds [1, 10000]: PASS\n");
    CHECK(run({"verify", "--check", "bounds", "--upto", "1000000"}).code == 0);
    CHECK(run({"verify", "--check", "partition", "--upto", "1"}).code == 0);
    CHECK(run({"verify", "--check", "nope", "--upto", "10"}).code == 2);
    CHECK(run({"verify", "--upto", "0"}).code == 2);
}

TEST_CASE("compare") {
    const auto good = temp_file("good.txt");
    const auto bad = temp_file("bad.txt");
    const auto broken = temp_file("broken.txt");
    std::ofstream(good) << "# A005228\n1 1\n2 3\n3 7\n";
    std::ofstream(bad) << "1 1\n2 4\n";
    std::ofstream(broken) << "1 1\n3 7\n";

    const Result ok = run({"compare", "--seq", "a", "--bfile", good.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "compare-a [1, 3]: PASS\n");

    const Result diverge = run({"compare", "--seq", "a", "--bfile", bad.string()});
    CHECK(diverge.code == 1);
    CHECK(diverge.out.find("FAIL at n=2") != std::string::npos);

    const Result malformed = run({"compare", "--seq", "a", "--bfile", broken.string()});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("gap at index 2") != std::string::npos);

    CHECK(run({"compare", "--seq", "a", "--bfile", "/nonexistent/file"}).code == 2);
    for (const auto& p : {good, bad, broken}) std::filesystem::remove(p);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const Result r = run({"gen", "--seq", "a", "--count", "3", "--bogus"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"gen", "--seq", "z", "--count", "3"}).code == 2);
    CHECK(run({"gen", "--seq", "a", "--count", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
