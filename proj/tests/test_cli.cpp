#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "detmult/cli.hpp"
#include "detmult/exactnum.hpp"
#include "json.hpp"

using namespace detmult;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "detmult");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("detmult_test_" + name);
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("single values") {
    const Run j = run({"j", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2"});
    CHECK(j.code == 0);
    CHECK(j.out == "64\n");

    const Run e = run({"eps", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2", "--format", "json"});
    CHECK(e.code == 0);
    const auto doc = nlohmann::json::parse(e.out);
    CHECK(doc["value"] == "341/16");
    CHECK(doc["quantity"] == "eps");
    CHECK(doc["simplex_count"] == 1);
    for (const char* key : {"kind", "m", "n", "t", "quantity", "value", "value_float", "engine", "simplex_count"})
        CHECK(doc.contains(key));

    const Run c = run({"fiber", "--m", "3", "--n", "4", "--t", "2", "--format", "csv"});
    CHECK(c.out == "kind,m,n,t,quantity,value\ngeneric,3,4,2,fiber,32\n");

    const Run s = run({"scroll", "3", "2"});
    CHECK(s.out == "10\n");
}

TEST_CASE("text and json agree") {
    for (const char* q : {"j", "eps", "fiber"}) {
        const Run text = run({q, "--kind", "symmetric", "--n", "3", "--t", "2"});
        const Run js = run({q, "--kind", "symmetric", "--n", "3", "--t", "2", "--format", "json"});
        REQUIRE(text.code == 0);
        const std::string v = nlohmann::json::parse(js.out)["value"];
        CHECK(Rational::parse(text.out.substr(0, text.out.size() - 1)) == Rational::parse(v));
    }
}

TEST_CASE("float rendering") {
    const Run r = run({"eps", "--m", "3", "--n", "4", "--t", "2", "--float-digits", "2"});
    CHECK(r.out == "341/16\n~ 21.31\n");
}

TEST_CASE("exit codes") {
    CHECK(run({"j", "--m", "3", "--n", "3", "--t", "0"}).code == 1);
    CHECK(run({"fiber", "--m", "3", "--n", "3", "--t", "3"}).code == 1);
    const Run zero = run({"j", "--m", "3", "--n", "3", "--t", "3"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "0\n");
    CHECK(zero.err.find("note:") != std::string::npos);
    const Run bad = run({"j", "--m", "3", "--n", "3", "--t", "2", "--frobnicate"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("Usage") != std::string::npos);
    CHECK(run({"j", "--m", "3", "--t", "2"}).code == 2);
    CHECK(run({"j", "--kind", "hermitian", "--n", "3", "--t", "2"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"series", "--m", "6", "--n", "6"}).code == 1);
}

TEST_CASE("table rows") {
    const Run one = run({"table1", "--rows", "2,3,3"});
    CHECK(one.code == 0);
    CHECK(one.out.find("j 2  eps 1/2  ok") != std::string::npos);
    const Run wrong = run({"table1", "--rows", "2,3,3", "--expect", "2,3,3,3,1/2"});
    CHECK(wrong.code == 1);
    CHECK(wrong.out.find("MISMATCH") != std::string::npos);
    CHECK(run({"table1", "--rows", "9,9,9"}).code == 2);
    const Run js = run({"table1", "--rows", "2,3,4", "--rows", "3,4,5", "--format", "json", "--jobs", "2"});
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc.size() == 2);
    CHECK(doc[1]["j"] == "2853");
}

TEST_CASE("oracle, selberg and series") {
    const Run o = run({"oracle", "--m", "2", "--n", "2", "--t", "1", "--s-list", "10,20", "--format", "json"});
    REQUIRE(o.code == 0);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["samples"][0]["count"] == "286");
    CHECK(doc["samples"][1]["count"] == "1771");
    CHECK(run({"oracle", "--m", "2", "--n", "2", "--t", "1"}).code == 2);

    const Run s = run({"selberg", "--m", "2", "--n", "2"});
    CHECK(s.code == 0);
    CHECK(s.out == "lhs 1/12\nrhs 1/12\nequal\n");

    CHECK(run({"series", "--m", "3", "--n", "4"}).out == "64\n");
}

TEST_CASE("cache") {
    const auto path = temp_file("cache.jsonl");
    const std::vector<std::string> base{"j", "--m", "3", "--n", "4", "--t", "2", "--cache", path.string()};
    CHECK(run(base).out == "64\n");
    {
        std::ifstream in(path);
        std::string line;
        std::getline(in, line);
        CHECK(nlohmann::json::parse(line)["value"] == "64");
    }
    {
        std::ofstream app(path, std::ios::app);
        app << "{not json\n";
    }
    auto with_format = base;
    with_format.insert(with_format.end(), {"--format", "json"});
    const Run cached = run(with_format);
    CHECK(cached.code == 0);
    CHECK(nlohmann::json::parse(cached.out)["engine"] == "cache");
    CHECK(cached.err.find("warning") != std::string::npos);

    // a tampered record is caught by --verify-cache
    const auto bad = temp_file("bad.jsonl");
    {
        std::ofstream f(bad);
        f << R"({"kind":"generic","m":3,"n":4,"t":2,"quantity":"j","value":"65","engine":"x","timestamp":"","version":""})" << '\n';
    }
    CHECK(run({"j", "--m", "3", "--n", "4", "--t", "2", "--cache", bad.string()}).out == "65\n");
    CHECK(run({"j", "--m", "3", "--n", "4", "--t", "2", "--cache", bad.string(), "--verify-cache"}).code == 1);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("integrate") {
    const auto in = temp_file("poly.json");
    {
        std::ofstream f(in);
        f << R"({"dim":1,"inequalities":[["-1","0"],["1","1/2"]],"polynomial":[["1",[0]],["-4",[1]],["4",[2]]]})";
    }
    const auto tri = temp_file("tri.json");
    const Run r = run({"integrate", in.string(), "--engine", "both", "--dump-triangulation", tri.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "1/6\n");
    CHECK(std::filesystem::exists(tri));

    std::ofstream(in) << "{\"dim\":1}";
    CHECK(run({"integrate", in.string()}).code == 1);
    CHECK(run({"integrate", "/nonexistent/file.json"}).code == 1);
    std::filesystem::remove(in);
    std::filesystem::remove(tri);
}
