#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <ppmat/cli.hpp>
#include <ppmat/serialize.hpp>

#include "printers.hpp"

using namespace ppmat;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "ppmat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    const int code = ppmat::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
    return {code, out.str(), err.str()};
}

const char* kExample32 = "[[4,4,2],[4,2,1],[2,2]]";

}  // namespace

TEST(CliMap, Phi) {
    const Outcome r = invoke({"map", "phi", "--input", kExample32, "--n", "3", "--m", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "[[0,1,0,1],[1,0,0,1],[0,2,0,0]]\n");
    const Outcome j = invoke({"map", "phi", "--input", kExample32, "--n", "3", "--m", "4", "--json"});
    EXPECT_EQ(io::nmatrix_from_json(io::parse(j.out)), NMatrix::from_rows({{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 2, 0, 0}}));
}

TEST(CliMap, InverseAndWord) {
    EXPECT_EQ(invoke({"map", "inv", "--input", R"({"rows":2,"cols":2,"data":[[0,0],[0,0]]})"}).out, "[]\n");
    EXPECT_EQ(invoke({"map", "inv", "--input", R"({"rows":3,"cols":4,"data":[[0,1,0,1],[1,0,0,1],[0,2,0,0]]})"}).out,
              std::string(kExample32) + "\n");
    EXPECT_EQ(invoke({"map", "word", "--w", "132434", "--m", "4"}).out, "[[6,5,3,1],[6,5,3],[6,5,2],[6,4]]\n");
}

TEST(CliMap, StdinAndFile) {
    EXPECT_EQ(invoke({"map", "phi", "--n", "3", "--m", "4"}, kExample32).out, "[[0,1,0,1],[1,0,0,1],[0,2,0,0]]\n");
    const std::string path = ::testing::TempDir() + "ppmat_cli_input.json";
    {
        std::ofstream f(path);
        f << kExample32;
    }
    EXPECT_EQ(invoke({"map", "phi", "--file", path, "--n", "3", "--m", "4"}).out, "[[0,1,0,1],[1,0,0,1],[0,2,0,0]]\n");
    EXPECT_EQ(invoke({"map", "phi", "--file", path, "--input", kExample32}).code, 2);
    std::remove(path.c_str());
    EXPECT_EQ(invoke({"map", "phi", "--file", "/nonexistent/ppmat.json"}).code, 2);
}

TEST(CliMap, Errors) {
    EXPECT_EQ(invoke({"map", "phi", "--input", "[[1,2]]"}).code, 2);
    EXPECT_EQ(invoke({"map", "phi", "--input", "[[1,"}).code, 2);
    const Outcome domain = invoke({"map", "phi", "--input", kExample32, "--n", "2", "--m", "4"});
    EXPECT_EQ(domain.code, 1);
    EXPECT_FALSE(domain.err.empty());
    EXPECT_EQ(invoke({"map", "sideways", "--input", "[]"}).code, 2);
}

TEST(CliStats, Examples) {
    const Outcome uh = invoke({"stats", "--input", "[[4,4,2],[4,2,2],[2,2]]", "--json"});
    ASSERT_EQ(uh.code, 0) << uh.err;
    const auto j = io::parse(uh.out);
    EXPECT_EQ(j["volume"], 22);
    EXPECT_EQ(j["uh"], 20);
    const auto ex = io::parse(invoke({"stats", "--input", kExample32, "--json"}).out);
    EXPECT_EQ(ex["corner"], 15);
    EXPECT_EQ(ex["column_counts"], io::json({1, 3, 0, 2}));
    const auto empty = io::parse(invoke({"stats", "--input", "[]", "--json"}).out);
    for (const char* key : {"volume", "trace", "des", "uh", "corner"}) EXPECT_EQ(empty[key], 0) << key;
    const Outcome text = invoke({"stats", "--input", "[]"});
    EXPECT_NE(text.out.find("volume              0"), std::string::npos) << text.out;
}

TEST(CliEnumerate, Examples) {
    EXPECT_EQ(invoke({"enumerate", "box", "2", "2", "2"}).out, "20\n");
    EXPECT_EQ(invoke({"enumerate", "box", "1", "1", "1", "--gf", "q", "--stat", "volume"}).out, "1 + q\n");
    EXPECT_EQ(invoke({"enumerate", "st", "--shape", "2,1", "--n", "3"}).out, "2\n");
    EXPECT_EQ(invoke({"enumerate", "exact", "2", "2", "2"}).out, "6\n");
    const auto j = io::parse(invoke({"enumerate", "box", "2", "2", "2", "--json"}).out);
    EXPECT_EQ(j["count"], "20");
}

TEST(CliEnumerate, Caps) {
    const Outcome r = invoke({"enumerate", "box", "6", "2", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("5"), std::string::npos) << r.err;
    EXPECT_EQ(invoke({"enumerate", "box", "6", "1", "1", "--unsafe-no-caps"}).out, "7\n");
    EXPECT_EQ(invoke({"map", "word", "--w", "12345678901", "--m", "9"}).code, 2);
}

TEST(CliDalpha, Examples) {
    EXPECT_NE(invoke({"dalpha", "--k", "3", "--n", "2", "--m", "3", "--alpha", "0,1,1"}).out.find("4"), std::string::npos);
    const auto j = io::parse(invoke({"dalpha", "--n", "2", "--m", "2", "--alpha", "1,1", "--json"}).out);
    EXPECT_EQ(j["table"][0]["count"], 4);
    EXPECT_EQ(j["params"]["k"], "inf");
}

TEST(CliGreene, Example) {
    const Outcome r = invoke({"greene", "--w", "132434", "--m", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(4,3,3,2)"), std::string::npos) << r.out;
}

TEST(CliVerify, SingleAndUnknown) {
    const Outcome r = invoke({"verify", "macmahon_box", "--k", "2", "--n", "2", "--m", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_NE(r.out.find("1 checks, 0 failed"), std::string::npos);
    EXPECT_EQ(invoke({"verify", "no_such_check"}).code, 2);
    EXPECT_EQ(invoke({"verify", "all", "--level", "medium"}).code, 2);
}

TEST(CliVerify, AllSmallIsDeterministic) {
    const Outcome a = invoke({"verify", "all", "--level", "small", "--json"});
    const Outcome b = invoke({"verify", "all", "--level", "small", "--json", "--workers", "3"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = io::parse(a.out);
    ASSERT_TRUE(j.is_array());
    for (const auto& r : j) {
        EXPECT_TRUE(r["pass"].get<bool>()) << r.dump();
        EXPECT_FALSE(r.contains("elapsed_ms"));
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"enumerate", "box", "2", "2", "x"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, OutputIsByteDeterministic) {
    const std::vector<std::string> args{"enumerate", "box", "2", "2", "2", "--gf", "q", "--stat", "uh"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
    EXPECT_EQ(invoke({"stats", "--input", kExample32}).out, invoke({"stats", "--input", kExample32}).out);
}
