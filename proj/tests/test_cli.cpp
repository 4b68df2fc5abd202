#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using gtl::Json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = gtl::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(GTL_DATA_DIR) + "/gauss_codes/" + name; }

}  // namespace

TEST(Cli, SchedlerJson) {
    const auto r = run({"schedler", "--genus", "2", "--word", "a1a2b1b2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_EQ(j["command"], "schedler");
    EXPECT_EQ(j["status"], "value");
    EXPECT_EQ(j["inputs"]["word"], "a1a2b1b2");
    EXPECT_EQ(j["result"]["terms"].size(), 4u);
    EXPECT_FALSE(j.contains("elapsed_ms"));
    const auto keys = std::vector<std::string>{"command", "inputs", "result", "status"};
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) EXPECT_EQ(k, keys[i++]);
}

TEST(Cli, SchedlerVanishing) {
    const auto r = run({"schedler", "--genus", "1", "--word", "a1b1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.json()["result"]["terms"].empty());
}

TEST(Cli, TimingAddsElapsed) {
    const auto r = run({"--timing", "series", "s", "--order", "5"});
    ASSERT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_TRUE(j.contains("elapsed_ms"));
    EXPECT_EQ(j["result"]["coeffs"][1], "-1/12");
    EXPECT_EQ(j["result"]["coeffs"][5], "-1/30240");
}

TEST(Cli, TextOutput) {
    const auto r = run({"--output", "text", "series", "obstruction", "--order", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("series: value\n", 0), 0u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"schedler", "--genus", "1", "--word", "a1a2"}).code, 2);
    EXPECT_EQ(run({"schedler", "--genus", "1", "--word", "c1"}).code, 2);
    EXPECT_EQ(run({"schedler", "--genus", "1"}).code, 2);
    EXPECT_EQ(run({"trace", "--genus", "1", "--word", "a1b1a1", "--y", "a1"}).code, 2);
    EXPECT_EQ(run({"verify", "nosuite"}).code, 2);
    EXPECT_EQ(run({"verify", "54trace", "--m", "2"}).code, 2);
    EXPECT_EQ(run({"--output", "xml", "series", "s"}).code, 2);
    EXPECT_EQ(run({"obstruction", "--file", data("missing_signs.json")}).code, 2);
    EXPECT_EQ(run({"obstruction", "--file", data("absent.json")}).code, 2);
    const auto r = run({"schedler", "--genus", "1", "--word", "a1a2"});
    EXPECT_NE(r.err.find("beyond genus"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("schedler"), std::string::npos);
}

TEST(Cli, VerifyFnPasses) {
    const auto r = run({"verify", "fn", "--max-n", "8"});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.json()["status"], "pass");
    EXPECT_TRUE(r.json()["result"]["passed"].get<bool>());
}

TEST(Cli, VerifyTraceExitCodes) {
    const auto stated = run({"verify", "54trace", "--genus", "2", "--m", "3"});
    EXPECT_EQ(stated.code, 1);
    EXPECT_EQ(stated.json()["status"], "fail");
    const auto corrected = run({"verify", "54trace", "--genus", "2", "--m", "3", "--normalization", "corrected"});
    EXPECT_EQ(corrected.code, 0);
    EXPECT_EQ(corrected.json()["result"]["failed"], 0);
}

TEST(Cli, RandomSeedDeterminism) {
    const std::vector<std::string> args{"verify", "54trace", "--genus", "2", "--m", "5", "--mode", "random",
                                        "--samples", "10", "--seed", "42", "--normalization", "corrected"};
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.json()["inputs"]["seed"], 42);
}

TEST(Cli, Obstruction) {
    const auto r = run({"obstruction", "--file", data("figure_eight.json"), "--order", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_EQ(j["result"]["status"], "OBSTRUCTED");
    EXPECT_EQ(j["result"]["series"]["coeffs"], (Json{"-1/1", "-2/1", "1/6", "-1/6", "3/20"}));
    const auto c = run({"obstruction", "--file", data("circle.json")});
    EXPECT_EQ(c.json()["result"]["status"], "NO_OBSTRUCTION_FOUND");
}

TEST(Cli, TraceAndBracket) {
    const auto t = run({"trace", "--genus", "2", "--word", "a1b1a2b2"});
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(t.json()["inputs"]["k"], 3);
    EXPECT_EQ(t.json()["result"]["terms"].size(), 2u);
    const auto b = run({"bracket", "--genus", "1", "--left", "a1a1", "--right", "b1b1"});
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(b.json()["result"]["components"].size(), 1u);
}

TEST(Cli, VerifyBialgebraSmall) {
    const auto r = run({"verify", "bialgebra", "--genus", "1", "--max-degree", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["result"]["axioms"].size(), 5u);
}

TEST(Cli, VerifyMuZeroAndCorpus) {
    EXPECT_EQ(run({"verify", "mu-zero", "--genus", "1", "--max-degree", "4", "--samples", "5"}).code, 0);
    EXPECT_EQ(run({"verify", "obstruction-corpus", "--max-crossings", "3", "--order", "3"}).code, 0);
}
