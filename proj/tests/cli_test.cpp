#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include <json.hpp>

#include "run_cli.hpp"

namespace {

using Result = fuzzyrel::testing_support::CliResult;

Result run(const std::string& args, bool merge = true, const std::string& env = "") {
    return fuzzyrel::testing_support::run_cli(args, merge, env);
}

std::string sets_file() {
    const auto path = testing::TempDir() + "fuzzyrel_cli_sets.json";
    std::ofstream(path) << R"({"universe": ["x1","x2"], "sets": {"A": {"x1":0.2,"x2":0.7}, "B": {"x1":0.5,"x2":0.5}}})";
    return path;
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(CliEval, BoundedSum) {
    const auto r = run("eval --sets " + sets_file() + " --expr 'A [+] B'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x1: 0.7\nx2: 1\n");
    const auto j = run("eval --sets " + sets_file() + " --expr 'A [+] B' --format json");
    EXPECT_EQ(j.code, 0);
    EXPECT_TRUE(has(j.out, "1.0") || has(j.out, ":1"));
}

TEST(CliEval, InputErrorsExitOne) {
    const auto empty = run("eval --sets " + sets_file() + " --expr 'A [/] O' --quotient-mode strict");
    EXPECT_EQ(empty.code, 1);
    EXPECT_TRUE(has(empty.out, "EmptyDivisor") || has(empty.out, "zero")) << empty.out;
    EXPECT_EQ(run("eval --sets " + sets_file() + " --expr C").code, 1);
    EXPECT_EQ(run("eval --sets /nonexistent.json --expr A").code, 1);
    EXPECT_EQ(run("eval --sets " + sets_file() + " --expr 'A [+'").code, 1);
}

TEST(CliCheck, AmGmHolds) {
    const auto r = run("check '0.5*(A[+]B) >= (A.*B)^0.5' --given 'a*b <= 0.25'");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "holds"));
}

TEST(CliCheck, ViolationExitsThreeWithWitness) {
    const auto r = run("check 'A <= A.*A'");
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(has(r.out, "witness a=0.05")) << r.out;
    EXPECT_EQ(run("check 'A <= A.*A' --samples 500 --seed 1").code, 3);
}

TEST(CliCheck, ParseErrorExitsOne) { EXPECT_EQ(run("check 'A >='").code, 1); }

TEST(CliCheck, UsageErrorsExitTwo) {
    EXPECT_EQ(run("check 'A <= A' --resolution 0.3").code, 2);
    EXPECT_EQ(run("check 'A <= A' --tolerance 0.5").code, 2);
    EXPECT_EQ(run("check 'A <= A' --quotient-mode lax").code, 2);
    EXPECT_EQ(run("check 'A <= A' --format yaml").code, 2);
    EXPECT_EQ(run("check").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(CliCheck, GivenFormsNormalizeIdentically) {
    const auto repeated = run("check 'A .* B <= C' --given 'a <= c' --given 'b <= 1' --format json");
    const auto joined = run("check 'A .* B <= C' --given 'a <= c, b <= 1' --format json");
    EXPECT_EQ(repeated.code, 0);
    EXPECT_EQ(repeated.out, joined.out);
}

TEST(CliTheorems, ListAndCheck) {
    const auto list = run("theorems list");
    EXPECT_EQ(list.code, 0);
    for (const char* id : {"T1", "T7", "T12", "P1", "C1a", "L1", "S6"}) EXPECT_TRUE(has(list.out, id)) << id;
    const auto cat = run("theorems list --format json", false);
    EXPECT_EQ(cat.code, 0);
    EXPECT_EQ(nlohmann::json::parse(cat.out)["groups"].size(), 16u);

    const auto t9 = run("theorems check T9");
    EXPECT_EQ(t9.code, 0) << t9.out;
    EXPECT_TRUE(has(t9.out, "r=0.1"));
    const auto t10 = run("theorems check T10 --m 3");
    EXPECT_EQ(t10.code, 0) << t10.out;
    EXPECT_TRUE(has(t10.out, "a^2 * b <= 1 / 3")) << t10.out;
    EXPECT_EQ(run("theorems check L2").code, 0);
}

TEST(CliTheorems, UnknownIdOrParameterExitsTwo) {
    EXPECT_EQ(run("theorems check T0").code, 2);
    EXPECT_EQ(run("theorems check T12 --p 1").code, 2);
    EXPECT_EQ(run("theorems check T10 --m 9").code, 2);
    EXPECT_EQ(run("hunt T0").code, 2);
}

TEST(CliTheorems, CheckAllIsDeterministicAcrossWorkers) {
    const auto one = run("theorems check-all --format json --workers 1", false);
    const auto eight = run("theorems check-all --format json --workers 8", false);
    const auto env = run("theorems check-all --format json --workers 1", false, "FUZZYREL_WORKERS=8");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(eight.code, 0);
    EXPECT_EQ(one.out, eight.out);
    EXPECT_EQ(one.out, env.out);
    const auto j = nlohmann::json::parse(one.out);
    EXPECT_EQ(j["summary"]["verdict"], "holds");
    EXPECT_EQ(j["summary"]["violated"], 0);
    EXPECT_EQ(run("theorems check-all", true, "FUZZYREL_WORKERS=many").code, 2);
}

TEST(CliHunt, DocumentedFindings) {
    const auto nec = run("hunt T2a --mode equality-necessity");
    EXPECT_EQ(nec.code, 0);
    EXPECT_TRUE(has(nec.out, "a=0.5, b=0.2, c=0.2")) << nec.out.substr(0, 400);

    const auto wit = run("hunt '(A[-]B)[+](B[-]A) == O' --mode violation");
    EXPECT_EQ(wit.code, 3);
    EXPECT_TRUE(has(wit.out, "a=0, b=0.05")) << wit.out.substr(0, 400);

    const auto none = run("hunt T7 --mode violation");
    EXPECT_EQ(none.code, 0);
    EXPECT_TRUE(has(none.out, "none found at resolution 0.05")) << none.out;

    const auto chebyshev = run("hunt T11 --mode equality-necessity");
    EXPECT_TRUE(has(chebyshev.out, "a=0, b=0, c=0, d=0")) << chebyshev.out.substr(0, 400);
}

TEST(CliOutput, RepeatRunsAreByteIdentical) {
    for (const char* args : {"check 'A [*] B <= A | B' --samples 2000 --seed 5 --format json", "hunt T3a",
                             "theorems check T4 --p 0.5 --format json"}) {
        const auto a = run(args);
        const auto b = run(args);
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_EQ(a.code, b.code) << args;
    }
}
