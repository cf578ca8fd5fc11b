#include "sicck/cli/cli.hpp"
#include "test_data.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sicck::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (sicck::test::fixture_dir() / name).string(); }

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    const auto r = run({"stats", "--in", fixture("snapshot.jsonl"), "--bogus"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"stats"}).code, 2);
    EXPECT_EQ(run({"stats", "--in", "/no/such/file.jsonl"}).code, 2);
    EXPECT_EQ(run({"slice", "--gold", fixture("snapshot.jsonl"), "--pred", fixture("predictions_perfect.jsonl"),
                   "--axis", "colour"})
                  .code,
              2);
}

TEST(Cli, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("regen-join-table"), std::string::npos);
    EXPECT_EQ(run({"score", "--help"}).code, 0);
}

TEST(Cli, DataErrorsExitOne) {
    const auto r = run({"parse", "--sentence", "a zebra is sitting in a field"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("zebra"), std::string::npos);
    EXPECT_EQ(run({"score", "--gold", fixture("snapshot.jsonl"), "--pred", fixture("snapshot.jsonl")}).code, 1);
    EXPECT_EQ(run({"split", "--in", fixture("snapshot.jsonl"), "--k", "1"}).code, 1);
}

TEST(Cli, AnnotateExampleTable) {
    const std::vector<std::array<const char*, 3>> rows = {
        {"an old man is sitting in a field", "a man is sitting in a field", "FE"},
        {"every old man is sitting in a field", "a man is sitting in a field", "FE"},
        {"an old man is sitting in a field", "every man is sitting in a field", "RE"},
        {"an old man is elegantly sitting in a field", "a man is elegantly sitting in a field", "FE"},
        {"an old man is sitting in every field", "a man is sitting in a field", "FE"},
        {"an old man is sitting in a field", "a man is sitting in every field", "Independence"},
    };
    for (const auto& [p, h, label] : rows) {
        const auto r = run({"annotate", "--seed", "1", "--premise", p, "--hypothesis", h});
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(r.out, std::string(label) + "\n") << p << " / " << h;
    }
}

TEST(Cli, ParseEmitsSpans) {
    const auto r = run({"parse", "--sentence", "A deer isn't jumping over the fence"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find(R"("subject":{"text":"A deer","begin":0,"end":2})"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find(R"("object_preposition":"over")"), std::string::npos) << r.out;
}

TEST(Cli, ScorePerfectPredictions) {
    const auto r = run({"score", "--gold", fixture("snapshot.jsonl"), "--pred", fixture("predictions_perfect.jsonl")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find(R"("f1": 1.0)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find(R"("accuracy": 1.0)"), std::string::npos);
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, SplitIsDeterministicAndLogsItsSeed) {
    const std::vector<std::string> args = {"split", "--in", fixture("snapshot.jsonl"), "--k", "5", "--seed", "13"};
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.err.find("seed 13"), std::string::npos);
    EXPECT_NE(run({"split", "--in", fixture("snapshot.jsonl")}).err.find("seed 13"), std::string::npos);
}

TEST(Cli, CompressTotals) {
    const auto r = run({"compress", "--in", fixture("snapshot.jsonl")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(R"("Excluded": 8)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find(R"("Contradiction": 435)"), std::string::npos);
}
