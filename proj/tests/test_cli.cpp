#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"

using namespace arbor;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Run arbor_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string sample(const std::string& name) { return std::string(ARBOR_SAMPLES) + "/" + name; }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("arbor_cli_" + name)).string();
}

} // namespace

TEST(Cli, CheckNormalOnStarInTwoCycle) {
    auto r = arbor_run({"check-normal", "-d", sample("star_in_2cycle.json"), "-t", sample("star.tree.json")});
    EXPECT_EQ(r.code, 1);
    auto doc = r.doc();
    EXPECT_FALSE(doc["normal"]);
    EXPECT_EQ(doc["certificate"]["cycle"], json::parse("[1,2]"));
}

TEST(Cli, DfsWithPriority) {
    auto r = arbor_run({"dfs", "-d", sample("star_in_2cycle.json"), "--root", "0", "--priority", "2,1,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.doc(), json::parse(R"({"root":0,"edges":[[0,2],[2,1]]})"));
}

TEST(Cli, HorizonOnLadderReflects) {
    auto r = arbor_run({"horizon", "--family", "directed_ladder", "--depth", "20"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["verdict"], "Reflects(20)");
}

TEST(Cli, HorizonOnCombIsNegative) {
    auto r = arbor_run({"horizon", "--family", "comb_of_columns", "--depth", "10"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.doc()["verdict"], "CounterExample(10)");
    EXPECT_NE(r.out.find("psi-not-surjective"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(arbor_run({}).code, 2);
    EXPECT_EQ(arbor_run({"frobnicate"}).code, 2);
    EXPECT_EQ(arbor_run({"dfs", "--root", "0"}).code, 2);
    EXPECT_EQ(arbor_run({"dfs", "-d", sample("missing.json"), "--root", "0"}).code, 2);
    EXPECT_EQ(arbor_run({"horizon", "--family", "nope"}).code, 2);
    EXPECT_EQ(arbor_run({"ends", "--family", "symmetric_ray", "--format", "dot"}).code, 2);
    EXPECT_EQ(arbor_run({"dfs", "-d", sample("star_in_2cycle.json"), "--root", "0", "--format", "xml"}).code, 2);
    auto r = arbor_run({"check-normal", "-d", sample("star_in_2cycle.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--tree"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(arbor_run({"--help"}).code, 0); }

TEST(Cli, EmittedTreeReloadsEqual) {
    const auto path = temp_path("tree.json");
    auto r = arbor_run({"dfs", "-d", sample("one_way.json"), "--root", "0", "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    auto d = load_digraph(read_json_file(sample("one_way.json")));
    auto t = load_arborescence(read_json_file(path), d);
    EXPECT_EQ(to_json(t, d), read_json_file(path));
    // the emitted tree is accepted as a DFS tree
    EXPECT_EQ(arbor_run({"is-dfs", "-d", sample("one_way.json"), "-t", path}).code, 0);
    std::remove(path.c_str());
}

TEST(Cli, EmittedDigraphReloadsEqual) {
    const auto path = temp_path("solid.json");
    ASSERT_EQ(arbor_run({"solidify", "-d", sample("one_way.json"), "-t", sample("star.tree.json"), "--out", path}).code,
              0);
    auto doc = read_json_file(path);
    EXPECT_EQ(to_json(load_digraph(doc)), doc);
    EXPECT_EQ(doc["names"]["1"], "a");
    std::remove(path.c_str());
}

TEST(Cli, VerdictVerbsFollowExitContract) {
    const std::string one = sample("one_way.json"), two = sample("star_in_2cycle.json");
    const std::string star = sample("star.tree.json"), path = sample("path.tree.json");
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases{
        {{"check-normal", "-d", one, "-t", star}, 0},
        {{"check-normal", "-d", two, "-t", path}, 0},
        {{"order", "-d", one, "-t", star}, 0},
        {{"order", "-d", two, "-t", star}, 1},
        {{"order", "-d", one, "-t", star, "--order", "0,2,1"}, 1},
        {{"order", "-d", one, "-t", star, "--order", "0,1,2"}, 0},
        {{"is-dfs", "-d", two, "-t", star}, 1},
        {{"is-dfs", "-d", two, "-t", path}, 0},
        {{"separate", "-d", one, "-t", star, "--v", "1", "--w", "2"}, 0},
        {{"separate", "-d", sample("separation.json"), "-t", sample("separation.tree.json"), "--v", "3", "--w", "2"},
         2},
        {{"levels", "-d", one, "-t", star}, 0},
        {{"levels", "-d", two, "-t", star}, 2},
        {{"assistant", "-d", two, "-t", star}, 0},
        {{"jung", "-d", two, "--root", "0", "--targets", sample("targets_ab.json")}, 0},
        {{"jung", "-d", two, "--root", "0", "--targets", sample("targets_ab.json"), "--reverse"}, 2},
        {{"jung", "-d", sample("into_root.json"), "--root", "0", "--targets", sample("targets_ab.json"), "--reverse"}, 0},
        {{"comb", "-d", one, "--subset", "1,2", "--k", "2"}, 0},
        {{"comb", "-d", one, "--k", "4"}, 1},
        {{"ends", "--family", "directed_ladder", "--depth", "10"}, 0},
        {{"closure", "--family", "directed_ladder", "--depth", "10", "--end", "0", "--subset", "0,2,4,6,8,10,12"}, 0},
        {{"closure", "--family", "directed_ladder", "--depth", "10", "--end", "1", "--subset", "0,2,4,6,8,10,12"}, 1},
        {{"faithful", "--family", "comb_of_columns", "--depth", "15"}, 0},
        {{"necklace", "--family", "apex_necklace", "--end", "0", "--k", "4", "--depth", "10"}, 0},
        {{"witness", "--family", "directed_ladder", "--end", "0", "--separator", "0,1", "--depth", "20"}, 0},
        {{"witness", "--family", "comb_of_columns", "--end", "0", "--depth", "20"}, 2},
        {{"export-dot", "-d", one, "-t", star, "--separator", "0"}, 0},
        {{"export-dot", "--family", "comb_of_columns", "--depth", "8"}, 0},
        {{"oracle", "--count", "40"}, 0},
    };
    for (const auto& c : cases) {
        auto r = arbor_run(c.args);
        std::string line;
        for (const auto& a : c.args) line += a + " ";
        EXPECT_EQ(r.code, c.code) << line << "\n" << r.err;
        if (r.code != 2 && c.args[0] != "export-dot") {
            EXPECT_NO_THROW(json::parse(r.out)) << line;
        }
        if (r.code == 2) {
            EXPECT_FALSE(r.err.empty());
        }
    }
}

TEST(Cli, DotOutputs) {
    auto r = arbor_run(
        {"check-normal", "-d", sample("star_in_2cycle.json"), "-t", sample("star.tree.json"), "--format", "dot"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("digraph G {", 0), 0u);
    EXPECT_NE(r.out.find("style=dashed"), std::string::npos);
    EXPECT_NE(r.out.find("penwidth=2"), std::string::npos);

    auto e = arbor_run({"export-dot", "-d", sample("one_way.json"), "--separator", "0"});
    EXPECT_NE(e.out.find("peripheries=2"), std::string::npos);
}

TEST(Cli, OracleHonoursSeedVariable) {
    setenv("ARBOR_SEED", "12345", 1);
    auto r = arbor_run({"oracle", "--count", "20"});
    unsetenv("ARBOR_SEED");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.doc()["seed"], 12345);
    EXPECT_EQ(r.doc()["mismatch_count"], 0);

    setenv("ARBOR_SEED", "banana", 1);
    EXPECT_EQ(arbor_run({"oracle", "--count", "5"}).code, 2);
    unsetenv("ARBOR_SEED");
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::string> args{"horizon", "--family", "apex_necklace", "--depth", "12"};
    EXPECT_EQ(arbor_run(args).out, arbor_run(args).out);
}
