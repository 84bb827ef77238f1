#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "flipbraid_cli/cli.hpp"

namespace flipbraid {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, InvariantOfEmptyWordIsIdentity) {
    const CliRun r = run({"invariant", "--n", "2", "--word", ""});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("matrix").at("rows"), 5);
    EXPECT_EQ(j.at("matrix").at("entries").at(0).at(0), "1");
    EXPECT_EQ(j.at("matrix").at("entries").at(0).at(1), "0");
    EXPECT_FALSE(j.contains("charpoly"));
}

TEST(Cli, InvariantWithCharpolyIsDeterministic) {
    const std::vector<std::string> args{"invariant", "--n", "3", "--word", "b(1,3)", "--charpoly", "--trace"};
    const CliRun a = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j.at("charpoly").size(), 8u);
    EXPECT_EQ(j.at("charpoly").at(0), "1");
    EXPECT_TRUE(j.contains("trace"));
    EXPECT_EQ(run(args).out, a.out);
}

TEST(Cli, InvariantAtFiveStrandsIsElevenSquare) {
    const CliRun r = run({"invariant", "--n", "5", "--word", "b(1,5)"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("matrix").at("rows"), 11);
    EXPECT_EQ(j.at("matrix").at("cols"), 11);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"invariant"}).code, 2);
    EXPECT_EQ(run({"invariant", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"invariant", "--n", "3", "--word", "b(3,1)"}).code, 2);
    EXPECT_EQ(run({"invariant", "--n", "3", "--step", "1/64", "--floor", "1/2"}).code, 2);
    EXPECT_EQ(run({"invariant", "--n", "3", "--step", "abc"}).code, 2);
    EXPECT_EQ(run({"verify", "--n", "3", "--family", "braid"}).code, 2);
    EXPECT_EQ(run({"verify", "--n", "2", "--family", "pb_all"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    const CliRun bad = run({"invariant", "--n", "3", "--word", "b(3,1)"});
    EXPECT_NE(bad.err.find("i < j required"), std::string::npos) << bad.err;
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, VerifyFamilies) {
    const CliRun p = run({"verify", "--n", "3", "--family", "pentagon", "--trials", "100"});
    EXPECT_EQ(p.code, 0) << p.out;
    EXPECT_NE(p.out.find("pentagon n=3: 101/101 passed"), std::string::npos) << p.out;
    EXPECT_EQ(run({"verify", "--n", "2", "--family", "inverse", "--trials", "10"}).code, 0);
    EXPECT_EQ(run({"verify", "--n", "3", "--family", "pb_all"}).code, 0);
}

TEST(Cli, VerifyWritesReport) {
    const fs::path out = fs::temp_directory_path() / "flipbraid_cli_report.json";
    const CliRun r = run({"verify", "--n", "3", "--family", "far_comm", "--trials", "5", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(out);
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j.at("family"), "far_comm");
    EXPECT_EQ(j.at("passed"), true);
    fs::remove(out);
}

TEST(Cli, Fixtures) {
    const CliRun r = run({"fixtures", "--dir", FLIPBRAID_TEST_FIXTURE_DIR});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(run({"fixtures", "--dir", "/nonexistent"}).code, 1);
}

TEST(Cli, SimulateEmptyAndGenerator) {
    const fs::path dir = fs::temp_directory_path() / "flipbraid_cli_svg";
    fs::remove_all(dir);
    const CliRun empty = run({"simulate", "--n", "2", "--word", "", "--svg-dir", dir.string()});
    ASSERT_EQ(empty.code, 0) << empty.err;
    EXPECT_EQ(nlohmann::json::parse(empty.out), nlohmann::json::array());
    EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
    fs::remove_all(dir);

    const CliRun gen = run({"simulate", "--n", "2", "--word", "b(1,2)", "--svg-dir", dir.string()});
    ASSERT_EQ(gen.code, 0) << gen.err;
    const auto events = nlohmann::json::parse(gen.out);
    ASSERT_FALSE(events.empty());
    for (const auto& e : events) EXPECT_EQ(e.at("gamma").get<std::string>().rfind("d(", 0), 0u);
    EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}),
              static_cast<std::ptrdiff_t>(events.size() + 1));
    fs::remove_all(dir);
}

}  // namespace
}  // namespace flipbraid
