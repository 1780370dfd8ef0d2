#include "cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = mgl::cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

fs::path temp_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("mockgl_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

fs::path write(const fs::path& dir, const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

std::string data_dir() {
    const char* d = std::getenv("MOCKGL_DATA");
    return d ? d : "data";
}

}  // namespace

TEST(Cli, ParseAndIndices) {
    auto r = run({"parse", "O1+O2+U1+U2+", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "mockgl/1");
    EXPECT_EQ(j["diagram"]["colorability"], "neither");
    r = run({"indices", "O1+O2+U1+U2+"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("indices.1: 1"), std::string::npos) << r.out;
}

TEST(Cli, ParseErrorExitCode) {
    EXPECT_EQ(run({"parse", "O1+U2+"}).code, 2);
    EXPECT_EQ(run({"invariants", "[[1,2],[3]]"}).code, 2);
}

TEST(Cli, NotColorableIsPrecondition) {
    const auto r = run({"invariants", "O1+O2+U1+U2+"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("not checkerboard colorable"), std::string::npos);
}

TEST(Cli, InvariantsOfMatrixFile) {
    const auto dir = temp_dir("inv");
    const auto f = write(dir, "k37.csv", "-3,-2\n0,-1\n");
    const auto r = run({"invariants", f.string(), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["alexander"]["text"], "3t^2 - 2t + 3");
    EXPECT_EQ(j["alexander_normalized"], "3t^2 - 2t + 3");
    EXPECT_EQ(j["bounds"]["crosscap_lower"], 2);
    fs::remove_all(dir);
}

TEST(Cli, OrderAndConcordance) {
    const auto dir = temp_dir("ord");
    const auto a2 = write(dir, "A2.csv", "2,1\n-1,2\n");
    auto r = run({"order", a2.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("order.order: infinite"), std::string::npos) << r.out;
    r = run({"concordance", "-5,0;0,13", "-5,0;0,13", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["concordant"], "yes");
    r = run({"concordance", "1,1,0,0;1,0,0,0;0,0,1,0;0,0,0,-1", "0,1;1,0", "--json", "--budget", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["concordant"] == "unknown" || j["concordant"] == "yes" || j["concordant"] == "no");
    fs::remove_all(dir);
}

TEST(Cli, GaussCodesGoThroughLevineMap) {
    auto r = run({"order", "O1+U2+O3+U1+O2+U3+", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["order"]["order"], "infinite");
    r = run({"concordance", "O1+U2+O3+U1+O2+U3+", "O1+U2+O3+U1+O2+U3+", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["concordant"], "yes");
    r = run({"order", "O1+U2", "--json"});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, RealizeAndBands) {
    const auto dir = temp_dir("real");
    auto r = run({"realize", "-3,-2;0,-1", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["round_trip"], true);
    const auto bands = write(dir, "bands.json", j["bands"].dump());
    r = run({"matrix", bands.string(), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["mock_seifert"]["matrix"], nlohmann::json::parse("[[-3,-2],[0,-1]]"));
    EXPECT_EQ(run({"realize", "2,4;0,2"}).code, 3);
    fs::remove_all(dir);
}

TEST(Cli, ProjectParity) {
    auto r = run({"project", "--parity", "mod2", "O1+O2+U1+U2+", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["stable"]["crossings"], 0);
    EXPECT_EQ(j["stable"]["iterations"], 1);
    EXPECT_EQ(run({"project", "--parity", "weird", "O1+U1+"}).code, 2);
}

TEST(Cli, CacheReturnsIdenticalBytes) {
    const auto dir = temp_dir("cache");
    const std::vector<std::string> args = {"invariants", "O1-U2-O3+U1-O2-U3+", "--json", "--cache", dir.string()};
    const auto cold = run(args);
    ASSERT_EQ(cold.code, 0) << cold.err;
    EXPECT_FALSE(fs::is_empty(dir));
    const auto warm = run(args);
    EXPECT_EQ(cold.out, warm.out);
    const auto table = data_dir() + "/table.txt";
    const auto b1 = run({"batch", table, "--json", "--cache", dir.string()});
    const auto b2 = run({"batch", table, "--json", "--cache", dir.string()});
    EXPECT_EQ(b1.out, b2.out);
    fs::remove_all(dir);
}

TEST(Cli, BatchParallelMatchesSequential) {
    const auto table = data_dir() + "/table.txt";
    const auto seq = run({"batch", table, "--json"});
    ASSERT_EQ(seq.code, 0) << seq.err;
    const auto par = run({"batch", table, "--json", "--jobs", "4"});
    EXPECT_EQ(seq.out, par.out);
    const auto j = nlohmann::json::parse(seq.out);
    EXPECT_GT(j["entries"].size(), 200u);
    EXPECT_TRUE(j["warnings"].empty());
}

TEST(Cli, BatchReportsMalformedLines) {
    const auto dir = temp_dir("batch");
    const auto t = write(dir, "t.txt", "# comment\nkink O1+U1+\nbad O1+U2+\nlonely\nvt O1+O2+U1+U2+\n");
    const auto r = run({"batch", t.string(), "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["entries"].size(), 2u);
    EXPECT_EQ(j["warnings"].size(), 2u);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    const auto h = run({"batch", t.string()});
    EXPECT_NE(h.out.find("warnings: 2"), std::string::npos) << h.out;
    fs::remove_all(dir);
}

TEST(Cli, UsageErrors) {
    EXPECT_NE(run({}).code, 0);
    EXPECT_NE(run({"frobnicate"}).code, 0);
    EXPECT_EQ(run({"--version"}).code, 0);
}
