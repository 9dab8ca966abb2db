#include <coxl2_tool/cli.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = coxl2::tool::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0)
{
    args.push_back("--format");
    args.push_back("json");
    CliRun r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.out << r.err;
    return Json::parse(r.out);
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"growth", "--format", "yaml", "--system", "a2"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ComputationErrorsAreStructured)
{
    Json j = run_json({"growth", "--system", "no-such-group"}, 2);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["error"]["code"], "invalid_argument");
    j = run_json({"betti", "--system", "dodecahedral", "--q", "3"}, 2);
    EXPECT_EQ(j["error"]["code"], "not_computable");
}

TEST(Cli, BudgetErrorReportsProgress)
{
    Json j = run_json({"ball", "--system", "pentagon", "--max-length", "30", "--budget", "50"}, 2);
    EXPECT_EQ(j["error"]["code"], "budget_exceeded");
    EXPECT_TRUE(j["error"].contains("completed_length"));
    EXPECT_LE(j["error"]["elements_found"].get<int>(), 50);
}

TEST(Cli, ExactValuesRoundTrip)
{
    Json j = run_json({"betti", "--system", "dodecahedral", "--q", "8"});
    EXPECT_EQ(j["schema_version"], 1);
    std::string dump = j.dump();
    EXPECT_NE(dump.find("7/729"), std::string::npos);
    // re-serialising the parsed document is lossless
    EXPECT_EQ(Json::parse(dump), j);
}

TEST(Cli, InlineSystemText)
{
    Json j = run_json({"growth", "--system", "generators: s t; m s t 3"});
    EXPECT_NE(j.dump().find("t^3"), std::string::npos);
}

TEST(Cli, VerifySuitePasses)
{
    CliRun r = run({"verify", "--suite", "algebra", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, GoldenOutputs)
{
    const fs::path dir = COXL2_GOLDEN_DIR;
    const bool update = std::getenv("COXL2_UPDATE_GOLDEN") != nullptr;
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".args") continue;
        ++seen;
        std::vector<std::string> args;
        std::istringstream in(slurp(entry.path()));
        for (std::string line; std::getline(in, line);)
            if (!line.empty()) args.push_back(line);
        CliRun r = run(args);
        std::string actual = "exit " + std::to_string(r.code) + "\n" + r.out;
        fs::path expected_path = entry.path();
        expected_path.replace_extension(".out");
        if (update) {
            std::ofstream(expected_path) << actual;
            continue;
        }
        ASSERT_TRUE(fs::exists(expected_path)) << expected_path << " missing; set COXL2_UPDATE_GOLDEN=1";
        EXPECT_EQ(actual, slurp(expected_path)) << entry.path().filename();
    }
    EXPECT_GT(seen, 0);
}
