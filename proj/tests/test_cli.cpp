// SPDX-License-Identifier: MIT
// End-to-end tests of the command-line tool: exit codes, reports and determinism.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(MMSPLAB_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("mmsplab_cli_" + std::to_string(getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
        ASSERT_EQ(run("fixtures --out-dir " + dir_.string()).code, 0);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const
    {
        std::ofstream os(path(name));
        os << text;
    }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, ConstructCqThenVerify)
{
    auto c = run("construct cq 2 1 3 3 --out " + path("cq.json"));
    EXPECT_EQ(c.code, 0) << c.out;
    auto v = run("verify --bundle " + path("cq.json"));
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_NE(v.out.find("verdict: true"), std::string::npos);
}

TEST_F(CliTest, ConstructQqViolatingBoundFails)
{
    auto c = run("construct qq 2 1 5 3");
    EXPECT_EQ(c.code, 1);
    EXPECT_NE(c.out.find("(n+1)/2 bound violated"), std::string::npos) << c.out;
}

TEST_F(CliTest, ConstructEaWithIsotropicDimension)
{
    auto c = run("construct ea 3 2 4 --y1 2 3 --format json");
    ASSERT_EQ(c.code, 0) << c.out;
    auto j = nlohmann::json::parse(c.out);
    EXPECT_EQ(j["bundle"]["G1"]["cols"], 2);
    EXPECT_EQ(j["bundle"]["G2"]["cols"], 2);
    EXPECT_EQ(j["bundle"]["F"]["cols"], 2);
    EXPECT_TRUE(j["ok"].get<bool>());
}

TEST_F(CliTest, RateEassTwoOneThree)
{
    auto r = run("rate eass 2 1 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rate: 2/3"), std::string::npos) << r.out;
    EXPECT_EQ(run("rate qqss 2 1 5").code, 1);
}

TEST_F(CliTest, VerifyExample1AndAugmentedRejectSide)
{
    EXPECT_EQ(run("verify --bundle " + path("example1.json")).code, 0);
    write("s13.json", R"({"n":3,"accept":[[1,2],[2,3],[1,2,3]],"reject":[[],[1],[2],[3],[1,3]]})");
    auto v = run("verify --format json --bundle " + path("example1.json") + " --structure " + path("s13.json"));
    ASSERT_EQ(v.code, 1) << v.out;
    auto j = nlohmann::json::parse(v.out);
    bool found = false;
    for (const auto& p : j["predicates"])
        if (p.contains("counterexample")) {
            EXPECT_EQ(p["counterexample"], nlohmann::json::array({1, 3}));
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST_F(CliTest, MalformedJsonIsInvalidInput)
{
    write("bad.json", "{\"class\": ");
    EXPECT_EQ(run("verify --bundle " + path("bad.json")).code, 2);
    EXPECT_EQ(run("verify --bundle " + path("missing.json")).code, 2);
    EXPECT_EQ(run("rate nonsense 2 1 3").code, 2);
    EXPECT_EQ(run("simulate --protocol eass").code, 2);
}

TEST_F(CliTest, AuditQqssOnMutatedBundleFails)
{
    auto j = nlohmann::json::parse(std::ifstream(path("example1.json")));
    j["class"] = "qq";
    std::ofstream(path("qq.json")) << j.dump();
    EXPECT_EQ(run("audit qqss --bundle " + path("qq.json")).code, 0);
    j["F"]["entries"][0][0] = (j["F"]["entries"][0][0].get<int>() + 1) % 3;
    std::ofstream(path("qqmut.json")) << j.dump();
    auto a = run("audit qqss --bundle " + path("qqmut.json"));
    EXPECT_EQ(a.code, 1);
    EXPECT_NE(a.out.find("F column-orthogonal to G1"), std::string::npos) << a.out;
}

TEST_F(CliTest, AuditExample2AsPrintedFailsAndVariantPasses)
{
    EXPECT_EQ(run("audit cqss --bundle " + path("example2.json")).code, 1);
    EXPECT_EQ(run("audit cqss --bundle " + path("example2-variant.json")).code, 0);
    EXPECT_EQ(run("audit eass --backend symplectic --bundle " + path("example1.json")).code, 0);
    EXPECT_EQ(run("audit cspir --files 2 --bundle " + path("example1.json")).code, 0);
}

TEST_F(CliTest, CrosscheckExample1Exhaustive)
{
    auto c = run("crosscheck --fixture example1");
    EXPECT_EQ(c.code, 0) << c.out;
    EXPECT_EQ(run("crosscheck --bundle " + path("example3-p3.json")).code, 0);
}

TEST_F(CliTest, SimulateIsByteIdenticalForEqualSeeds)
{
    const std::string args = "simulate --protocol eass --bundle " + path("example1.json") + " --message 1,2 --subset 2,3 --seed 7";
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    auto q = run("simulate --protocol cqspir --bundle " + path("example2-variant.json") + " --files '1,2;0,1' --k 2 --subset 1,2,3 --seed 4");
    EXPECT_EQ(q.code, 0) << q.out;
    EXPECT_NE(q.out.find("values: [0,1]"), std::string::npos);
    EXPECT_EQ(run("simulate --protocol eass --bundle " + path("example1.json") + " --message 1,2 --subset 1,3 --seed 7").code, 2);
}

TEST_F(CliTest, EnumerationBudgetExitCode)
{
    ASSERT_EQ(run("construct css 4 2 5 101 --out " + path("big.json")).code, 0);
    EXPECT_EQ(run("audit css --bundle " + path("big.json")).code, 3);
}

TEST_F(CliTest, FixturesAreEmbeddedBitExactly)
{
    auto r = run("fixtures --name example1 --format json");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    const auto& fx = j["fixtures"][0];
    EXPECT_EQ(fx["G1"]["entries"], nlohmann::json::parse("[[1,0],[1,0],[2,2],[0,1],[0,1],[0,2]]"));
    EXPECT_EQ(fx["F"]["entries"], nlohmann::json::parse("[[2,0],[1,0],[1,2],[1,0],[0,2],[1,2]]"));
    auto r2 = run("fixtures --name example2 --format json");
    auto j2 = nlohmann::json::parse(r2.out);
    EXPECT_EQ(j2["fixtures"][0]["F"]["entries"], nlohmann::json::parse("[[2,0],[1,1],[1,2],[0,0],[0,2],[0,2]]"));
}
