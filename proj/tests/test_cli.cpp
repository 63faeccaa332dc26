#include "twistkit/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace twistkit;

namespace {

int run_tool(const std::string& args) {
    std::string cmd = std::string(TWISTKIT_BIN) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST(Report, EmptySuite) {
    VerificationReport r;
    r.suite = "empty";
    auto j = report_json(r);
    EXPECT_TRUE(j["checks"].is_array());
    EXPECT_TRUE(j["checks"].empty());
    EXPECT_EQ(j["engine_version"], kEngineVersion);
    EXPECT_TRUE(r.all_pass());
}

TEST(Report, KeyOrderAndSorting) {
    VerificationReport r;
    r.add("b", "anchor", true, "0");
    r.add("a", "anchor", false, "nonzero");
    auto j = report_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"suite", "config", "checks", "engine_version"}));
    EXPECT_EQ(j["checks"][0]["check_id"], "a");
    EXPECT_EQ(j["checks"][1]["status"], "pass");
    EXPECT_EQ(j["checks"][1]["residual"], "0");
    EXPECT_FALSE(r.all_pass());
}

TEST(Report, MisprintCarriesBothForms) {
    SuiteConfig cfg;
    cfg.suite = "closed-forms";
    VerificationReport r = run_suite(cfg);
    auto j = report_json(r);
    bool seen = false;
    for (const auto& c : j["checks"]) {
        if (c["status"] != "documented-misprint") continue;
        seen = true;
        EXPECT_FALSE(c["printed_form"].get<std::string>().empty());
        EXPECT_FALSE(c["derived_form"].get<std::string>().empty());
    }
    EXPECT_TRUE(seen);
    const Check* e = r.find("qj-bor/delta-E");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->status, "documented-misprint");
    EXPECT_TRUE(r.all_pass());
}

TEST(RunSuite, RejectsBadConfig) {
    SuiteConfig cfg;
    cfg.suite = "nope";
    EXPECT_THROW(run_suite(cfg), ConfigError);
    cfg.suite = "affine";
    cfg.q = Rational(2);
    EXPECT_THROW(run_suite(cfg), ConfigError);  // p = sqrt(2) is not rational
    cfg.suite = "qybe";
    cfg.q.reset();
    cfg.z = {Rational(1, 2), Rational(1, 2), Rational(1, 5)};
    EXPECT_THROW(run_suite(cfg), ConfigError);
    cfg.suite = "hopf";
    cfg.order = 0;
    EXPECT_THROW(run_suite(cfg), ConfigError);
}

TEST(RunSuite, QybeSinglePoint) {
    SuiteConfig cfg;
    cfg.suite = "qybe";
    cfg.q = Rational(2);
    cfg.xi = Rational(1);
    cfg.z = {Rational(1, 2), Rational(1, 3), Rational(1, 5)};
    VerificationReport r = run_suite(cfg);
    const Check* c = r.find("qybe/drm[q=2,xi=1]");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, "pass");
    EXPECT_EQ(c->residual, "0");
}

TEST(RunSuite, LimitsIncludesTrivialTwistCorner) {
    SuiteConfig cfg;
    cfg.suite = "limits";
    VerificationReport r = run_suite(cfg);
    ASSERT_NE(r.find("limits/F_qJ-xi-zero"), nullptr);
    EXPECT_EQ(r.find("limits/F_qJ-xi-zero")->status, "pass");
    EXPECT_TRUE(r.all_pass());
}

TEST(Tool, ExitCodes) {
    EXPECT_EQ(run_tool("twist-axioms"), 0);
    EXPECT_EQ(run_tool("unknown-suite"), 2);
    EXPECT_EQ(run_tool("affine --q 3"), 2);
    EXPECT_EQ(run_tool("qybe --q abc"), 2);
    EXPECT_EQ(run_tool("hopf --format xml"), 2);
}

TEST(Tool, DeterministicJson) {
    const std::string a = ::testing::TempDir() + "tk_a.json", b = ::testing::TempDir() + "tk_b.json";
    ASSERT_EQ(run_tool("rmatrix --format json --out " + a), 0);
    ASSERT_EQ(run_tool("rmatrix --format json --out " + b), 0);
    std::string sa = slurp(a);
    EXPECT_FALSE(sa.empty());
    EXPECT_EQ(sa, slurp(b));
    auto j = nlohmann::ordered_json::parse(sa);
    EXPECT_EQ(j["suite"], "rmatrix");
    EXPECT_EQ(j["config"]["order"], "4");
}
