#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fubm/cli.hpp"
#include "fubm/cumulants.hpp"
#include "support.hpp"

using namespace fubm;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "fubm");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, ZpolyText) {
  const CliRun r = run({"zpoly", "1*"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1 - y^2\n");
  EXPECT_EQ(run({"zpoly", "uu*"}).out, "1 - y^2\n");
  EXPECT_EQ(run({"zpoly", "1*", "--style", "t"}).out, "1 - exp(-t)\n");
}

TEST(Cli, ZpolyMethods) {
  const CliRun a = run({"zpoly", "11*1*", "--method", "recursive"});
  const CliRun b = run({"zpoly", "11*1*", "--method", "both"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ZpolyJsonRoundTrip) {
  const CliRun r = run({"--format", "json", "zpoly", "1*1*1"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("word"), "1*1*1");
  EXPECT_EQ(quasipoly_from_json(j.at("z")), z_mobius(parse_word("1*1*1")));
}

TEST(Cli, ZpolyGradeAndEval) {
  EXPECT_EQ(run({"zpoly", "1*1*", "--grade", "4"}).out, "-2*x - 3\n");
  const CliRun r = run({"zpoly", "1*", "--eval", "0"});
  EXPECT_EQ(r.code, kExitOk);
  PrecisionScope scope(128);
  EXPECT_LT(Real(abs(Real(r.out.substr(0, r.out.size() - 1)))), Real("1e-30"));
  const CliRun e = run({"--prec", "256", "zpoly", "1*", "--eval", "1"});
  const Real want = 1 - exp(Real(-1));
  EXPECT_LT(Real(abs(Real(e.out.substr(0, e.out.size() - 1)) - want)), Real("1e-36"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"zpoly", "1x"}).code, kExitUsage);
  EXPECT_EQ(run({"zpoly"}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"xi", "--n", "3", "--method", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"zpoly", "111111111111111"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_FALSE(run({"zpoly", "1x"}).err.empty());
}

TEST(Cli, Xi) {
  const CliRun r = run({"xi", "--n", "3", "--method", "all"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("CONSISTENT"), std::string::npos);
  EXPECT_NE(r.out.find("xi_2 = -1 + 4*exp(-t) - (2*t + 3)*exp(-2*t)"), std::string::npos);
  const CliRun j = run({"--format", "json", "xi", "--n", "2", "--method", "all"});
  EXPECT_TRUE(Json::parse(j.out).at("consistent").get<bool>());
}

TEST(Cli, Special) {
  const CliRun r = run({"special", "--k", "2", "--l", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "U = -x - 1\nV = 1\nZ = -y + (x + 1)*y^3\n");
}

TEST(Cli, ChecksPass) {
  const CliRun f = run({"fcheck", "--order", "5"});
  EXPECT_EQ(f.code, kExitOk);
  EXPECT_NE(f.out.find("OK"), std::string::npos);
  const CliRun p = run({"pde-check", "--n", "5", "--t", "0,1,3", "--z", "0.001,-0.001"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_EQ(run({"fcheck", "--order", "99"}).code, kExitUsage);
}

TEST(Cli, Haar) {
  const CliRun r = run({"haar", "--word", "1*1*1*"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "alternating: yes\nlimit: 2\nderivative: 0\n");
  EXPECT_EQ(run({"haar", "--word", "11*1*"}).out, "alternating: yes\nlimit: 0\nderivative: 2\n");
}

TEST(Cli, AlphaBeta) {
  const std::string one = write_temp("fubm_q_one.json", R"(["1", "0", "0", "0", "0", "0", "0", "0"])");
  EXPECT_EQ(run({"alpha", "--k", "3", "--q-cumulants", one}).out, "alpha_1 = 1\nalpha_2 = -1\nalpha_3 = 2\n");
  const CliRun b = run({"beta", "--k", "3", "--q-cumulants", one, "--method", "both"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_EQ(b.out, "beta_1 = 1\nbeta_2 = -1\nbeta_3 = 2\nCONSISTENT\n");
  const std::string rnd = write_temp("fubm_q_rnd.json", R"(["1/2", "-1/3", "2", "5/6", "-1"])");
  const CliRun bj = run({"--format", "json", "beta", "--k", "3", "--q-cumulants", rnd, "--method", "both"});
  EXPECT_EQ(bj.code, kExitOk);
  EXPECT_EQ(Json::parse(bj.out).at("beta").size(), 3u);
  EXPECT_EQ(run({"alpha", "--k", "4", "--q-cumulants", rnd}).code, kExitUsage);
  EXPECT_EQ(run({"alpha", "--k", "2", "--q-cumulants", "/nonexistent/q.json"}).code, kExitUsage);
  const std::string bad = write_temp("fubm_q_bad.json", "{not json");
  EXPECT_EQ(run({"alpha", "--k", "2", "--q-cumulants", bad}).code, kExitUsage);
}

TEST(Cli, NcAndNcw) {
  EXPECT_EQ(run({"nc", "--n", "4", "--count-only"}).out, "14\n");
  EXPECT_EQ(run({"nc", "--n", "2"}).out, "[[1,2]]\n[[1],[2]]\n");
  EXPECT_EQ(run({"nc", "--kreweras", "[[1,3],[2]]"}).out, "[[1,2],[3]]\n");
  EXPECT_EQ(run({"nc", "--join", "[[1,3],[2],[4]]", "[[1],[2,4],[3]]"}).out, "[[1,2,3,4]]\n");
  EXPECT_EQ(run({"nc", "--moebius", "[[1,2,3]]"}).out, "Moeb(0,p) = 2\nMoeb(p,1) = 1\n");
  EXPECT_EQ(run({"nc", "--kreweras", "[[1,3],[2,4]]"}).code, kExitUsage);
  EXPECT_EQ(run({"ncw", "--word", "1*1", "--count-only"}).out, "5\n");
  const CliRun j = run({"--format", "json", "ncw", "--word", "1*1"});
  EXPECT_EQ(Json::parse(j.out).at("partitions").size(), 5u);
}

TEST(Cli, Moments) {
  const CliRun r = run({"moments", "--n", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Q_3 = 3/2*t^2 - 3*t + 1"), std::string::npos);
  EXPECT_EQ(run({"moments", "--word", "1*1"}).out, "y\n");
  EXPECT_EQ(run({"moments"}).code, kExitUsage);
}

TEST(Cli, Verify) {
  const CliRun r = run({"verify", "--suite", "thm3.7", "--max-n", "7"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("PASS thm3.7"), std::string::npos);
  EXPECT_NE(r.out.find("seed: "), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kExitUsage);
  const CliRun j = run({"--format", "json", "verify", "--suite", "example6.9"});
  const Json v = Json::parse(j.out);
  EXPECT_TRUE(v.at("passed").get<bool>());
  EXPECT_EQ(v.at("suites").at(0).at("failures").size(), 0u);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"--format", "json", "verify", "--suite", "prop6.7-cross", "--seed", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run({"xi", "--n", "4"}).out, run({"xi", "--n", "4"}).out);
}
