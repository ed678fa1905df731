#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int rc;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" WARING_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, PhiOfFourthPowerOfVariableSum) {
  const CliRun r = run("phi --n 2 --m 3 '(x1+x2)^4'");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, ".10\n..0\n...\n");
}

TEST(Cli, PhiObstructionExitsTwo) {
  const CliRun r = run("phi --n 2 --m 2 'x1*x2' --format json");
  EXPECT_EQ(r.rc, 2);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["monomial"], "x1*x2");
  EXPECT_EQ(doc["divisor"], "4");
}

TEST(Cli, PhiOfZero) {
  const CliRun r = run("phi --n 2 --m 2 '0'");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, ".0\n..\n");
}

TEST(Cli, UsageAndParseErrorsExitOne) {
  EXPECT_EQ(run("phi --n 2 '2x1'").rc, 1);
  EXPECT_EQ(run("phi --n 1 'x1'").rc, 1);
  EXPECT_EQ(run("phi --n 2 --m 1 'x2'").rc, 1);
  EXPECT_EQ(run("bogus").rc, 1);
  EXPECT_EQ(run("finite-ring --q 9:3").rc, 1);
  EXPECT_EQ(run("finite-ring --q abc").rc, 1);
  EXPECT_EQ(run("certify --powersum /nonexistent/file.json").rc, 1);
}

TEST(Cli, ParseIsCanonical) {
  const CliRun r = run("parse -- '-(x2)^2 * (x1 - 3)'");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, "-x1*x2^2 + 3*x2^2\n");
}

TEST(Cli, CertifyPowerSumFile) {
  const std::string path = ::testing::TempDir() + "cli_powersum.json";
  std::ofstream(path) << R"({"n": 2, "terms": [{"sign": "+", "base": "x1 + x2"}, {"sign": "-", "base": "x3 + x4"}]})";
  const CliRun r = run("certify --powersum '" + path + "'");
  EXPECT_EQ(r.rc, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["lower_bound"], 2);
  EXPECT_EQ(doc["method"], "exact_search");
}

TEST(Cli, PowerCoefficientAgrees) {
  const CliRun r = run("power-coeff --n 2 --i 1 --j 2 '1 + x1 + x2' --format json");
  EXPECT_EQ(r.rc, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["closed_form"], "12");
  EXPECT_EQ(doc["expansion"], "12");
}

TEST(Cli, FiniteRingCsv) {
  const CliRun r = run("finite-ring --q 16 --k 4 --format csv");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, "q,k,powers,subring,v_value\n16,4,2,16,8\n");
}

TEST(Cli, OutputIsByteIdenticalAcrossThreadCounts) {
  const std::string lemma = "verify-lemma --seed 77 --trials 60 --n 2,3 --format json";
  const CliRun one = run(lemma, "WARING_THREADS=1");
  const CliRun many = run(lemma, "WARING_THREADS=4");
  EXPECT_EQ(one.rc, 0);
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(nlohmann::json::parse(one.out)["failures"], 0);

  const std::string ring = "finite-ring --q 2:80 --k 4 --format csv";
  EXPECT_EQ(run(ring, "WARING_THREADS=1").out, run(ring, "WARING_THREADS=3").out);
}
