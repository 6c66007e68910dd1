#include <json.hpp>

#include "gtest/gtest.h"
#include "run_command.hpp"

namespace {

using rootspin::testing::run_command;
using nlohmann::json;

std::string cli(const std::string& args) { return std::string(ROOTSPIN_CLI) + " " + args; }

TEST(CliTest, Roots) {
  const auto g2 = run_command(cli("roots G 2"));
  EXPECT_EQ(g2.exit_code, 0);
  EXPECT_EQ(g2.out.substr(0, g2.out.find('\n')), "G 2 6 2 1");
  const auto f4 = run_command(cli("roots F 4"));
  EXPECT_EQ(f4.out.substr(0, f4.out.find('\n')), "F 4 24 4 2");
}

TEST(CliTest, InvalidInput) {
  EXPECT_EQ(run_command(cli("roots A 0")).exit_code, 2);
  EXPECT_EQ(run_command(cli("analyze D 3")).exit_code, 2);
  EXPECT_EQ(run_command(cli("analyze Q 3")).exit_code, 2);
  EXPECT_EQ(run_command(cli("count G 2 --method fast")).exit_code, 2);
  EXPECT_EQ(run_command(cli("frobnicate")).exit_code, 2);
  EXPECT_EQ(run_command(cli("")).exit_code, 2);
}

TEST(CliTest, ResourceLimits) {
  EXPECT_EQ(run_command(cli("count E 6 --method brute")).exit_code, 3);
  EXPECT_EQ(run_command(cli("oracle E 6")).exit_code, 3);
  EXPECT_EQ(run_command(cli("count E 8")).exit_code, 3);
}

TEST(CliTest, Analyze) {
  const auto e8 = run_command(cli("analyze E 8 --json"));
  ASSERT_EQ(e8.exit_code, 0);
  const json j = json::parse(e8.out);
  EXPECT_EQ(j["count"]["lower_bound"], 369600);
  EXPECT_EQ(j["method"], "certificate");
  EXPECT_EQ(j["exists"], true);

  const auto f4 = run_command(cli("analyze F 4 --json --method mitm --threads 2"));
  ASSERT_EQ(f4.exit_code, 0);
  EXPECT_EQ(json::parse(f4.out)["count"]["exact"], 34432);
}

TEST(CliTest, CountCertifyOracle) {
  const auto count = run_command(cli("count G 2"));
  ASSERT_EQ(count.exit_code, 0);
  EXPECT_EQ(json::parse(count.out)["count"]["exact"], 4);

  const auto b3 = run_command(cli("certify B 3"));
  ASSERT_EQ(b3.exit_code, 0);
  EXPECT_EQ(json::parse(b3.out)["available"], false);

  const auto g2 = run_command(cli("certify G 2"));
  ASSERT_EQ(g2.exit_code, 0);
  EXPECT_EQ(json::parse(g2.out)["witness"], "+++--+");

  const auto oracle = run_command(cli("oracle G 2"));
  ASSERT_EQ(oracle.exit_code, 0);
  EXPECT_EQ(json::parse(oracle.out)["dimension"], 4);
}

TEST(CliTest, ThreadsFromEnvironment) {
  const auto a = run_command("ROOTSPIN_THREADS=3 " + cli("count D 5"));
  const auto b = run_command(cli("count D 5 --threads 1"));
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(json::parse(a.out)["count"], json::parse(b.out)["count"]);
}

TEST(CliTest, Table) {
  const auto text = run_command(cli("table"));
  EXPECT_EQ(text.exit_code, 0);
  const auto j = run_command(cli("table --json"));
  ASSERT_EQ(j.exit_code, 0);
  EXPECT_EQ(json::parse(j.out).size(), 29u);
}

}  // namespace
