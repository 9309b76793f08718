#include "orebc/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace orebc {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, GoldenExamples) {
  CliRun r = run({"--preset", "weyl", "commutator", "x", "y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1)\n");

  r = run({"--preset", "qweyl", "--q=-1", "annihilate", "x^2", "y^2", "--coeffs", "scalars", "--max-s", "4",
           "--max-t", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "NOT FOUND (bounds s≤4 t≤4 y≤0)\n");

  r = run({"--preset", "weyl", "verify", "s^3 - t^2", "x^2", "x^3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
}

TEST(CliTest, Arithmetic) {
  EXPECT_EQ(run({"--preset", "weyl", "mul", "x", "y"}).out, "(y)*x + (1)\n");
  EXPECT_EQ(run({"--preset", "weyl", "add", "--", "x", "-x"}).out, "0\n");
  EXPECT_EQ(run({"--preset", "qweyl(2)", "mul", "x", "y"}).out, "(2*y)*x + (1)\n");
  EXPECT_EQ(run({"--preset", "weyl", "central", "x"}).out, "false\n");
  EXPECT_EQ(run({"--preset", "qweyl", "--q", "-1", "--field", "GF(5)", "central", "x^2"}).out, "true\n");
}

TEST(CliTest, Annihilate) {
  CliRun r = run({"--preset", "weyl", "annihilate", "x^2", "x^3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s^3 - t^2\n");
  r = run({"--preset", "qweyl(-1)", "annihilate", "x^2", "y^2", "--coeffs", "poly", "--max-s", "1", "--max-t", "1",
           "--max-y", "2"});
  EXPECT_EQ(r.out, "(1)*t - (y^2)\n");
}

TEST(CliTest, Centralizer) {
  CliRun r = run({"--preset", "weyl", "centralizer", "x", "--deg-x", "2", "--deg-y", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1)\n(1)*x\n(1)*x^2\n");
  r = run({"--preset", "weyl", "centralizer", "x^2", "--deg-x", "3", "--module-basis"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p_0 = (1)\np_1 = (1)*x\nrank = 2 (deg a = 2)\n");
}

TEST(CliTest, ExitCodes) {
  CliRun r = run({"--preset", "weyl", "annihilate", "x", "y"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("NotCommuting: ", 0), 0u) << r.err;
  r = run({"--preset", "weyl", "mul", "2x", "y"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
  EXPECT_EQ(run({"--preset", "weyl", "frobnicate"}).code, 2);
  EXPECT_EQ(run({"--preset", "nope", "mul", "x", "y"}).code, 2);
  EXPECT_EQ(run({"--field", "GF(4)", "mul", "x", "y"}).code, 1);
  EXPECT_EQ(run({"--preset", "weyl", "mul", "x/0", "y"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTest, ConfigFile) {
  std::string path = ::testing::TempDir() + "orebc_cli_test.conf";
  {
    std::ofstream f(path);
    f << "# power algebra\npreset = power\nsigma = y^2\ndelta = 1\n";
  }
  CliRun r = run({"--config", path, "mul", "x", "y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(y^2)*x + (1)\n");
  std::remove(path.c_str());
  EXPECT_EQ(run({"--config", "/nonexistent/orebc.conf", "mul", "x", "y"}).code, 2);
}

TEST(CliTest, Json) {
  CliRun r = run({"--preset", "weyl", "--json", "mul", "x", "y"});
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["degree"], 1);
  EXPECT_EQ(j["coeffs"][0], nlohmann::json::array({"1"}));
  EXPECT_EQ(j["coeffs"][1], nlohmann::json::array({"0", "1"}));
}

}  // namespace
}  // namespace orebc
