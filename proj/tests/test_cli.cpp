#include <gtest/gtest.h>

#include <sstream>

#include "cabling/cli.hpp"

using namespace cabling::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cabling");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliGolden, Interval) {
  const auto r = run({"interval", "--p", "2", "--q", "3", "--tau", "1/2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "[-3/2,-1] (T), (-3/2,-1) (T~)\n");
}

TEST(CliGolden, Torus) {
  const auto r = run({"torus", "--p", "3", "--q", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "[-inf,7] regular; (-inf,7) strong\n");
}

TEST(CliGolden, Cable) {
  const auto r = run({"cable", "--p", "5", "--q", "2", "--input", "[-inf,1]", "--mode", "regular"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "[-inf,7] (equals)\n");
}

TEST(CliJn, Examples) {
  const auto yes = run({"jn", "--J", "", "--b", "0", "--gamma", "2/3", "--tau", "1/2,-3/2"});
  EXPECT_EQ(yes.code, kOk);
  EXPECT_EQ(yes.out.rfind("true", 0), 0u);
  EXPECT_NE(yes.out.find("witness"), std::string::npos);
  EXPECT_EQ(run({"jn", "--J", "2", "--b", "0", "--gamma", "2/3", "--tau", "1/2,-3/2"}).out.rfind("false", 0), 0u);
  const auto window = run({"jn", "--J", "", "--b", "5", "--gamma", "1/2", "--tau", "1/2,1/2"});
  EXPECT_EQ(window.out, "false (b outside [1, n+r-1])\n");
}

TEST(CliJn, UnsupportedArityIsVerbatim) {
  const auto r = run({"jn", "--b", "1", "--gamma", "1/2", "--tau", "1/2"});
  EXPECT_EQ(r.code, kDomain);
  EXPECT_NE(r.err.find("n+r = 2 after reduction"), std::string::npos);
}

TEST(CliErrors, ExitCodes) {
  EXPECT_EQ(run({"interval", "--p", "2", "--q", "3", "--tau", "0.5"}).code, kUsage);
  EXPECT_EQ(run({"interval", "--p", "2", "--q", "3"}).code, kUsage);
  EXPECT_EQ(run({"nonsense"}).code, kUsage);
  EXPECT_EQ(run({"torus", "--p", "2", "--q", "3", "--format", "yaml"}).code, kUsage);
  EXPECT_EQ(run({"torus", "--p", "1", "--q", "3"}).code, kDomain);
  EXPECT_EQ(run({"bezout", "--p", "2", "--q", "4"}).code, kDomain);
  EXPECT_EQ(run({"cable", "--p", "5", "--q", "2", "--input", "[-inf,1]", "--mode", "loose"}).code, kUsage);
  EXPECT_EQ(run({"interval", "--p", "2", "--q", "3", "--tau", "1/2", "--J", "2"}).code, kUsage);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(CliOracle, PassesOnClosedForm) {
  const auto r = run({"oracle", "--p", "2", "--q", "3", "--tau", "1/2", "--max-denominator", "12"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("hull [-3/2,-1] expected [-3/2,-1]", 0), 0u);
  EXPECT_NE(r.out.find(" 0 mismatches"), std::string::npos);
}

TEST(CliOther, BezoutAndRays) {
  EXPECT_EQ(run({"bezout", "--p", "5", "--q", "3"}).out, "r=2, s=-1\n");
  EXPECT_EQ(run({"ray-union", "--p", "2", "--q", "3", "--tau", "1/4", "--direction", "geq"}).out, "(-inf,-3/4]\n");
  EXPECT_EQ(run({"ray-union", "--p", "2", "--q", "3", "--tau", "0", "--direction", "leq"}).out, "[-1,inf)\n");
  EXPECT_EQ(run({"ray-union", "--p", "2", "--q", "3", "--tau", "0", "--direction", "up"}).code, kUsage);
}

TEST(CliJson, RoundTripsAndMatchesText) {
  const std::vector<std::vector<std::string>> commands{
      {"jn", "--J", "", "--b", "0", "--gamma", "2/3", "--tau", "1/2,-3/2"},
      {"interval", "--p", "2", "--q", "3", "--tau", "1/3", "--J", ""},
      {"interval", "--p", "2", "--q", "3", "--tau", "1", "--J", "1"},
      {"ray-union", "--p", "3", "--q", "2", "--tau", "1/4", "--direction", "leq"},
      {"cable", "--p", "5", "--q", "2", "--input", "[-inf,1]", "--mode", "strong"},
      {"torus", "--p", "2", "--q", "5"},
      {"oracle", "--p", "1", "--q", "2", "--tau", "0", "--max-denominator", "8"},
      {"bezout", "--p", "7", "--q", "4"},
  };
  for (auto args : commands) {
    const auto text = run(args);
    args.push_back("--format");
    args.push_back("json");
    const auto json = run(args);
    ASSERT_EQ(json.code, kOk) << json.err;
    const CommandResult parsed = from_json(json.out);
    EXPECT_EQ(to_json(parsed) + "\n", json.out);
    EXPECT_EQ(from_json(to_json(parsed)), parsed);
    EXPECT_EQ(to_text(parsed) + "\n", text.out);
    EXPECT_EQ(parsed.command, args.front());
    EXPECT_FALSE(parsed.refs.empty());
  }
}

TEST(CliJson, ArbitraryRecordsRoundTrip) {
  CommandResult r;
  r.command = "jn";
  r.inputs = {{"b", "1"}, {"J", ""}};
  r.set = {"(0,inf]∪[-inf,-1)"};
  r.exactness = "contains";
  r.flag = false;
  r.witness = WitnessRecord{"1", "3", {"1/3", "2/3", "1/3"}};
  r.values = {{"z", "1"}, {"a", "2"}};
  r.refs = {"x"};
  EXPECT_EQ(from_json(to_json(r)), r);
}
