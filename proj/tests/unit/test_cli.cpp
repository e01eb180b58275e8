#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support/generators.hpp"
#include "ustar/json_io.hpp"

using namespace ustar;
using namespace ustar::testing;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ustar");
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(USTAR_FIXTURE_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("ustar_cli_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, WitnessOnObstructionFails) {
  const auto r = run({"witness", fixture("x4.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("X4"), std::string::npos);
  const auto j = run({"--json", "witness", fixture("x4.json")});
  EXPECT_EQ(j.status, 1);
  EXPECT_EQ(json::parse(j.out)["quadruple"]["kind"], "X4");
}

TEST(Cli, CheckSinglePoint) {
  EXPECT_EQ(run({"check", fixture("single_point.json")}).status, 0);
  EXPECT_EQ(run({"us", fixture("single_point.json")}).status, 0);
}

TEST(Cli, GenThenUsOnStar) {
  TempDir dir;
  const auto gen = run({"gen", fixture("star.txt")});
  ASSERT_EQ(gen.status, 0);
  const auto space_file = dir.write("space.json", gen.out);
  const auto us = run({"--json", "us", space_file});
  EXPECT_EQ(us.status, 0);
  EXPECT_EQ(json::parse(us.out)["centers"], nlohmann::json::array({"c", "x3"}));
}

TEST(Cli, GenThenUsOnRandomStars) {
  TempDir dir;
  Rng rng(81);
  for (int i = 0; i < 25; ++i) {
    const auto star = random_star(rng, 1 + rng() % 8);
    const auto tree_file = dir.write("star.txt", format_tree_text(star.to_tree()));
    const auto gen = run({"gen", tree_file});
    ASSERT_EQ(gen.status, 0);
    EXPECT_EQ(run({"us", dir.write("space.json", gen.out)}).status, 0);
  }
}

TEST(Cli, FivePointPathIsNotUs) {
  TempDir dir;
  const auto gen = run({"gen", fixture("t1.txt")});
  ASSERT_EQ(gen.status, 0);
  const auto file = dir.write("t1.json", gen.out);
  EXPECT_EQ(run({"us", file}).status, 1);
  EXPECT_EQ(run({"check", file}).status, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"check"}).status, 2);
  EXPECT_EQ(run({"check", fixture("x4.json"), "--bogus"}).status, 2);
  EXPECT_EQ(run({"check", fixture("missing.json")}).status, 2);
  EXPECT_EQ(run({"verify", "--theorem", "9.9", "--n", "4"}).status, 2);
  EXPECT_EQ(run({"enumerate", "--n", "99"}).status, 2);
  const auto r = run({"nope"});
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, InfiniteModelVerbs) {
  EXPECT_EQ(run({"compact", fixture("harmonic_star.json")}).status, 0);
  const auto constant = run({"--json", "compact", fixture("constant_star.json")});
  EXPECT_EQ(constant.status, 1);
  EXPECT_EQ(json::parse(constant.out)["reason"], "InfiniteA_eps");

  const auto ray = run({"ray", fixture("harmonic_star.json"), "--truncate", "4"});
  ASSERT_EQ(ray.status, 0);
  const auto s = json::space_from(json::parse(ray.out));
  EXPECT_EQ(s.d(0, 1), 2);
  EXPECT_EQ(s.d(2, 3), make_rational(1, 2));

  const auto complete = run({"complete", fixture("geometric_ray.json"), "--truncate", "3"});
  ASSERT_EQ(complete.status, 0);
  const auto c = json::space_from(json::parse(complete.out));
  EXPECT_EQ(c.name(0), "x0");
  EXPECT_EQ(c.d(0, 3), make_rational(1, 8));
}

TEST(Cli, WeakSimilarityAndStarDot) {
  EXPECT_EQ(run({"weaksim", fixture("x4.json"), fixture("y4.json")}).status, 1);
  EXPECT_EQ(run({"weaksim", fixture("x4.json"), fixture("x4.json")}).status, 0);
  TempDir dir;
  const auto gen = run({"gen", fixture("star.txt")});
  const auto file = dir.write("s.json", gen.out);
  const auto dot = dir.write("s.dot", "");
  EXPECT_EQ(run({"star", file, "--dot", dot}).status, 0);
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text.rfind("graph \"S\" {", 0), 0u);
  EXPECT_EQ(run({"star", fixture("x4.json")}).status, 1);
  EXPECT_EQ(run({"star", file, "--center", "x1"}).status, 2);
}

TEST(Cli, VerifyAndEnumerate) {
  EXPECT_EQ(run({"verify", "--theorem", "4.3", "--n", "5"}).status, 0);
  EXPECT_EQ(run({"verify", "--theorem", "4.6"}).status, 0);
  const auto e = run({"--json", "enumerate", "--n", "4"});
  EXPECT_EQ(e.status, 0);
  EXPECT_EQ(std::count(e.out.begin(), e.out.end(), '\n'), 6);
}

TEST(Cli, JsonOutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"--json", "check", fixture("x4.json")},
      {"--json", "us", fixture("x4.json")},
      {"--json", "witness", fixture("y4.json")},
      {"--json", "weaksim", fixture("x4.json"), fixture("y4.json")},
      {"--json", "compact", fixture("harmonic_star.json")},
      {"--json", "ray", fixture("harmonic_star.json")},
      {"--json", "complete", fixture("geometric_ray.json")},
      {"--json", "verify", "--theorem", "4.3", "--n", "5", "--jobs", "3"},
      {"--json", "enumerate", "--n", "5", "--jobs", "2"},
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.out, b.out) << cmd[1];
    EXPECT_FALSE(a.out.empty()) << cmd[1];
  }
}
