#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "algdiag/automaton.hpp"
#include "algdiag_cli/cli.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "algdiag");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = algdiag::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ALGDIAG_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("algdiag_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(CliExtract, Catalan) {
  const Result r = cli({"extract", "--field", "Q", "--poly", "X+Y^2", "-n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\t1\n2\t1\n3\t2\n4\t5\n5\t14\n");
}

TEST(CliExtract, IdentityAndJson) {
  const Result r = cli({"extract", "--field", "F2", "--poly", "X", "-n", "4", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[\"1\",\"0\",\"0\",\"0\"]\n");
  const Result d = cli({"extract", "--field", "F2", "--poly", "X"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("256\t0\n"), std::string::npos);
}

TEST(CliExtract, HypothesisError) {
  const Result r = cli({"extract", "--field", "F2", "--poly", "Y"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("HypothesisViolated"), std::string::npos);
  EXPECT_NE(r.err.find("P'_Y(0,0)"), std::string::npos);
}

TEST(CliExtract, Check) {
  const Result r = cli({"extract", "--field", "F3", "--poly", "X+X*Y+Y^2", "-n", "40", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("agrees"), std::string::npos);
}

TEST(CliDiagonal, Examples) {
  const Result a = cli({"diagonal", "--field", "Q", "--num", "Y-2*Y^2", "--den", "1-X-Y", "-n", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "0\t0\n1\t1\n2\t1\n3\t2\n4\t5\n");
  const Result b = cli({"diagonal", "--field", "F2", "--num", "1", "--den", "(1+X)*(1+Y)", "-n", "6"});
  EXPECT_EQ(b.out, "0\t1\n1\t1\n2\t1\n3\t1\n4\t1\n5\t1\n6\t1\n");
  const Result c = cli({"diagonal", "--field", "F2", "--from-poly", "(1+X)^3*Y^2+(1+X)^2*Y+X", "-n", "7"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("num: ", 0), 0u);
  EXPECT_NE(c.out.find("\nden: "), std::string::npos);
  EXPECT_NE(c.out.find("0\t0\n1\t1\n2\t1\n3\t0\n4\t1\n5\t0\n6\t0\n7\t1\n"), std::string::npos);
  EXPECT_EQ(cli({"diagonal", "--field", "Q", "--from-poly", "Y^2+X"}).code, 2);
  EXPECT_EQ(cli({"diagonal", "--field", "Q", "--num", "1", "--den", "X"}).code, 2);
  EXPECT_EQ(cli({"diagonal", "--field", "Q"}).code, 2);
}

TEST_F(CliFiles, KernelArtifacts) {
  const Result r = cli({"kernel", "--field", "F2", "--num", "1", "--den", "1+X+Y", "--json",
                        (dir_ / "k.json").string(), "--dot", (dir_ / "k.dot").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "states: 2\ndegree bound: 1\n");
  EXPECT_NE(slurp(dir_ / "k.json").find("\"dimension\": 2"), std::string::npos);
  EXPECT_EQ(slurp(dir_ / "k.dot").rfind("digraph", 0), 0u);
  for (const auto& e : fs::directory_iterator(dir_)) EXPECT_EQ(e.path().string().find(".tmp."), std::string::npos);

  const Result d = cli({"kernel", "--field", "F2", "--num", "1", "--den", "1+X+Y", "--diagonal", "--json",
                        (dir_ / "d.json").string()});
  EXPECT_EQ(d.code, 0);
  const algdiag::Dfao a = algdiag::from_json(slurp(dir_ / "d.json"));
  EXPECT_EQ(a.size(), 2u);
  EXPECT_TRUE(algdiag::run(a, 0).is_one());
  EXPECT_TRUE(algdiag::run(a, 5).is_zero());
}

TEST(CliKernel, Errors) {
  const Result q = cli({"kernel", "--field", "Q", "--num", "1", "--den", "1+X+Y"});
  EXPECT_EQ(q.code, 2);
  EXPECT_NE(q.err.find("InfiniteField"), std::string::npos);
  const Result z = cli({"kernel", "--field", "F2", "--num", "1", "--den", "X+Y"});
  EXPECT_EQ(z.code, 2);
  EXPECT_NE(z.err.find("ZeroConstantTerm"), std::string::npos);
}

TEST(CliAnnihilate, Examples) {
  const Result tm = cli({"annihilate", "--automaton", data("thue_morse.json")});
  EXPECT_EQ(tm.code, 0);
  EXPECT_EQ(tm.out, "X*f + (1+X)*f^2 + (1+X)^4*f^4 = 0\nverified at N=256: yes\n");
  const Result zero = cli({"annihilate", "--automaton", data("zero.json")});
  EXPECT_EQ(zero.code, 0);
  EXPECT_EQ(zero.out.substr(0, zero.out.find('\n')), "f = 0");
  const Result bad = cli({"annihilate", "--automaton", data("malformed.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("$.transitions[1]"), std::string::npos);
  EXPECT_EQ(cli({"annihilate", "--automaton", data("no_such_file.json")}).code, 2);
}

TEST_F(CliFiles, RootsThueMorse) {
  const Result r = cli({"roots", "--field", "F2", "--poly", "(1+X)^3*Y^2+(1+X)^2*Y+X", "--json", dir_.string(),
                        "--dot", dir_.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("relation: X*f + (1+X)*f^2 + (1+X)^4*f^4 = 0"), std::string::npos);
  EXPECT_NE(r.out.find("branch 0: a0=0 states=2 verified=yes"), std::string::npos);
  EXPECT_NE(r.out.find("branch 1: a0=1 states=2 verified=yes"), std::string::npos);
  const algdiag::Dfao b0 = algdiag::from_json(slurp(dir_ / "branch0.json"));
  const algdiag::Dfao b1 = algdiag::from_json(slurp(dir_ / "branch1.json"));
  for (std::uint64_t n = 0; n <= 200; ++n) {
    EXPECT_EQ(algdiag::run(b0, n).code(), static_cast<std::uint64_t>(oracle::thue_morse(n)));
    EXPECT_EQ(algdiag::run(b1, n).code(), static_cast<std::uint64_t>(1 - oracle::thue_morse(n)));
  }
  EXPECT_TRUE(fs::exists(dir_ / "branch0.dot"));
}

TEST(CliRoots, FiveStateAndLinear) {
  const Result r = cli({"roots", "--field", "F2", "--poly", "Y^2+(1+X)*Y+X^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("relation: (X^2+X^3)*f + f^2 + f^4 = 0"), std::string::npos);
  EXPECT_NE(r.out.find("  0 0 1 1 0 0 1 1"), std::string::npos);
  const Result lin = cli({"roots", "--field", "F2", "--poly", "Y-X"});
  EXPECT_EQ(lin.code, 0);
  EXPECT_NE(lin.out.find("branch 0: a0=0"), std::string::npos);
  EXPECT_EQ(lin.out.find("branch 1"), std::string::npos);
}

TEST(CliRoots, ErrorsAndWarnings) {
  const Result sq = cli({"roots", "--field", "F2", "--poly", "Y^2+X"});
  EXPECT_EQ(sq.code, 2);
  EXPECT_NE(sq.err.find("NotSquarefree"), std::string::npos);
  EXPECT_EQ(cli({"roots", "--field", "F2", "--poly", "X*Y+X"}).code, 2);
  const Result w = cli({"roots", "--field", "F2", "--poly", "Y*(Y+1)^2+X", "-n", "64"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.err.find("warning:"), std::string::npos);
}

TEST(CliGen, Sequences) {
  EXPECT_EQ(cli({"gen", "--automaton", data("thue_morse.json"), "-n", "7"}).out, "0 1 1 0 1 0 0 1\n");
  EXPECT_EQ(cli({"gen", "--automaton", data("zero.json"), "-n", "4"}).out, "0 0 0 0 0\n");
  EXPECT_EQ(cli({"gen", "--automaton", data("five_state_root.json"), "-n", "7"}).out, "0 0 1 1 0 0 1 1\n");
  EXPECT_EQ(cli({"gen", "--automaton", data("malformed.json")}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"extract", "--field", "F2"}).code, 2);
  EXPECT_EQ(cli({"extract", "--field", "F2", "--poly", "X", "-n", "0"}).code, 2);
  EXPECT_EQ(cli({"extract", "--field", "F6", "--poly", "X"}).code, 2);
  EXPECT_EQ(cli({"extract", "--field", "F2", "--poly", "X+"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"roots", "--field", "F2", "--poly", "Y^2+(1+X)*Y+X^2"};
  EXPECT_EQ(cli(args).out, cli(args).out);
  const std::vector<std::string> k{"kernel", "--field", "F2", "--num", "1", "--den", "1+X+Y+X*Y^2", "--format", "dot"};
  EXPECT_EQ(cli(k).out, cli(k).out);
}

TEST(Cli, Selftest) {
  const Result r = cli({"selftest", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agree"), std::string::npos);
}

}  // namespace
