#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../tools/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = hcube::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hcube-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  static void spit(const std::string& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

  fs::path dir_;
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_F(Cli, Theta) {
  const auto r = run({"theta", "--n", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "66,44,26,12,2,-4,-6\n");
  EXPECT_EQ(run({"theta", "--n", "3", "--kind", "full"}).out, "3,1,-1,-3\n");
}

TEST_F(Cli, RecursionExample) {
  const auto r = run({"recursion", "--n", "12", "--matrix", "[[4,62],[2,64]]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("S^(4) = [[-1,496],[16,479]]\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("S^(8) = [[-1,496],[16,479]]\n"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: FAIL"), std::string::npos);
}

TEST_F(Cli, EnumerateMiddleEigenvalueOfTwelve) {
  const auto r = run({"enumerate", "--n", "12", "--eig", "4", "--cond4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 30U);  // c = 32..3; c = 2 and 1 fail the recursion
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "[[34,32],[32,34]]");
  EXPECT_NE(r.out.find("[[11,55],[9,57]]\n"), std::string::npos);
  EXPECT_EQ(r.out.find("[[4,62],[2,64]]"), std::string::npos);
  EXPECT_EQ(count_lines(run({"enumerate", "--n", "12", "--eig", "4"}).out), 32U);
}

TEST_F(Cli, FilterReportsEachCondition) {
  const auto r = run({"filter", "--n", "12", "--matrix", "4,62;2,64"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("condition 3 (eigenvalue): PASS theta_4(12)=2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("condition 4 (recursion): FAIL at S^(4)"), std::string::npos);
  EXPECT_NE(r.out.find("admissible: no"), std::string::npos);
}

TEST_F(Cli, SplitFamilyThenVerifyThenTamper) {
  const auto file = path("split5.part");
  const auto r = run({"construct", "--method", "split", "--family", "n6", "--c", "5", "--out", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verified [[44,22],[42,24]]"), std::string::npos) << r.out;
  const auto good = run({"verify", "--partition", file});
  EXPECT_EQ(good.code, 0);
  EXPECT_NE(good.out.find("equitable: yes\nmatrix [[44,22],[42,24]]"), std::string::npos) << good.out;
  EXPECT_NE(good.out.find("(confirmed)"), std::string::npos);

  auto text = slurp(file);
  const auto body = text.find('\n', text.find("S=")) + 1;
  text[body + 10] = text[body + 10] == '0' ? '1' : '0';
  const auto bad_file = path("tampered.part");
  spit(bad_file, text);
  const auto bad = run({"verify", "--partition", bad_file});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("witness: vertex "), std::string::npos) << bad.out;

  const auto mismatch = run({"verify", "--partition", file, "--claimed", "[[45,21],[42,24]]"});
  EXPECT_EQ(mismatch.code, 1);
  EXPECT_NE(mismatch.out.find("MISMATCH"), std::string::npos);
}

TEST_F(Cli, MalformedFilesAreDomainErrors) {
  const auto file = path("garbage.part");
  spit(file, "n=6 kind=halved-even k=2\n0101\n");
  const auto r = run({"verify", "--partition", file});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: ParseError: ", 0), 0U) << r.err;
  spit(file, "\x01\x02\xff");
  EXPECT_EQ(run({"verify", "--partition", file}).code, 1);
  spit(path("m.json"), "{\"n\": 12, \"kind\": \"halved-even\", \"S\": [[1,2],[3]]}");
  EXPECT_EQ(run({"filter", "--matrix-file", path("m.json")}).code, 1);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"theta"}).code, 2);
  EXPECT_EQ(run({"theta", "--n", "twelve"}).code, 2);
  EXPECT_EQ(run({"construct", "--method", "magic"}).code, 2);
  EXPECT_EQ(run({"--threads", "0", "theta", "--n", "4"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("File formats:"), std::string::npos);
  EXPECT_NE(run({"search", "--help"}).out.find("--limit-nodes"), std::string::npos);
}

TEST_F(Cli, DomainErrors) {
  const auto r = run({"theta", "--n", "12", "--kind", "folded"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: ParseError: ", 0), 0U) << r.err;
  EXPECT_EQ(run({"classify", "--n", "9"}).code, 1);
  EXPECT_EQ(run({"construct", "--method", "radius4", "--catalog", "repetition:6"}).code, 1);
}

TEST_F(Cli, JsonReport) {
  const auto r = run({"--report", "-", "search", "--n", "6", "--matrix", "[[0,15],[1,14]]"});
  ASSERT_EQ(r.code, 0);
  const auto json_start = r.out.find("{\n");
  ASSERT_NE(json_start, std::string::npos);
  const auto j = nlohmann::json::parse(r.out.substr(json_start));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "search");
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_EQ(j["search"]["status"], "Found");
  EXPECT_EQ(j["search"]["graph"]["name"], "1/2H(6)");
  const auto file = path("report.json");
  EXPECT_EQ(run({"--report", file, "theta", "--n", "6"}).code, 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(file))["eigenvalues"], nlohmann::json({15, 5, -1, -3}));
}

TEST_F(Cli, RerunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"--report", "-", "search", "--n", "9", "--kind", "full", "--matrix", "[[4,5],[5,4]]"},
      {"--report", "-", "classify", "--n", "4"},
      {"--report", "-", "construct", "--method", "radius4", "--catalog", "hadamard12"},
      {"--report", "-", "enumerate", "--n", "10"},
      {"export", "--n", "4", "--matrix", "[[2,4],[4,2]]"},
      {"--threads", "3", "--report", "-", "search", "--n", "6", "--matrix", "[[3,12],[4,11]]", "--all"},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}

TEST_F(Cli, ClassifyQuarterCube) {
  const auto r = run({"classify", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "theta_1(4)=0: [[3,3],[3,3]] +\ntheta_2(4)=-2: [[2,4],[4,2]] +, [[1,5],[3,3]] -, [[0,6],[2,4]] +\n");
}

TEST_F(Cli, SearchWritesThePartition) {
  const auto file = path("h9.part");
  const auto r = run({"search", "--n", "9", "--kind", "full", "--matrix", "[[4,5],[5,4]]", "--out", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status Found"), std::string::npos);
  const auto moved = path("h10.part");
  const auto t = run({"construct", "--method", "thm2", "--input", file, "--out", moved});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("verified [[20,25],[25,20]]"), std::string::npos);
  const auto back = path("h9back.part");
  EXPECT_EQ(run({"construct", "--method", "thm2", "--inverse", "--input", moved, "--out", back}).code, 0);
  EXPECT_EQ(slurp(back).substr(slurp(back).find('\n', slurp(back).find("S="))),
            slurp(file).substr(slurp(file).find('\n', slurp(file).find("S="))));
  const auto rooted = run({"search", "--n", "6", "--matrix", "[[0,15],[1,14]]", "--root", "110000"});
  EXPECT_EQ(rooted.code, 0);
  EXPECT_NE(rooted.out.find("status Found"), std::string::npos);
}

TEST_F(Cli, ExportAndCatalog) {
  const auto file = path("inst.lp");
  const auto r = run({"export", "--n", "6", "--matrix", "[[0,15],[1,14]]", "--out", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "variables 32\nconstraints 33\n");
  EXPECT_EQ(slurp(file).rfind("\\ equitable 2-partition instance", 0), 0U);
  const auto code = run({"catalog", "hadamard12"});
  EXPECT_EQ(code.code, 0);
  EXPECT_EQ(count_lines(code.out), 25U);
  EXPECT_NE(code.err.find("covering_radius=4"), std::string::npos);
  const auto codefile = path("rep8.code");
  EXPECT_EQ(run({"catalog", "repetition", "--n", "8", "--out", codefile}).code, 0);
  const auto u = run({"construct", "--method", "union", "--code", codefile, "--translates", "00000000,00001111,00110011"});
  EXPECT_EQ(u.code, 0) << u.err;
  EXPECT_NE(u.err.find("verified [[13,15],[9,19]]"), std::string::npos) << u.err;
}

TEST_F(Cli, LinearAndCosets) {
  const auto r = run({"construct", "--method", "linear", "--n", "6", "--rows", "111111,110000,101000,100100", "--out",
                      path("lin.part")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verified [[1,14],[2,13]]"), std::string::npos);
  const auto c = run({"construct", "--method", "cosets", "--n", "6", "--generators", "111111,000011", "--t", "3",
                      "--out", path("cos.part")});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("verified [[5,10],[6,9]]"), std::string::npos);
  const auto bad = run({"construct", "--method", "linear", "--n", "6", "--rows", "111111,110000,100000"});
  EXPECT_EQ(bad.code, 1);
}
