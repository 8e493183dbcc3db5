#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(KSEC_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Cli, ReproduceTable1AllPass) {
  const CliResult r = run("reproduce-table1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("name,k_or_y,computed,paper_value,abs_err,pass\n", 0), 0u);
  EXPECT_NE(r.out.find("table1,3,1.3475"), std::string::npos);
  EXPECT_NE(r.out.find("table1,5,1.400382"), std::string::npos);
  EXPECT_EQ(r.out.find("false"), std::string::npos);
}

TEST(Cli, ReproduceAppendixJson) {
  const CliResult r = run("reproduce-appendix --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"noboost_ratio\""), std::string::npos);
  EXPECT_NE(r.out.find("0.4115"), std::string::npos);
}

TEST(Cli, LpSmallK) {
  const CliResult r = run("lp --k 1 --k 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,primal,dual,scale,tau\n1,1,1,1,0\n2,0.5,0.5,1,2\n");
}

TEST(Cli, LpThousandNearLimit) {
  const CliResult r = run("lp --k 1000");
  ASSERT_EQ(r.code, 0);
  const auto line = r.out.substr(r.out.find('\n') + 1);
  const double primal = std::stod(line.substr(line.find(',') + 1));
  EXPECT_NEAR(primal, 0.2689, 0.002);
}

TEST(Cli, LpDualJsonHasCertificate) {
  const CliResult r = run("lp-dual --k 10 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"tau\": 4"), std::string::npos);
  EXPECT_NE(r.out.find("\"x\""), std::string::npos);
}

TEST(Cli, EnumerateCheckLemmas) {
  const CliResult r = run("enumerate --n 6 --B 2 --c 0.4 --check-lemmas");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("all identities exact", 0), 0u);
}

TEST(Cli, EnumerateExplicitSizesCsv) {
  const CliResult r = run("enumerate --n 3 --B 2 --c 0.34 --sizes lss");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("item,value,size,position,num,den\n", 0), 0u);
  EXPECT_NE(r.out.find(",2,1,"), std::string::npos);
}

TEST(Cli, SimulateIsPureFunctionOfFlags) {
  const auto dir = std::filesystem::temp_directory_path() / "ksec_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  const std::string args = "simulate --alg boosted --alpha 1.5 --instance BoostTightUpper --n 50 --trials 3000 --seed 9 --format json --out ";
  ASSERT_EQ(run(args + a.string()).code, 0);
  ASSERT_EQ(run(args + b.string() + " --workers 2").code, 0);
  const std::string x = read_file(a);
  EXPECT_FALSE(x.empty());
  EXPECT_EQ(x, read_file(b));
  std::filesystem::remove_all(dir);
}

TEST(Cli, SweepAlphaCsv) {
  const CliResult r = run("sweep-alpha --instance BoostTightUpper --n 100 --alpha 1.5 --alpha 1.7 --trials 500");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("alpha,trials,mean_ratio,std_error,seed\n1.5,500,", 0), 0u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("lp").code, 2);
  EXPECT_EQ(run("lp --k 0").code, 2);
  EXPECT_EQ(run("reproduce-table1 --format xml").code, 2);
  EXPECT_EQ(run("enumerate --n 12").code, 2);
  EXPECT_EQ(run("enumerate --n 3 --sizes ls").code, 2);
  EXPECT_EQ(run("simulate --alg classic --alpha 1.5 --instance I1 --n 5").code, 2);
  EXPECT_EQ(run("simulate --instance Nope").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}
