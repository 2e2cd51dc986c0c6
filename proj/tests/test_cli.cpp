#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result lab(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + BURNSIDE_LAB_PATH + "' " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(BURNSIDE_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, MarksDefaultsToCsv) {
  Result r = lab("marks --group " + data("c2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2,0\n1,1\n");
  Result s3 = lab("marks --group " + data("s3.json"));
  EXPECT_EQ(s3.out, "6,0,0,0\n3,1,0,0\n2,0,2,0\n1,1,1,1\n");
}

TEST(Cli, JsonFormatParses) {
  Result r = lab("marks --group " + data("c2.json") + " --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"marks\""), std::string::npos);
}

TEST(Cli, MackeyCheckExitCodes) {
  EXPECT_EQ(lab("mackey-check --group " + data("c2.json") + " --functor " + data("burnside.json")).code, 0);
  Result bad = lab("mackey-check --group " + data("c2.json") + " --functor " + data("broken_c2.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("counterexample"), std::string::npos);
  EXPECT_NE(bad.out.find("input: {"), std::string::npos);
}

TEST(Cli, InputErrorsExitWithTwo) {
  EXPECT_EQ(lab("marks --group /nonexistent.json").code, 2);
  EXPECT_EQ(lab("").code, 2);
  EXPECT_EQ(lab("horn oracle --m 3 --n 8 --k 0").code, 2);
  EXPECT_EQ(lab("horn anodyne --m 3 --s x").code, 2);
  EXPECT_EQ(lab("unfurl-check --group " + data("c2.json") + " --max-points 0").code, 2);
  EXPECT_EQ(lab("--help").code, 0);
}

TEST(Cli, HornCommands) {
  Result c = lab("horn classify --m 5 --k 3");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("N=24 E={4,5}"), std::string::npos);
  EXPECT_NE(c.out.find("N=28 E={5}"), std::string::npos);
  EXPECT_EQ(lab("horn anodyne --m 3 --s 1,2").code, 0);
  EXPECT_EQ(lab("horn anodyne --m 3 --s 3").code, 1);
}

TEST(Cli, HomologyOfClassifyingSpace) {
  Result r = lab("homology --category " + data("category_cyclic3.json") + " --max-degree 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z/3"), std::string::npos);
}

TEST(Cli, OutputIsIndependentOfJobsAndSeed) {
  const std::string classify = "horn classify --m 6 --k 2";
  const std::string unfurl = "unfurl-check --group " + data("c2.json") + " --max-points 3";
  for (const std::string& cmd : {classify, unfurl}) {
    Result base = lab(cmd + " --jobs 1");
    ASSERT_EQ(base.code, 0) << base.out;
    EXPECT_EQ(lab(cmd + " --jobs 3").out, base.out);
    EXPECT_EQ(lab(cmd + " --jobs 2", "BURNSIDE_LAB_SEED=17").out, base.out);
    EXPECT_EQ(lab(cmd + " --jobs 1", "BURNSIDE_LAB_SEED=99").out, base.out);
  }
}
