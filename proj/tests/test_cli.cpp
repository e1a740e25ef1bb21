#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with `args`; stderr is discarded unless redirected in args.
Run cli(const std::string& args) {
  const std::string cmd = std::string(PGENUM_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int rc = pclose(p);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::size_t count_lines(const std::string& s, const std::string& needle = "") {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string l; std::getline(in, l);) n += l.find(needle) != std::string::npos;
  return n;
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("pgenum_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, CountOrderFive) {
  const auto r = cli("count --order 5 -q");
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "order 5");
  std::getline(in, line);  // header
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  auto fields = [](const std::string& l) {
    std::istringstream s(l);
    std::vector<std::string> v;
    for (std::string w; s >> w;) v.push_back(w);
    return v;
  };
  EXPECT_EQ(fields(rows[0]), (std::vector<std::string>{"0", "1", "1", "1", "3"}));
  EXPECT_EQ(fields(rows[1]), (std::vector<std::string>{"1", "1", "4", "1", "6"}));
  EXPECT_EQ(fields(rows[2]), (std::vector<std::string>{"2", "1", "5", "1", "1", "8"}));
  EXPECT_EQ(fields(rows[3]).back(), "17");
}

TEST(Cli, CountIndecomposable) {
  const auto r = cli("count --order 6 --indecomposable --threads 2 -q");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("order 6 (indecomposable)"), std::string::npos);
  // 1 + 2 + 6 + 16 + 1 + 1 + 12 + 16 + 1 + 1
  EXPECT_NE(r.out.find(" 57\n"), std::string::npos) << r.out;
}

TEST(Cli, Catalog) {
  const auto r = cli("catalog");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  for (const char* name : {"BC2", "sk2(BV4)", "BP2", "BC5", "BP4"}) {
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  }
  EXPECT_EQ(count_lines(r.out, "maximal subgroups:"), 14u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("count").status, 2);
  EXPECT_EQ(cli("count --order 0").status, 2);
  EXPECT_EQ(cli("count --order five").status, 2);
  EXPECT_EQ(cli("enumerate --order 5 --max-dim 9").status, 2);
  EXPECT_EQ(cli("verify --in x --expect nothing").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, EnumerateThenVerify) {
  const auto file = scratch("stream.jsonl");
  ASSERT_EQ(cli("enumerate --order 6 -q --out " + file.string()).status, 0);
  std::ifstream in(file);
  std::stringstream text;
  text << in.rdbuf();
  // 82 partial group lines and 1 + 2 + 1 + 12 + 1 + 19 BPGs of dimension <= 2.
  EXPECT_EQ(count_lines(text.str(), "[\"f"), 82u);
  EXPECT_EQ(count_lines(text.str()), 82u + 36u);
  const auto v = cli("verify --in " + file.string() + " --expect partial-groups");
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_NE(v.out.find("OK (0 discrepancies)"), std::string::npos) << v.out;
  const auto t3 = cli("verify --in " + file.string() + " --expect indecomposable-bpgs");
  EXPECT_EQ(t3.status, 0) << t3.out;
  fs::remove(file);
}

TEST(Cli, EnumerateToDirectory) {
  const auto dir = scratch("dir");
  ASSERT_EQ(cli("enumerate --order 5 -q --out " + dir.string() + "/").status, 0);
  EXPECT_TRUE(fs::exists(dir / "bpgs.jsonl"));
  for (const char* f : {"pgs_f0_x4.jsonl", "pgs_f1_x2.jsonl", "pgs_f2_x0.jsonl"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  const auto v = cli("verify --in " + dir.string() + " --expect indecomposable");
  EXPECT_EQ(v.status, 0) << v.out;
  fs::remove_all(dir);
}

TEST(Cli, VerifyRejectsCorruption) {
  const auto file = scratch("bad.jsonl");
  {
    std::ofstream f(file);
    f << "[1,0,\"f1_x0_aa\",[[1,1,-1]]]\n";
    f << "[\"f1_x0_aa\",[[[0,1,-1],[-1,0,1],[1,-1,0]]]]\n";
    f << "[\"f1_x0_aa\",[[[0,1],[1,0]]]]\n";  // 1 is free, so this edge is not skew
  }
  const auto v = cli("verify --in " + file.string());
  EXPECT_EQ(v.status, 1);
  EXPECT_NE(v.out.find(":3:"), std::string::npos) << v.out;
  fs::remove(file);
}

TEST(Cli, DegreeAnnotations) {
  const auto file = scratch("deg.jsonl");
  {
    std::ofstream f(file);
    f << "[\"f0_x3_04f444b95639\",[[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]]]\n";
    f << "[\"f0_x3_04f444b95639\",[[[0,1,2],[1,0,3],[2,3,0]]]]\n";
  }
  const auto r = cli("degree --in " + file.string());
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string a, b;
  std::getline(in, a);
  std::getline(in, b);
  EXPECT_NE(a.find("\"degree\":1"), std::string::npos) << a;
  EXPECT_NE(a.find("\"dimension\":3"), std::string::npos) << a;
  EXPECT_NE(b.find("\"degree\":3"), std::string::npos) << b;
  EXPECT_NE(b.find("\"coskeletal2\":false"), std::string::npos) << b;
  fs::remove(file);
}

TEST(Cli, OutputIndependentOfThreads) {
  const auto one = cli("enumerate --order 7 -q --threads 1");
  const auto four = cli("enumerate --order 7 -q --threads 4");
  ASSERT_EQ(one.status, 0);
  ASSERT_EQ(four.status, 0);
  EXPECT_EQ(count_lines(one.out, "[\"f"), 409u);
  EXPECT_TRUE(one.out == four.out);
}
