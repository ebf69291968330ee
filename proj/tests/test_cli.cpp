#include <gtest/gtest.h>

#include "oracle.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(CORELAT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("roots A0").code, 2);
  EXPECT_EQ(cli("roots D3").code, 2);
  EXPECT_EQ(cli("cores A2 3").code, 2);
  EXPECT_EQ(cli("draw B3 --b 5").code, 2);
  EXPECT_EQ(cli("cores A2 5 --bogus").code, 2);
  EXPECT_EQ(cli("cores A2 5 --format xml").code, 2);
  EXPECT_EQ(cli("verify no_such_theorem").code, 2);
  EXPECT_EQ(cli("verify main --type A2 --b 3").code, 2);
  EXPECT_EQ(cli("cores A7 101 --cap 10").code, 2);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(cli("verify strange").code, 0);
  const auto fg = cli("verify fg_poly --type G2");
  EXPECT_EQ(fg.code, 1);
  EXPECT_NE(fg.out.find("\"status\": \"fail\""), std::string::npos);
  const auto conj = cli("verify conjecture --type A2 --b 2,4");
  EXPECT_EQ(conj.code, 0);
  EXPECT_NE(conj.out.find("\"evidence_only\": true"), std::string::npos);
}

TEST(Cli, RootsJson) {
  const auto r = cli("roots --type F4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"h\": 12,"), std::string::npos);
}

TEST(Cli, CoresCsvA2) {
  const auto r = cli("cores A2 5 --format csv");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows.size(), 7u);
  std::set<corelat::Partition> parts;
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 6u);
    EXPECT_EQ(row[0], "A2");
    std::vector<std::int64_t> p;
    std::istringstream ps(row[5]);
    for (std::int64_t v; ps >> v;) p.push_back(v);
    parts.insert(corelat::Partition(p));
  }
  EXPECT_EQ(parts, oracle::simultaneous_cores(3, 5, 8));
}

TEST(Cli, CoresCsvC2SelfConjugate) {
  const auto r = cli("cores C2 5 --format csv");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& row : rows) {
    std::vector<std::int64_t> p;
    std::istringstream ps(row[5]);
    for (std::int64_t v; ps >> v;) p.push_back(v);
    const corelat::Partition lam(p);
    EXPECT_TRUE(oracle::self_conjugate(lam)) << row[5];
    EXPECT_FALSE(oracle::has_hook(lam, 4)) << row[5];
    EXPECT_FALSE(oracle::has_hook(lam, 5)) << row[5];
    EXPECT_EQ(std::to_string(lam.size()), row[3]);
  }
}

TEST(Cli, Draw) {
  const auto one = cli("draw A2 --b 1");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(one.out, "class=\"core\""), 1u);
  const auto c2 = cli("draw C2 --b 5");
  ASSERT_EQ(c2.code, 0);
  EXPECT_EQ(count(c2.out, "class=\"core\""), 6u);
  EXPECT_EQ(count(c2.out, "class=\"region\""), 1u);
  EXPECT_EQ(count(cli("draw G2 5").out, "class=\"core\""), 5u);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"cores G2 7", "draw B2 --b 5", "verify sizer --type B2"}) {
    const auto a = cli(args), b = cli(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "corelat_cli_out_test.json";
  std::filesystem::remove(path);
  const auto r = cli("cores B3 5 --out " + path.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), cli("cores B3 5").out);
  std::filesystem::remove(path);
}
