#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "ulrich/cli.hpp"
#include "ulrich/diagram.hpp"

using namespace ulrich;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(Check, Verdicts) {
  auto r = run({"check", "5|3,-1,-2,-4|-5"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(lines(r.out).front(), "ULRICH");
  EXPECT_NE(r.out.find("N = 9"), std::string::npos);
  EXPECT_NE(r.out.find("t=5  a1 meets c1"), std::string::npos);

  r = run({"check", "3|1|-2"});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_EQ(lines(r.out).front().rfind("NOT-ULRICH", 0), 0u);
  EXPECT_NE(r.out.find("5/2"), std::string::npos);

  EXPECT_EQ(run({"check", "1,2|0"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", "1|x"}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
}

TEST(Check, Json) {
  const auto r = run({"--json", "check", "3|1|-2"});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("\"schema\":1"), std::string::npos);
  EXPECT_NE(r.out.find("\"ulrich\":false"), std::string::npos);
  EXPECT_NE(r.out.find("\"kind\":\"non-integral-time\""), std::string::npos);
}

TEST(Diagram, SmallestUlrich) {
  const auto r = run({"diagram", "2|1|-2"});
  EXPECT_EQ(r.code, cli::kOk);
  const auto ls = lines(r.out);
  // header, t=0..3, separator, t=4
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_NE(ls[2].find("[ab]"), std::string::npos);
  EXPECT_NE(ls[3].find("[ac]"), std::string::npos);
  EXPECT_NE(ls[4].find("[bc]"), std::string::npos);
  EXPECT_EQ(ls[5].find_first_not_of('-'), std::string::npos);
}

TEST(Diagram, OneThreeTwoExample) {
  const auto r = run({"diagram", "7|2,1,0|-1,-9"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(count_of(r.out, "t="), 13u);
  const auto rs = diagram::rows(parse_partition("7|2,1,0|-1,-9"), diagram::default_velocities(FlagType({1, 3, 2})));
  // a meets the first c at t = 4
  bool found = false;
  for (const auto& c : rs[4].cells) {
    if (c.entries.size() == 2 && c.entries[0] == EntryRef{0, 0} && c.entries[1] == EntryRef{2, 0}) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Diagram, SvgRows) {
  const auto r = run({"diagram", "--svg", "17,1|0|-3,-7,-9,-11,-15"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  // rows t = 0..17 above the separator plus the t = 18 row
  EXPECT_EQ(count_of(r.out, "<g class=\"row\""), 19u);
  EXPECT_EQ(count_of(r.out, "<rect"), 17u);
  EXPECT_EQ(run({"diagram", "--velocities", "1,1,0", "2|1|-2"}).code, cli::kUsage);
  EXPECT_EQ(run({"diagram", "--velocities", "7,6,5", "2|1|-2"}).code, cli::kOk);
}

TEST(Diagram, BoxedRowsMatchVerdict) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = oracle::random_partition(rng, 3, 3, 12);
    const bool u = oracle::ulrich_by_definition(p);
    EXPECT_EQ(diagram::boxed_rows(p) == p.dimension(), u) << p;
    EXPECT_EQ(run({"check", to_string(p)}).code, u ? cli::kOk : cli::kNegative);
  }
  for (const auto& p : oracle::corpus()) {
    if (p.dimension() <= 30) ASSERT_EQ(diagram::boxed_rows(p), p.dimension());
  }
}

TEST(Enumerate, JsonRecords) {
  auto r = run({"--json", "enumerate", "--type", "1,3,1"});
  EXPECT_EQ(r.code, cli::kOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 8u);
  for (const auto& l : ls) {
    EXPECT_EQ(l.rfind("{\"schema\":1,\"type\":[1,3,1],\"partition\":\"", 0), 0u) << l;
    EXPECT_NE(l.find("\"canonical\":true"), std::string::npos);
    EXPECT_NE(l.find("\"n_dim\":7"), std::string::npos);
  }
  r = run({"enumerate", "--type", "2,4,2"});
  EXPECT_NE(r.out.find("2 classes"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "--type", "1,2,1", "--mode", "oracle"}).code, cli::kOk);
  EXPECT_EQ(run({"enumerate", "--type", "3"}).code, cli::kUsage);
}

TEST(Enumerate, BudgetExitCode) {
  const auto r = run({"--budget-seconds", "0.3", "enumerate", "--type", "2,30,2"});
  EXPECT_EQ(r.code, cli::kBudget);
}

TEST(Family, Outputs) {
  auto r = run({"family", "--name", "elongated", "--params", "1,2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(lines(r.out).front(), "12,8|7,6,1,-4,-5|-8");
  EXPECT_EQ(lines(run({"family", "--name", "p-u", "--params", "2"}).out).front(), "17,5|4,2,-1,-3|-5,-15");
  EXPECT_EQ(lines(run({"family", "--name", "sporadic", "--label", "322"}).out).front(), "16,10,4|3,0|-2,-12");
  EXPECT_EQ(lines(run({"family", "--name", "fundamental-1n2", "--params", "3", "--mirror"}).out).front(), "3|-1,-2|-3,-9");
  EXPECT_EQ(lines(run({"family", "--name", "one-n-one", "--params", "4", "--subset", "3"}).out).front(),
            "5|3,-1,-2,-4|-5");
  EXPECT_EQ(run({"family", "--name", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"family", "--name", "p-u", "--params", "0"}).code, cli::kUsage);
}

TEST(Analyze, Outputs) {
  auto r = run({"--json", "analyze", "8,6|5,0|-2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("\"greedy_word\":\"aca\""), std::string::npos);
  EXPECT_NE(r.out.find("\"middle_gap\":5"), std::string::npos);
  r = run({"analyze", "17,1|0|-3,-7,-9,-11,-15"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("2,6,8,10,14"), std::string::npos);
  EXPECT_EQ(run({"analyze", "10,4|3,0|-2"}).code, cli::kNegative);
}

TEST(Verify, Suites) {
  auto r = run({"verify", "--suite", "conjecture", "--max-sum", "9"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("PASS (0 found)"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "no-multistep", "--max-length", "6"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "--suite", "families"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "--suite", "conjecture", "--max-sum", "11"}).code, cli::kUsage);
}

TEST(Verify, CheckpointAndManifest) {
  const auto dir = std::filesystem::temp_directory_path() / ("ulrich_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto ck = (dir / "ck.jsonl").string();
  const auto mf = (dir / "manifest.json").string();
  auto r = run({"verify", "--suite", "conjecture", "--max-sum", "10", "--checkpoint", ck, "--manifest", mf});
  EXPECT_EQ(r.code, cli::kOk);
  std::ifstream in(ck);
  std::string content((std::istreambuf_iterator<char>(in)), {});
  const auto first = lines(content).size();
  EXPECT_EQ(first, 20u);
  r = run({"verify", "--suite", "conjecture", "--max-sum", "10", "--checkpoint", ck});
  EXPECT_EQ(r.code, cli::kOk);
  std::ifstream again(ck);
  std::string content2((std::istreambuf_iterator<char>(again)), {});
  EXPECT_EQ(lines(content2).size(), first);
  std::ifstream m(mf);
  std::string manifest((std::istreambuf_iterator<char>(m)), {});
  for (const char* key : {"\"schema\": 1", "\"suite\": \"conjecture\"", "\"types\"", "\"binary_version\"", "\"elapsed"}) {
    EXPECT_NE(manifest.find(key), std::string::npos) << key;
  }
  std::filesystem::remove_all(dir);
}

TEST(Geometry, Ops) {
  EXPECT_EQ(lines(run({"geometry", "degree", "--flag", "1,5:6"}).out).front(), "252");
  EXPECT_EQ(lines(run({"geometry", "degree", "--flag", "2:4"}).out).front(), "2");
  EXPECT_EQ(lines(run({"geometry", "rank", "--lambda", "6|5,2,2,1|1"}).out).front(), "70");
  EXPECT_EQ(lines(run({"geometry", "h0", "--lambda", "6|5,2,2,1|1"}).out).front(), "17640");
  EXPECT_EQ(lines(run({"geometry", "dimension", "--flag", "1,5:6"}).out).front(), "9");
  auto r = run({"geometry", "cohomology", "--lambda", "6|5,2,2,1|1", "--twist", "3"});
  EXPECT_NE(r.out.find("vanish"), std::string::npos);
  r = run({"geometry", "ulrich-check", "--lambda", "6|5,2,2,1|1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(run({"geometry", "degree", "--flag", "5,1:6"}).code, cli::kUsage);
  EXPECT_EQ(run({"geometry", "frobnicate"}).code, cli::kUsage);
}

TEST(Version, NonEmpty) { EXPECT_STRNE(cli::version(), ""); }
