#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "ulrich/families.hpp"
#include "ulrich/search.hpp"

using namespace ulrich;
using namespace ulrich::search;

namespace {

BlockedPartition P(const char* s) { return parse_partition(s); }

std::set<BlockedPartition> as_set(const SearchReport& r) { return {r.partitions.begin(), r.partitions.end()}; }

std::set<BlockedPartition> classes(const FlagType& t) { return as_set(time_branching_search(t)); }

// Brute force over every strictly decreasing vector in [0, width] ending in 0, tested
// against the literal definition.
std::set<BlockedPartition> brute_force(const FlagType& type, Entry width) {
  std::set<BlockedPartition> out;
  std::vector<Entry> e(static_cast<std::size_t>(type.total()));
  e.back() = 0;
  std::function<void(int, Entry)> rec = [&](int k, Entry below) {
    if (k < 0) {
      BlockedPartition p(type, e);
      if (oracle::ulrich_by_definition(p)) out.insert(p);
      return;
    }
    for (Entry x = below + 1; x <= width; ++x) {
      e[static_cast<std::size_t>(k)] = x;
      rec(k - 1, x);
    }
  };
  rec(type.total() - 2, 0);
  return out;
}

// Every composition of `total` into at least two parts.
std::vector<FlagType> compositions(int total) {
  std::vector<FlagType> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (cur.size() >= 2) out.emplace_back(cur);
      return;
    }
    for (int x = 1; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

}  // namespace

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(classes(FlagType({1, 4, 1})).size(), 16u);
  EXPECT_EQ(classes(FlagType({1, 1, 1, 1})).size(), 0u);
  EXPECT_EQ(classes(FlagType({2, 3, 2})).size(), 0u);
  EXPECT_EQ(classes(FlagType({1, 2, 1})).size(), 4u);
  EXPECT_EQ(classes(FlagType({3, 3, 3})).size(), 0u);
  EXPECT_EQ(classes(FlagType({1, 4, 2})).size(), 2u);
  EXPECT_EQ(classes(FlagType({1, 1, 1})), (std::set<BlockedPartition>{P("4|3|0"), P("4|1|0")}));
  EXPECT_EQ(classes(FlagType({2, 1, 1})), (std::set<BlockedPartition>{P("8,4|3|0")}));
  EXPECT_EQ(classes(FlagType({2, 1, 5})), (std::set<BlockedPartition>{canonicalize(families::two_one_k(1))}));
}

TEST(Enumerate, PalindromicTypesPairUp) {
  for (int u : {2, 4}) {
    const auto r = time_branching_search(FlagType({2, 2 * u, 2}));
    ASSERT_EQ(r.count(), 2u);
    const auto pu = canonicalize(families::p_u(u));
    EXPECT_TRUE(as_set(r).contains(pu));
    EXPECT_TRUE(as_set(r).contains(canonicalize(symmetric(pu))));
    EXPECT_EQ(r.symmetric_partner, (std::vector<std::size_t>{1, 0}));
  }
  const auto r = time_branching_search(FlagType({1, 3, 1}));
  ASSERT_EQ(r.symmetric_partner.size(), r.count());
  for (std::size_t i = 0; i < r.count(); ++i) {
    EXPECT_EQ(canonicalize(symmetric(r.partitions[i])), r.partitions[r.symmetric_partner[i]]);
  }
  EXPECT_TRUE(time_branching_search(FlagType({1, 2, 3})).symmetric_partner.empty());
}

TEST(Enumerate, MatchesIndependentBruteForce) {
  for (int total = 2; total <= 6; ++total) {
    for (const auto& t : compositions(total)) {
      if (t.dimension() > 9) continue;
      const Entry width = static_cast<Entry>(t.steps() + 1) * t.dimension();
      EXPECT_EQ(classes(t), brute_force(t, width)) << t.to_string();
    }
  }
}

TEST(Enumerate, MatchesBaselineOracleUpToTwelve) {
  int compared = 0;
  for (int total = 2; total <= 13; ++total) {
    for (const auto& t : compositions(total)) {
      if (t.dimension() > 12) continue;
      const auto fast = time_branching_search(t);
      const auto slow = baseline_oracle(t);
      ASSERT_TRUE(fast.exhausted);
      EXPECT_EQ(fast.partitions, slow.partitions) << t.to_string();
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
  EXPECT_THROW(baseline_oracle(FlagType({3, 5})), std::invalid_argument);
}

TEST(Enumerate, EnumerateUlrichDispatchesOnMode) {
  const FlagType t({1, 3, 2});
  EXPECT_EQ(enumerate_ulrich({t, SearchMode::BaselineOracle, {}}).partitions,
            enumerate_ulrich({t, SearchMode::TimeBranching, {}}).partitions);
}

TEST(Enumerate, ClosedUnderSymmetryAndDuality) {
  for (int total = 2; total <= 8; ++total) {
    for (const auto& t : compositions(total)) {
      if (t.dimension() > 20) continue;
      const auto here = classes(t);
      const auto there = classes(t.reversed());
      std::set<BlockedPartition> sym;
      std::set<BlockedPartition> dua;
      for (const auto& p : here) {
        sym.insert(canonicalize(symmetric(p)));
        dua.insert(canonicalize(dual(p)));
      }
      EXPECT_EQ(sym, there) << t.to_string();
      EXPECT_EQ(dua, there) << t.to_string();
    }
  }
}

TEST(Enumerate, OutputsAreCanonicalSortedUlrich) {
  for (const auto& t : {FlagType({2, 6, 1}), FlagType({2, 6, 2}), FlagType({1, 5, 1})}) {
    const auto r = time_branching_search(t);
    EXPECT_TRUE(std::is_sorted(r.partitions.begin(), r.partitions.end()));
    for (const auto& p : r.partitions) {
      EXPECT_EQ(p, canonicalize(p));
      EXPECT_EQ(p.type(), t);
      EXPECT_TRUE(oracle::ulrich_by_definition(p));
    }
  }
}

TEST(Enumerate, ParallelMatchesSerial) {
  for (const auto& t : {FlagType({2, 8, 1}), FlagType({1, 6, 1}), FlagType({2, 1, 5})}) {
    SearchLimits lim;
    lim.threads = 4;
    EXPECT_EQ(time_branching_search(t, lim).partitions, time_branching_search(t).partitions);
  }
}

TEST(Search, FrontierIsAlwaysCoveredPrefix) {
  std::uint64_t calls = 0;
  bool ok = true;
  const auto observer = [&](std::int64_t frontier, std::span<const std::uint8_t> covered) {
    ++calls;
    for (std::int64_t t = 1; t < frontier; ++t) ok = ok && covered[static_cast<std::size_t>(t)] != 0;
    if (frontier < static_cast<std::int64_t>(covered.size())) ok = ok && covered[static_cast<std::size_t>(frontier)] == 0;
  };
  for (const auto& t : {FlagType({2, 4, 2}), FlagType({1, 3, 2}), FlagType({2, 1, 5})}) {
    time_branching_search(t, {}, observer);
  }
  EXPECT_TRUE(ok);
  EXPECT_GT(calls, 100u);
}

TEST(Search, BudgetsProduceNonExhaustiveReports) {
  SearchLimits lim;
  lim.max_nodes = 50;
  const auto r = time_branching_search(FlagType({3, 4, 4}), lim);
  EXPECT_FALSE(r.exhausted);
  lim = {};
  lim.seconds = 0.0;
  EXPECT_FALSE(time_branching_search(FlagType({3, 4, 4}), lim).exhausted);
  EXPECT_TRUE(time_branching_search(FlagType({1, 1, 1})).exhausted);
}

TEST(Sweep, TypeLists) {
  const auto ms = multistep_types(5);
  std::set<FlagType> got(ms.begin(), ms.end());
  std::set<FlagType> want;
  for (int total = 4; total <= 5; ++total) {
    for (const auto& t : compositions(total)) {
      if (t.blocks() >= 4) want.insert(t);
    }
  }
  EXPECT_EQ(got, want);
  EXPECT_EQ(multistep_types(4), (std::vector<FlagType>{FlagType({1, 1, 1, 1})}));

  const auto cj = conjecture_types(10);
  std::set<FlagType> cgot(cj.begin(), cj.end());
  std::set<FlagType> cwant;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 3; a + b <= 7; ++b) {
      for (int c = 3; a + b + c <= 10; ++c) cwant.insert(FlagType({a, b, c}));
    }
  }
  EXPECT_EQ(cgot, cwant);
  EXPECT_TRUE(cgot.contains(FlagType({1, 3, 3})));
}

TEST(Sweep, NoMultistepAndConjectureSmall) {
  for (const auto& r : verify_no_multistep(6)) {
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.count(), 0u) << r.type.to_string();
  }
  const auto cj = verify_conjecture_sweep(9);
  // α is unconstrained, so sum 9 already covers ten types including (3,3,3) and (1,3,3).
  ASSERT_EQ(cj.size(), 10u);
  std::set<FlagType> types;
  for (const auto& r : cj) {
    types.insert(r.type);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.count(), 0u) << r.type.to_string();
  }
  EXPECT_TRUE(types.contains(FlagType({3, 3, 3})));
  EXPECT_TRUE(types.contains(FlagType({1, 3, 3})));
  EXPECT_THROW(verify_no_multistep(3), std::invalid_argument);
  EXPECT_THROW(verify_conjecture_sweep(8), std::invalid_argument);
  EXPECT_EQ(time_branching_search(FlagType({1, 1, 1, 1, 1, 1})).count(), 0u);
}

TEST(Sweep, SkipAndCallback) {
  const std::vector<FlagType> types{FlagType({1, 1, 1}), FlagType({1, 2, 1}), FlagType({2, 1, 1})};
  std::vector<FlagType> seen;
  const auto reps = sweep(types, {}, {FlagType({1, 2, 1})}, [&](const SearchReport& r) { seen.push_back(r.type); });
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(seen, (std::vector<FlagType>{FlagType({1, 1, 1}), FlagType({2, 1, 1})}));
  SearchLimits lim;
  lim.seconds = 0.0;
  for (const auto& r : sweep(types, lim)) EXPECT_FALSE(r.exhausted);
}

TEST(Window, ContainsEveryCorpusPartition) {
  // The enumeration window is a bound on canonical representatives.
  for (const auto& p : oracle::corpus()) {
    const auto r = p.type().steps();
    for (int i = 0; i < p.blocks(); ++i) {
      const Entry cap = p.dimension() * std::max<Entry>(1, r - i);
      for (Entry x : p.block(i)) ASSERT_LE(x, cap) << p;
    }
  }
  std::uint64_t n = 0;
  for_each_in_window(FlagType({1, 1}), [&](std::span<const Entry> e) {
    ++n;
    EXPECT_EQ(e.back(), 0);
  });
  EXPECT_EQ(n, 1u);
}
