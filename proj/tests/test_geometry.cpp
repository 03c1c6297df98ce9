#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "ulrich/families.hpp"
#include "ulrich/geometry.hpp"

using namespace ulrich;
using namespace ulrich::geometry;

namespace {

BlockedPartition P(const char* s) { return parse_partition(s); }

SchurWeight W(const char* s) { return parse_weight(s); }

// Degree as N! times the product over roots e_p - e_q crossing blocks of
// (λ_p - λ_q) / (q - p), where λ_j = Σ_{i : k_i >= j} a_i.
BigInt root_product_degree(const FlagType& type, const std::vector<std::int64_t>& a) {
  const int n = type.total();
  std::vector<std::int64_t> lambda(static_cast<std::size_t>(n), 0);
  std::vector<int> block_of(static_cast<std::size_t>(n));
  const auto dims = type.flag_dims();
  for (int j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (dims[i] >= j + 1) lambda[static_cast<std::size_t>(j)] += a[i];
    }
  }
  for (int b = 0; b < type.blocks(); ++b) {
    for (int k = 0; k < type.length(b); ++k) block_of[static_cast<std::size_t>(type.offset(b) + k)] = b;
  }
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t k = 2; k <= type.dimension(); ++k) num *= k;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (block_of[static_cast<std::size_t>(p)] == block_of[static_cast<std::size_t>(q)]) continue;
      num *= lambda[static_cast<std::size_t>(p)] - lambda[static_cast<std::size_t>(q)];
      den *= q - p;
    }
  }
  EXPECT_EQ(num % den, 0);
  return num / den;
}

// Signed Weyl product Π_{i<j} (x_i - x_j) / (j - i) on x = λ(t) + ρ.
BigInt signed_weyl(const SchurWeight& w, std::int64_t t) {
  const int n = w.type.total();
  std::vector<Entry> x(static_cast<std::size_t>(n));
  for (int b = 0; b < w.type.blocks(); ++b) {
    for (int k = 0; k < w.type.length(b); ++k) {
      const auto i = static_cast<std::size_t>(w.type.offset(b) + k);
      x[i] = w.lambda[i] + (n - 1 - static_cast<Entry>(i)) - t * (w.type.steps() - b);
    }
  }
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
      den *= j - i;
    }
  }
  return num / den;
}

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

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST(Weight, Dictionary) {
  const auto p = P("11|9,5,4,2|1");
  EXPECT_EQ(to_weight(p), W("6|5,2,2,1|1"));
  EXPECT_EQ(to_partition(W("6|5,2,2,1|1")), p);
  EXPECT_EQ(to_partition(SchurWeight(FlagType({1, 1}), {0, 0})), P("1|0"));
  EXPECT_EQ(to_weight(P("5|3,-1,-2,-4|-5"), WeightShift::MinZero), W("5|4,1,1,0|0"));
  EXPECT_EQ(rho(4), (std::vector<Entry>{3, 2, 1, 0}));
  EXPECT_THROW(to_partition(SchurWeight(FlagType({1, 1}), {-1, 0})), InvalidPartition);
  EXPECT_THROW(SchurWeight(FlagType({2, 1}), {0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(SchurWeight(FlagType({2, 1}), {0, 0}), std::invalid_argument);
  EXPECT_THROW(parse_weight("1|x"), ParseError);
}

TEST(Weight, RoundTripOnRandomPartitions) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = oracle::random_partition(rng, 5, 4, 40);
    EXPECT_EQ(to_partition(to_weight(p)), p);
    const auto m = to_weight(p, WeightShift::MinZero);
    EXPECT_EQ(*std::min_element(m.lambda.begin(), m.lambda.end()), 0);
    EXPECT_TRUE(equivalent(to_partition(m), p));
  }
}

TEST(SchurDim, Examples) {
  const std::vector<Entry> a{5, 2, 2, 1};
  EXPECT_EQ(schur_dim(a, 4), 70);
  EXPECT_EQ(schur_dim(std::vector<Entry>{1, 0, 0, 0, 0}, 5), 5);
  EXPECT_EQ(schur_dim(std::vector<Entry>{6, 5, 2, 2, 1, 1}, 6), 17640);
  EXPECT_EQ(schur_dim(std::vector<Entry>{-1, -3, -3}, 3), schur_dim(std::vector<Entry>{2, 0, 0}, 3));
  EXPECT_THROW(schur_dim(std::vector<Entry>{0, 1}, 2), std::invalid_argument);
  EXPECT_THROW(schur_dim(std::vector<Entry>{1, 0}, 3), std::invalid_argument);
}

TEST(SchurDim, MatchesTableauCount) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Entry> mu(static_cast<std::size_t>(d));
    for (auto& x : mu) x = std::uniform_int_distribution<Entry>(0, 4)(rng);
    std::sort(mu.rbegin(), mu.rend());
    const std::vector<int> shape(mu.begin(), mu.end());
    EXPECT_EQ(schur_dim(mu, d), oracle::count_ssyt(shape, d));
  }
}

TEST(SchurDim, HookAgreesWithWeylOnThousandWeights) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<Entry> mu(static_cast<std::size_t>(d));
    for (auto& x : mu) x = std::uniform_int_distribution<Entry>(0, 12)(rng);
    std::sort(mu.rbegin(), mu.rend());
    EXPECT_EQ(schur_dim(mu, d), schur_dim_weyl(mu, d));
  }
}

TEST(BundleRank, Examples) {
  EXPECT_EQ(bundle_rank(W("6|5,2,2,1|1")), 70);
  EXPECT_EQ(bundle_rank(SchurWeight(FlagType({2, 3, 1}), std::vector<Entry>(6, 0))), 1);
  EXPECT_EQ(bundle_rank(SchurWeight(FlagType({2, 1}), {1, 1, 0})), 1);
}

TEST(Bwb, Examples) {
  auto h = bwb_cohomology(W("6|5,2,2,1|1"), 0);
  EXPECT_FALSE(h.vanishes);
  EXPECT_EQ(h.degree, 0);
  EXPECT_EQ(h.dimension, 17640);
  h = bwb_cohomology(SchurWeight(FlagType({1, 1}), {-2, 0}), 0);
  EXPECT_FALSE(h.vanishes);
  EXPECT_EQ(h.degree, 1);
  EXPECT_EQ(h.dimension, 1);
  EXPECT_EQ(h.mu, (std::vector<Entry>{-1, -1}));
  EXPECT_TRUE(bwb_cohomology(W("6|5,2,2,1|1"), 3).vanishes);
}

TEST(Bwb, DegreeIsInversionCountAndDimensionMatchesWeyl) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = oracle::random_partition(rng, 4, 3, 12);
    const auto w = to_weight(p);
    for (std::int64_t t = 0; t <= 4; ++t) {
      const auto x = evolve(p, t);
      const auto h = bwb_cohomology(w, t);
      std::vector<Entry> s(x.begin(), x.end());
      std::sort(s.begin(), s.end());
      const bool singular = std::adjacent_find(s.begin(), s.end()) != s.end();
      ASSERT_EQ(h.vanishes, singular);
      if (singular) continue;
      int inv = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) inv += x[i] < x[j];
      }
      EXPECT_EQ(h.degree, inv);
      const auto chi = signed_weyl(w, t);
      EXPECT_EQ(h.dimension, abs(chi));
      EXPECT_EQ(euler_characteristic(w, t), chi);
    }
  }
}

TEST(Bwb, EulerCharacteristicIsPolynomialWithUlrichZeros) {
  for (const char* s : {"5|3,-1,-2,-4|-5", "8,6|5,0|-2", "2|1|-2", "3|1|-2", "6|4|1"}) {
    const auto p = P(s);
    const auto w = to_weight(p);
    const auto n = p.dimension();
    std::vector<BigInt> v;
    for (std::int64_t t = -3; t <= n + 3; ++t) v.push_back(euler_characteristic(w, t));
    // Finite differences of order N+1 vanish for a polynomial of degree <= N.
    for (std::int64_t k = 0; k <= n; ++k) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
      v.pop_back();
    }
    for (const auto& x : v) EXPECT_EQ(x, 0) << s;
    if (is_ulrich(p).is_ulrich) {
      for (std::int64_t t = 1; t <= n; ++t) EXPECT_EQ(euler_characteristic(w, t), 0) << s;
    }
  }
}

TEST(Bwb, UlrichExamples) {
  EXPECT_TRUE(is_ulrich_via_bwb(W("6|5,2,2,1|1")));
  EXPECT_FALSE(is_ulrich_via_bwb(SchurWeight(FlagType({1, 1, 1}), {0, 0, 0})));
  EXPECT_FALSE(is_ulrich(P("2|1|0")).is_ulrich);
  EXPECT_TRUE(is_ulrich_via_bwb(to_weight(families::p_u(2))));
}

TEST(Bwb, AgreesWithCombinatorialTest) {
  for (const auto& p : oracle::corpus()) {
    if (p.dimension() > 30) continue;
    ASSERT_TRUE(is_ulrich_via_bwb(to_weight(p))) << p;
  }
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = oracle::random_partition(rng, 4, 3, 14);
    EXPECT_EQ(is_ulrich_via_bwb(to_weight(p)), oracle::ulrich_by_definition(p)) << p;
  }
}

TEST(FlagDimension, Examples) {
  EXPECT_EQ(flag_dimension(FlagType({1, 4, 1})), 9);
  EXPECT_EQ(flag_dimension(FlagType({1, 1})), 1);
  EXPECT_EQ(flag_dimension(FlagType({2, 2, 2})), 12);
  for (int n = 2; n <= 20; ++n) {
    for (const auto& t : compositions(n)) ASSERT_EQ(flag_dimension(t), t.dimension());
  }
}

TEST(FlagDegree, Examples) {
  EXPECT_EQ(flag_degree(FlagType({1, 4, 1}), {{1, 1}}), 252);
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(flag_degree(FlagType({1, n - 1}), {{1}}), 1);
  EXPECT_EQ(flag_degree(FlagType({2, 2}), {{1}}), 2);
  for (int n = 4; n <= 9; ++n) {
    EXPECT_EQ(flag_degree(FlagType({1, n - 2, 1}), {{1, 1}}), factorial(2 * n - 3) * 2 / (factorial(n - 1) * factorial(n - 2)));
  }
  PolarizationWeights w{{2, 3, 5}};
  EXPECT_EQ(w.b(1, 3), 10);
  EXPECT_EQ(w.b(2, 2), 3);
  EXPECT_THROW(flag_degree(FlagType({1, 1}), {{0}}), std::invalid_argument);
}

TEST(FlagDegree, MatchesRootProduct) {
  std::mt19937_64 rng(36);
  for (int n = 2; n <= 8; ++n) {
    for (const auto& t : compositions(n)) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(t.steps()));
      for (auto& x : a) x = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
      ASSERT_EQ(flag_degree(t, {a}), root_product_degree(t, a)) << t.to_string();
    }
  }
}

TEST(UlrichIdentity, Examples) {
  auto u = ulrich_identity_check(W("6|5,2,2,1|1"));
  EXPECT_EQ(u.h0, 17640);
  EXPECT_EQ(u.rank, 70);
  EXPECT_EQ(u.degree, 252);
  EXPECT_TRUE(u.ok);
  EXPECT_TRUE(ulrich_identity_check(to_weight(P("2|1|-2"))).ok);
  u = ulrich_identity_check(SchurWeight(FlagType({1, 1}), {0, 0}));
  EXPECT_EQ(u.h0, 1);
  EXPECT_EQ(u.rank, 1);
  EXPECT_EQ(u.degree, 1);
  EXPECT_TRUE(u.ok);
  EXPECT_THROW(ulrich_identity_check(SchurWeight(FlagType({1, 1}), {-1, 0})), std::invalid_argument);
  EXPECT_EQ(to_string(BigInt(1) << 100), "1267650600228229401496703205376");
}

TEST(UlrichIdentity, HoldsForFamilyMembers) {
  using namespace ulrich::families;
  std::vector<BlockedPartition> members;
  for (int n = 1; n <= 8; ++n) members.push_back(one_n_one(n, {1}));
  members.push_back(two_one_k(0));
  members.push_back(two_one_k(1));
  members.push_back(one_two_k(0));
  members.push_back(one_two_k(1));
  members.push_back(two_param(0, 0));
  for (int u = 1; u <= 3; ++u) members.push_back(p_u(u));
  for (int m = 2; m <= 4; ++m) members.push_back(fundamental_F(m));
  members.push_back(elongated_family(1, 2));
  for (const auto& name : sporadic_names()) members.push_back(sporadic(name));
  for (const auto& p : members) {
    if (p.type().total() > 10) continue;
    const auto u = ulrich_identity_check(to_weight(p));
    EXPECT_TRUE(u.ok) << p;
    EXPECT_EQ(u.h0, u.rank * u.degree) << p;
  }
}
