#include "ulrich/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulrich::geometry {

namespace {

BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt exact_divide(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0 || num % den != 0) throw std::logic_error(std::string(what) + ": division is not exact");
  return num / den;
}

void require_weakly_decreasing(std::span<const Entry> mu, int d) {
  if (static_cast<int>(mu.size()) != d) throw std::invalid_argument("weight length does not match dimension");
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (mu[i - 1] < mu[i]) throw std::invalid_argument("weight must be weakly decreasing");
  }
}

// λ(t) + ρ, i.e. P(t) read from the weight.
std::vector<Entry> twisted_positions(const SchurWeight& w, std::int64_t t) {
  const int n = w.type.total();
  std::vector<Entry> v(w.lambda);
  for (int i = 0; i < w.type.blocks(); ++i) {
    const Entry vel = w.type.steps() - i;
    for (int k = 0; k < w.type.length(i); ++k) {
      const auto idx = static_cast<std::size_t>(w.type.offset(i) + k);
      v[idx] += (n - 1 - static_cast<Entry>(idx)) - t * vel;
    }
  }
  return v;
}

}  // namespace

SchurWeight::SchurWeight(FlagType t, std::vector<Entry> l) : type(std::move(t)), lambda(std::move(l)) {
  if (static_cast<int>(lambda.size()) != type.total()) {
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " entries, type " +
                                type.to_string() + " needs " + std::to_string(type.total()));
  }
  for (int i = 0; i < type.blocks(); ++i) {
    auto b = block(i);
    for (std::size_t k = 1; k < b.size(); ++k) {
      if (b[k - 1] < b[k]) throw std::invalid_argument("weight must be weakly decreasing inside each block");
    }
  }
}

std::span<const Entry> SchurWeight::block(int i) const {
  return std::span<const Entry>(lambda).subspan(static_cast<std::size_t>(type.offset(i)),
                                                static_cast<std::size_t>(type.length(i)));
}

std::string SchurWeight::to_string() const {
  std::string s;
  for (int i = 0; i < type.blocks(); ++i) {
    if (i) s += '|';
    bool first = true;
    for (Entry x : block(i)) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(x);
    }
  }
  return s;
}

SchurWeight parse_weight(std::string_view text) {
  auto blocks = parse_blocks(text);
  std::vector<int> lengths;
  std::vector<Entry> lambda;
  for (const auto& b : blocks) {
    lengths.push_back(static_cast<int>(b.size()));
    lambda.insert(lambda.end(), b.begin(), b.end());
  }
  try {
    return SchurWeight(FlagType(std::move(lengths)), std::move(lambda));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<Entry> rho(int n) {
  std::vector<Entry> r;
  for (int i = n - 1; i >= 0; --i) r.push_back(i);
  return r;
}

SchurWeight to_weight(const BlockedPartition& p, WeightShift shift) {
  const auto r = rho(p.type().total());
  std::vector<Entry> lambda(p.entries().begin(), p.entries().end());
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] -= r[i];
  if (shift == WeightShift::MinZero) {
    const Entry lo = *std::min_element(lambda.begin(), lambda.end());
    for (auto& x : lambda) x -= lo;
  }
  return SchurWeight(p.type(), std::move(lambda));
}

BlockedPartition to_partition(const SchurWeight& w) {
  auto e = twisted_positions(w, 0);
  return BlockedPartition(w.type, std::move(e));
}

BigInt schur_dim(std::span<const Entry> mu, int d) {
  require_weakly_decreasing(mu, d);
  if (d == 0) return 1;
  const Entry base = mu.back();
  std::vector<Entry> rows;
  for (Entry x : mu) rows.push_back(x - base);
  const Entry width = rows.empty() ? 0 : rows.front();
  std::vector<Entry> cols(static_cast<std::size_t>(width), 0);
  for (Entry r : rows) {
    for (Entry j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Entry j = 0; j < rows[i]; ++j) {
      num *= d + j - static_cast<Entry>(i);
      den *= (rows[i] - j - 1) + (cols[static_cast<std::size_t>(j)] - static_cast<Entry>(i) - 1) + 1;
    }
  }
  return exact_divide(num, den, "schur_dim");
}

BigInt schur_dim_weyl(std::span<const Entry> mu, int d) {
  require_weakly_decreasing(mu, d);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= mu[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(j)] + (j - i);
      den *= j - i;
    }
  }
  return exact_divide(num, den, "schur_dim_weyl");
}

BigInt bundle_rank(const SchurWeight& w) {
  BigInt r = 1;
  for (int s = 0; s < w.type.blocks(); ++s) r *= schur_dim(w.block(s), w.type.length(s));
  return r;
}

CohomologyAnswer bwb_cohomology(const SchurWeight& w, std::int64_t t) {
  auto v = twisted_positions(w, t);
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return CohomologyAnswer::vanishing();

  CohomologyAnswer ans;
  ans.vanishes = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] < v[j]) ++ans.degree;
    }
  }
  const int n = static_cast<int>(v.size());
  const auto r = rho(n);
  ans.mu.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) ans.mu[i] = sorted[i] - r[i];
  ans.dimension = schur_dim(ans.mu, n);
  return ans;
}

BigInt euler_characteristic(const SchurWeight& w, std::int64_t t) {
  const auto c = bwb_cohomology(w, t);
  if (c.vanishes) return 0;
  return c.degree % 2 == 0 ? c.dimension : BigInt(-c.dimension);
}

bool is_ulrich_via_bwb(const SchurWeight& w) {
  const auto v = twisted_positions(w, 0);
  if (std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) != v.end()) return false;
  for (std::int64_t t = 1; t <= w.type.dimension(); ++t) {
    if (!bwb_cohomology(w, t).vanishes) return false;
  }
  return true;
}

std::int64_t flag_dimension(const FlagType& type) {
  const auto k = type.flag_dims();
  std::int64_t n = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const std::int64_t next = i + 1 < k.size() ? k[i + 1] : type.total();
    n += static_cast<std::int64_t>(k[i]) * (next - k[i]);
  }
  if (n != type.dimension()) throw std::logic_error("flag dimension formulas disagree");
  return n;
}

std::int64_t PolarizationWeights::b(int i, int j) const {
  std::int64_t s = 0;
  for (int k = i; k <= j; ++k) s += a.at(static_cast<std::size_t>(k - 1));
  return s;
}

BigInt flag_degree(const FlagType& type, const PolarizationWeights& weights) {
  const int r = type.steps();
  if (static_cast<int>(weights.a.size()) != r) {
    throw std::invalid_argument("need " + std::to_string(r) + " polarization weights");
  }
  for (auto x : weights.a) {
    if (x < 1) throw std::invalid_argument("polarization weights must be positive");
  }
  // k[0] = 0, k[1..r] = flag dims, k[r+1] = n.
  std::vector<std::int64_t> k{0};
  for (int d : type.flag_dims()) k.push_back(d);
  k.push_back(type.total());
  const std::int64_t n = type.total();

  BigInt num = factorial(flag_dimension(type));
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j <= r; ++j) {
      const auto e = static_cast<unsigned>((k[static_cast<std::size_t>(i)] - k[static_cast<std::size_t>(i - 1)]) *
                                           (k[static_cast<std::size_t>(j + 1)] - k[static_cast<std::size_t>(j)]));
      num *= boost::multiprecision::pow(BigInt(weights.b(i, j)), e);
    }
  }
  BigInt den = 1;
  for (int s = 1; s <= r; ++s) {
    const auto ks = k[static_cast<std::size_t>(s)];
    for (auto i = k[static_cast<std::size_t>(s - 1)] + 1; i <= ks; ++i) {
      den *= exact_divide(factorial(n - i), factorial(ks - i), "flag_degree");
    }
  }
  return exact_divide(num, den, "flag_degree");
}

UlrichIdentity ulrich_identity_check(const SchurWeight& w) {
  const auto v = twisted_positions(w, 0);
  if (std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) != v.end()) {
    throw std::invalid_argument("λ + ρ must be strictly decreasing");
  }
  UlrichIdentity id;
  id.h0 = bwb_cohomology(w, 0).dimension;
  id.rank = bundle_rank(w);
  id.degree = flag_degree(w.type, PolarizationWeights::ones(w.type.steps()));
  id.ok = id.h0 == id.rank * id.degree;
  return id;
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace ulrich::geometry
