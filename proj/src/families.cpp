#include "ulrich/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "ulrich/analysis.hpp"

namespace ulrich::families {

namespace {

BlockedPartition checked(BlockedPartition p, std::string_view what) {
  if (!is_ulrich(p).is_ulrich) {
    throw std::logic_error(std::string(what) + " produced a non-Ulrich partition " + to_string(p));
  }
  return p;
}

std::int64_t pow4(int e) { return std::int64_t{1} << (2 * e); }

void require_nonnegative(int m, std::string_view what) {
  if (m < 0) throw std::invalid_argument(std::string(what) + ": parameter must be >= 0");
  // 4^{m+1} has to stay well inside the entry range.
  if (m > 18) throw std::invalid_argument(std::string(what) + ": parameter too large");
}

std::vector<Entry> one_two_tail(int m) {
  std::vector<Entry> c;
  for (int j = 0; j <= m; ++j) {
    const Entry last = -pow4(j + 1);
    const Entry run = pow4(j);
    for (Entry i = run - 1; i >= 0; --i) c.push_back(last + 2 * i);
  }
  return c;
}

}  // namespace

BlockedPartition one_n_one(int n, const std::set<int>& subset) {
  if (n < 1) throw std::invalid_argument("one_n_one: n must be positive");
  for (int p : subset) {
    if (p < 1 || p > n) throw std::invalid_argument("one_n_one: subset element " + std::to_string(p) + " outside [1,n]");
  }
  std::vector<Entry> b;
  for (int p = 1; p <= n; ++p) b.push_back(subset.count(p) ? p : -p);
  std::sort(b.begin(), b.end(), std::greater<>());
  return checked(BlockedPartition::from_blocks({{n + 1}, b, {-n - 1}}), "one_n_one");
}

std::int64_t power_four_count(int m) { return (pow4(m + 1) - 1) / 3; }

BlockedPartition two_one_k(int m) {
  require_nonnegative(m, "two_one_k");
  std::vector<Entry> c_prime;
  for (int level = 0; level <= m; ++level) {
    const Entry n_prime = pow4(level + 1);
    for (auto& c : c_prime) c *= 4;
    for (Entry c = 2; c <= n_prime; c += 4) c_prime.push_back(c);
  }
  std::sort(c_prime.begin(), c_prime.end());
  std::vector<Entry> c_block;
  for (Entry c : c_prime) c_block.push_back(-(c + 1));
  return checked(BlockedPartition::from_blocks({{pow4(m + 1) + 1, 1}, {0}, c_block}), "two_one_k");
}

BlockedPartition one_two_k(int m) {
  require_nonnegative(m, "one_two_k");
  return checked(BlockedPartition::from_blocks({{2}, {1, 0}, one_two_tail(m)}), "one_two_k");
}

BlockedPartition two_param(int m1, int m2) {
  require_nonnegative(m1, "two_param");
  require_nonnegative(m2, "two_param");
  // Both containments, written with the middle block pinned at {1,0}.
  const auto first = analysis::centered_dual(one_two_k(m1));
  const auto second = symmetric(one_two_k(m2)).shifted(1);
  const Entry n_dim = pow4(m1 + 1) + pow4(m2 + 1);
  const Entry second_shift = n_dim - second.dimension();

  std::vector<Entry> want_a(first.a);
  for (Entry a : second.block(0)) want_a.push_back(a + second_shift);
  std::vector<Entry> want_c(first.c);

  auto member = [](const std::vector<Entry>& v, Entry x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  analysis::Triple cur{{}, {1, 0}, {}};
  while (cur.a.size() + cur.c.size() < want_a.size() + want_c.size()) {
    auto ea = analysis::add_a(cur);
    if (member(want_a, ea.added)) {
      cur = std::move(ea.triple);
      continue;
    }
    auto ec = analysis::add_c(cur);
    if (member(want_c, ec.added)) {
      cur = std::move(ec.triple);
      continue;
    }
    throw std::logic_error("two_param: greedy assembly left the prescribed entries at " + cur.to_string());
  }
  auto p = checked(cur.to_partition(), "two_param");
  if (p.dimension() != n_dim) throw std::logic_error("two_param: unexpected dimension");
  return p;
}

// ---------------------------------------------------------------------------

BlockedPartition TwoNOnePattern::to_partition() const {
  if (b.empty()) throw std::invalid_argument("pattern has an empty middle block");
  return BlockedPartition::from_blocks({{a1, a2}, b, {c}});
}

TwoNOnePattern TwoNOnePattern::from_partition(const BlockedPartition& p) {
  if (p.blocks() != 3 || p.type().length(0) != 2 || p.type().length(2) != 1) {
    throw std::invalid_argument("expected type (2,n,1), got " + p.type().to_string());
  }
  const auto mid = p.block(1);
  return TwoNOnePattern{p.block(0)[0], p.block(0)[1], std::vector<Entry>(mid.begin(), mid.end()), p.block(2)[0]};
}

TwoNOnePattern fundamental_pattern(int m) {
  if (m < 1) throw std::invalid_argument("fundamental pattern needs m >= 1");
  TwoNOnePattern f{3 * m, m, {}, -m};
  for (int i = m - 1; i >= 1; --i) f.b.push_back(i);
  return f;
}

BlockedPartition fundamental_F(int m) {
  if (m < 2) throw std::invalid_argument("F_m is a partition only for m >= 2");
  return checked(fundamental_pattern(m).to_partition(), "fundamental_F");
}

TwoNOnePattern elongate(const TwoNOnePattern& p) {
  const Entry gap = p.a1 - p.a2;
  if (gap <= 0 || gap % 2 != 0) throw std::invalid_argument("elongate: a1 - a2 must be positive and even");
  if ((p.a2 + p.c) % 2 != 0) throw std::invalid_argument("elongate: a2 + c must be even");
  const Entry s = (p.a2 + p.c) / 2;
  const Entry y = p.a2 - s;
  const Entry m = gap / 2;

  TwoNOnePattern e;
  e.a1 = y + 5 * m + s;
  e.a2 = y + 3 * m + s;
  for (Entry x = y + 3 * m - 1; x >= y + 2 * m; --x) e.b.push_back(x + s);
  e.b.insert(e.b.end(), p.b.begin(), p.b.end());
  for (Entry x = -y - m; x >= -y - 2 * m + 1; --x) e.b.push_back(x + s);
  e.c = -y - 3 * m + s;
  return e;
}

BlockedPartition elongate(const BlockedPartition& p) {
  return elongate(TwoNOnePattern::from_partition(p)).to_partition();
}

BlockedPartition elongated_family(int k, int m) {
  if (k < 0 || m < 1) throw std::invalid_argument("elongated_family needs k >= 0 and m >= 1");
  if (k == 0 && m == 1) throw std::invalid_argument("E^0(F_1) has an empty middle block");
  auto f = fundamental_pattern(m);
  for (int i = 0; i < k; ++i) f = elongate(f);
  return checked(f.to_partition(), "elongated_family");
}

BlockedPartition p_u(int u) {
  if (u < 1) throw std::invalid_argument("p_u needs u >= 1");
  std::vector<Entry> b;
  for (Entry x = 2 * u; x >= 2; x -= 2) b.push_back(x);
  for (Entry x = -1; x >= -2 * u + 1; x -= 2) b.push_back(x);
  return checked(BlockedPartition::from_blocks({{6 * u + 5, 2 * u + 1}, b, {-2 * u - 1, -6 * u - 3}}), "p_u");
}

BlockedPartition sporadic(std::string_view name) {
  if (name == "221") return checked(parse_partition("8,6|5,0|-2"), "sporadic");
  if (name == "121") return checked(parse_partition("4|3,0|-2"), "sporadic");
  if (name == "222") return checked(parse_partition("12,4|3,0|-2,-8"), "sporadic");
  if (name == "322") return checked(parse_partition("16,10,4|3,0|-2,-12"), "sporadic");
  if (name == "223") return checked(symmetric(sporadic("322")), "sporadic");
  throw std::invalid_argument("unknown sporadic example '" + std::string(name) + "'");
}

std::vector<std::string> sporadic_names() { return {"221", "121", "222", "322", "223"}; }

BlockedPartition symmetric_dual(const BlockedPartition& p) { return dual(symmetric(p)); }

}  // namespace ulrich::families
