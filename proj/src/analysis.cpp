#include "ulrich/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ulrich::analysis {

namespace {

bool contains(std::span<const Entry> s, Entry x) { return std::find(s.begin(), s.end(), x) != s.end(); }

void insert_decreasing(std::vector<Entry>& v, Entry x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x, std::greater<>()), x);
}

void require_ordered(const Triple& t) {
  auto strictly_decreasing = [](const std::vector<Entry>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
  };
  if (!strictly_decreasing(t.a) || !strictly_decreasing(t.b) || !strictly_decreasing(t.c)) {
    throw std::invalid_argument("triple sets must be strictly decreasing");
  }
  auto lowest = [](const std::vector<Entry>& x) { return x.back(); };
  auto highest = [](const std::vector<Entry>& x) { return x.front(); };
  if ((!t.a.empty() && !t.b.empty() && lowest(t.a) <= highest(t.b)) ||
      (!t.b.empty() && !t.c.empty() && lowest(t.b) <= highest(t.c)) ||
      (!t.a.empty() && !t.c.empty() && lowest(t.a) <= highest(t.c))) {
    throw std::invalid_argument("triple must satisfy a > b > c: " + t.to_string());
  }
}

// Meeting times of a single entry against the other sets; `block` is 0, 1 or 2.
std::vector<Rational> times_of(const Triple& t, int block, Entry x) {
  std::vector<Rational> out;
  if (block != 0) {
    for (Entry a : t.a) out.emplace_back(a - x, block);
  }
  if (block != 1) {
    for (Entry b : t.b) out.emplace_back(block == 0 ? x - b : b - x, 1);
  }
  if (block != 2) {
    for (Entry c : t.c) out.emplace_back(x - c, 2 - block);
  }
  return out;
}

bool same_parity(const Triple& t) {
  std::optional<Entry> parity;
  for (const auto* s : {&t.a, &t.c}) {
    for (Entry x : *s) {
      const Entry p = ((x % 2) + 2) % 2;
      if (parity && *parity != p) return false;
      parity = p;
    }
  }
  return true;
}

Extension extend(const Triple& t, int block) {
  require_ordered(t);
  if (!is_pre_ulrich(t)) throw std::invalid_argument("triple is not pre-Ulrich: " + t.to_string());

  Extension ext;
  ext.time = first_uncovered_time(t);
  const Entry t0 = ext.time;
  if (block == 0) {
    if (t.b.empty() && t.c.empty()) throw std::invalid_argument("add_a needs a nonempty B or C");
    Entry top = t.b.empty() ? t.c.front() + t0 : t.b.front();
    if (!t.c.empty()) top = std::max(top, t.c.front() + t0);
    ext.added = top + t0;
  } else {
    if (t.a.empty() && t.b.empty()) throw std::invalid_argument("add_c needs a nonempty A or B");
    Entry bottom = t.b.empty() ? t.a.back() - t0 : t.b.back();
    if (!t.a.empty()) bottom = std::min(bottom, t.a.back() - t0);
    ext.added = bottom - t0;
  }

  ext.triple = t;
  insert_decreasing(block == 0 ? ext.triple.a : ext.triple.c, ext.added);

  const auto old_times = meeting_times(t);
  auto new_times = times_of(t, block, ext.added);
  std::sort(new_times.begin(), new_times.end());
  for (std::size_t i = 0; i < new_times.size(); ++i) {
    const auto& q = new_times[i];
    const bool clash = !q.is_integer() || std::binary_search(old_times.begin(), old_times.end(), q) ||
                       (i > 0 && new_times[i - 1] == q);
    if (clash) {
      ext.conflict = q;
      break;
    }
  }
  ext.parity_ok = same_parity(ext.triple);
  ext.pre_ulrich = ext.parity_ok && is_pre_ulrich(ext.triple);
  return ext;
}

}  // namespace

// ---------------------------------------------------------------------------

Triple Triple::from_partition(const BlockedPartition& p) {
  if (p.blocks() != 3) throw std::invalid_argument("expected a three-block partition");
  auto b = p.block_vectors();
  return Triple{std::move(b[0]), std::move(b[1]), std::move(b[2])};
}

BlockedPartition Triple::to_partition() const { return BlockedPartition::from_blocks({a, b, c}); }

std::int64_t Triple::dimension() const {
  const auto na = static_cast<std::int64_t>(a.size());
  const auto nb = static_cast<std::int64_t>(b.size());
  const auto nc = static_cast<std::int64_t>(c.size());
  return na * nb + na * nc + nb * nc;
}

std::string Triple::to_string() const {
  auto part = [](const std::vector<Entry>& v) {
    if (v.empty()) return std::string("∅");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  return part(a) + "|" + part(b) + "|" + part(c);
}

std::vector<Rational> meeting_times(const Triple& t) {
  std::vector<Rational> out;
  for (Entry a : t.a) {
    for (Entry b : t.b) out.emplace_back(a - b);
    for (Entry c : t.c) out.emplace_back(a - c, 2);
  }
  for (Entry b : t.b) {
    for (Entry c : t.c) out.emplace_back(b - c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_pre_ulrich(const Triple& t) {
  if (!same_parity(t)) return false;
  const auto times = meeting_times(t);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!times[i].is_integer() || times[i] <= Rational(0)) return false;
    if (i > 0 && times[i] == times[i - 1]) return false;
  }
  return true;
}

std::int64_t first_uncovered_time(const Triple& t) {
  std::set<std::int64_t> covered;
  for (const auto& q : meeting_times(t)) {
    if (q.is_integer()) covered.insert(q.num());
  }
  std::int64_t t0 = 1;
  while (covered.count(t0)) ++t0;
  return t0;
}

Extension add_a(const Triple& t) { return extend(t, 0); }
Extension add_c(const Triple& t) { return extend(t, 2); }

std::string greedy_word(const BlockedPartition& p) {
  if (p.blocks() != 3) throw std::invalid_argument("greedy_word needs a three-block partition");
  if (!is_ulrich(p).is_ulrich) throw std::invalid_argument("greedy_word needs an Ulrich partition: " + to_string(p));
  const auto target = Triple::from_partition(p);
  Triple cur{{}, target.b, {}};
  std::string word;
  while (cur.a.size() < target.a.size() || cur.c.size() < target.c.size()) {
    auto ea = add_a(cur);
    if (contains(target.a, ea.added)) {
      word += 'a';
      cur = std::move(ea.triple);
      continue;
    }
    auto ec = add_c(cur);
    if (contains(target.c, ec.added)) {
      word += 'c';
      cur = std::move(ec.triple);
      continue;
    }
    throw std::logic_error("greedy reconstruction stalled at " + cur.to_string());
  }
  return word;
}

Triple replay(std::string_view word, std::span<const Entry> middle) {
  Triple cur{{}, std::vector<Entry>(middle.begin(), middle.end()), {}};
  for (char letter : word) {
    if (letter == 'a') {
      cur = add_a(cur).triple;
    } else if (letter == 'c') {
      cur = add_c(cur).triple;
    } else {
      throw std::invalid_argument(std::string("greedy words use only 'a' and 'c', got '") + letter + "'");
    }
  }
  return cur;
}

std::optional<SumsetDecomposition> sumset_decompose(const BlockedPartition& p) {
  if (p.blocks() != 3 || p.type().length(1) != 1) {
    throw std::invalid_argument("sumset decomposition needs type (α,1,γ), got " + p.type().to_string());
  }
  const Entry b = p.block(1)[0];
  SumsetDecomposition d;
  d.n_prime = p.dimension() - 1;
  for (Entry a : p.block(0)) d.a_prime.push_back(a - b - 1);
  for (Entry c : p.block(2)) d.c_prime.push_back(b - c - 1);
  std::sort(d.a_prime.begin(), d.a_prime.end());
  std::sort(d.c_prime.begin(), d.c_prime.end());

  std::vector<char> hit(static_cast<std::size_t>(d.n_prime) + 1, 0);
  auto mark = [&](Entry x) {
    if (x < 0 || x > d.n_prime || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = 1;
    return true;
  };
  for (Entry x : d.a_prime) {
    if (!mark(x)) return std::nullopt;
  }
  for (Entry x : d.c_prime) {
    if (!mark(x)) return std::nullopt;
  }
  for (Entry x : d.a_prime) {
    for (Entry y : d.c_prime) {
      if ((x + y) % 2 != 0 || !mark((x + y) / 2)) return std::nullopt;
    }
  }
  // |A'| + |C'| + |A'||C'| = N' + 1, so no gaps remain once every mark succeeded.
  return d;
}

Triple centered_dual(const BlockedPartition& p) {
  if (p.blocks() != 3) throw std::invalid_argument("centered_dual needs a three-block partition");
  const Entry shift = p.dimension() + 1;
  const auto t = Triple::from_partition(p);
  Triple d;
  for (Entry c : t.c) d.a.push_back(c + shift);
  d.b = t.b;
  for (Entry a : t.a) d.c.push_back(a - shift);
  return d;
}

bool trapezoid_check(const BlockedPartition& p, Entry a, Entry a_star, Entry c, Entry c_star) {
  const auto t = Triple::from_partition(p);
  const auto d = centered_dual(p);
  if (!contains(t.a, a) || !contains(d.a, a_star) || !contains(t.c, c) || !contains(d.c, c_star)) {
    throw std::invalid_argument("trapezoid_check: arguments must lie in A, A*, C, C* respectively");
  }
  if (a_star - a != c - c_star) throw std::invalid_argument("trapezoid_check: hypothesis a* - a = c - c* fails");
  const Entry n1 = p.dimension() + 1;
  return a_star - c == n1 && a - c_star == n1;
}

std::vector<TrapezoidWitness> trapezoid_witnesses(const BlockedPartition& p) {
  const auto t = Triple::from_partition(p);
  const auto d = centered_dual(p);
  const Entry n1 = p.dimension() + 1;
  std::vector<TrapezoidWitness> out;
  for (Entry a : t.a) {
    for (Entry as : d.a) {
      for (Entry c : t.c) {
        for (Entry cs : d.c) {
          if (as - a == c - cs) out.push_back({a, as, c, cs, as - c == n1 && a - cs == n1});
        }
      }
    }
  }
  return out;
}

bool rectangle_check(const BlockedPartition& p) {
  const auto t = Triple::from_partition(p);
  const auto d = centered_dual(p);
  auto shared = [](const std::vector<Entry>& x, const std::vector<Entry>& y) {
    return std::count_if(x.begin(), x.end(), [&](Entry v) { return contains(y, v); });
  };
  return shared(t.a, d.a) <= 1 && shared(t.c, d.c) <= 1;
}

std::optional<Entry> middle_gap(const BlockedPartition& p) {
  if (p.blocks() != 3 || p.type().length(1) != 2) return std::nullopt;
  return p.block(1)[0] - p.block(1)[1];
}

}  // namespace ulrich::analysis
