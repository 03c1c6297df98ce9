#include "ulrich/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ulrich {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename Int>
Int parse_int(std::string_view token, std::string_view context) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  Int value{};
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed integer '" + std::string(token) + "' in " + std::string(context));
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// FlagType

FlagType::FlagType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.size() < 2) throw std::invalid_argument("flag type needs at least two blocks");
  offsets_.reserve(lengths_.size());
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (lengths_[i] < 1) throw std::invalid_argument("flag type block lengths must be positive");
    offsets_.push_back(total_);
    dimension_ += static_cast<std::int64_t>(total_) * lengths_[i];
    total_ += lengths_[i];
  }
}

FlagType FlagType::from_flag(std::span<const int> dims, int n) {
  std::vector<int> lengths;
  int prev = 0;
  for (int k : dims) {
    lengths.push_back(k - prev);
    prev = k;
  }
  lengths.push_back(n - prev);
  return FlagType(std::move(lengths));
}

std::vector<int> FlagType::flag_dims() const {
  std::vector<int> dims;
  for (int i = 1; i < blocks(); ++i) dims.push_back(offsets_[static_cast<std::size_t>(i)]);
  return dims;
}

FlagType FlagType::reversed() const {
  return FlagType(std::vector<int>(lengths_.rbegin(), lengths_.rend()));
}

std::string FlagType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lengths_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// BlockedPartition

BlockedPartition::BlockedPartition(FlagType type, std::vector<Entry> entries)
    : type_(std::move(type)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != type_.total()) {
    throw InvalidPartition("partition has " + std::to_string(entries_.size()) + " entries but type " +
                           type_.to_string() + " needs " + std::to_string(type_.total()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > kEntryLimit || entries_[i] < -kEntryLimit) {
      throw InvalidPartition("entry " + std::to_string(entries_[i]) + " exceeds the supported range");
    }
    if (i > 0 && entries_[i - 1] <= entries_[i]) {
      throw InvalidPartition("entries must be strictly decreasing, got " + std::to_string(entries_[i - 1]) +
                             " before " + std::to_string(entries_[i]));
    }
  }
}

BlockedPartition BlockedPartition::from_blocks(const std::vector<std::vector<Entry>>& blocks) {
  std::vector<int> lengths;
  std::vector<Entry> entries;
  for (const auto& b : blocks) {
    lengths.push_back(static_cast<int>(b.size()));
    entries.insert(entries.end(), b.begin(), b.end());
  }
  return BlockedPartition(FlagType(std::move(lengths)), std::move(entries));
}

std::span<const Entry> BlockedPartition::block(int i) const {
  return std::span<const Entry>(entries_).subspan(static_cast<std::size_t>(type_.offset(i)),
                                                  static_cast<std::size_t>(type_.length(i)));
}

BlockedPartition BlockedPartition::shifted(Entry c) const {
  std::vector<Entry> e(entries_);
  for (auto& x : e) x += c;
  return BlockedPartition(type_, std::move(e));
}

std::vector<std::vector<Entry>> BlockedPartition::block_vectors() const {
  std::vector<std::vector<Entry>> out;
  for (int i = 0; i < blocks(); ++i) {
    auto b = block(i);
    out.emplace_back(b.begin(), b.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schedules and the Ulrich test

std::vector<Rational> CollisionSchedule::times() const {
  std::vector<Rational> t;
  t.reserve(events.size());
  for (const auto& e : events) t.push_back(e.time);
  return t;
}

std::string UlrichWitness::describe() const {
  switch (kind) {
    case Kind::NonIntegralTime:
      return "non-integral meeting time " + time.to_string();
    case Kind::DuplicateTime:
      return "two pairs meet at time " + time.to_string();
    case Kind::MissingTime:
      return "no pair meets at time " + time.to_string();
  }
  return {};
}

std::vector<Entry> evolve(const BlockedPartition& p, std::int64_t t) {
  std::vector<Entry> pos;
  pos.reserve(p.entries().size());
  for (int i = 0; i < p.blocks(); ++i) {
    for (Entry x : p.block(i)) pos.push_back(x - t * p.velocity(i));
  }
  return pos;
}

CollisionSchedule collision_schedule(const BlockedPartition& p) {
  CollisionSchedule s;
  s.events.reserve(static_cast<std::size_t>(p.dimension()));
  for (int i = 0; i < p.blocks(); ++i) {
    const auto bi = p.block(i);
    for (int j = i + 1; j < p.blocks(); ++j) {
      const auto bj = p.block(j);
      for (int k = 0; k < static_cast<int>(bi.size()); ++k) {
        for (int h = 0; h < static_cast<int>(bj.size()); ++h) {
          s.events.push_back({Rational(bi[static_cast<std::size_t>(k)] - bj[static_cast<std::size_t>(h)], j - i),
                              EntryRef{i, k}, EntryRef{j, h}});
        }
      }
    }
  }
  std::sort(s.events.begin(), s.events.end(), [](const CollisionEvent& x, const CollisionEvent& y) {
    if (x.time != y.time) return x.time < y.time;
    if (x.left != y.left) return x.left < y.left;
    return x.right < y.right;
  });
  return s;
}

UlrichVerdict is_ulrich(const BlockedPartition& p) {
  UlrichVerdict v;
  v.schedule = collision_schedule(p);
  const auto& ev = v.schedule.events;
  for (const auto& e : ev) {
    if (!e.time.is_integer()) {
      v.witness = UlrichWitness{UlrichWitness::Kind::NonIntegralTime, e.time};
      return v;
    }
  }
  for (std::size_t i = 1; i < ev.size(); ++i) {
    if (ev[i].time == ev[i - 1].time) {
      v.witness = UlrichWitness{UlrichWitness::Kind::DuplicateTime, ev[i].time};
      return v;
    }
  }
  // N distinct positive integers equal [N] iff none exceeds N; the first gap is a witness.
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const auto expected = static_cast<std::int64_t>(i) + 1;
    if (ev[i].time != Rational(expected)) {
      v.witness = UlrichWitness{UlrichWitness::Kind::MissingTime, Rational(expected)};
      return v;
    }
  }
  v.is_ulrich = true;
  return v;
}

bool passes_ulrich_test(const FlagType& type, std::span<const Entry> entries) {
  const auto n_dim = type.dimension();
  std::vector<char> seen(static_cast<std::size_t>(n_dim) + 1, 0);
  for (int i = 0; i < type.blocks(); ++i) {
    for (int j = i + 1; j < type.blocks(); ++j) {
      const Entry gap = j - i;
      for (int k = type.offset(i); k < type.offset(i) + type.length(i); ++k) {
        for (int h = type.offset(j); h < type.offset(j) + type.length(j); ++h) {
          const Entry d = entries[static_cast<std::size_t>(k)] - entries[static_cast<std::size_t>(h)];
          if (d % gap != 0) return false;
          const Entry t = d / gap;
          if (t < 1 || t > n_dim || seen[static_cast<std::size_t>(t)]) return false;
          seen[static_cast<std::size_t>(t)] = 1;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Equivalence, symmetry, duality, congruences

BlockedPartition canonicalize(const BlockedPartition& p) { return p.shifted(-p.entries().back()); }

bool equivalent(const BlockedPartition& p, const BlockedPartition& q) {
  return canonicalize(p) == canonicalize(q);
}

BlockedPartition symmetric(const BlockedPartition& p) {
  std::vector<Entry> e(p.entries().rbegin(), p.entries().rend());
  for (auto& x : e) x = -x;
  return BlockedPartition(p.type().reversed(), std::move(e));
}

BlockedPartition dual(const BlockedPartition& p) {
  const auto t = p.dimension() + 1;
  std::vector<std::vector<Entry>> blocks;
  for (int i = p.blocks() - 1; i >= 0; --i) {
    std::vector<Entry> b;
    for (Entry x : p.block(i)) b.push_back(x - t * p.velocity(i));
    blocks.push_back(std::move(b));
  }
  return BlockedPartition::from_blocks(blocks);
}

bool congruence_ok(const BlockedPartition& p) {
  for (int j = 0; j < p.blocks(); ++j) {
    for (int k = j + 1; k < p.blocks(); ++k) {
      const Entry m = k - j;
      if (m == 1) continue;
      for (Entry x : p.block(j)) {
        for (Entry y : p.block(k)) {
          if ((x - y) % m != 0) return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format

std::vector<std::vector<Entry>> parse_blocks(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty partition string");
  std::vector<std::vector<Entry>> blocks;
  for (auto block_text : split(text, '|')) {
    block_text = trim(block_text);
    if (block_text.empty()) throw ParseError("empty block in '" + std::string(text) + "'");
    std::vector<Entry> block;
    for (auto tok : split(block_text, ',')) block.push_back(parse_int<Entry>(tok, text));
    blocks.push_back(std::move(block));
  }
  if (blocks.size() < 2) throw ParseError("a partition needs at least two blocks: '" + std::string(text) + "'");
  return blocks;
}

BlockedPartition parse_partition(std::string_view text) { return BlockedPartition::from_blocks(parse_blocks(text)); }

std::string to_string(const BlockedPartition& p) {
  std::string s;
  for (int i = 0; i < p.blocks(); ++i) {
    if (i) s += '|';
    bool first = true;
    for (Entry x : p.block(i)) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(x);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BlockedPartition& p) { return os << to_string(p); }

FlagType parse_flag_type(std::string_view text) {
  text = trim(text);
  std::vector<int> lengths;
  for (auto tok : split(text, ',')) lengths.push_back(parse_int<int>(tok, text));
  try {
    return FlagType(std::move(lengths));
  } catch (const std::invalid_argument& e) {
    throw ParseError("invalid type '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace ulrich
