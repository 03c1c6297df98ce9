#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ulrich/rational.hpp"

namespace ulrich {

using Entry = std::int64_t;

/// Largest absolute entry accepted by BlockedPartition. Keeps every product of an
/// entry with a time or velocity comfortably inside 64 bits.
inline constexpr Entry kEntryLimit = Entry{1} << 40;

class InvalidPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Block lengths (l_1, ..., l_{r+1}) of a partial flag variety F(k_1, ..., k_r; n).
class FlagType {
 public:
  explicit FlagType(std::vector<int> lengths);

  /// Builds the type of F(k_1, ..., k_r; n) from the increasing dimensions k_i.
  static FlagType from_flag(std::span<const int> dims, int n);

  std::span<const int> lengths() const { return lengths_; }
  int length(int block) const { return lengths_.at(static_cast<std::size_t>(block)); }
  int blocks() const { return static_cast<int>(lengths_.size()); }
  int steps() const { return blocks() - 1; }
  int total() const { return total_; }
  /// k_1, ..., k_r.
  std::vector<int> flag_dims() const;
  /// Number of cross-block pairs, sum_{i<j} l_i l_j.
  std::int64_t dimension() const { return dimension_; }
  /// Index of the first entry of `block` inside the concatenated entry vector.
  int offset(int block) const { return offsets_.at(static_cast<std::size_t>(block)); }
  FlagType reversed() const;

  std::string to_string() const;

  friend bool operator==(const FlagType& x, const FlagType& y) { return x.lengths_ == y.lengths_; }
  friend std::strong_ordering operator<=>(const FlagType& x, const FlagType& y) {
    return x.lengths_ <=> y.lengths_;
  }

 private:
  std::vector<int> lengths_;
  std::vector<int> offsets_;
  int total_ = 0;
  std::int64_t dimension_ = 0;
};

/// Position of an entry: 0-based block and 0-based index inside that block.
struct EntryRef {
  int block = 0;
  int index = 0;
  friend constexpr auto operator<=>(const EntryRef&, const EntryRef&) = default;
};

/// A strictly decreasing integer sequence split into blocks according to a FlagType.
/// Immutable after construction; construction validates every invariant.
class BlockedPartition {
 public:
  BlockedPartition(FlagType type, std::vector<Entry> entries);
  static BlockedPartition from_blocks(const std::vector<std::vector<Entry>>& blocks);

  const FlagType& type() const { return type_; }
  std::span<const Entry> entries() const { return entries_; }
  std::span<const Entry> block(int i) const;
  Entry at(EntryRef ref) const { return block(ref.block)[static_cast<std::size_t>(ref.index)]; }
  int blocks() const { return type_.blocks(); }
  std::int64_t dimension() const { return type_.dimension(); }

  /// Speed at which entries of `block` move left: r + 1 - i in 1-based terms.
  int velocity(int block) const { return type_.steps() - block; }

  BlockedPartition shifted(Entry c) const;
  std::vector<std::vector<Entry>> block_vectors() const;

  friend bool operator==(const BlockedPartition& x, const BlockedPartition& y) {
    return x.type_ == y.type_ && x.entries_ == y.entries_;
  }
  friend std::strong_ordering operator<=>(const BlockedPartition& x, const BlockedPartition& y) {
    if (auto c = x.type_ <=> y.type_; c != 0) return c;
    return x.entries_ <=> y.entries_;
  }

 private:
  FlagType type_;
  std::vector<Entry> entries_;
};

struct CollisionEvent {
  Rational time;
  EntryRef left;   // earlier block
  EntryRef right;  // later block
};

/// One event per cross-block pair, sorted by time and then by (left, right).
struct CollisionSchedule {
  std::vector<CollisionEvent> events;

  std::vector<Rational> times() const;
};

struct UlrichWitness {
  enum class Kind { NonIntegralTime, DuplicateTime, MissingTime };
  Kind kind;
  Rational time;

  std::string describe() const;
};

struct UlrichVerdict {
  bool is_ulrich = false;
  std::optional<UlrichWitness> witness;
  CollisionSchedule schedule;
};

/// Positions at integer time t, block-by-block: entry (i,k) sits at a_k^i - t * velocity(i).
std::vector<Entry> evolve(const BlockedPartition& p, std::int64_t t);

CollisionSchedule collision_schedule(const BlockedPartition& p);

UlrichVerdict is_ulrich(const BlockedPartition& p);

/// Allocation-light Ulrich test on a raw entry vector that is already known to be
/// strictly decreasing. Used on hot paths (search, window enumeration).
bool passes_ulrich_test(const FlagType& type, std::span<const Entry> entries);

/// Equivalent representative with minimum entry 0.
BlockedPartition canonicalize(const BlockedPartition& p);
bool equivalent(const BlockedPartition& p, const BlockedPartition& q);

/// Negate and reverse; reverses the type.
BlockedPartition symmetric(const BlockedPartition& p);

/// Entries of P(N+1) with the block order reversed.
BlockedPartition dual(const BlockedPartition& p);

/// Every entry of block j is congruent to every entry of block k modulo k - j.
bool congruence_ok(const BlockedPartition& p);

// Text format: blocks separated by '|', entries by ','. Example: "5|3,-1,-2,-4|-5".
BlockedPartition parse_partition(std::string_view text);
/// The same grammar without the ordering checks; throws ParseError.
std::vector<std::vector<Entry>> parse_blocks(std::string_view text);
std::string to_string(const BlockedPartition& p);
std::ostream& operator<<(std::ostream& os, const BlockedPartition& p);

/// Comma-separated block lengths, e.g. "1,4,1".
FlagType parse_flag_type(std::string_view text);

}  // namespace ulrich
