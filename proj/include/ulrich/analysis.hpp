#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ulrich/core.hpp"

// Three-block structure theory: the greedy reconstruction algorithm, the sumset
// reformulation for a singleton middle block, and the trapezoid/rectangle rules.
//
// Triples are evolved with the middle block held still: A(t) = A - t, B(t) = B,
// C(t) = C + t. Meeting times are identical to the core convention.
namespace ulrich::analysis {

/// (A|B|C) with each set stored in decreasing order. Any of the sets may be empty.
struct Triple {
  std::vector<Entry> a;
  std::vector<Entry> b;
  std::vector<Entry> c;

  static Triple from_partition(const BlockedPartition& p);
  /// Requires all three sets nonempty.
  BlockedPartition to_partition() const;
  std::int64_t dimension() const;
  std::string to_string() const;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// All meeting times of cross-set pairs, sorted. Same-set pairs never meet.
std::vector<Rational> meeting_times(const Triple& t);

/// Parity of A and C agree and all meeting times are distinct positive integers.
bool is_pre_ulrich(const Triple& t);

/// Smallest positive integer that is not a meeting time.
std::int64_t first_uncovered_time(const Triple& t);

struct Extension {
  Triple triple;
  Entry added = 0;
  std::int64_t time = 0;  // the uncovered time the new entry was placed at
  bool parity_ok = true;
  bool pre_ulrich = false;
  /// Earliest meeting time of the new entry that is non-integral or collides with an
  /// existing meeting time. Empty exactly when parity_ok and pre_ulrich hold.
  std::optional<Rational> conflict;
};

/// Adds a new a at the first uncovered time, meeting max(B(t0) ∪ C(t0)).
/// Throws std::invalid_argument if the input is not pre-Ulrich or B ∪ C is empty.
Extension add_a(const Triple& t);
/// Mirror of add_a: meets min(A(t0) ∪ B(t0)).
Extension add_c(const Triple& t);

/// Word over {a,c} replaying (∅|B|∅) into P. Throws std::invalid_argument if P is not
/// a three-block Ulrich partition.
std::string greedy_word(const BlockedPartition& p);

/// Applies `word` to (∅|B|∅) with add_a / add_c. Throws std::invalid_argument on a
/// letter outside {a,c}.
Triple replay(std::string_view word, std::span<const Entry> middle);

struct SumsetDecomposition {
  std::vector<Entry> a_prime;  // increasing
  std::vector<Entry> c_prime;  // increasing
  Entry n_prime = 0;
};

/// Writes a type (α,1,γ) partition as [0,N'] = A' ⨿ C' ⨿ ½(A'+C'). Returns nullopt
/// when no such decomposition exists. Throws std::invalid_argument unless the
/// partition has three blocks and a singleton middle block.
std::optional<SumsetDecomposition> sumset_decompose(const BlockedPartition& p);

/// Dual of a three-block partition translated so the middle block is unchanged:
/// (C + N + 1 | B | A - N - 1).
Triple centered_dual(const BlockedPartition& p);

/// Checks N + 1 = a* - c = a - c* for a ∈ A, a* ∈ A*, c ∈ C, c* ∈ C* with
/// a* - a = c - c*. Throws std::invalid_argument if the hypothesis fails or an
/// argument is not a member of its set.
bool trapezoid_check(const BlockedPartition& p, Entry a, Entry a_star, Entry c, Entry c_star);

struct TrapezoidWitness {
  Entry a;
  Entry a_star;
  Entry c;
  Entry c_star;
  bool holds;
};

/// Every quadruple in A × A* × C × C* satisfying the trapezoid hypothesis.
std::vector<TrapezoidWitness> trapezoid_witnesses(const BlockedPartition& p);

/// |A ∩ A*| <= 1 and |C ∩ C*| <= 1.
bool rectangle_check(const BlockedPartition& p);

/// b1 - b2 for a partition with a two-element middle block.
std::optional<Entry> middle_gap(const BlockedPartition& p);

}  // namespace ulrich::analysis
