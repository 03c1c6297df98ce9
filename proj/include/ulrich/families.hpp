#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ulrich/core.hpp"

// Constructors for the known infinite families and sporadic examples of Ulrich
// partitions. Every constructor that returns a BlockedPartition checks its output
// with is_ulrich before returning and throws std::logic_error if the check fails.
namespace ulrich::families {

/// Type (1,n,1): (n+1 | B | -n-1) where p in B for p in `subset`, -p in B otherwise.
BlockedPartition one_n_one(int n, const std::set<int>& subset);

/// Number k = (4^{m+1} - 1) / 3 appearing in the (2,1,k) and (1,2,k) families.
std::int64_t power_four_count(int m);

/// The unique Ulrich partition of type (2,1,k), k = (4^{m+1}-1)/3, built from the
/// recursive sumset decomposition.
BlockedPartition two_one_k(int m);

/// (2 | 1,0 | C_k) of type (1,2,k), k = (4^{m+1}-1)/3.
BlockedPartition one_two_k(int m);

/// Type (k1+k2, 2, 1) member of the two-parameter family; assembled by the greedy
/// algorithm from its two boundary subpartitions.
BlockedPartition two_param(int m1, int m2);

/// A (2,n,1)-shaped pattern (a1, a2 | b... | c) whose middle block may be empty.
/// Exists so that the degenerate seed F_1 = (3,1|∅|-1) can be elongated.
struct TwoNOnePattern {
  Entry a1 = 0;
  Entry a2 = 0;
  std::vector<Entry> b;
  Entry c = 0;

  /// Throws std::invalid_argument when the middle block is empty.
  BlockedPartition to_partition() const;
  static TwoNOnePattern from_partition(const BlockedPartition& p);
  friend bool operator==(const TwoNOnePattern&, const TwoNOnePattern&) = default;
};

/// F_m = (3m, m | m-1, ..., 1 | -m). Valid for every m >= 1.
TwoNOnePattern fundamental_pattern(int m);

/// F_m as a partition; requires m >= 2 (F_1 has an empty middle block).
BlockedPartition fundamental_F(int m);

/// One elongation step. Input is renormalised to (y+2m, y | ... | -y) first.
TwoNOnePattern elongate(const TwoNOnePattern& p);
BlockedPartition elongate(const BlockedPartition& p);

/// E^k(F_m), Ulrich of type (2, 2mk+m-1, 1).
BlockedPartition elongated_family(int k, int m);

/// P_u of type (2, 2u, 2).
BlockedPartition p_u(int u);

/// Sporadic examples: "221", "121", "222", "322" and "223" (= symmetric of "322").
BlockedPartition sporadic(std::string_view name);
std::vector<std::string> sporadic_names();

/// Symmetric dual (P^s)^*; same type as P.
BlockedPartition symmetric_dual(const BlockedPartition& p);

}  // namespace ulrich::families
