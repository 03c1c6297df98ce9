#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "ulrich/core.hpp"

// Exhaustive enumeration of Ulrich partitions of a fixed type.
namespace ulrich::search {

enum class SearchMode { BaselineOracle, TimeBranching };

struct SearchLimits {
  std::optional<double> seconds;          // wall-clock budget
  std::optional<std::uint64_t> max_nodes;  // node cap across all workers
  int threads = 1;
};

struct SearchSpec {
  FlagType type;
  SearchMode mode = SearchMode::TimeBranching;
  SearchLimits limits;
};

struct SearchReport {
  FlagType type;
  /// Canonical representatives (minimum entry 0), sorted.
  std::vector<BlockedPartition> partitions;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0;
  /// False when a budget stopped the search; the list is then possibly incomplete.
  bool exhausted = true;
  /// For palindromic types: index of symmetric(partitions[i]) in the list (i itself when
  /// self-symmetric). Empty for other types.
  std::vector<std::size_t> symmetric_partner;

  std::size_t count() const { return partitions.size(); }
};

/// Largest dimension accepted by the baseline oracle.
inline constexpr std::int64_t kBaselineMaxDimension = 14;

/// Calls `visit` on every strictly decreasing entry vector with last entry 0 in which each
/// entry of block i is at most N * max(1, velocity(i)). Every canonical Ulrich partition of
/// the type lies in this window.
void for_each_in_window(const FlagType& type, const std::function<void(std::span<const Entry>)>& visit);

/// Window enumeration filtered by the Ulrich test. Throws std::invalid_argument when
/// N > kBaselineMaxDimension.
SearchReport baseline_oracle(const FlagType& type);

/// Called on every search node with the current frontier time and the covered-time table
/// (index t is nonzero when some placed pair meets at t). Single-threaded searches only.
using NodeObserver = std::function<void(std::int64_t frontier, std::span<const std::uint8_t> covered)>;

/// Depth-first search ordered by collision time.
SearchReport time_branching_search(const FlagType& type, const SearchLimits& limits = {},
                                   const NodeObserver& observer = {});

SearchReport enumerate_ulrich(const SearchSpec& spec);

/// Types with at least four blocks and total length in [4, max_total_length].
std::vector<FlagType> multistep_types(int max_total_length);
/// Three-block types (α,β,γ) with β >= 3, γ >= 3 and α + β + γ <= max_sum.
std::vector<FlagType> conjecture_types(int max_sum);

using ReportCallback = std::function<void(const SearchReport&)>;

/// Runs the search over `types`, skipping those in `skip`. The wall-clock budget covers the
/// whole sweep; the node cap applies to each type. Types not reached before the deadline get
/// an empty report with exhausted = false.
std::vector<SearchReport> sweep(const std::vector<FlagType>& types, const SearchLimits& limits,
                                const std::set<FlagType>& skip = {}, const ReportCallback& on_report = {});

/// Throws std::invalid_argument if max_total_length < 4.
std::vector<SearchReport> verify_no_multistep(int max_total_length, const SearchLimits& limits = {});
/// Throws std::invalid_argument if max_sum < 9.
std::vector<SearchReport> verify_conjecture_sweep(int max_sum, const SearchLimits& limits = {});

}  // namespace ulrich::search
