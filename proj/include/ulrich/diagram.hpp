#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulrich/core.hpp"

// Time evolution diagrams: one row per t = 0..N+1, entries drawn at their displayed
// positions, coinciding entries boxed.
namespace ulrich::diagram {

/// Core velocities shifted by floor(r/2); for three blocks this is (1, 0, -1).
std::vector<Entry> default_velocities(const FlagType& type);

/// Throws std::invalid_argument unless `v` has one value per block and differs from the
/// core velocities by a constant.
void validate_velocities(const FlagType& type, const std::vector<Entry>& v);

struct Cell {
  Entry position = 0;
  std::vector<EntryRef> entries;  // more than one entry means a coincidence
};

struct Row {
  std::int64_t t = 0;
  std::vector<Cell> cells;  // sorted by decreasing position
  bool boxed() const;
};

std::vector<Row> rows(const BlockedPartition& p, const std::vector<Entry>& velocities);

/// Number of rows with t in [1,N] containing a coincidence.
std::int64_t boxed_rows(const BlockedPartition& p);

std::string render_ascii(const BlockedPartition& p, const std::vector<Entry>& velocities);
std::string render_svg(const BlockedPartition& p, const std::vector<Entry>& velocities);

}  // namespace ulrich::diagram
