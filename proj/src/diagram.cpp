#include "ulrich/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ulrich::diagram {

namespace {

char letter(int block) { return static_cast<char>('a' + block % 26); }

std::string label(const Cell& c) {
  if (c.entries.size() == 1) return std::string(1, letter(c.entries.front().block));
  std::string s = "[";
  for (const auto& e : c.entries) s += letter(e.block);
  return s + "]";
}

std::string pad_center(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  const auto left = (width - s.size()) / 2;
  return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

bool Row::boxed() const {
  return std::any_of(cells.begin(), cells.end(), [](const Cell& c) { return c.entries.size() > 1; });
}

std::vector<Entry> default_velocities(const FlagType& type) {
  std::vector<Entry> v;
  const Entry drift = type.steps() / 2;
  for (int i = 0; i < type.blocks(); ++i) v.push_back(type.steps() - i - drift);
  return v;
}

void validate_velocities(const FlagType& type, const std::vector<Entry>& v) {
  if (static_cast<int>(v.size()) != type.blocks()) {
    throw std::invalid_argument("need one display velocity per block (" + std::to_string(type.blocks()) + ")");
  }
  for (int i = 1; i < type.blocks(); ++i) {
    if (v[static_cast<std::size_t>(i - 1)] - v[static_cast<std::size_t>(i)] != 1) {
      throw std::invalid_argument("display velocities must decrease by exactly 1 from block to block");
    }
  }
}

std::vector<Row> rows(const BlockedPartition& p, const std::vector<Entry>& velocities) {
  validate_velocities(p.type(), velocities);
  std::vector<Row> out;
  for (std::int64_t t = 0; t <= p.dimension() + 1; ++t) {
    std::map<Entry, Cell, std::greater<>> by_pos;
    for (int i = 0; i < p.blocks(); ++i) {
      const auto b = p.block(i);
      for (int k = 0; k < static_cast<int>(b.size()); ++k) {
        const Entry pos = b[static_cast<std::size_t>(k)] - t * velocities[static_cast<std::size_t>(i)];
        auto& cell = by_pos[pos];
        cell.position = pos;
        cell.entries.push_back(EntryRef{i, k});
      }
    }
    Row row;
    row.t = t;
    for (auto& [pos, cell] : by_pos) row.cells.push_back(std::move(cell));
    out.push_back(std::move(row));
  }
  return out;
}

std::int64_t boxed_rows(const BlockedPartition& p) {
  const auto rs = rows(p, default_velocities(p.type()));
  return std::count_if(rs.begin(), rs.end(), [&](const Row& r) { return r.t >= 1 && r.t <= p.dimension() && r.boxed(); });
}

std::string render_ascii(const BlockedPartition& p, const std::vector<Entry>& velocities) {
  const auto rs = rows(p, velocities);
  Entry hi = rs.front().cells.front().position;
  Entry lo = hi;
  std::size_t width = 4;
  for (const auto& r : rs) {
    hi = std::max(hi, r.cells.front().position);
    lo = std::min(lo, r.cells.back().position);
    for (const auto& c : r.cells) width = std::max(width, label(c).size() + 1);
  }
  width = std::max(width, std::max(std::to_string(hi).size(), std::to_string(lo).size()) + 1);
  const std::size_t gutter = std::to_string(p.dimension() + 1).size() + 3;

  std::ostringstream os;
  os << std::string(gutter, ' ');
  for (Entry x = hi; x >= lo; --x) os << pad_center(std::to_string(x), width);
  os << '\n';
  for (const auto& r : rs) {
    if (r.t == p.dimension() + 1) os << std::string(gutter + static_cast<std::size_t>(hi - lo + 1) * width, '-') << '\n';
    std::string line = pad_left("t=" + std::to_string(r.t), gutter - 1) + " ";
    std::size_t next = 0;
    for (Entry x = hi; x >= lo; --x) {
      if (next < r.cells.size() && r.cells[next].position == x) {
        line += pad_center(label(r.cells[next]), width);
        ++next;
      } else {
        line += pad_center(".", width);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string render_svg(const BlockedPartition& p, const std::vector<Entry>& velocities) {
  constexpr int pitch = 12;
  constexpr int margin = 36;
  const auto rs = rows(p, velocities);
  Entry hi = rs.front().cells.front().position;
  Entry lo = hi;
  for (const auto& r : rs) {
    hi = std::max(hi, r.cells.front().position);
    lo = std::min(lo, r.cells.back().position);
  }
  const auto cols = hi - lo + 1;
  const auto width = margin + cols * pitch + pitch;
  const auto height = pitch * static_cast<Entry>(rs.size() + 2) + pitch;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"monospace\" font-size=\"9\">\n";
  os << "<title>" << to_string(p) << "</title>\n";
  for (const auto& r : rs) {
    const Entry y = pitch * (r.t + 1) + (r.t == p.dimension() + 1 ? pitch : 0);
    if (r.t == p.dimension() + 1) {
      os << "<line x1=\"0\" y1=\"" << y - pitch / 2 - 3 << "\" x2=\"" << width << "\" y2=\"" << y - pitch / 2 - 3
         << "\" stroke=\"black\" stroke-dasharray=\"3,2\"/>\n";
    }
    os << "<g class=\"row\" data-t=\"" << r.t << "\">\n";
    os << "<text x=\"2\" y=\"" << y << "\">t=" << r.t << "</text>\n";
    for (const auto& c : r.cells) {
      const Entry x = margin + (hi - c.position) * pitch;
      std::string text;
      for (const auto& e : c.entries) text += letter(e.block);
      if (c.entries.size() > 1) {
        os << "<rect x=\"" << x - 1 << "\" y=\"" << y - pitch + 2 << "\" width=\"" << pitch * static_cast<Entry>(c.entries.size()) / 2 + 4
           << "\" height=\"" << pitch << "\" fill=\"none\" stroke=\"black\"/>\n";
      }
      os << "<text x=\"" << x << "\" y=\"" << y << "\">" << text << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ulrich::diagram
