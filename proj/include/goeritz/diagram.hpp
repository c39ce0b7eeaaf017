#pragma once

// Link diagrams as crossing codes, and their complementary regions.
//
// A crossing lists four edge labels in counterclockwise order; slots 0 and 2
// carry the under-strand, slots 1 and 3 the over-strand. Quadrant q of a
// crossing is the sector between slots q and q+1 (mod 4). Free circles are
// crossing-free components sitting in the unbounded region.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goeritz/errors.hpp"

namespace goeritz {

using Label = std::int64_t;
using RegionId = std::size_t;

struct Crossing {
  std::array<Label, 4> slots{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class Diagram {
 public:
  Diagram() = default;

  /// Validates label multiplicities; throws ParseError.
  Diagram(std::vector<Crossing> crossings, std::size_t free_circles)
      : crossings_(std::move(crossings)), free_circles_(free_circles) {
    if (crossings_.empty() && free_circles_ == 0) throw ParseError("diagram is empty");
    std::map<Label, int> seen;
    for (const auto& c : crossings_)
      for (Label l : c.slots) {
        if (l <= 0) throw ParseError("edge label " + std::to_string(l) + " is not positive");
        ++seen[l];
      }
    for (const auto& [label, count] : seen)
      if (count != 2) {
        throw ParseError("edge label " + std::to_string(label) + " occurs " + std::to_string(count) +
                         " times, expected 2");
      }
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t free_circles() const { return free_circles_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::size_t free_circles_ = 0;
};

/// (crossing, slot) position of one end of an edge.
struct SlotRef {
  std::size_t crossing = 0;
  int slot = 0;

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// For every (crossing, slot), the other end of the same edge.
inline std::vector<std::array<SlotRef, 4>> edge_partners(const Diagram& d) {
  std::map<Label, std::vector<SlotRef>> ends;
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) ends[d.crossings()[c].slots[s]].push_back({c, s});
  std::vector<std::array<SlotRef, 4>> partner(d.crossing_count());
  for (const auto& [label, e] : ends) {
    partner[e[0].crossing][e[0].slot] = e[1];
    partner[e[1].crossing][e[1].slot] = e[0];
  }
  return partner;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }
  std::size_t count_roots() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++n;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

struct ProjectionComponents {
  std::vector<std::vector<std::size_t>> crossings;  // ordered by lowest crossing index
  std::size_t free_circles = 0;
};

inline ProjectionComponents underlying_components(const Diagram& d) {
  const auto partner = edge_partners(d);
  detail::DisjointSets sets(d.crossing_count());
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    for (const auto& p : partner[c]) sets.unite(c, p.crossing);

  ProjectionComponents out;
  out.free_circles = d.free_circles();
  std::map<std::size_t, std::size_t> index_of_root;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    auto [it, inserted] = index_of_root.try_emplace(sets.find(c), out.crossings.size());
    if (inserted) out.crossings.emplace_back();
    out.crossings[it->second].push_back(c);
  }
  return out;
}

struct RegionMap {
  std::size_t region_count = 0;
  std::vector<std::array<RegionId, 4>> quadrant_region;      // per crossing, quadrants 0..3
  std::vector<std::pair<RegionId, RegionId>> circle_regions;  // (inside, enclosing) per free circle
  RegionId unbounded_region = 0;

  friend bool operator==(const RegionMap&, const RegionMap&) = default;
};

/// Complementary regions by face tracing.
///
/// Arriving at a crossing through slot t, the face continues out through slot
/// t+1; the corner passed is quadrant t. Each connected projection component
/// contributes its own faces, with the face holding quadrant 0 of its first
/// crossing taken as its outside; all outsides and the free circles share the
/// unbounded region. Bounded faces are numbered in scan order (crossing, then
/// quadrant), free-circle insides follow, and the unbounded region is last.
inline RegionMap trace_regions(const Diagram& d) {
  const std::size_t n = d.crossing_count();
  const auto partner = edge_partners(d);

  detail::DisjointSets faces(4 * n);
  for (std::size_t c = 0; c < n; ++c)
    for (int q = 0; q < 4; ++q) {
      const SlotRef next = partner[c][(q + 1) % 4];
      faces.unite(4 * c + q, 4 * next.crossing + next.slot);
    }

  const auto components = underlying_components(d);
  std::vector<bool> is_outside(4 * n, false);
  for (const auto& comp : components.crossings) {
    std::vector<std::size_t> roots;
    for (std::size_t c : comp)
      for (int q = 0; q < 4; ++q) roots.push_back(faces.find(4 * c + q));
    std::sort(roots.begin(), roots.end());
    const auto face_count = static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
    if (face_count != comp.size() + 2) {
      throw NonPlanarError("rotation data is not planar: component containing crossing " +
                           std::to_string(comp.front()) + " has " + std::to_string(face_count) + " faces, expected " +
                           std::to_string(comp.size() + 2));
    }
    is_outside[faces.find(4 * comp.front())] = true;
  }

  RegionMap rm;
  rm.quadrant_region.resize(n);
  std::map<std::size_t, RegionId> id_of_root;
  RegionId next_id = 0;
  for (std::size_t c = 0; c < n; ++c)
    for (int q = 0; q < 4; ++q) {
      const std::size_t root = faces.find(4 * c + q);
      if (is_outside[root]) continue;
      auto [it, inserted] = id_of_root.try_emplace(root, next_id);
      if (inserted) ++next_id;
      rm.quadrant_region[c][q] = it->second;
    }
  std::vector<RegionId> circle_insides;
  for (std::size_t k = 0; k < d.free_circles(); ++k) circle_insides.push_back(next_id++);
  rm.unbounded_region = next_id++;
  rm.region_count = next_id;
  for (std::size_t c = 0; c < n; ++c)
    for (int q = 0; q < 4; ++q)
      if (is_outside[faces.find(4 * c + q)]) rm.quadrant_region[c][q] = rm.unbounded_region;
  for (RegionId inside : circle_insides) rm.circle_regions.emplace_back(inside, rm.unbounded_region);
  return rm;
}

namespace detail {

class DiagramParser {
 public:
  explicit DiagramParser(std::string_view text) : text_(text) {}

  Diagram parse() {
    std::vector<Crossing> crossings;
    bool have_circles = false;
    std::size_t circles = 0;
    for (;;) {
      skip_separators();
      if (at_end()) break;
      const char c = text_[pos_];
      if (c == 'X') {
        ++pos_;
        expect('(');
        Crossing x;
        for (int s = 0; s < 4; ++s) {
          if (s > 0) expect(',');
          x.slots[s] = read_number();
          if (x.slots[s] <= 0) fail("edge labels must be positive");
        }
        expect(')');
        crossings.push_back(x);
      } else if (c == 'O') {
        ++pos_;
        if (have_circles) fail("at most one 'O' item is allowed");
        have_circles = true;
        circles = static_cast<std::size_t>(read_number());
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      end_item();
    }
    return Diagram(std::move(crossings), circles);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_blanks() {
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_separators() {
    for (;;) {
      skip_blanks();
      if (!at_end() && (text_[pos_] == ';' || text_[pos_] == '\n')) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  void end_item() {
    skip_blanks();
    if (at_end()) return;
    if (text_[pos_] != ';' && text_[pos_] != '\n') fail("expected ';' or newline after item");
  }

  void expect(char c) {
    skip_blanks();
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t read_number() {
    skip_blanks();
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("number out of range");
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    if (value < 0) fail("negative number");
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(std::min(pos_, text_.size())), '\n'));
    throw ParseError("line " + std::to_string(line) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `X(a,b,c,d)` crossing items and at most one `O k` circle item,
/// separated by ';' or newlines, with '#' comments.
inline Diagram parse_diagram(std::string_view text) { return detail::DiagramParser(text).parse(); }

inline std::string serialize(const Diagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    if (!out.empty()) out += ';';
    out += "X(" + std::to_string(c.slots[0]) + ',' + std::to_string(c.slots[1]) + ',' + std::to_string(c.slots[2]) +
           ',' + std::to_string(c.slots[3]) + ')';
  }
  if (d.free_circles() > 0) {
    if (!out.empty()) out += ';';
    out += "O " + std::to_string(d.free_circles());
  }
  return out;
}

}  // namespace goeritz
