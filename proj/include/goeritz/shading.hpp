#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "goeritz/diagram.hpp"
#include "goeritz/errors.hpp"

namespace goeritz {

enum class Shade : std::uint8_t { unshaded, shaded };

inline Shade opposite(Shade s) { return s == Shade::shaded ? Shade::unshaded : Shade::shaded; }

/// Checkerboard shading. Index 0 leaves the unbounded region unshaded; index 1 is its opposite.
struct Shading {
  std::vector<Shade> shade;  // per region id
  int index = 0;

  bool is_shaded(RegionId r) const { return shade[r] == Shade::shaded; }

  std::vector<RegionId> regions(Shade which) const {
    std::vector<RegionId> out;
    for (RegionId r = 0; r < shade.size(); ++r)
      if (shade[r] == which) out.push_back(r);
    return out;
  }

  friend bool operator==(const Shading&, const Shading&) = default;
};

inline std::pair<Shading, Shading> checkerboard(const RegionMap& rm) {
  // Regions on the two sides of an arc must differ.
  std::vector<std::vector<RegionId>> across(rm.region_count);
  auto link = [&](RegionId a, RegionId b) {
    across[a].push_back(b);
    across[b].push_back(a);
  };
  for (const auto& quad : rm.quadrant_region)
    for (int q = 0; q < 4; ++q) link(quad[q], quad[(q + 1) % 4]);
  for (const auto& [inside, enclosing] : rm.circle_regions) link(inside, enclosing);

  std::vector<int> colour(rm.region_count, -1);
  std::queue<RegionId> pending;
  colour[rm.unbounded_region] = 0;
  pending.push(rm.unbounded_region);
  while (!pending.empty()) {
    const RegionId r = pending.front();
    pending.pop();
    for (RegionId o : across[r]) {
      if (colour[o] < 0) {
        colour[o] = 1 - colour[r];
        pending.push(o);
      } else if (colour[o] == colour[r]) {
        throw InternalError("regions " + std::to_string(r) + " and " + std::to_string(o) +
                            " share an arc but cannot be shaded differently");
      }
    }
  }

  Shading first{std::vector<Shade>(rm.region_count), 0};
  Shading second{std::vector<Shade>(rm.region_count), 1};
  for (RegionId r = 0; r < rm.region_count; ++r) {
    if (colour[r] < 0) throw InternalError("region " + std::to_string(r) + " is not reachable from the unbounded region");
    first.shade[r] = colour[r] == 0 ? Shade::unshaded : Shade::shaded;
    second.shade[r] = opposite(first.shade[r]);
  }
  return {std::move(first), std::move(second)};
}

inline Shading shading_for(const RegionMap& rm, int index) {
  if (index != 0 && index != 1) throw std::invalid_argument("shading index must be 0 or 1");
  auto both = checkerboard(rm);
  return index == 0 ? std::move(both.first) : std::move(both.second);
}

/// True when quadrants 0 and 2 of crossing c are the shaded ones.
inline bool even_quadrants_shaded(const RegionMap& rm, const Shading& s, std::size_t c) {
  return s.is_shaded(rm.quadrant_region[c][0]);
}

struct CheckerboardGraph {
  std::vector<RegionId> vertices;
  std::vector<std::pair<RegionId, RegionId>> edges;  // one per crossing, loops allowed
  std::size_t component_count = 0;
};

/// Returns (shaded graph, unshaded graph).
inline std::pair<CheckerboardGraph, CheckerboardGraph> checkerboard_graphs(const Diagram& d, const RegionMap& rm,
                                                                           const Shading& s) {
  auto build = [&](Shade which) {
    CheckerboardGraph g;
    g.vertices = s.regions(which);
    std::vector<std::size_t> local(rm.region_count, 0);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) local[g.vertices[i]] = i;
    detail::DisjointSets sets(g.vertices.size());
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      const auto& quad = rm.quadrant_region[c];
      const int first = (s.shade[quad[0]] == which) ? 0 : 1;
      const RegionId a = quad[first], b = quad[first + 2];
      g.edges.emplace_back(a, b);
      sets.unite(local[a], local[b]);
    }
    g.component_count = sets.count_roots();
    return g;
  };
  return {build(Shade::shaded), build(Shade::unshaded)};
}

}  // namespace goeritz
