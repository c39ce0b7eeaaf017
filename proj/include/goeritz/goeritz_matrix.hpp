#pragma once

#include <cstddef>
#include <vector>

#include "goeritz/diagram.hpp"
#include "goeritz/intlattice.hpp"
#include "goeritz/shading.hpp"

namespace goeritz {

struct GoeritzData {
  std::vector<RegionId> unshaded_regions;  // ascending region id: U_1..U_n
  IntMatrix matrix;                        // n x n
  std::size_t beta_s = 1;                  // components of the shaded checkerboard graph
  IntMatrix adjusted;                      // (n + beta_s - 1) square
};

/// Goeritz index of crossing c: -1 when quadrants {0,2} are shaded, +1 when {1,3} are.
inline int goeritz_index(const RegionMap& rm, const Shading& s, std::size_t c) {
  return even_quadrants_shaded(rm, s, c) ? -1 : 1;
}

/// Pads G with a (beta_s - 1) square zero block.
inline IntMatrix adjusted_goeritz(const IntMatrix& g, std::size_t beta_s) {
  const std::size_t n = g.rows() + (beta_s > 0 ? beta_s - 1 : 0);
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, j);
  return out;
}

inline IntMatrix adjusted_goeritz(const GoeritzData& g) { return adjusted_goeritz(g.matrix, g.beta_s); }

inline GoeritzData goeritz_matrix(const Diagram& d, const RegionMap& rm, const Shading& s) {
  GoeritzData out;
  out.unshaded_regions = s.regions(Shade::unshaded);
  const std::size_t n = out.unshaded_regions.size();
  std::vector<std::size_t> row_of(rm.region_count, 0);
  for (std::size_t i = 0; i < n; ++i) row_of[out.unshaded_regions[i]] = i;

  out.matrix = IntMatrix(n, n);
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto& quad = rm.quadrant_region[c];
    const int first = even_quadrants_shaded(rm, s, c) ? 1 : 0;
    const std::size_t i = row_of[quad[first]], j = row_of[quad[first + 2]];
    // A crossing meeting one unshaded region twice lies in no C_ij.
    if (i == j) continue;
    const int eta = goeritz_index(rm, s, c);
    out.matrix(i, j) -= eta;
    out.matrix(j, i) -= eta;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Integer off = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) off += out.matrix(i, k);
    out.matrix(i, i) = -off;
  }

  out.beta_s = checkerboard_graphs(d, rm, s).first.component_count;
  out.adjusted = adjusted_goeritz(out.matrix, out.beta_s);
  return out;
}

/// Goeritz data of a diagram under shading index 0 or 1.
inline GoeritzData goeritz_for(const Diagram& d, int shading_index) {
  const RegionMap rm = trace_regions(d);
  return goeritz_matrix(d, rm, shading_for(rm, shading_index));
}

}  // namespace goeritz
