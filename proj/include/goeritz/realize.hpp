#pragma once

// Connected sums of (2, k) torus links with prescribed Goeritz invariant factors.
//
// The diagram is the medial diagram of a plane star graph: a centre vertex
// (the unbounded region) joined to one leaf per requested factor phi_j by
// phi_j parallel edges. Each edge becomes one crossing of a twist region
// between leaf j and the outside. phi_j = 0 is drawn as a clasp of two
// crossings with opposite Goeritz index, phi_j = 1 as a single kink.

#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "goeritz/diagram.hpp"
#include "goeritz/goeritz_matrix.hpp"
#include "goeritz/intlattice.hpp"

namespace goeritz {

struct RealizationSpec {
  std::vector<Integer> phis;  // phi_1 .. phi_{n-1}; phi_0 = 0 is implicit
};

struct Realization {
  Diagram diagram;
  int shading_index = 0;
  GoeritzData goeritz;
};

inline constexpr std::size_t kMaxRealizedCrossings = 1'000'000;

namespace detail {

// Crossing arms in the frame where the edge runs from its leaf (west) to the centre (east).
enum Arm { NE = 0, NW = 1, SW = 2, SE = 3 };

inline Diagram star_medial_diagram(const std::vector<std::vector<int>>& block_signs) {
  std::vector<int> sign;
  std::vector<std::size_t> block_start;
  for (const auto& block : block_signs) {
    block_start.push_back(sign.size());
    sign.insert(sign.end(), block.begin(), block.end());
  }
  const std::size_t edges = sign.size();
  if (edges == 0) return Diagram({}, 1);

  std::vector<std::array<Label, 4>> arm_label(edges);
  Label next = 1;
  auto join = [&](std::size_t a, Arm arm_a, std::size_t b, Arm arm_b) {
    arm_label[a][arm_a] = next;
    arm_label[b][arm_b] = next;
    ++next;
  };
  for (std::size_t b = 0; b < block_signs.size(); ++b) {
    const std::size_t first = block_start[b];
    const std::size_t k = block_signs[b].size();
    for (std::size_t e = first; e < first + k; ++e) {
      // Around the centre edges run in global order; around a leaf the block runs reversed.
      join(e, SE, (e + 1) % edges, NE);
      const std::size_t leaf_succ = e == first ? first + k - 1 : e - 1;
      join(e, NW, leaf_succ, SW);
    }
  }

  std::vector<Crossing> crossings;
  crossings.reserve(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    const auto& a = arm_label[e];
    // Positive index: under-strand NW-SE, starting at SE so quadrant 0 faces the centre.
    // Negative index: under-strand NE-SW.
    if (sign[e] > 0) {
      crossings.push_back({{a[SE], a[NE], a[NW], a[SW]}});
    } else {
      crossings.push_back({{a[NE], a[NW], a[SW], a[SE]}});
    }
  }
  return Diagram(std::move(crossings), 0);
}

}  // namespace detail

inline Realization realize(const RealizationSpec& spec) {
  std::vector<std::vector<int>> blocks;
  std::size_t total = 0;
  for (const auto& phi : spec.phis) {
    if (phi < 0) throw std::invalid_argument("realize: invariant factors must be non-negative");
    if (phi > Integer(static_cast<unsigned long>(kMaxRealizedCrossings))) {
      throw std::length_error("realize: factor " + phi.get_str() + " is too large to draw");
    }
    const std::size_t k = phi.get_ui();
    blocks.push_back(k == 0 ? std::vector<int>{1, -1} : std::vector<int>(k, 1));
    total += blocks.back().size();
    if (total > kMaxRealizedCrossings) throw std::length_error("realize: too many crossings");
  }
  Realization r;
  r.diagram = detail::star_medial_diagram(blocks);
  r.shading_index = 0;
  r.goeritz = goeritz_for(r.diagram, r.shading_index);
  return r;
}

/// Invariant factors of diag(0, phi_1, ..., phi_{n-1}).
inline std::vector<Integer> prescribed_factors(const RealizationSpec& spec) {
  std::vector<Integer> diag{Integer(0)};
  diag.insert(diag.end(), spec.phis.begin(), spec.phis.end());
  return invariant_factors(IntMatrix::diagonal(diag));
}

inline std::vector<Integer> realized_factors(const RealizationSpec& spec) {
  return invariant_factors(realize(spec).goeritz.adjusted);
}

/// Checks the realized adjusted Goeritz matrix entry by entry against the
/// star shape (phi_j on the diagonal, -phi_j against the last row and column,
/// their sum in the corner), then adds rows and columns 1..n-1 into the last
/// one and expects diag(phi_1, ..., phi_{n-1}, 0); finally compares invariant
/// factors with those of diag(0, phi_1, ..., phi_{n-1}).
inline bool verify_realization(const RealizationSpec& spec) {
  const Realization r = realize(spec);
  const IntMatrix& g = r.goeritz.adjusted;
  const std::size_t n = spec.phis.size() + 1;
  if (r.goeritz.beta_s != 1 || g.rows() != n || g.cols() != n) return false;

  const std::size_t last = n - 1;
  Integer sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer expected = 0;
      if (i < last && j < last) {
        if (i == j) expected = spec.phis[i];
      } else if (i < last) {
        expected = -spec.phis[i];
      } else if (j < last) {
        expected = -spec.phis[j];
      }
      if (i == last && j == last) continue;
      if (g(i, j) != expected) return false;
    }
  for (const auto& p : spec.phis) sum += p;
  if (g(last, last) != sum) return false;

  IntMatrix h = g;
  for (std::size_t i = 0; i < last; ++i) h.add_row_multiple(last, i, Integer(1));
  for (std::size_t j = 0; j < last; ++j) h.add_col_multiple(last, j, Integer(1));
  std::vector<Integer> diag(spec.phis.begin(), spec.phis.end());
  diag.emplace_back(0);
  if (!(h == IntMatrix::diagonal(diag))) return false;

  return invariant_factors(g) == prescribed_factors(spec);
}

}  // namespace goeritz
