#pragma once

// Dehn (region) and Fox (arc) colorings with values in an abelian group.
//
// The structure of both groups is read off the invariant factors of the
// adjusted Goeritz matrix: Dehn = A x prod A(phi_j), Fox = prod A(phi_j).
// The brute-force counters work directly from the crossing rules and never
// look at the Goeritz matrix, so they serve as independent checks.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "goeritz/diagram.hpp"
#include "goeritz/goeritz_matrix.hpp"
#include "goeritz/intlattice.hpp"
#include "goeritz/shading.hpp"

namespace goeritz {

/// d(q0) + d(q1) = d(q2) + d(q3). {q0,q1} flank over-slot 1, {q2,q3} flank over-slot 3.
struct CrossingRelation {
  std::array<RegionId, 4> regions{};
};

inline std::vector<CrossingRelation> crossing_relations(const RegionMap& rm) {
  std::vector<CrossingRelation> out;
  out.reserve(rm.quadrant_region.size());
  for (const auto& quad : rm.quadrant_region) out.push_back({quad});
  return out;
}

/// Regions x crossings coefficient matrix of the Dehn relations.
inline IntMatrix dehn_relation_matrix(const RegionMap& rm) {
  IntMatrix m(rm.region_count, rm.quadrant_region.size());
  for (std::size_t c = 0; c < rm.quadrant_region.size(); ++c) {
    const auto& q = rm.quadrant_region[c];
    m(q[0], c) += 1;
    m(q[1], c) += 1;
    m(q[2], c) -= 1;
    m(q[3], c) -= 1;
  }
  return m;
}

/// Arcs are maximal over-passing strands: edges at slots 1 and 3 of a crossing
/// belong to the same arc. Each free circle is one arc.
struct ArcStructure {
  std::size_t arc_count = 0;
  std::vector<std::array<std::size_t, 3>> crossings;  // (over arc, under arc at slot 0, under arc at slot 2)
};

inline ArcStructure arc_structure(const Diagram& d) {
  std::map<Label, std::size_t> edge_index;
  for (const auto& c : d.crossings())
    for (Label l : c.slots) edge_index.try_emplace(l, edge_index.size());
  detail::DisjointSets arcs(edge_index.size());
  for (const auto& c : d.crossings()) arcs.unite(edge_index[c.slots[1]], edge_index[c.slots[3]]);

  std::map<std::size_t, std::size_t> arc_of_root;
  auto arc_of = [&](Label l) {
    auto [it, inserted] = arc_of_root.try_emplace(arcs.find(edge_index[l]), arc_of_root.size());
    return it->second;
  };
  ArcStructure out;
  for (const auto& c : d.crossings()) out.crossings.push_back({arc_of(c.slots[1]), arc_of(c.slots[0]), arc_of(c.slots[2])});
  out.arc_count = arc_of_root.size() + d.free_circles();
  return out;
}

/// Arcs x crossings coefficient matrix of the Fox relations 2*over - under - under.
inline IntMatrix fox_relation_matrix(const ArcStructure& arcs) {
  IntMatrix m(arcs.arc_count, arcs.crossings.size());
  for (std::size_t c = 0; c < arcs.crossings.size(); ++c) {
    m(arcs.crossings[c][0], c) += 2;
    m(arcs.crossings[c][1], c) -= 1;
    m(arcs.crossings[c][2], c) -= 1;
  }
  return m;
}

struct ColoringReport {
  std::vector<Integer> phi;  // invariant factors of the adjusted Goeritz matrix
  GroupDescriptor dehn;      // leading_free_factor = true
  GroupDescriptor fox;       // leading_free_factor = false
};

inline ColoringReport coloring_report(std::vector<Integer> phi) {
  ColoringReport r;
  r.dehn = descriptor_from_factors(phi, true);
  r.fox = descriptor_from_factors(phi, false);
  r.phi = std::move(phi);
  return r;
}

inline ColoringReport dehn_structure(const Diagram& d, const RegionMap& rm, const Shading& s) {
  return coloring_report(invariant_factors(goeritz_matrix(d, rm, s).adjusted));
}

inline ColoringReport dehn_structure(const Diagram& d, int shading_index) {
  const RegionMap rm = trace_regions(d);
  return dehn_structure(d, rm, shading_for(rm, shading_index));
}

enum class ColoringKind { dehn, fox };

/// Order of the coloring group at A = Z/m.
inline Integer structure_count(const ColoringReport& report, const Integer& m, ColoringKind which) {
  if (m < 2) throw std::invalid_argument("structure_count: modulus must be >= 2");
  Integer count = which == ColoringKind::dehn ? m : Integer(1);
  for (const auto& p : report.phi) count *= torsion_order(p, m);
  return count;
}

enum class CountMethod {
  automatic,  // enumerate within the cap, otherwise count through the relation matrix
  enumerate,  // exhaustive enumeration only; throws CapExceededError above the cap
  linear,     // kernel of the relation matrix mod m
};

struct CountOptions {
  std::size_t enumeration_cap = 8;             // max number of coloured objects (regions or arcs)
  std::uint64_t max_states = 2'000'000'000ULL;  // max m^objects visited
  CountMethod method = CountMethod::automatic;
};

namespace detail {

struct SparseRelation {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
};

inline std::vector<SparseRelation> sparse_columns(const IntMatrix& rel) {
  std::vector<SparseRelation> out(rel.cols());
  for (std::size_t c = 0; c < rel.cols(); ++c)
    for (std::size_t v = 0; v < rel.rows(); ++v)
      if (rel(v, c) != 0) out[c].terms.emplace_back(v, rel(v, c).get_si());
  return out;
}

inline bool enumeration_fits(std::size_t vars, const Integer& m, const CountOptions& opt) {
  if (vars > opt.enumeration_cap) return false;
  if (!m.fits_ulong_p()) return false;
  Integer states;
  mpz_pow_ui(states.get_mpz_t(), m.get_mpz_t(), vars);
  return states <= Integer(std::to_string(opt.max_states));
}

// Visits every assignment of vars values in Z/m and counts those satisfying all relations.
inline Integer enumerate_count(std::size_t vars, std::uint64_t m, std::span<const SparseRelation> relations) {
  const auto mod = static_cast<std::int64_t>(m);
  std::vector<std::int64_t> value(vars, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : relations) {
      std::int64_t sum = 0;
      for (const auto& [v, coef] : r.terms) sum += coef * value[v];
      if (sum % mod != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < vars && ++value[i] == mod) value[i++] = 0;
    if (i == vars) break;
  }
  return Integer(std::to_string(count));
}

inline Integer count_solutions(const IntMatrix& rel, const Integer& m, const CountOptions& opt, const char* what) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  const bool fits = enumeration_fits(rel.rows(), m, opt);
  if (opt.method == CountMethod::linear || (opt.method == CountMethod::automatic && !fits)) {
    return kernel_count_mod(rel, m);
  }
  if (!fits) {
    throw CapExceededError(std::string(what) + ": " + std::to_string(rel.rows()) + " variables at modulus " +
                           m.get_str() + " exceed the enumeration cap of " + std::to_string(opt.enumeration_cap));
  }
  const auto relations = sparse_columns(rel);
  return enumerate_count(rel.rows(), m.get_ui(), relations);
}

}  // namespace detail

/// Number of Dehn colorings with values in Z/m.
inline Integer dehn_count_bruteforce(const Diagram& d, const Integer& m, const CountOptions& opt = {}) {
  return detail::count_solutions(dehn_relation_matrix(trace_regions(d)), m, opt, "dehn enumeration");
}

/// Number of Fox colorings with values in Z/m.
inline Integer fox_count_bruteforce(const Diagram& d, const Integer& m, const CountOptions& opt = {}) {
  return detail::count_solutions(fox_relation_matrix(arc_structure(d)), m, opt, "fox enumeration");
}

/// Equal invariant factors after discarding every factor equal to 1.
inline bool coloring_equivalent(std::vector<Integer> a, std::vector<Integer> b) {
  auto strip = [](std::vector<Integer>& v) {
    std::erase_if(v, [](const Integer& x) { return x == 1; });
    std::sort(v.begin(), v.end());
  };
  strip(a);
  strip(b);
  return a == b;
}

inline bool coloring_equivalent(const GoeritzData& g1, const GoeritzData& g2) {
  return coloring_equivalent(invariant_factors(g1.adjusted), invariant_factors(g2.adjusted));
}

}  // namespace goeritz
