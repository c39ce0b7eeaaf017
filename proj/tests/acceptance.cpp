// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace goeritz;

namespace {

// Runtime limits in seconds.
constexpr double kLimitGolden = 1.0;
constexpr double kLimitDehnOracle = 60.0;
constexpr double kLimitSnf = 30.0;
constexpr double kLimitEquivalence = 5.0;
constexpr double kLimitClosure = 60.0;
constexpr double kLimitFox = 60.0;
constexpr double kLimitStructure = 30.0;

constexpr int kSnfTrials = 1000;
constexpr std::size_t kSnfMaxDim = 6;
constexpr std::size_t kSnfMinorOracleDim = 5;
constexpr long kSnfEntryBound = 9;
constexpr int kStructureTrials = 500;
constexpr std::size_t kEnumerationRegions = 8;

struct Failure {
  std::ostringstream msg;
  bool any = false;
  std::ostream& add() {
    if (any) msg << "; ";
    any = true;
    return msg;
  }
};

std::string str(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

CountOptions pure_enumeration(std::size_t cap) {
  CountOptions opt;
  opt.enumeration_cap = cap;
  opt.method = CountMethod::enumerate;
  return opt;
}

Integer gcd_product(const std::vector<Integer>& phi, long m) {
  Integer out = 1;
  for (const auto& p : phi) {
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(m));
    out *= g;
  }
  return out;
}

// Cofactor expansion; only used on minors up to 5x5.
Integer cofactor_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<Integer>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      sub.push_back(std::move(row));
    }
    const Integer term = a[0][j] * cofactor_det(sub);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// delta_j = gcd of the (cols - j)-minors, zero when no such minor exists; phi_j = delta_j / delta_{j+1}.
std::vector<Integer> minor_oracle_factors(const IntMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<Integer> delta(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t k = n - j;
    if (k > m.rows()) {
      delta[j] = 0;
      continue;
    }
    Integer g = 0;
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(n, k)) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) minor[a][b] = m(rs[a], cs[b]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cofactor_det(minor).get_mpz_t());
      }
    delta[j] = (k == 0) ? Integer(1) : g;
  }
  std::vector<Integer> phi(n);
  for (std::size_t j = 0; j < n; ++j) phi[j] = delta[j + 1] == 0 ? Integer(0) : Integer(delta[j] / delta[j + 1]);
  return phi;
}

void golden(Failure& f) {
  const Realization r = realize({testing::ints({0, 3, 3, 1})});
  if (!(r.goeritz.adjusted == testing::star_0331_matrix())) f.add() << "adjusted matrix differs from the 5x5 fixture";
  const auto phi = invariant_factors(r.goeritz.adjusted);
  if (phi != testing::ints({0, 0, 3, 3, 1})) f.add() << "phi = " << str(phi);
}

void dehn_oracle(Failure& f) {
  for (const auto& e : testing::corpus()) {
    const Diagram d = parse_diagram(e.code);
    const bool small = trace_regions(d).region_count <= kEnumerationRegions;
    const long top = small ? 9 : 5;
    for (int s : {0, 1}) {
      const auto phi = invariant_factors(goeritz_for(d, s).adjusted);
      for (long m = 2; m <= top; ++m) {
        const Integer brute = dehn_count_bruteforce(d, m, pure_enumeration(64));
        const Integer formula = m * gcd_product(phi, m);
        if (brute != formula)
          f.add() << e.name << " shading " << s << " m=" << m << ": " << brute.get_str() << " vs " << formula.get_str();
      }
    }
  }
}

bool divides(const Integer& a, const Integer& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

void snf_properties(Failure& f) {
  std::mt19937_64 rng(1000003);
  std::uniform_int_distribution<std::size_t> dim(1, kSnfMaxDim);
  for (int t = 0; t < kSnfTrials; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const IntMatrix m = testing::random_matrix(rng, rows, cols, -kSnfEntryBound, kSnfEntryBound);
    const SNFResult r = smith_normal_form(m);
    if (!(r.U1 * m * r.U2 == smith_form_matrix(rows, r.phi))) f.add() << "trial " << t << ": U1 M U2 != Phi";
    if (abs(determinant(r.U1)) != 1 || abs(determinant(r.U2)) != 1) f.add() << "trial " << t << ": witness not unimodular";
    for (std::size_t j = 1; j < r.phi.size(); ++j)
      if (r.phi[j] < 0 || !divides(r.phi[j], r.phi[j - 1])) f.add() << "trial " << t << ": chain broken at " << j;
    if (rows <= kSnfMinorOracleDim && cols <= kSnfMinorOracleDim) {
      const auto oracle = minor_oracle_factors(m);
      if (oracle != r.phi) f.add() << "trial " << t << ": " << str(r.phi) << " vs minors " << str(oracle);
    }
  }
}

void equivalence(Failure& f) {
  for (const auto& e : testing::corpus()) {
    const Diagram d = parse_diagram(e.code);
    if (!coloring_equivalent(goeritz_for(d, 0), goeritz_for(d, 1))) f.add() << e.name << ": shadings disagree";
  }
  const Diagram trefoil = parse_diagram(testing::kTrefoil);
  const Diagram kinked = parse_diagram(testing::kTrefoilWithKink);
  const Diagram eight = parse_diagram(testing::kFigureEight);
  for (int s : {0, 1}) {
    if (!coloring_equivalent(goeritz_for(trefoil, s), goeritz_for(kinked, s))) f.add() << "trefoil vs kinked trefoil";
    if (coloring_equivalent(goeritz_for(trefoil, s), goeritz_for(eight, s))) f.add() << "trefoil vs figure-eight";
  }
}

void closure(Failure& f) {
  for (const auto& e : testing::corpus()) {
    const Diagram d = parse_diagram(e.code);
    for (int s : {0, 1}) {
      const GoeritzData g = goeritz_for(d, s);
      const auto phi = invariant_factors(g.adjusted);
      const RealizationSpec spec{std::vector<Integer>(phi.begin() + 1, phi.end())};
      const Realization r = realize(spec);
      if (!coloring_equivalent(g, r.goeritz)) f.add() << e.name << " shading " << s << ": realization not equivalent";
      for (long m = 2; m <= 5; ++m) {
        const Integer a = dehn_count_bruteforce(d, m, pure_enumeration(64));
        const Integer b = dehn_count_bruteforce(r.diagram, m, pure_enumeration(64));
        if (a != b) f.add() << e.name << " shading " << s << " m=" << m << ": " << a.get_str() << " vs " << b.get_str();
      }
    }
  }
}

void fox(Failure& f) {
  for (const auto& e : testing::corpus()) {
    const Diagram d = parse_diagram(e.code);
    const ColoringReport report = dehn_structure(d, 0);
    for (long m = 2; m <= 7; ++m) {
      const Integer brute = fox_count_bruteforce(d, m, pure_enumeration(CountOptions{}.enumeration_cap));
      const Integer formula = gcd_product(report.phi, m);
      if (brute != formula) f.add() << e.name << " m=" << m << ": " << brute.get_str() << " vs " << formula.get_str();
      if (structure_count(report, m, ColoringKind::dehn) != m * structure_count(report, m, ColoringKind::fox))
        f.add() << e.name << " m=" << m << ": dehn order is not m times fox order";
    }
  }
}

void structure(Failure& f) {
  std::mt19937_64 rng(500009);
  for (int t = 0; t < kStructureTrials; ++t) {
    const Diagram d = testing::random_diagram(rng);
    const RegionMap rm = trace_regions(d);
    // Each connected projection with c crossings has c + 2 faces; all outsides and free circles
    // share one unbounded region and each circle adds its inside.
    const auto comps = underlying_components(d);
    std::size_t expected = 1 + d.free_circles();
    for (const auto& c : comps.crossings) expected += c.size() + 2 - 1;
    if (rm.region_count != expected) f.add() << "trial " << t << ": " << rm.region_count << " regions, expected " << expected;
    for (int s : {0, 1}) {
      const GoeritzData g = goeritz_matrix(d, rm, shading_for(rm, s));
      if (!g.matrix.is_symmetric()) f.add() << "trial " << t << ": asymmetric";
      for (std::size_t i = 0; i < g.matrix.rows(); ++i) {
        Integer sum = 0;
        for (std::size_t j = 0; j < g.matrix.cols(); ++j) sum += g.matrix(i, j);
        if (sum != 0) f.add() << "trial " << t << ": row " << i << " sums to " << sum.get_str();
      }
      if (invariant_factors(g.adjusted).front() != 0) f.add() << "trial " << t << ": phi_0 nonzero";
    }
  }
}

struct Criterion {
  const char* id;
  const char* title;
  double limit;
  void (*body)(Failure&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC-1", "golden 5x5 realization", kLimitGolden, golden},
      {"AC-2", "Dehn counts against the invariant-factor formula", kLimitDehnOracle, dehn_oracle},
      {"AC-3", "Smith normal form properties", kLimitSnf, snf_properties},
      {"AC-4", "coloring equivalence of diagrams", kLimitEquivalence, equivalence},
      {"AC-5", "closure under realization", kLimitClosure, closure},
      {"AC-6", "Fox counts", kLimitFox, fox},
      {"AC-7", "structural invariants on random diagrams", kLimitStructure, structure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failure f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.add() << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) f.add() << "took " << secs << " s, limit " << c.limit << " s";
    std::string detail = f.msg.str();
    if (detail.size() > 400) detail = detail.substr(0, 400) + "...";
    std::printf("%s %s: %s (%.2f s)%s%s\n", f.any ? "FAIL" : "PASS", c.id, c.title, secs, f.any ? " - " : "",
                detail.c_str());
    if (f.any) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
