#pragma once

// Exact integer matrices, Smith normal form with unimodular witnesses,
// elementary-ideal gcds and abelian group descriptors.
//
// Invariant factors follow the descending convention: phi[j] divides
// phi[j-1], so zeros come first and units last, e.g. (0, 0, 3, 3, 1).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "goeritz/errors.hpp"

namespace goeritz {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
    }
  }
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(std::span<const Integer> diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Integer>& entries() const { return data_; }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Empty matrix has determinant 1.
inline Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

/// Order of A(phi) for A = Z/m, i.e. gcd(phi, m) with gcd(0, m) = m.
inline Integer torsion_order(const Integer& phi, const Integer& m) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), phi.get_mpz_t(), m.get_mpz_t());
  return g;
}

struct SNFResult {
  std::vector<Integer> phi;  // kappa entries, descending divisibility
  IntMatrix U1;              // rho x rho
  IntMatrix U2;              // kappa x kappa
  std::size_t rank = 0;
};

/// The rho x kappa matrix Phi(M) for a given invariant factor sequence.
///
/// When kappa > rho the leading kappa - rho factors are zero and their rows
/// are dropped, so row i carries phi[i + kappa - rho] in column i + kappa - rho.
inline IntMatrix smith_form_matrix(std::size_t rows, std::span<const Integer> phi) {
  const std::size_t cols = phi.size();
  const std::size_t diag = std::min(rows, cols);
  const std::size_t offset = cols - diag;
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < diag; ++i) out(i, i + offset) = phi[i + offset];
  return out;
}

namespace detail {

// Standard Smith form P*M*Q = D with d_1 | d_2 | ... on the leading diagonal.
// Pivot rule: smallest nonzero |entry|, then lowest row, then lowest column.
struct AscendingSmith {
  IntMatrix D, P, Q;
  std::size_t rank = 0;
};

inline AscendingSmith ascending_smith(const IntMatrix& m) {
  AscendingSmith s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& a = s.D;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t diag = std::min(rows, cols);

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    s.P.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    s.Q.add_col_multiple(dst, src, f);
  };

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      bool found = false;
      std::size_t pr = 0, pc = 0;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer v = abs(a(i, j));
          if (!found || v < best) {
            found = true;
            best = std::move(v);
            pr = i;
            pc = j;
          }
        }
      if (!found) return s;

      a.swap_rows(t, pr);
      s.P.swap_rows(t, pr);
      a.swap_cols(t, pc);
      s.Q.swap_cols(t, pc);
      if (a(t, t) < 0) {
        a.negate_row(t);
        s.P.negate_row(t);
      }

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_op(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_op(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise pull in an offending row.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            row_op(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    s.rank = t + 1;
  }
  return s;
}

}  // namespace detail

/// Smith normal form with witnesses: U1 * M * U2 == smith_form_matrix(M.rows(), phi).
inline SNFResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t diag = std::min(rows, cols);
  const std::size_t offset = cols - diag;
  detail::AscendingSmith asc = detail::ascending_smith(m);

  SNFResult out;
  out.rank = asc.rank;
  out.phi.assign(cols, Integer(0));
  for (std::size_t i = 0; i < diag; ++i) out.phi[i + offset] = asc.D(diag - 1 - i, diag - 1 - i);

  // Row i of the result is row diag-1-i of D; trailing zero rows keep their place.
  out.U1 = IntMatrix(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t src = i < diag ? diag - 1 - i : i;
    for (std::size_t k = 0; k < rows; ++k) out.U1(i, k) = asc.P(src, k);
  }
  // Column i + offset of the result is column diag-1-i of D; the excess zero
  // columns diag..cols-1 of D move to the front.
  out.U2 = IntMatrix(cols, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = j < offset ? diag + j : diag - 1 - (j - offset);
    for (std::size_t k = 0; k < cols; ++k) out.U2(k, j) = asc.Q(k, src);
  }
  return out;
}

inline std::vector<Integer> invariant_factors(const IntMatrix& m) { return smith_normal_form(m).phi; }

/// Number of minors elementary_gcds would evaluate: sum over k of C(rows,k)*C(cols,k).
inline Integer minor_count(std::size_t rows, std::size_t cols) {
  Integer total = 0;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), rows, k);
    mpz_bin_uiui(b.get_mpz_t(), cols, k);
    total += a * b;
  }
  return total;
}

inline constexpr unsigned long kDefaultMinorBound = 1'000'000;

namespace detail {

inline void for_each_combination(std::size_t n, std::size_t k, auto&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return;
  for (;;) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// delta_0 .. delta_kappa: gcds of the elementary ideals, by direct minor enumeration.
inline std::vector<Integer> elementary_gcds(const IntMatrix& m, unsigned long minor_bound = kDefaultMinorBound) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (minor_count(rows, cols) > minor_bound) {
    throw CapExceededError("elementary_gcds: " + minor_count(rows, cols).get_str() +
                           " minors exceeds the bound of " + std::to_string(minor_bound));
  }
  const std::size_t low = cols > rows ? cols - rows : 0;
  std::vector<Integer> delta(cols + 1, Integer(0));
  delta[cols] = 1;
  for (std::size_t j = low; j < cols; ++j) {
    const std::size_t k = cols - j;
    Integer g = 0;
    IntMatrix sub(k, k);
    detail::for_each_combination(rows, k, [&](std::span<const std::size_t> ri) {
      detail::for_each_combination(cols, k, [&](std::span<const std::size_t> ci) {
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
        Integer d = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    delta[j] = g;
  }
  return delta;
}

/// phi_j = delta_j / delta_{j+1}, with 0/0 = 0.
inline std::vector<Integer> factors_from_gcds(std::span<const Integer> delta) {
  std::vector<Integer> phi;
  if (delta.empty()) return phi;
  for (std::size_t j = 0; j + 1 < delta.size(); ++j) {
    if (delta[j + 1] == 0) {
      phi.emplace_back(0);
    } else {
      phi.emplace_back(delta[j] / delta[j + 1]);
    }
  }
  return phi;
}

/// Symbolic abelian group: free summands plus cyclic torsion, optionally with
/// a standalone leading free factor (the "A x" in front of the product).
struct GroupDescriptor {
  std::size_t free_rank = 0;     // includes the leading factor when present
  std::vector<Integer> torsion;  // entries >= 2, descending divisibility
  bool leading_free_factor = false;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

  /// Product form over a coefficient group A, e.g. "A x A x A(3)".
  std::string product_form() const {
    std::vector<std::string> parts(free_rank, "A");
    for (const auto& t : torsion) parts.push_back("A(" + t.get_str() + ")");
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
  }

  /// Integral form, e.g. "Z^2 + Z/3 + Z/3".
  std::string integral_form() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.emplace_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
  }
};

inline GroupDescriptor descriptor_from_factors(std::span<const Integer> phi, bool leading_free_factor) {
  GroupDescriptor g;
  g.leading_free_factor = leading_free_factor;
  g.free_rank = leading_free_factor ? 1 : 0;
  for (const auto& p : phi) {
    if (p == 0) {
      ++g.free_rank;
    } else if (p != 1) {
      g.torsion.push_back(p);
    }
  }
  return g;
}

/// Cokernel of x -> x*M, i.e. Z^kappa modulo the row lattice of M.
inline GroupDescriptor cokernel_descriptor(const IntMatrix& m) {
  const auto phi = invariant_factors(m);
  return descriptor_from_factors(phi, false);
}

/// Number of x in (Z/m)^rho with x*M == 0 (mod m).
inline Integer kernel_count_mod(const IntMatrix& mat, const Integer& m) {
  if (m < 2) throw std::invalid_argument("kernel_count_mod: modulus must be >= 2");
  const auto phi = invariant_factors(mat);
  const std::size_t diag = std::min(mat.rows(), mat.cols());
  const std::size_t offset = mat.cols() - diag;
  Integer count = 1;
  for (std::size_t j = offset; j < phi.size(); ++j) count *= torsion_order(phi[j], m);
  for (std::size_t i = diag; i < mat.rows(); ++i) count *= m;
  return count;
}

}  // namespace goeritz
