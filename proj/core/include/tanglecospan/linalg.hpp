#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tanglecospan/laurent.hpp"
#include "tanglecospan/matrix.hpp"
#include "tanglecospan/rational_function.hpp"

namespace tanglecospan {

using LMatrix = Matrix<Laurent>;
using QMatrix = Matrix<RationalFunction>;
using LVector = std::vector<Laurent>;

/// Reduced row echelon form over Q(t) kept with Laurent entries: each pivot
/// column is zero outside its pivot row and every row is primitive.
struct Echelon {
  LMatrix matrix;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon echelon(LMatrix m);
std::size_t rank(const LMatrix& m);
/// Rank over Q(t) of a matrix with rational entries.
std::size_t rank(const QMatrix& m);

/// Divides v by the gcd of its entries and fixes the unit so the first
/// nonzero entry has lowest exponent 0 and positive leading coefficient.
LVector primitive(LVector v);

/// Basis of {x : m x = 0} over Q(t), as primitive Laurent vectors.
std::vector<LVector> kernel_basis(const LMatrix& m);
/// Basis of {y : y^T m = 0}.
std::vector<LVector> left_kernel_basis(const LMatrix& m);
std::vector<std::vector<RationalFunction>> rational_kernel(const QMatrix& m);

/// Multiplies each row by the common denominator of its entries.
LMatrix clear_denominators(const QMatrix& m);
QMatrix to_rational(const LMatrix& m);

/// True when the columns of a and b span the same Q(t)-subspace.
bool same_column_span(const LMatrix& a, const LMatrix& b);
/// True when every column of b lies in the Q(t)-span of the columns of a.
bool column_span_contains(const LMatrix& a, const LMatrix& b);

Laurent determinant(const LMatrix& m);
/// Solves a x = b over Q(t) for square nonsingular a; throws NotInvertible otherwise.
QMatrix rational_solve(const LMatrix& a, const LMatrix& b);

/// Invariant factors over Q[t^±1], unit-normalized to primitive integer
/// polynomials; min(rows, cols) entries, zeros last.
std::vector<Laurent> invariant_factors(const LMatrix& m);

/// Unit-normalized gcd of all k x k minors. k = 0 gives 1; no minors gives 0.
Laurent gcd_of_minors(const LMatrix& m, std::size_t k);

/// Division-free determinant by cofactor expansion with subset memoisation.
/// Meant for small matrices over rings without exact division.
template <class R>
R expansion_determinant(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  // memo[mask] = det of rows (n - popcount(mask))..n-1 restricted to columns in mask
  std::map<unsigned, R> memo;
  memo[0u] = R(1);
  for (unsigned size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) != size) continue;
      R acc{};
      int sign = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m(row, j).is_zero()) {
          const R& sub = memo[mask & ~(1u << j)];
          if (!sub.is_zero()) acc += (sign > 0 ? m(row, j) : -m(row, j)) * sub;
        }
        sign = -sign;
      }
      memo[mask] = std::move(acc);
    }
  }
  return memo[(1u << n) - 1];
}

/// Classical adjugate, adj(m) m = det(m) I.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  Matrix<R> adj(n, n);
  if (n == 1) {
    adj(0, 0) = R(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      R c = expansion_determinant(m.without_row(j).without_col(i));
      adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

/// Inverse over the ring itself, which exists iff the determinant is a unit.
template <class R>
Matrix<R> unit_inverse(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw NotInvertible("non-square matrix");
  const R det = expansion_determinant(m);
  if (!det.is_unit()) throw NotInvertible("determinant " + det.to_string() + " is not a unit");
  return det.unit_inverse() * adjugate(m);
}

}  // namespace tanglecospan
