#include "tanglecospan/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "tanglecospan/detail/zpoly.hpp"
#include "tanglecospan/error.hpp"

namespace tanglecospan {

namespace {

std::size_t weight(const Laurent& p) {
  if (p.is_unit()) return 0;
  return p.terms().size() + static_cast<std::size_t>(p.high_degree() - p.low_degree()) * 4;
}

/// Removes the Z[t^±1]-gcd of the row entries in columns >= from.
void make_row_primitive(LMatrix& m, std::size_t i) {
  Laurent g;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(i, j).is_zero()) continue;
    g = poly_gcd(g, m(i, j));
    if (g.is_one()) break;
  }
  if (g.is_zero()) return;
  if (!g.is_one()) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) m(i, j) = *exact_divide(m(i, j), g);
  }
}

void swap_rows(LMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

/// row_i := p * row_i - q * row_r, where p = m(r, c) and q = m(i, c).
void eliminate(LMatrix& m, std::size_t i, std::size_t r, std::size_t c) {
  const Laurent p = m(r, c);
  const Laurent q = m(i, c);
  if (p.is_unit()) {
    const Laurent f = q * p.unit_inverse();
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    m(i, c) = Laurent{};
    return;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(i, j).is_zero() && m(r, j).is_zero()) continue;
    m(i, j) = p * m(i, j) - q * m(r, j);
  }
  m(i, c) = Laurent{};
  make_row_primitive(m, i);
}

}  // namespace

Echelon echelon(LMatrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      if (best == m.rows() || weight(m(i, c)) < weight(m(best, c))) best = i;
    }
    if (best == m.rows()) continue;
    swap_rows(m, r, best);
    make_row_primitive(m, r);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && !m(i, c).is_zero()) eliminate(m, i, r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.matrix = std::move(m);
  return e;
}

std::size_t rank(const LMatrix& m) { return echelon(m).rank(); }

std::size_t rank(const QMatrix& m) { return rank(clear_denominators(m)); }

LVector primitive(LVector v) {
  Laurent g;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = poly_gcd(g, x);
    if (g.is_one()) break;
  }
  if (g.is_zero()) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Laurent& x) { return !x.is_zero(); });
  Laurent lead = *exact_divide(*first, g);
  const Laurent unit = unit_normalize(lead).unit.unit_inverse();
  for (auto& x : v)
    if (!x.is_zero()) x = *exact_divide(x, g) * unit;
  return v;
}

std::vector<LVector> kernel_basis(const LMatrix& m) {
  const Echelon e = echelon(m);
  const LMatrix& a = e.matrix;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<LVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    // x_f = prod of pivots involved, x_{c_k} = -a(k, f) * prod / p_k
    Laurent prod(1);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
      if (!a(k, f).is_zero() && !a(k, e.pivot_cols[k]).is_unit()) prod *= a(k, e.pivot_cols[k]);
    LVector v(m.cols());
    v[f] = prod;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      if (a(k, f).is_zero()) continue;
      const Laurent& p = a(k, e.pivot_cols[k]);
      Laurent share = p.is_unit() ? prod * p.unit_inverse() : *exact_divide(prod, p);
      v[e.pivot_cols[k]] = -(a(k, f) * share);
    }
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

std::vector<LVector> left_kernel_basis(const LMatrix& m) { return kernel_basis(m.transpose()); }

LMatrix clear_denominators(const QMatrix& m) {
  LMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Laurent common(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Laurent& d = m(i, j).denominator();
      if (d.is_one()) continue;
      const Laurent g = poly_gcd(common, d);
      common = common * *exact_divide(d, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out(i, j) = m(i, j).numerator() * *exact_divide(common, m(i, j).denominator());
    }
  }
  return out;
}

QMatrix to_rational(const LMatrix& m) {
  return m.map([](const Laurent& x) { return RationalFunction(x); });
}

std::vector<std::vector<RationalFunction>> rational_kernel(const QMatrix& m) {
  std::vector<std::vector<RationalFunction>> out;
  for (const auto& v : kernel_basis(clear_denominators(m))) {
    std::vector<RationalFunction> w;
    w.reserve(v.size());
    for (const auto& x : v) w.emplace_back(x);
    out.push_back(std::move(w));
  }
  return out;
}

bool column_span_contains(const LMatrix& a, const LMatrix& b) {
  if (b.cols() == 0) return true;
  if (a.rows() != b.rows()) throw ShapeMismatch("subspaces of different ambient rank");
  return rank(a.hconcat(b)) == rank(a);
}

bool same_column_span(const LMatrix& a, const LMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("subspaces of different ambient rank");
  const std::size_t ra = rank(a);
  return ra == rank(b) && rank(a.hconcat(b)) == ra;
}

Laurent determinant(const LMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Laurent(1);
  LMatrix a = m;
  Laurent prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Laurent{};
    if (p != k) {
      swap_rows(a, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Laurent v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = prev.is_one() ? std::move(v) : *exact_divide(v, prev);
      }
      a(i, k) = Laurent{};
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

QMatrix rational_solve(const LMatrix& a, const LMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw ShapeMismatch("rational_solve shapes");
  const std::size_t n = a.rows();
  Echelon e = echelon(a.hconcat(b));
  if (e.rank() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) throw NotInvertible("singular over Q(t)");
  QMatrix x(n, b.cols());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!e.matrix(k, n + j).is_zero()) x(k, j) = RationalFunction(e.matrix(k, n + j), e.matrix(k, k));
  return x;
}

namespace {

/// Entries stored over Q[t^±1] as integer polynomials; rows and columns may be
/// rescaled by units c * t^k freely.
struct SmithWork {
  LMatrix a;

  static int span(const Laurent& p) { return p.high_degree() - p.low_degree(); }

  static detail::ZPoly dense(const Laurent& p) {
    detail::ZPoly z(static_cast<std::size_t>(span(p) + 1), 0);
    for (const auto& term : p.terms()) z[static_cast<std::size_t>(term.exp - p.low_degree())] = term.coef;
    return z;
  }
  static Laurent sparse(const detail::ZPoly& z) {
    std::vector<Laurent::Term> terms;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (z[i] != 0) terms.push_back({static_cast<int>(i), z[i]});
    return Laurent::from_terms(std::move(terms));
  }

  /// (scale, quotient) with scale * b = quotient * d + remainder over Z[t], after shifting both to low degree 0.
  /// Returned in Laurent form relative to the original b and d.
  static std::pair<Laurent, Laurent> pseudo_divide(const Laurent& b, const Laurent& d) {
    detail::ZPoly rem = dense(b);
    const detail::ZPoly dd = dense(d);
    const int dd_deg = detail::degree(dd);
    const mpz_class lead = dd.back();
    detail::ZPoly q;
    mpz_class scale = 1;
    while (!rem.empty() && detail::degree(rem) >= dd_deg) {
      const int shift = detail::degree(rem) - dd_deg;
      mpz_class la = rem.back();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lead.get_mpz_t());
      const mpz_class mult = lead / g;  // rem *= mult so the leading term divides evenly
      const mpz_class coef = la / g;
      for (auto& c : rem) c *= mult;
      for (auto& c : q) c *= mult;
      scale *= mult;
      if (q.size() < static_cast<std::size_t>(shift + 1)) q.resize(static_cast<std::size_t>(shift + 1), 0);
      q[static_cast<std::size_t>(shift)] += coef;
      for (int j = 0; j <= dd_deg; ++j) mpz_submul(rem[static_cast<std::size_t>(j + shift)].get_mpz_t(), coef.get_mpz_t(), dd[static_cast<std::size_t>(j)].get_mpz_t());
      detail::trim(rem);
    }
    detail::trim(q);
    // scale * b' = q * d' + r with b' = b t^-lb, d' = d t^-ld, so scale * b = (q t^{lb-ld}) d + ...
    return {Laurent(scale), sparse(q).shifted(b.low_degree() - d.low_degree())};
  }

  static bool divides(const Laurent& d, const Laurent& b) {
    if (b.is_zero()) return true;
    detail::ZPoly rem = dense(b);
    const detail::ZPoly dd = dense(d);
    return detail::pseudo_remainder(std::move(rem), dd).empty();
  }

  // Divides out the integer content and the lowest t-power: both are units over Q[t^±1].
  void unit_row(std::size_t i) {
    int low = 0;
    bool any = false;
    mpz_class g = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      low = any ? std::min(low, a(i, j).low_degree()) : a(i, j).low_degree();
      any = true;
      mpz_class c = a(i, j).content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (!any) return;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      Laurent x = a(i, j).shifted(-low);
      if (g != 1) {
        std::vector<Laurent::Term> terms = x.terms();
        for (auto& term : terms) term.coef /= g;
        x = Laurent::from_terms(std::move(terms));
      }
      a(i, j) = std::move(x);
    }
  }
  void unit_col(std::size_t j) {
    int low = 0;
    bool any = false;
    mpz_class g = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j).is_zero()) continue;
      low = any ? std::min(low, a(i, j).low_degree()) : a(i, j).low_degree();
      any = true;
      mpz_class c = a(i, j).content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (!any) return;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j).is_zero()) continue;
      Laurent x = a(i, j).shifted(-low);
      if (g != 1) {
        std::vector<Laurent::Term> terms = x.terms();
        for (auto& term : terms) term.coef /= g;
        x = Laurent::from_terms(std::move(terms));
      }
      a(i, j) = std::move(x);
    }
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, x), a(i, y));
  }

  /// row_i := s row_i - q row_k
  void row_op(std::size_t i, std::size_t k, const Laurent& s, const Laurent& q) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() && a(k, j).is_zero()) continue;
      a(i, j) = s * a(i, j) - q * a(k, j);
    }
    unit_row(i);
  }
  void col_op(std::size_t j, std::size_t k, const Laurent& s, const Laurent& q) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j).is_zero() && a(i, k).is_zero()) continue;
      a(i, j) = s * a(i, j) - q * a(i, k);
    }
    unit_col(j);
  }

  std::vector<Laurent> run() {
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Laurent> diag;
    for (std::size_t k = 0; k < n; ++k) {
      while (true) {
        // smallest span pivot in the trailing block
        std::size_t bi = a.rows(), bj = a.cols();
        for (std::size_t i = k; i < a.rows(); ++i)
          for (std::size_t j = k; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            if (bi == a.rows() || span(a(i, j)) < span(a(bi, bj)) ||
                (span(a(i, j)) == span(a(bi, bj)) && a(i, j).terms().size() < a(bi, bj).terms().size()))
              bi = i, bj = j;
          }
        if (bi == a.rows()) {
          while (diag.size() < n) diag.emplace_back();
          return diag;
        }
        swap_rows(a, k, bi);
        swap_cols(k, bj);
        bool clean = true;
        for (std::size_t i = k + 1; i < a.rows(); ++i) {
          if (a(i, k).is_zero()) continue;
          auto [s, q] = pseudo_divide(a(i, k), a(k, k));
          row_op(i, k, s, q);
          if (!a(i, k).is_zero()) clean = false;
        }
        for (std::size_t j = k + 1; j < a.cols(); ++j) {
          if (a(k, j).is_zero()) continue;
          auto [s, q] = pseudo_divide(a(k, j), a(k, k));
          col_op(j, k, s, q);
          if (!a(k, j).is_zero()) clean = false;
        }
        if (!clean) continue;
        bool divisible = true;
        for (std::size_t i = k + 1; i < a.rows() && divisible; ++i)
          for (std::size_t j = k + 1; j < a.cols(); ++j)
            if (!divides(a(k, k), a(i, j))) {
              row_op(k, i, Laurent(1), Laurent(-1));
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      diag.push_back(a(k, k));
    }
    return diag;
  }
};

Laurent primitive_normal(const Laurent& p) {
  if (p.is_zero()) return p;
  Laurent c = unit_normalize(p).canonical;
  const mpz_class g = c.content();
  if (g == 1) return c;
  std::vector<Laurent::Term> terms = c.terms();
  for (auto& term : terms) term.coef /= g;
  return Laurent::from_terms(std::move(terms));
}

}  // namespace

std::vector<Laurent> invariant_factors(const LMatrix& m) {
  SmithWork work{m};
  std::vector<Laurent> diag = work.run();
  for (auto& d : diag) d = primitive_normal(d);
  return diag;
}

Laurent gcd_of_minors(const LMatrix& m, std::size_t k) {
  if (k == 0) return Laurent(1);
  if (k > std::min(m.rows(), m.cols())) return Laurent{};
  std::vector<std::size_t> rows(k), cols(k);
  Laurent g;
  auto next_combo = [](std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] < n - k + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  std::iota(rows.begin(), rows.end(), 0);
  do {
    const LMatrix sub_rows = m.select_rows(rows);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      const Laurent d = determinant(sub_rows.select_cols(cols));
      if (!d.is_zero()) {
        g = poly_gcd(g, d);
        if (g.is_one()) return g;
      }
    } while (next_combo(cols, m.cols()));
  } while (next_combo(rows, m.rows()));
  return g;
}

}  // namespace tanglecospan
