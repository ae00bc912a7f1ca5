#pragma once

// Dense univariate polynomials over Z, coefficients stored from degree 0 upward.
// Internal helper for gcds and exact division; not part of the public API.

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace tanglecospan::detail {

using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline ZPoly primitive_part(ZPoly p) {
  trim(p);
  if (p.empty()) return p;
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline ZPoly neg(ZPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

inline ZPoly scale(ZPoly a, const mpz_class& s) {
  if (s == 0) return {};
  for (auto& c : a) c *= s;
  return a;
}

/// Pseudo-remainder of a by b (b nonzero): lc(b)^k a = q b + r with deg r < deg b.
inline ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const int db = degree(b);
  const mpz_class& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    mpz_class la = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) mpz_submul(a[j + shift].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
  }
  return a;
}

/// gcd over Z[t]: gcd of contents times the primitive gcd, leading coefficient positive.
inline ZPoly gcd(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return scale(primitive_part(b), content(b));
  if (b.empty()) return scale(primitive_part(a), content(a));
  mpz_class ca = content(a), cb = content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  return scale(primitive_part(std::move(a)), cg);
}

/// Exact quotient a / b over Z[t], or nullopt if b does not divide a.
inline std::optional<ZPoly> exact_divide(ZPoly a, const ZPoly& b) {
  trim(a);
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  const int db = degree(b);
  if (degree(a) < db) return std::nullopt;
  ZPoly q(degree(a) - db + 1, 0);
  while (!a.empty() && degree(a) >= db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c = a.back() / b.back();
    const int shift = degree(a) - db;
    q[shift] = c;
    for (int j = 0; j <= db; ++j) mpz_submul(a[j + shift].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

}  // namespace tanglecospan::detail
