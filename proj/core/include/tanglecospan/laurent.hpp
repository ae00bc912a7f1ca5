#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tanglecospan {

/// An element of Z[t, t^-1] with arbitrary-precision coefficients.
///
/// Terms are kept sorted by increasing exponent with no zero coefficient, so
/// structural equality is ring equality.
class Laurent {
 public:
  struct Term {
    int exp;
    mpz_class coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Laurent() = default;
  Laurent(long constant);  // NOLINT(google-explicit-constructor): integers embed in the ring
  explicit Laurent(const mpz_class& constant);

  static Laurent monomial(const mpz_class& coef, int exp);
  /// t^k
  static Laurent t(int k = 1) { return monomial(1, k); }
  /// Builds from (exponent, coefficient) pairs in any order; repeated exponents are summed.
  static Laurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for ±t^k, the units of the ring.
  bool is_unit() const;
  bool is_one() const;
  int low_degree() const;
  int high_degree() const;
  mpz_class coefficient(int exp) const;
  mpz_class content() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);

  friend bool operator==(const Laurent&, const Laurent&) = default;
  /// Deterministic total order (by exponent span, then coefficients); not a ring order.
  friend std::strong_ordering operator<=>(const Laurent& a, const Laurent& b);

  /// The bar involution t -> t^-1.
  Laurent involute() const;
  /// Multiplication by t^k.
  Laurent shifted(int k) const;
  Laurent scaled(const mpz_class& s) const;
  /// Inverse of a unit ±t^k; throws NotInvertible otherwise.
  Laurent unit_inverse() const;
  /// Substitutes t := value.
  mpz_class evaluate(long value) const;

  /// Canonical text: decreasing exponents, `c*t^k` terms joined by " + ".
  std::string to_string() const;
  /// Accepts the canonical text and the usual shorthand (`t^2 - 3*t + 1`, `-t^-1`).
  static Laurent parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

inline Laurent involute(const Laurent& p) { return p.involute(); }

struct UnitNormalized {
  Laurent canonical;
  Laurent unit;
};

/// Splits p = unit * canonical with unit = ±t^k, canonical of lowest exponent 0
/// and positive leading coefficient. The zero polynomial gives (0, 1).
UnitNormalized unit_normalize(const Laurent& p);

/// Greatest common divisor in Z[t, t^-1] (content gcd times the primitive gcd),
/// returned unit-normalized. gcd(p, 0) is unit_normalize(p).canonical.
Laurent poly_gcd(const Laurent& a, const Laurent& b);

/// a / b when b divides a in Z[t, t^-1].
std::optional<Laurent> exact_divide(const Laurent& a, const Laurent& b);

}  // namespace tanglecospan
