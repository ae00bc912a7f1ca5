#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tanglecospan/laurent.hpp"

namespace tanglecospan {

/// An element of Z[t1^±1, ..., tm^±1].
///
/// Exponent vectors are stored with trailing zeros removed, so values built
/// with different variable counts compare and combine directly.
class MultiLaurent {
 public:
  struct Term {
    std::vector<int> exp;
    mpz_class coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiLaurent() = default;
  MultiLaurent(long constant);  // NOLINT(google-explicit-constructor)

  static MultiLaurent monomial(const mpz_class& coef, std::vector<int> exp);
  /// The variable t_i (1-based) raised to k.
  static MultiLaurent var(int i, int k = 1);
  static MultiLaurent from_terms(std::vector<Term> terms);
  /// Embeds a one-variable polynomial as a polynomial in t_i.
  static MultiLaurent from_laurent(const Laurent& p, int i = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_unit() const;
  /// Largest variable index that occurs (0 for constants).
  int variables() const;

  MultiLaurent operator-() const;
  MultiLaurent& operator+=(const MultiLaurent& other);
  MultiLaurent& operator-=(const MultiLaurent& other);
  MultiLaurent& operator*=(const MultiLaurent& other) { return *this = *this * other; }
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);

  friend bool operator==(const MultiLaurent&, const MultiLaurent&) = default;

  /// t_i -> t_i^-1 for every i.
  MultiLaurent involute() const;
  MultiLaurent unit_inverse() const;
  /// Sends every variable to t.
  Laurent specialize() const;

  /// Canonical text with `c*t1^a.t2^b` terms, decreasing in lexicographic exponent order.
  /// `variables` pads the exponent vectors; 0 uses the largest index present (at least 1).
  std::string to_string(int variables = 0) const;
  static MultiLaurent parse(std::string_view text);

 private:
  std::vector<Term> terms_;  // sorted by exponent vector, ascending
};

std::ostream& operator<<(std::ostream& os, const MultiLaurent& p);

inline MultiLaurent involute(const MultiLaurent& p) { return p.involute(); }

}  // namespace tanglecospan
