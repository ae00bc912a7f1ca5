#pragma once

#include <string>
#include <string_view>

#include "tanglecospan/laurent.hpp"

namespace tanglecospan {

/// An element of Q(t), kept as num/den with num, den in Z[t] coprime over Z[t]
/// and den of positive leading coefficient. That pair is unique per value.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Laurent& p);                           // NOLINT(google-explicit-constructor)
  RationalFunction(const Laurent& num, const Laurent& den);

  const Laurent& numerator() const noexcept { return num_; }
  const Laurent& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the value lies in Z[t^±1].
  bool is_laurent() const;
  /// Numerator and denominator rescaled so the denominator is monic; returned as text.
  std::string monic_form() const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  RationalFunction involute() const { return {num_.involute(), den_.involute()}; }
  bool is_unit() const { return !is_zero(); }
  RationalFunction unit_inverse() const { return inverse(); }

  /// `(num)/(den)`, or just the numerator text when den = 1.
  std::string to_string() const;
  static RationalFunction parse(std::string_view text);

 private:
  Laurent num_;
  Laurent den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

inline RationalFunction involute(const RationalFunction& f) { return f.involute(); }

}  // namespace tanglecospan
