#include "tanglecospan/rational_function.hpp"

#include <ostream>

#include "tanglecospan/error.hpp"

namespace tanglecospan {

RationalFunction::RationalFunction(const Laurent& p) : den_(1) {
  if (p.is_zero()) return;
  const int low = p.low_degree();
  if (low >= 0) {
    num_ = p;
  } else {
    num_ = p.shifted(-low);
    den_ = Laurent::t(-low);
  }
}

RationalFunction::RationalFunction(const Laurent& num, const Laurent& den) : den_(1) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return;
  // Clear negative powers, then strip the common t-power and the Z[t]-gcd.
  Laurent n = num.shifted(-num.low_degree());
  Laurent d = den.shifted(-den.low_degree());
  const int shift = num.low_degree() - den.low_degree();
  if (shift > 0) n = n.shifted(shift);
  if (shift < 0) d = d.shifted(-shift);
  const Laurent g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = *exact_divide(n, g);
    d = *exact_divide(d, g);
  }
  if (d.terms().back().coef < 0) {
    n = -n;
    d = -d;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

bool RationalFunction::is_laurent() const { return den_.terms().size() == 1 && den_.terms()[0].coef == 1; }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return {den_, num_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RationalFunction::monic_form() const {
  const mpz_class lead = den_.terms().back().coef;
  auto render = [&](const Laurent& p) {
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      if (!out.empty()) out += " + ";
      mpq_class c(it->coef, lead);
      c.canonicalize();
      out += c.get_str() + "*t^" + std::to_string(it->exp);
    }
    return out.empty() ? std::string("0") : out;
  };
  return "(" + render(num_) + ")/(" + render(den_) + ")";
}

RationalFunction RationalFunction::parse(std::string_view text) {
  const auto slash = text.find(")/(");
  if (slash == std::string_view::npos) {
    auto body = text;
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    return RationalFunction(Laurent::parse(body));
  }
  auto lhs = text.substr(0, slash);
  auto rhs = text.substr(slash + 3);
  const auto open = lhs.find('(');
  const auto close = rhs.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos) throw SyntaxError("unbalanced parentheses", 1, 1);
  return {Laurent::parse(lhs.substr(open + 1)), Laurent::parse(rhs.substr(0, close))};
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace tanglecospan
