#include "tanglecospan/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "tanglecospan/detail/zpoly.hpp"
#include "tanglecospan/error.hpp"

namespace tanglecospan {

namespace {

detail::ZPoly to_zpoly(const Laurent& p, int shift) {
  detail::ZPoly z;
  if (p.is_zero()) return z;
  z.assign(static_cast<std::size_t>(p.high_degree() - shift + 1), 0);
  for (const auto& term : p.terms()) z[static_cast<std::size_t>(term.exp - shift)] = term.coef;
  return z;
}

Laurent from_zpoly(const detail::ZPoly& z, int shift) {
  std::vector<Laurent::Term> terms;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0) terms.push_back({static_cast<int>(i) + shift, z[i]});
  return Laurent::from_terms(std::move(terms));
}

}  // namespace

Laurent::Laurent(long constant) {
  if (constant != 0) terms_.push_back({0, mpz_class(constant)});
}

Laurent::Laurent(const mpz_class& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

Laurent Laurent::monomial(const mpz_class& coef, int exp) {
  Laurent p;
  if (coef != 0) p.terms_.push_back({exp, coef});
  return p;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  Laurent p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == term.exp) {
      p.terms_.back().coef += term.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool Laurent::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coef == 1 || terms_[0].coef == -1);
}

bool Laurent::is_one() const { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coef == 1; }

int Laurent::low_degree() const {
  if (terms_.empty()) throw Error("degree of the zero polynomial");
  return terms_.front().exp;
}

int Laurent::high_degree() const {
  if (terms_.empty()) throw Error("degree of the zero polynomial");
  return terms_.back().exp;
}

mpz_class Laurent::coefficient(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coef;
  return 0;
}

mpz_class Laurent::content() const {
  mpz_class g = 0;
  for (const auto& term : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coef.get_mpz_t());
  return g;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& term : r.terms_) term.coef = -term.coef;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      mpz_class c = a->coef + b->coef;
      if (c != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    Laurent r = a;
    for (auto& term : r.terms_) {
      term.exp += b.terms_[0].exp;
      term.coef *= b.terms_[0].coef;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.low_degree() + b.low_degree();
  const int span = a.high_degree() + b.high_degree() - lo + 1;
  std::vector<mpz_class> dense(static_cast<std::size_t>(span), 0);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      mpz_addmul(dense[static_cast<std::size_t>(x.exp + y.exp - lo)].get_mpz_t(), x.coef.get_mpz_t(), y.coef.get_mpz_t());
  Laurent r;
  for (int i = 0; i < span; ++i)
    if (dense[static_cast<std::size_t>(i)] != 0) r.terms_.push_back({i + lo, std::move(dense[static_cast<std::size_t>(i)])});
  return r;
}

Laurent& Laurent::operator*=(const Laurent& other) { return *this = *this * other; }

std::strong_ordering operator<=>(const Laurent& a, const Laurent& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() <=> b.terms_.size();
  for (std::size_t i = n; i-- > 0;) {
    if (a.terms_[i].exp != b.terms_[i].exp) return a.terms_[i].exp <=> b.terms_[i].exp;
    const int c = cmp(a.terms_[i].coef, b.terms_[i].coef);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Laurent Laurent::involute() const {
  Laurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp, it->coef});
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& term : r.terms_) term.exp += k;
  return r;
}

Laurent Laurent::scaled(const mpz_class& s) const {
  if (s == 0) return {};
  Laurent r = *this;
  for (auto& term : r.terms_) term.coef *= s;
  return r;
}

Laurent Laurent::unit_inverse() const {
  if (!is_unit()) throw NotInvertible("not a unit of Z[t^±1]: " + to_string());
  return monomial(terms_[0].coef, -terms_[0].exp);
}

mpz_class Laurent::evaluate(long value) const {
  if (terms_.empty()) return 0;
  if (value == 0 && low_degree() < 0) throw DivisionByZero();
  mpq_class acc = 0;
  for (const auto& term : terms_) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(value < 0 ? -value : value),
                  static_cast<unsigned long>(term.exp < 0 ? -term.exp : term.exp));
    if (value < 0 && (term.exp % 2 != 0)) power = -power;
    if (term.exp < 0)
      acc += mpq_class(term.coef, power);
    else
      acc += term.coef * power;
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw Error("evaluation is not an integer");
  return acc.get_num();
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it != terms_.rbegin()) os << " + ";
    os << it->coef << "*t^" << it->exp;
  }
  return os.str();
}

namespace {

class TermCursor {
 public:
  explicit TermCursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, 1, pos_ + 1); }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int exponent() {
    bool braced = accept('{') || accept('(');
    int sign = 1;
    while (peek() == '-' || peek() == '+') {
      if (text_[pos_] == '-') sign = -sign;
      ++pos_;
    }
    mpz_class e = integer();
    if (braced && !accept('}') && !accept(')')) fail("unbalanced exponent brackets");
    if (!e.fits_sint_p()) fail("exponent out of range");
    return sign * static_cast<int>(e.get_si());
  }

  Laurent::Term term() {
    int sign = 1;
    while (peek() == '-' || peek() == '+') {
      if (text_[pos_] == '-') sign = -sign;
      ++pos_;
    }
    mpz_class coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = integer();
      have_coef = true;
      accept('*');
    }
    int exp = 0;
    if (accept('t')) {
      exp = 1;
      if (accept('^')) exp = exponent();
    } else if (!have_coef) {
      fail("expected a term");
    }
    return {exp, sign * coef};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Laurent Laurent::parse(std::string_view text) {
  TermCursor cursor(text);
  std::vector<Term> terms;
  if (cursor.done()) cursor.fail("empty polynomial");
  terms.push_back(cursor.term());
  while (!cursor.done()) {
    char op = cursor.peek();
    if (op != '+' && op != '-') cursor.fail("expected '+' or '-'");
    Term next = cursor.term();
    terms.push_back(std::move(next));
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

UnitNormalized unit_normalize(const Laurent& p) {
  if (p.is_zero()) return {Laurent{}, Laurent{1}};
  const int low = p.low_degree();
  const bool negate = p.terms().back().coef < 0;
  Laurent canonical = p.shifted(-low);
  if (negate) canonical = -canonical;
  return {std::move(canonical), Laurent::monomial(negate ? -1 : 1, low)};
}

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return unit_normalize(b).canonical;
  if (b.is_zero()) return unit_normalize(a).canonical;
  detail::ZPoly g = detail::gcd(to_zpoly(a, a.low_degree()), to_zpoly(b, b.low_degree()));
  return unit_normalize(from_zpoly(g, 0)).canonical;
}

std::optional<Laurent> exact_divide(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return Laurent{};
  if (b.terms().size() == 1) {
    const auto& bt = b.terms()[0];
    Laurent q;
    std::vector<Laurent::Term> terms;
    for (const auto& term : a.terms()) {
      if (!mpz_divisible_p(term.coef.get_mpz_t(), bt.coef.get_mpz_t())) return std::nullopt;
      terms.push_back({term.exp - bt.exp, term.coef / bt.coef});
    }
    return Laurent::from_terms(std::move(terms));
  }
  auto q = detail::exact_divide(to_zpoly(a, a.low_degree()), to_zpoly(b, b.low_degree()));
  if (!q) return std::nullopt;
  return from_zpoly(*q, a.low_degree() - b.low_degree());
}

}  // namespace tanglecospan
