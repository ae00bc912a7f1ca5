#include "tanglecospan/multi_laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include "tanglecospan/error.hpp"

namespace tanglecospan {

namespace {

void trim_exp(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

std::vector<int> add_exp(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim_exp(r);
  return r;
}

}  // namespace

MultiLaurent::MultiLaurent(long constant) {
  if (constant != 0) terms_.push_back({{}, mpz_class(constant)});
}

MultiLaurent MultiLaurent::monomial(const mpz_class& coef, std::vector<int> exp) {
  MultiLaurent p;
  trim_exp(exp);
  if (coef != 0) p.terms_.push_back({std::move(exp), coef});
  return p;
}

MultiLaurent MultiLaurent::var(int i, int k) {
  if (i < 1) throw Error("variable index must be positive");
  std::vector<int> exp(static_cast<std::size_t>(i), 0);
  exp.back() = k;
  return monomial(1, std::move(exp));
}

MultiLaurent MultiLaurent::from_terms(std::vector<Term> terms) {
  std::map<std::vector<int>, mpz_class> acc;
  for (auto& term : terms) {
    trim_exp(term.exp);
    acc[term.exp] += term.coef;
  }
  MultiLaurent p;
  for (auto& [exp, coef] : acc)
    if (coef != 0) p.terms_.push_back({exp, coef});
  return p;
}

MultiLaurent MultiLaurent::from_laurent(const Laurent& p, int i) {
  std::vector<Term> terms;
  for (const auto& term : p.terms()) {
    std::vector<int> exp(static_cast<std::size_t>(i), 0);
    exp.back() = term.exp;
    terms.push_back({std::move(exp), term.coef});
  }
  return from_terms(std::move(terms));
}

bool MultiLaurent::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coef == 1 || terms_[0].coef == -1);
}

int MultiLaurent::variables() const {
  std::size_t n = 0;
  for (const auto& term : terms_) n = std::max(n, term.exp.size());
  return static_cast<int>(n);
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r = *this;
  for (auto& term : r.terms_) term.coef = -term.coef;
  return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& other) {
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

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& other) { return *this += -other; }

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  std::map<std::vector<int>, mpz_class> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) mpz_addmul(acc[add_exp(x.exp, y.exp)].get_mpz_t(), x.coef.get_mpz_t(), y.coef.get_mpz_t());
  MultiLaurent r;
  for (auto& [exp, coef] : acc)
    if (coef != 0) r.terms_.push_back({exp, coef});
  return r;
}

MultiLaurent MultiLaurent::involute() const {
  std::vector<Term> terms = terms_;
  for (auto& term : terms)
    for (auto& e : term.exp) e = -e;
  return from_terms(std::move(terms));
}

MultiLaurent MultiLaurent::unit_inverse() const {
  if (!is_unit()) throw NotInvertible("not a unit of the multivariable Laurent ring: " + to_string());
  std::vector<int> exp = terms_[0].exp;
  for (auto& e : exp) e = -e;
  return monomial(terms_[0].coef, std::move(exp));
}

Laurent MultiLaurent::specialize() const {
  std::vector<Laurent::Term> terms;
  for (const auto& term : terms_) {
    int total = 0;
    for (int e : term.exp) total += e;
    terms.push_back({total, term.coef});
  }
  return Laurent::from_terms(std::move(terms));
}

std::string MultiLaurent::to_string(int variables) const {
  if (terms_.empty()) return "0";
  const std::size_t width = static_cast<std::size_t>(std::max({variables, this->variables(), 1}));
  std::ostringstream os;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it != terms_.rbegin()) os << " + ";
    os << it->coef << '*';
    for (std::size_t i = 0; i < width; ++i) {
      if (i > 0) os << '.';
      os << 't' << (i + 1) << '^' << (i < it->exp.size() ? it->exp[i] : 0);
    }
  }
  return os.str();
}

namespace {

class MultiCursor {
 public:
  explicit MultiCursor(std::string_view text) : text_(text) {}

  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, 1, pos_ + 1); }

  mpz_class digits() {
    peek();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_int() {
    int sign = 1;
    while (peek() == '-' || peek() == '+') {
      if (text_[pos_] == '-') sign = -sign;
      ++pos_;
    }
    mpz_class v = digits();
    if (!v.fits_sint_p()) fail("integer out of range");
    return sign * static_cast<int>(v.get_si());
  }

  MultiLaurent::Term term() {
    int sign = 1;
    while (peek() == '-' || peek() == '+') {
      if (text_[pos_] == '-') sign = -sign;
      ++pos_;
    }
    mpz_class coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = digits();
      have_coef = true;
      accept('*');
    }
    std::vector<int> exp;
    bool have_var = false;
    while (accept('t')) {
      have_var = true;
      int index = small_int();
      if (index < 1) fail("variable index must be positive");
      int power = 1;
      if (accept('^')) {
        bool braced = accept('{') || accept('(');
        power = small_int();
        if (braced && !accept('}') && !accept(')')) fail("unbalanced exponent brackets");
      }
      if (exp.size() < static_cast<std::size_t>(index)) exp.resize(static_cast<std::size_t>(index), 0);
      exp[static_cast<std::size_t>(index - 1)] += power;
      if (!accept('.') && !accept('*')) break;
    }
    if (!have_coef && !have_var) fail("expected a term");
    return {std::move(exp), sign * coef};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiLaurent MultiLaurent::parse(std::string_view text) {
  MultiCursor cursor(text);
  if (cursor.peek() == '\0') cursor.fail("empty polynomial");
  std::vector<Term> terms;
  terms.push_back(cursor.term());
  while (cursor.peek() != '\0') {
    if (cursor.peek() != '+' && cursor.peek() != '-') cursor.fail("expected '+' or '-'");
    terms.push_back(cursor.term());
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const MultiLaurent& p) { return os << p.to_string(); }

}  // namespace tanglecospan
