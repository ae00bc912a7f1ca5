#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "tanglecospan/laurent.hpp"
#include "tanglecospan/linalg.hpp"

namespace testsupport {

using tanglecospan::Laurent;
using tanglecospan::LMatrix;

inline Laurent random_laurent(std::mt19937_64& rng, int max_terms = 3, int max_exp = 2, int max_coef = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), ex(-max_exp, max_exp), co(-max_coef, max_coef);
  std::vector<Laurent::Term> terms;
  for (int n = nterms(rng); n > 0; --n) terms.push_back({ex(rng), co(rng)});
  return Laurent::from_terms(std::move(terms));
}

inline LMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int max_terms = 2) {
  LMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_laurent(rng, max_terms, 1, 2);
  return m;
}

/// Product of random elementary row operations with unit pivots; invertible over Z[t^±1].
inline LMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  LMatrix u = LMatrix::identity(n);
  if (n == 0) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> shift(-1, 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    LMatrix e = LMatrix::identity(n);
    if (a == b) {
      e(a, a) = Laurent::monomial(shift(rng) >= 0 ? 1 : -1, shift(rng));
    } else {
      e(a, b) = random_laurent(rng, 2, 1, 2);
    }
    u = e * u;
  }
  return u;
}

}  // namespace testsupport

namespace doctest {
template <>
struct StringMaker<tanglecospan::Laurent> {
  static String convert(const tanglecospan::Laurent& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<std::vector<tanglecospan::Laurent>> {
  static String convert(const std::vector<tanglecospan::Laurent>& v) {
    std::string s = "[";
    for (const auto& p : v) s += p.to_string() + "; ";
    return (s + "]").c_str();
  }
};
}  // namespace doctest
