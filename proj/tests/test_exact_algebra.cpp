#include <doctest.h>
#include <gmpxx.h>

#include <random>

#include "support.hpp"
#include "tanglecospan/error.hpp"
#include "tanglecospan/linalg.hpp"
#include "tanglecospan/multi_laurent.hpp"
#include "tanglecospan/rational_function.hpp"

using namespace tanglecospan;
using testsupport::random_laurent;

namespace {

const Laurent t = Laurent::t();

// Dense Euclid over Q on polynomials in t (no negative powers), monic result.
std::vector<mpq_class> q_gcd(std::vector<mpq_class> a, std::vector<mpq_class> b) {
  auto trim = [](std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      mpq_class f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::vector<mpq_class> dense(const Laurent& p) {
  std::vector<mpq_class> v(static_cast<std::size_t>(p.high_degree() + 1));
  for (const auto& term : p.terms()) v[static_cast<std::size_t>(term.exp)] = term.coef;
  return v;
}

}  // namespace

TEST_CASE("laurent ring operations") {
  CHECK(t.involute() == Laurent::t(-1));
  const Laurent p = 2 - 3 * t;
  CHECK(p.involute().involute() == p);
  CHECK((1 - t) * (1 + t) == 1 - t * t);
  CHECK(Laurent{}.to_string() == "0");
  CHECK((t * t - t + 1).to_string() == "1*t^2 + -1*t^1 + 1*t^0");
}

TEST_CASE("laurent text round trip and shorthand") {
  CHECK(Laurent::parse("1*t^2 + -1*t^1 + 1*t^0") == t * t - t + 1);
  CHECK(Laurent::parse("t^2 - 3*t + 1") == t * t - 3 * t + 1);
  CHECK(Laurent::parse("-t^-1") == -Laurent::t(-1));
  CHECK(Laurent::parse("0").is_zero());
  CHECK_THROWS_AS(Laurent::parse("t^"), SyntaxError);
  CHECK_THROWS_AS(Laurent::parse("2 3"), SyntaxError);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Laurent q = random_laurent(rng, 4, 3, 9);
    CHECK(Laurent::parse(q.to_string()) == q);
  }
}

TEST_CASE("unit_normalize") {
  auto a = unit_normalize(-t * t + t * t * t);
  CHECK(a.canonical == t - 1);
  CHECK(a.unit == t * t);
  auto z = unit_normalize(Laurent{});
  CHECK(z.canonical.is_zero());
  CHECK(z.unit == Laurent(1));
  auto u = unit_normalize(Laurent::t(-1));
  CHECK(u.canonical == Laurent(1));
  CHECK(u.unit == Laurent::t(-1));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Laurent p = random_laurent(rng);
    const Laurent unit = Laurent::monomial(i % 2 ? 1 : -1, i % 5 - 2);
    CHECK(unit_normalize(p * unit).canonical == unit_normalize(p).canonical);
    const auto n = unit_normalize(p);
    CHECK(n.unit * n.canonical == p);
  }
}

TEST_CASE("poly_gcd") {
  const Laurent p = 3 * t * t - 6;
  CHECK(poly_gcd(p, Laurent{}) == unit_normalize(p).canonical);
  const Laurent a = t * t - 1, b = t * t * t - 1;
  const Laurent g = poly_gcd(a, b);
  CHECK(dense(g) == q_gcd(dense(a), dense(b)));
  CHECK(g == t - 1);
  CHECK(poly_gcd(t - 1, t + 1) == Laurent(1));
  CHECK(q_gcd(dense(t - 1), dense(t + 1)) == std::vector<mpq_class>{1});

  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const Laurent x = random_laurent(rng), y = random_laurent(rng), c = random_laurent(rng, 2, 1, 2);
    if (c.is_zero() || (x.is_zero() && y.is_zero())) continue;
    const Laurent d = poly_gcd(x * c, y * c);
    CHECK(exact_divide(x * c, d).has_value());
    CHECK(exact_divide(y * c, d).has_value());
    CHECK(exact_divide(d, unit_normalize(c).canonical).has_value());
  }
}

TEST_CASE("ring axioms and involution on random inputs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK((a * b).involute() == a.involute() * b.involute());
    CHECK(a.involute().involute() == a);
  }
}

TEST_CASE("multivariable arithmetic specializes") {
  const MultiLaurent t1 = MultiLaurent::var(1), t2 = MultiLaurent::var(2);
  const MultiLaurent p = (1 - t1) * (1 + t2) - t1 * t2 * t2;
  CHECK(p.specialize() == (1 - t) * (1 + t) - t * t * t);
  CHECK(MultiLaurent::parse(p.to_string(2)) == p);
  CHECK(MultiLaurent(1).to_string(2) == "1*t1^0.t2^0");
  CHECK(t1.involute() == MultiLaurent::var(1, -1));
  CHECK((t1 * t2).unit_inverse() * t1 * t2 == MultiLaurent(1));
}

TEST_CASE("rational function field") {
  const RationalFunction f(Laurent(1), t - 1), g(Laurent(1), 1 - t);
  CHECK((f + g).is_zero());
  CHECK(f.involute() == RationalFunction(t, 1 - t));
  CHECK(f.involute() == RationalFunction(Laurent(1), Laurent::t(-1) - 1));
  const RationalFunction h(t * t + 1, t - 2);
  CHECK(h * h.inverse() == RationalFunction(1));
  CHECK_THROWS_AS(RationalFunction(0).inverse(), DivisionByZero);
  CHECK(RationalFunction::parse(h.to_string()) == h);
  CHECK(h.involute().involute() == h);
}

TEST_CASE("rational_kernel examples") {
  CHECK(rational_kernel(to_rational(LMatrix::identity(3))).empty());
  const auto k = kernel_basis(LMatrix{{t - 1, t - 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == LVector{1, -1});
  CHECK(kernel_basis(LMatrix::zero(2, 3)).size() == 3);
}

TEST_CASE("kernel and rank on random matrices") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const std::size_t r = 1 + i % 4, c = 1 + (i * 7) % 5;
    LMatrix m = testsupport::random_matrix(rng, r, c);
    if (i % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * (1 + t);
    }
    const auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == c);
    for (const auto& v : basis)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
}

TEST_CASE("determinant and inverses") {
  const LMatrix m{{t, 1}, {0, t}};
  CHECK(determinant(m) == t * t);
  CHECK(expansion_determinant(m) == t * t);
  const LMatrix u{{t, 1}, {0, -1}};
  CHECK(unit_inverse(u) * u == LMatrix::identity(2));
  const QMatrix x = rational_solve(m, LMatrix::identity(2));
  CHECK(x * to_rational(m) == to_rational(LMatrix::identity(2)));
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(LMatrix{{t - 1, 0}, {0, (t - 1) * (t + 1)}}) == std::vector<Laurent>{t - 1, t * t - 1});
  // d1 = gcd of entries, d1 * d2 = det = t^2, which is a unit of Z[t^±1]
  const LMatrix m{{t, 1}, {0, t}};
  const auto d1 = q_gcd(dense(t), dense(Laurent(1)));
  CHECK(d1 == std::vector<mpq_class>{1});
  CHECK(invariant_factors(m) == std::vector<Laurent>{1, unit_normalize(t * t).canonical});
  CHECK(invariant_factors(LMatrix::zero(1, 1)) == std::vector<Laurent>{Laurent{}});

  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const std::size_t r = 1 + i % 3, c = 1 + (i * 5) % 4;
    const LMatrix a = testsupport::random_matrix(rng, r, c);
    const LMatrix b = testsupport::random_unimodular(rng, r) * a * testsupport::random_unimodular(rng, c);
    CHECK(invariant_factors(a) == invariant_factors(b));
  }
}

TEST_CASE("gcd_of_minors") {
  const LMatrix m{{t - 1, 0}, {0, t + 1}};
  CHECK(gcd_of_minors(m, 0) == Laurent(1));
  CHECK(gcd_of_minors(m, 2) == t * t - 1);
  CHECK(gcd_of_minors(m, 3).is_zero());
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10; ++i) {
    const LMatrix a = testsupport::random_matrix(rng, 3, 3);
    const LMatrix b = testsupport::random_unimodular(rng, 3) * a * testsupport::random_unimodular(rng, 3);
    for (std::size_t k = 0; k <= 3; ++k) CHECK(gcd_of_minors(a, k) == gcd_of_minors(b, k));
  }
}
