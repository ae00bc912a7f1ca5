#include <doctest.h>

#include "support.hpp"
#include "tanglecospan/functor.hpp"
#include "tanglecospan/random.hpp"

using namespace tanglecospan;

namespace {

// Textbook matrices of the standard generators acting on row vectors.
LMatrix textbook_generator(std::size_t n, std::size_t i, bool inverse) {
  const Laurent t = Laurent::t();
  LMatrix m = LMatrix::identity(n);
  if (!inverse) {
    m(i - 1, i - 1) = Laurent(1) - t;
    m(i - 1, i) = t;
    m(i, i - 1) = Laurent(1);
    m(i, i) = Laurent(0);
  } else {
    m(i - 1, i - 1) = Laurent(0);
    m(i - 1, i) = Laurent(1);
    m(i, i - 1) = t.unit_inverse();
    m(i, i) = Laurent(1) - t.unit_inverse();
  }
  return m;
}

LMatrix textbook_matrix(const TangleWord& w) {
  LMatrix m = LMatrix::identity(w.source.size());
  for (const auto& l : w.layers) m = m * textbook_generator(w.source.size(), l.pos, l.gen == Gen::y);
  return m;
}

Laurent trace_of(const LMatrix& m) {
  Laurent s;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

TangleWord upward_braid(Rng& rng, std::size_t n, std::size_t length) {
  TangleWord w = random_braid_word(rng, n, length);
  w.source = SignSeq(std::vector<int>(n, 1));
  return w;
}

bool crosses_empty_level(const TangleWord& w) {
  const Typing ty = typecheck(w);
  for (std::size_t k = 1; k + 1 < ty.levels.size(); ++k)
    if (ty.levels[k].size() == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("objects") {
  CHECK(object_space(SignSeq(std::vector<int>{1}), Variant::reduced).rank == 0);
  CHECK(object_space(SignSeq(std::vector<int>{1, -1}), Variant::reduced).rank == 0);
  CHECK(object_space(SignSeq(std::vector<int>{1, 1, 1}), Variant::reduced).rank == 2);
  CHECK(object_space(SignSeq(std::vector<int>{1, 1, -1, -1}), Variant::reduced).rank == 2);
  CHECK(object_space(SignSeq(std::vector<int>{1, 1, 1}), Variant::unreduced).rank == 3);
  CHECK(object_space(SignSeq(std::vector<int>{1, 1, 1}), Variant::reduced).form.has_value());
  CHECK_FALSE(object_space(SignSeq(std::vector<int>{1, 1, 1}), Variant::unreduced).form.has_value());
}

TEST_CASE("single crossing") {
  const FunctorResult r = evaluate(parse_word("@[++] x1"), Variant::reduced);
  CHECK(invertibility(r.cospan) == Invertibility::invertible);
  CHECK(core_to_iso(r.cospan).laurent == LMatrix::from_rows({{-Laurent::t()}}, 1));
  const FunctorResult cube = evaluate(parse_word("@[++] x1;x1;x1"), Variant::reduced);
  CHECK(core_to_iso(cube.cospan).laurent == LMatrix::from_rows({{-Laurent::t(3)}}, 1));
  CHECK(burau_matrix(parse_word("@[++] x1;y1")) == LMatrix::identity(1));
  CHECK(burau_matrix(parse_word("@[++] ")) == LMatrix::identity(1));
  CHECK_THROWS_AS(burau_matrix(parse_word("@[] cup1+-")), NotABraidWord);
  CHECK_THROWS_AS(elementary_cospan(parse_word("@[++] cap1").layers[0], SignSeq(std::vector<int>{1, 1}), Variant::reduced),
                  ContextMismatch);
}

TEST_CASE("unreduced matrices match the textbook representation up to conjugacy") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng = sample_rng(21, 0, i);
    const std::size_t n = 2 + i % 3;
    const TangleWord w = upward_braid(rng, n, 6);
    const LMatrix m = burau_matrix(w, Variant::unreduced);
    const LMatrix c = textbook_matrix(w);
    LMatrix mp = m, cp = c;
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(trace_of(mp) == trace_of(cp));
      mp = mp * m;
      cp = cp * c;
    }
  }
}

TEST_CASE("braid relations") {
  for (Variant v : {Variant::reduced, Variant::unreduced}) {
    CHECK(burau_matrix(parse_word("@[+++] x1;x2;x1"), v) == burau_matrix(parse_word("@[+++] x2;x1;x2"), v));
    CHECK(burau_matrix(parse_word("@[++-+] x1;x3"), v) == burau_matrix(parse_word("@[++-+] x3;x1"), v));
    CHECK(burau_matrix(parse_word("@[+-+] y2;x2"), v) == LMatrix::identity(object_space(SignSeq(std::vector<int>{1, -1, 1}), v).rank));
  }
}

TEST_CASE("multivariable matrices specialize") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = sample_rng(22, 0, i);
    const TangleWord w = random_colored_braid(rng, 3, 5);
    const Matrix<MultiLaurent> g = gassner_matrix(w);
    TangleWord plain = w;
    plain.source = SignSeq(w.source.signs);
    const LMatrix b = burau_matrix(plain, Variant::unreduced);
    REQUIRE(g.rows() == b.rows());
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c) CHECK(g(r, c).specialize() == b(r, c));
  }
  const Matrix<MultiLaurent> one = gassner_matrix(parse_word("@[++] x1"));
  const LMatrix b = burau_matrix(parse_word("@[++] x1"), Variant::unreduced);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(one(r, c) == MultiLaurent::from_laurent(b(r, c)));
}

TEST_CASE("trace") {
  CHECK(invariants(trace(identity_cospan<Laurent>(3))).dim == 3);
  CHECK_THROWS_AS(trace(evaluate(parse_word("@[+-] cap1"), Variant::unreduced).cospan), NotEndomorphism);
  // Closing a braid and closing a free cospan must agree in rank.
  const Cospan c = evaluate(parse_word("@[++] x1;x1;x1"), Variant::unreduced).cospan;
  CHECK(invariants(trace(c)) == invariants(trace(evaluate(parse_word("@[++] x1;x1;x1"), Variant::unreduced).cospan)));
}

TEST_CASE("alexander polynomials by composition") {
  CHECK(alexander(parse_word("@[++] x1;x1;x1")).polynomial == Laurent::parse("t^2 - t + 1"));
  CHECK(alexander(parse_word("@[+++] x1;y2;x1;y2")).polynomial == Laurent::parse("t^2 - 3*t + 1"));
  CHECK(alexander(closure(parse_word("@[++] x1;x1;x1"))).polynomial == Laurent::parse("t^2 - t + 1"));
  CHECK(alexander(parse_word("@[+] ")).polynomial == Laurent(1));
  for (std::uint64_t i = 0; i < 15; ++i) {
    Rng rng = sample_rng(23, 0, i);
    const TangleWord w = upward_braid(rng, 3, 5);
    CHECK(alexander(w).polynomial == oracle_alexander(closure(w)));
  }
}

TEST_CASE("replay") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = sample_rng(24, 0, i);
    const TangleWord w = random_word(rng, Family::any, WordOptions{});
    const FunctorResult r = evaluate(w, i % 2 ? Variant::reduced : Variant::unreduced);
    CHECK(r.trail.size() == w.layers.size());
    CHECK(replay(r) == r.cospan);
  }
}

TEST_CASE("fold agrees with the oracle") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng = sample_rng(25, 0, i);
    const TangleWord w = random_word(rng, Family::any, WordOptions{});
    const CrossCheckReport report = cross_check(w);
    CHECK_MESSAGE(report.ok(), (w.to_string() + "\n" + report.to_string()));
    if (crosses_empty_level(w)) continue;
    const Cospan fold = evaluate(w, Variant::reduced).cospan;
    const Cospan whole = tidy(oracle_cospan(w, Variant::reduced));
    CHECK_MESSAGE(cospan_invariants(fold) == cospan_invariants(whole), w.to_string());
  }
}

TEST_CASE("relations agree through the empty boundary") {
  std::size_t seen = 0;
  for (std::uint64_t i = 0; i < 2000 && seen < 20; ++i) {
    Rng rng = sample_rng(26, 0, i);
    const TangleWord w = random_word(rng, Family::zero_sum, WordOptions{4, 8, true});
    if (!crosses_empty_level(w)) continue;
    ++seen;
    const Cospan fold = evaluate(w, Variant::reduced).cospan;
    CHECK_MESSAGE(relation_subspace(fold) == relation_subspace(tidy(oracle_cospan(w, Variant::reduced))), w.to_string());
    CHECK(is_lagrangian(fold));
  }
  CHECK(seen == 20);
}

TEST_CASE("a corrupted generator is localized") {
  GeneratorTable table;
  const TangleWord w = parse_word("@[+++] x2;x1;y2;x1");
  const SignSeq context = typecheck(w).levels[1];
  Cospan wrong = identity_cospan<Laurent>(3);
  table.replace(w.layers[1], context, Variant::unreduced, wrong);
  const CrossCheckReport report = cross_check(w, table);
  CHECK_FALSE(report.ok());
  REQUIRE(report.localized.has_value());
  CHECK(report.localized->first <= 1);
  CHECK(report.localized->second >= 2);
  CHECK(report.to_string().find("MISMATCH") != std::string::npos);
  CHECK(cross_check(w).ok());
}
