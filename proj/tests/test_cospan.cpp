#include <doctest.h>

#include "support.hpp"
#include "tanglecospan/functor.hpp"
#include "tanglecospan/laws.hpp"
#include "tanglecospan/parallel.hpp"
#include "tanglecospan/random.hpp"

using namespace tanglecospan;

namespace {

Cospan reduced(const char* text) { return evaluate(parse_word(text), Variant::reduced).cospan; }
Cospan unreduced(const char* text) { return evaluate(parse_word(text), Variant::unreduced).cospan; }

SaturatedSubspace diagonal_subspace(std::size_t r) {
  std::vector<LVector> span;
  for (std::size_t i = 0; i < r; ++i) {
    LVector v(2 * r);
    v[i] = Laurent(1);
    v[r + i] = Laurent(1);
    span.push_back(v);
  }
  return SaturatedSubspace(2 * r, span);
}

}  // namespace

TEST_CASE("identity cospans") {
  const Cospan id = identity_cospan<Laurent>(3);
  CHECK(relation_subspace(id) == diagonal_subspace(3));
  CHECK(invertibility(id) == Invertibility::invertible);

  const Cospan t = unreduced("@[+++] x1;y2;cup2+-");
  CHECK(compose_tidy(identity_cospan<Laurent>(t.src_rank), t) == tidy(t));
  CHECK(cospan_invariants(compose_tidy(t, identity_cospan<Laurent>(t.dst_rank))) == cospan_invariants(t));

  const ObjectSpace o = object_space(SignSeq(std::vector<int>{1, 1, 1}), Variant::reduced);
  const Cospan rid = identity_cospan<Laurent>(o.rank, o.form);
  CHECK(lagrangian_relation(rid) == diagonal(*o.form));
}

TEST_CASE("free summands do not change the relation") {
  const Cospan c = reduced("@[+++] x1;x2");
  Cospan padded = c;
  padded.centre = direct_sum(c.centre, Module::free(2));
  padded.leg_src = LMatrix::zero(c.centre.gens + 2, c.src_rank);
  padded.leg_dst = LMatrix::zero(c.centre.gens + 2, c.dst_rank);
  for (std::size_t i = 0; i < c.centre.gens; ++i) {
    for (std::size_t j = 0; j < c.src_rank; ++j) padded.leg_src(i, j) = c.leg_src(i, j);
    for (std::size_t j = 0; j < c.dst_rank; ++j) padded.leg_dst(i, j) = c.leg_dst(i, j);
  }
  CHECK(relation_subspace(padded) == relation_subspace(c));
  CHECK(is_lagrangian(padded));
}

TEST_CASE("relations round trip through cospans") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = sample_rng(31, 0, i);
    const TangleWord w = random_word(rng, Family::nonzero_sum, WordOptions{});
    const LagrangianRelation n = lagrangian_relation(evaluate(w, Variant::reduced).cospan);
    const Cospan back = relation_to_cospan(n);
    CHECK(relation_subspace(back) == n.subspace);
    CHECK(lagrangian_relation(back) == n);
  }
}

TEST_CASE("invertibility classes") {
  CHECK(invertibility(reduced("@[+++] x1;y2;x1")) == Invertibility::invertible);
  CHECK(invertibility(unreduced("@[+-] cap1;cup1+-")) == Invertibility::neither);
  const CoreIso iso = core_to_iso(reduced("@[++] y1"));
  CHECK(iso.integral);
  CHECK(iso.laurent == LMatrix::from_rows({{-Laurent::t(-1)}}, 1));
  CHECK_FALSE(iso.to_string().empty());
}

TEST_CASE("serialization is stable") {
  const Cospan c = reduced("@[++] x1");
  const std::string s = serialize(c);
  CHECK(s == serialize(reduced("@[++] x1")));
  CHECK(s.find("lagrangian: yes") != std::string::npos);
  CHECK(s.find("invertible") != std::string::npos);
  CHECK(serialize(unreduced("@[++] x1")).find("lagrangian: n/a") != std::string::npos);
}

TEST_CASE("2-cells") {
  const Cospan a = unreduced("@[++] x1;y1");
  const Cospan b = unreduced("@[++] x1");
  const TwoCospan ida = identity_2cell(a);
  CHECK(is_valid(ida));
  CHECK(is_invertible_cell(ida));
  CHECK(cell_invariants(vcompose(ida, ida)) == cell_invariants(ida));

  const TwoCospan h = hcompose(ida, identity_2cell(b));
  CHECK(is_valid(h));
  CHECK(h.from.src_rank == 2);
  CHECK(cospan_invariants(h.from) == cospan_invariants(compose_cospans(a, b)));

  CHECK(is_invertible_cell(associator(a, b, a)));
  CHECK(is_valid(associator(a, b, a)));
  CHECK(is_invertible_cell(left_unitor(b)));
  CHECK(is_invertible_cell(right_unitor(b)));

  Rng rng = sample_rng(32, 0, 0);
  const TwoCospan r = random_two_cospan(rng, a, b);
  CHECK(is_valid(r));
  CHECK(cell_invariants(vcompose(identity_2cell(a), r)) == cell_invariants(r));
  CHECK(cell_invariants(vcompose(r, identity_2cell(b))) == cell_invariants(r));
  CHECK_FALSE(serialize(r).empty());
}

TEST_CASE("coherence laws on samples") {
  LawOptions ids;
  ids.samples = 5;
  ids.identities_only = true;
  for (const auto& r : check_laws(ids)) CHECK_MESSAGE(r.ok(), r.law);

  LawOptions opt;
  opt.samples = 10;
  opt.seed = 3;
  const auto reports = check_laws(opt);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].law == "interchange");
  for (const auto& r : reports) CHECK_MESSAGE(r.ok(), r.law);

  opt.corrupt = true;
  std::size_t caught = 0;
  for (const auto& r : check_laws(opt)) caught += r.failures;
  CHECK(caught > 0);
}

TEST_CASE("parallel map keeps order") {
  const auto squares = parallel_map(50, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 50; ++i) CHECK(squares[i] == i * i);
  CHECK_THROWS_AS(parallel_map(5, [](std::size_t i) -> int { if (i == 3) throw NotEndomorphism("x"); return 0; }),
                  NotEndomorphism);
}
