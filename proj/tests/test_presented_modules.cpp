#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tanglecospan/presented_module.hpp"

using namespace tanglecospan;

namespace {

const Laurent t = Laurent::t();

Module cyclic(const Laurent& p) { return {1, LMatrix{{p}}}; }

Module random_module(std::mt19937_64& rng, std::size_t gens, std::size_t rels) {
  return {gens, testsupport::random_matrix(rng, gens, rels)};
}

}  // namespace

TEST_CASE("pushout examples") {
  const Module L = Module::free(1);
  auto p = pushout(Map::identity(L), Map::identity(L));
  CHECK(p.module.gens == 2);
  CHECK(rationalize(p.module).dim == 1);

  const Module zero = Module::free(0);
  auto z = pushout(Map::identity(zero), Map::identity(zero));
  CHECK(z.module.gens == 0);
  CHECK(rationalize(z.module).dim == 0);

  const Map f(L, L, LMatrix{{t - 1}});
  auto q = pushout(f, f);
  CHECK(q.module.gens == 2);
  CHECK(q.module.relations() == 1);
  CHECK(q.module.rels == LMatrix{{1 - t}, {t - 1}});
  CHECK(rationalize(q.module).dim == 1);
  // the two legs agree after composing with f
  CHECK(compare_maps(compose(p.left, Map::identity(L)), compose(p.right, Map::identity(L))) != MapEquality::unequal);
  CHECK(compare_maps(compose(q.left, f), compose(q.right, f)) == MapEquality::exact);
}

TEST_CASE("pushout rejects different sources") {
  const Map a = Map::identity(Module::free(1));
  const Map b = Map::identity(Module::free(2));
  CHECK_THROWS_AS(pushout(a, b), SourceMismatch);
}

TEST_CASE("coequalizer examples") {
  const Module L = Module::free(1);
  auto c = coequalizer(Map::identity(L), Map::identity(L));
  CHECK(invariants(c.module) == ModuleInvariants{1, {}});
  auto d = coequalizer(Map::identity(L), Map(L, L, LMatrix{{t}}));
  CHECK(d.module.rels == LMatrix{{1 - t}});
  CHECK(invariants(d.module) == ModuleInvariants{0, {t - 1}});
  CHECK(compare_maps(compose(d.projection, Map::identity(L)), compose(d.projection, Map(L, L, LMatrix{{t}}))) ==
        MapEquality::exact);
  auto e = coequalizer(Map::identity(Module::free(0)), Map::identity(Module::free(0)));
  CHECK(e.module.gens == 0);
}

TEST_CASE("rationalize examples") {
  CHECK(rationalize(Module::free(3)).dim == 3);
  CHECK(rationalize(cyclic(t - 1)).dim == 0);
  const Module m(2, LMatrix{{t}, {-1}});
  CHECK(rationalize(m).dim == 1);
  CHECK(rationalize(m).basis_generators == std::vector<std::size_t>{1});
}

TEST_CASE("saturated_kernel examples") {
  const Module F2 = Module::free(2);
  CHECK(saturated_kernel(Map::identity(F2)).dim() == 0);
  const Map onto_torsion(Module::free(1), cyclic(t - 1), LMatrix{{1}});
  CHECK(saturated_kernel(onto_torsion) == SaturatedSubspace::full(1));
  CHECK(saturated_kernel(Map::zero(F2, Module::free(1))) == SaturatedSubspace::full(2));
  CHECK_THROWS_AS(saturated_kernel(Map::identity(cyclic(t))), NonFreeSource);
}

TEST_CASE("map equality policy") {
  const Module m(2, LMatrix{{t - 1}, {0}});
  const Map a(Module::free(1), m, LMatrix{{1}, {0}});
  const Map b(Module::free(1), m, LMatrix{{t}, {0}});
  const Map c(Module::free(1), m, LMatrix{{2}, {0}});
  const Map d(Module::free(1), m, LMatrix{{0}, {1}});
  CHECK(compare_maps(a, a) == MapEquality::exact);
  CHECK(compare_maps(a, b) == MapEquality::exact);
  CHECK(compare_maps(a, c) == MapEquality::rational);
  CHECK(compare_maps(a, d) == MapEquality::unequal);
}

TEST_CASE("saturated subspaces are canonical") {
  const SaturatedSubspace a(2, {{1 + t, -(1 + t)}});
  const SaturatedSubspace b(2, {{Laurent(-3) * t, 3 * t}});
  CHECK(a == b);
  CHECK(a.basis()[0] == LVector{1, -1});
  CHECK(a.contains(LVector{t - 2, 2 - t}));
  CHECK_FALSE(a.contains(LVector{1, 1}));
}

TEST_CASE("simplify examples") {
  const Module m(2, LMatrix{{1}, {t}});
  auto s = simplify(m);
  CHECK(s.module.gens == 1);
  CHECK(s.module.relations() == 0);
  CHECK(rationalize(s.module).dim == rationalize(m).dim);

  const Module minimal(1, LMatrix{{t * t - t + 1}});
  CHECK(simplify(minimal).module == minimal);
}

TEST_CASE("simplify transports maps") {
  // Λ^3 / (e0 - t e1) with the inclusion of e0 and the projection to Λ^3 / (...)
  const Module m(3, LMatrix{{1}, {-t}, {0}});
  const Map in(Module::free(1), m, LMatrix{{1}, {0}, {0}});
  const Map out(m, Module(1, LMatrix{{0}}), LMatrix{{t, 1, 5}});
  auto s = simplify(m, {in}, {out});
  CHECK(s.module.gens == 2);
  CHECK(s.into[0].mat == LMatrix{{t}, {0}});
  CHECK(s.out_of[0].mat == LMatrix{{1, 5}});
  CHECK(s.out_of[0].mat * s.into[0].mat == out.mat * in.mat);
}

TEST_CASE("pushout exactness on random inputs") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 25; ++i) {
    const Module h = Module::free(1 + i % 2);
    const Module t1 = random_module(rng, 2, i % 2), t2 = random_module(rng, 1 + i % 3, 1);
    const Map f(h, t1, testsupport::random_matrix(rng, t1.gens, h.gens));
    const Map g(h, t2, testsupport::random_matrix(rng, t2.gens, h.gens));
    auto p = pushout(f, g);
    // independent count: dim P = dim T1 + dim T2 - rank of the glue modulo the relations
    const LMatrix glue = (-f.mat).vconcat(g.mat);
    const LMatrix all = LMatrix::block_diag(t1.rels, t2.rels).hconcat(glue);
    const std::size_t glue_rank = rank(all) - rank(LMatrix::block_diag(t1.rels, t2.rels));
    CHECK(rationalize(p.module).dim == rationalize(t1).dim + rationalize(t2).dim - glue_rank);
  }
}

TEST_CASE("identity-leg pushout collapses to the other input") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 15; ++i) {
    const Module h = Module::free(2);
    const Module t2 = random_module(rng, 3, 2);
    const Map g(h, t2, testsupport::random_matrix(rng, 3, 2));
    auto p = pushout(Map::identity(h), g);
    auto s = simplify(p.module, {p.right});
    CHECK(invariants(s.module) == invariants(t2));
    const auto direct = simplify(t2, {Map::identity(t2)});
    CHECK(s.module == direct.module);
    CHECK(s.into[0].mat == direct.into[0].mat);
  }
}

TEST_CASE("simplify preserves invariants on random presentations") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    LMatrix r = testsupport::random_matrix(rng, 3, 3);
    r(i % 3, (i / 3) % 3) = Laurent::monomial(i % 2 ? 1 : -1, i % 3 - 1);
    const Module m(3, r);
    CHECK(invariants(simplify(m).module) == invariants(m));
  }
}

TEST_CASE("saturated kernel is saturated") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 15; ++i) {
    const Module dst = random_module(rng, 2, 1);
    const Map f(Module::free(3), dst, testsupport::random_matrix(rng, 2, 3));
    const SaturatedSubspace k = saturated_kernel(f);
    std::vector<LVector> scaled;
    for (auto v : k.basis()) {
      for (auto& x : v) x *= (2 + t);
      scaled.push_back(v);
    }
    CHECK(SaturatedSubspace(3, scaled) == k);
  }
}

TEST_CASE("module text format round trip") {
  const Module m(2, LMatrix{{t - 1, 0}, {1, t * t}});
  CHECK(m.to_string() == "module gens=2 rels=2\n[1*t^1 + -1*t^0, 0]\n[1*t^0, 1*t^2]\n");
  CHECK(parse_module(m.to_string()) == m);
  const Map f(Module::free(1), m, LMatrix{{1}, {t}});
  CHECK(parse_map(f.to_string(), f.src, f.dst) == f);
  CHECK_THROWS_AS(parse_module("module gens=1 rels=1\n[1, 2]"), SyntaxError);
}
