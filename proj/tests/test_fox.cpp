#include <doctest.h>

#include "support.hpp"
#include "tanglecospan/fox.hpp"
#include "tanglecospan/random.hpp"

using namespace tanglecospan;

namespace {

const TangleWord kTrefoil = closure(parse_word("@[++] x1;x1;x1"));
const TangleWord kEight = closure(parse_word("@[+++] x1;y2;x1;y2"));

GroupPresentation presentation(const char* text) { return wirtinger(make_diagram(parse_word(text))); }

}  // namespace

TEST_CASE("fox derivatives of small words") {
  const GroupWord commutator = {{0, 1}, {1, 1}, {0, -1}, {1, -1}};
  const LVector d = fox_derivative(commutator, 2);
  CHECK(d[0] == Laurent(1) - Laurent::t());
  CHECK(d[1] == Laurent::t() - Laurent(1));

  CHECK(fox_derivative(GroupWord{{0, 1}}, 1) == LVector{Laurent(1)});
  CHECK(fox_derivative(GroupWord{{0, -1}}, 1) == LVector{-Laurent::t(-1)});
  CHECK(fox_derivative(GroupWord{}, 3) == LVector(3));
  CHECK_THROWS_AS(fox_derivative(GroupWord{{4, 1}}, 2), MalformedDiagram);

  GroupPresentation empty;
  empty.generators = 2;
  const LMatrix j = fox_jacobian(empty);
  CHECK(j.rows() == 2);
  CHECK(j.cols() == 0);
}

TEST_CASE("wirtinger presentations") {
  const GroupPresentation id = presentation("@[+] ");
  CHECK(id.generators == 1);
  CHECK(id.relators.empty());

  const GroupPresentation one = presentation("@[++] x1");
  const Diagram d = make_diagram(parse_word("@[++] x1"));
  CHECK(one.generators == 3);
  REQUIRE(one.relators.size() == 1);
  const auto& c = d.crossings[0];
  const GroupWord expected = {{c.over, -1}, {c.in, 1}, {c.over, 1}, {c.out, -1}};
  CHECK(one.relators[0] == expected);
  CHECK(one.bottom_words[0] == GroupWord{{d.bottom[0], 1}});

  const GroupPresentation neg = presentation("@[++] y1");
  const Diagram nd = make_diagram(parse_word("@[++] y1"));
  const auto& n = nd.crossings[0];
  CHECK(n.sign == -1);
  CHECK(neg.relators[0] == GroupWord{{n.over, 1}, {n.in, 1}, {n.over, -1}, {n.out, -1}});

  const GroupPresentation trefoil = wirtinger(make_diagram(kTrefoil));
  CHECK(trefoil.generators == 3);
  CHECK(trefoil.relators.size() == 3);
  CHECK(bottom_big_loop(presentation("@[+-+] ")).size() == 3);
}

TEST_CASE("fundamental formula") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng = sample_rng(11, 0, i);
    const TangleWord w = random_word(rng, Family::any, WordOptions{});
    const GroupPresentation p = wirtinger(make_diagram(w));
    CHECK(augmentation_holds(p, fox_jacobian(p)));
  }
}

TEST_CASE("knot polynomials from the exterior") {
  CHECK(oracle_alexander(kTrefoil) == Laurent::parse("t^2 - t + 1"));
  CHECK(oracle_alexander(kEight) == Laurent::parse("t^2 - 3*t + 1"));
  CHECK(oracle_alexander(closure(parse_word("@[+] "))) == Laurent(1));
  for (std::size_t row = 0; row < 3; ++row) CHECK(oracle_alexander(kTrefoil, row) == Laurent::parse("t^2 - t + 1"));
  for (std::size_t row = 0; row < 4; ++row) CHECK(oracle_alexander(kEight, row) == Laurent::parse("t^2 - 3*t + 1"));
  // Mirror images share the polynomial.
  CHECK(oracle_alexander(closure(parse_word("@[++] y1;y1;y1"))) == Laurent::parse("t^2 - t + 1"));
}

TEST_CASE("row deletion does not matter") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = sample_rng(12, 0, i);
    TangleWord braid = random_braid_word(rng, 3, 5);
    braid.source = SignSeq(std::vector<int>{1, 1, 1});
    const TangleWord closed = closure(braid);
    const std::size_t gens = wirtinger(make_diagram(closed)).generators;
    const Laurent first = oracle_alexander(closed, 0);
    for (std::size_t row = 1; row < gens; ++row) CHECK(oracle_alexander(closed, row) == first);
  }
}

TEST_CASE("object forms") {
  CHECK(reduced_rank(SignSeq(std::vector<int>{1, 1, 1})) == 2);
  CHECK(reduced_rank(SignSeq(std::vector<int>{1, -1})) == 0);
  CHECK(reduced_rank(SignSeq(std::vector<int>{1, 1, -1, -1})) == 2);
  CHECK(reduced_rank(SignSeq()) == 0);
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng = sample_rng(13, 0, i);
    const SignSeq s = random_boundary(rng, Family::any, 5);
    const LMatrix g = reduced_gram(s);
    CHECK(g.rows() == reduced_rank(s));
    // The constructor rejects forms that are not skew-Hermitian or degenerate.
    CHECK_NOTHROW(HermitianModule{g});
    // The disc form degenerates when the signs cancel.
    if (s.sign_sum() != 0) CHECK_NOTHROW(HermitianModule{disc_gram(s)});
  }
}

TEST_CASE("oracle cospans") {
  for (const char* text : {"@[+] ", "@[++-] ", "@[+-] x1;y1"}) {
    const Cospan c = oracle_cospan(parse_word(text));
    CHECK(invertibility(c) == Invertibility::invertible);
    CHECK(core_to_iso(c).laurent == LMatrix::identity(c.src_rank));
  }
  const Cospan reduced = oracle_cospan(parse_word("@[+++] x1;y2"), Variant::reduced);
  CHECK(reduced.src_rank == 2);
  CHECK(reduced.src_form.has_value());
  CHECK(is_lagrangian(reduced));
  const MultiCospan colored = oracle_cospan_colored(parse_word("@[+1 +2] x1"));
  CHECK(colored.src_rank == 2);
}
