#include <doctest.h>

#include "tanglecospan/error.hpp"
#include "tanglecospan/random.hpp"
#include "tanglecospan/tangle.hpp"

using namespace tanglecospan;

TEST_CASE("parsing words") {
  const TangleWord w = parse_word("@[++] x1 ; x1 ; x1");
  CHECK(w.source.signs == std::vector<int>{1, 1});
  REQUIRE(w.layers.size() == 3);
  CHECK(w.layers[2].gen == Gen::x);
  CHECK(w.layers[2].pos == 1);

  const TangleWord cup = parse_word("@[] cup1+- ");
  REQUIRE(cup.layers.size() == 1);
  CHECK(cup.layers[0].gen == Gen::cup);
  CHECK(cup.layers[0].chirality == 1);
  CHECK(parse_word("@[] cup1-+").layers[0].chirality == -1);

  CHECK(parse_word("@[++] ").layers.empty());
  CHECK(parse_word("@[+-] id").layers[0].gen == Gen::id);
  CHECK(parse_word("@[+ +] # two strands\n x1 # crossing\n").layers.size() == 1);

  const TangleWord colored = parse_word("@[+1 +2] x1;x1");
  CHECK(colored.source.colors == std::vector<int>{1, 2});
  CHECK(colored.source.colored());
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_word("@[++] x1;\n  z2");
    FAIL("expected an error");
  } catch (const UnknownGenerator& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_word("[++] x1"), SyntaxError);
  CHECK_THROWS_AS(parse_word("@[+*] x1"), SyntaxError);
  CHECK_THROWS_AS(parse_word("@[++] x"), SyntaxError);
  CHECK_THROWS_AS(parse_word("@[++] x0"), SyntaxError);
  CHECK_THROWS_AS(parse_word("@[] cup1"), SyntaxError);
  CHECK_THROWS_AS(parse_word("@[++] x1 x1"), SyntaxError);
  try {
    parse_word("@[++] x1", 7);
    parse_word("@[++]\n\n x1;;", 7);
    FAIL("expected an error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 9);
  }
}

TEST_CASE("typechecking") {
  CHECK_THROWS_AS(typecheck(parse_word("@[++] x9")), BoundaryMismatch);
  const Typing cap = typecheck(parse_word("@[+-] cap1"));
  CHECK(cap.source.signs == std::vector<int>{1, -1});
  CHECK(cap.target.size() == 0);
  CHECK_NOTHROW(typecheck(parse_word("@[-+] cap1")));
  CHECK_THROWS_AS(typecheck(parse_word("@[++] cap1")), CapOrientation);
  try {
    typecheck(parse_word("@[+-+] cap1;x5"));
    FAIL("expected an error");
  } catch (const TypeError& e) {
    CHECK(e.layer() == 1);
  }

  const Typing cup = typecheck(parse_word("@[+] cup1-+;cup4+-"));
  CHECK(cup.levels[1].signs == std::vector<int>{-1, 1, 1});
  CHECK(cup.target.signs == std::vector<int>{-1, 1, 1, 1, -1});

  const Typing swap = typecheck(parse_word("@[+1 -2] y1"));
  CHECK(swap.target.signs == std::vector<int>{-1, 1});
  CHECK(swap.target.colors == std::vector<int>{2, 1});
}

TEST_CASE("crossing signs") {
  const SignSeq pp(std::vector<int>{1, 1});
  Layer x;
  x.gen = Gen::x;
  x.pos = 1;
  Layer y = x;
  y.gen = Gen::y;
  CHECK(crossing_sign(x, pp) == 1);
  CHECK(crossing_sign(y, pp) == -1);
  // Reversing one strand flips the sign; reversing both keeps it.
  CHECK(crossing_sign(x, SignSeq(std::vector<int>{1, -1})) == -1);
  CHECK(crossing_sign(x, SignSeq(std::vector<int>{-1, -1})) == 1);
}

TEST_CASE("rendering round trip") {
  for (const char* text : {"@[++] x1;x1;x1", "@[+++] x1;y2;x1;y2", "@[] cup1+-;cap1", "@[+1+2] x1;x1", "@[-] "}) {
    const TangleWord w = parse_word(text);
    CHECK(parse_word(w.to_string()) == w);
  }
  CHECK(parse_word("@[++]x1 ;  x1").to_string() == "@[++] x1;x1");
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng = sample_rng(3, 0, i);
    const TangleWord w = random_word(rng, Family::any, WordOptions{});
    CHECK(parse_word(w.to_string()) == w);
  }
}

TEST_CASE("closure, tensor and slicing") {
  const TangleWord trefoil = parse_word("@[++] x1;x1;x1");
  const TangleWord closed = closure(trefoil);
  CHECK(closed.layers.size() == trefoil.layers.size() + 4);
  const Typing ty = typecheck(closed);
  CHECK(ty.source.size() == 0);
  CHECK(ty.target.size() == 0);
  CHECK_THROWS_AS(closure(parse_word("@[+-] x1")), NotEndomorphism);

  const TangleWord eight = closure(parse_word("@[+++] x1;y2;x1;y2"));
  CHECK(typecheck(eight).target.size() == 0);

  const TangleWord t = tensor(parse_word("@[++] x1"), parse_word("@[-+] y1;cap1"));
  CHECK(t.to_string() == "@[++-+] x1;y3;cap3");
  CHECK(typecheck(t).target.signs == std::vector<int>{1, 1});

  const TangleWord joined = then(parse_word("@[+-] x1"), parse_word("@[-+] cap1"));
  CHECK(joined.layers.size() == 2);
  CHECK_THROWS_AS(then(parse_word("@[+-] x1"), parse_word("@[+-] cap1")), BoundaryMismatch);

  const TangleWord piece = slice(parse_word("@[+-] x1;y1;cap1"), 1, 3);
  CHECK(piece.to_string() == "@[-+] y1;cap1");
  CHECK(is_braid_word(trefoil));
  CHECK_FALSE(is_braid_word(closed));
}

TEST_CASE("diagrams merge arcs maximally") {
  const Diagram id = make_diagram(parse_word("@[+] "));
  CHECK(id.arcs == 1);
  CHECK(id.crossings.empty());
  CHECK(id.bottom == id.top);

  const Diagram one = make_diagram(parse_word("@[++] x1"));
  CHECK(one.arcs == 3);
  REQUIRE(one.crossings.size() == 1);
  CHECK(one.crossings[0].sign == 1);
  CHECK(one.crossings[0].over == one.bottom[0]);
  CHECK(one.top[1] == one.bottom[0]);
  CHECK(one.crossings[0].in == one.bottom[1]);
  CHECK(one.crossings[0].out == one.top[0]);

  const Diagram trefoil = make_diagram(closure(parse_word("@[++] x1;x1;x1")));
  CHECK(trefoil.arcs == 3);
  CHECK(trefoil.crossings.size() == 3);
  CHECK(trefoil.components == 1);

  const Diagram hopf = make_diagram(closure(parse_word("@[++] x1;x1")));
  CHECK(hopf.components == 2);
  CHECK(make_diagram(parse_word("@[] cup1+-;cap1")).components == 1);

  const Diagram colored = make_diagram(parse_word("@[+1 +2] x1;x1"));
  CHECK(colored.arc_color[colored.bottom[0]] == 1);
  CHECK(colored.arc_color[colored.bottom[1]] == 2);
  CHECK(colored.arc_color[colored.top[0]] == 1);
}

TEST_CASE("flip reverses a word") {
  const TangleWord w = parse_word("@[+-+] cap1;cup1+-;x1");
  const TangleWord f = flip(w);
  CHECK(f.source == typecheck(w).target);
  CHECK(typecheck(f).target == w.source);
  CHECK(flip(f) == w);
}

TEST_CASE("word files") {
  const auto words = parse_word_file("# fixtures\ntrefoil = @[++] x1;x1;x1\n\neight = @[+++] x1;y2;\n   x1;y2  # continued\n");
  REQUIRE(words.size() == 2);
  CHECK(words[0].first == "trefoil");
  CHECK(words[1].second.layers.size() == 4);
  CHECK_THROWS_AS(parse_word_file("@[++] x1\n"), SyntaxError);
  try {
    parse_word_file("a = @[+] \nb = @[++] x1;\n q1\n");
    FAIL("expected an error");
  } catch (const UnknownGenerator& e) {
    CHECK(e.line() == 3);
  }
}
