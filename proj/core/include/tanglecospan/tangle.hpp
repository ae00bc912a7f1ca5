#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tanglecospan {

/// Boundary data of a tangle: one sign per point (+1 = strand oriented upward)
/// and a color index per point (1 unless declared).
struct SignSeq {
  std::vector<int> signs;
  std::vector<int> colors;

  SignSeq() = default;
  explicit SignSeq(std::vector<int> s) : signs(std::move(s)), colors(signs.size(), 1) {}
  SignSeq(std::vector<int> s, std::vector<int> c);

  std::size_t size() const noexcept { return signs.size(); }
  int sign_sum() const;
  bool colored() const;
  /// Equality of the signs only.
  bool same_signs(const SignSeq& o) const { return signs == o.signs; }
  friend bool operator==(const SignSeq&, const SignSeq&) = default;
  /// `@[+-+]`, with color indices after each sign when any color differs from 1.
  std::string to_string() const;
};

enum class Gen { x, y, cup, cap, id };

/// One layer of a word. Positions are 1-based; `x i` lets the strand from
/// bottom i to top i+1 pass over, `y i` the strand from bottom i+1 to top i.
/// A cup inserts strands at i, i+1 with signs (chirality, -chirality).
struct Layer {
  Gen gen = Gen::id;
  std::size_t pos = 0;
  int chirality = 1;
  std::size_t line = 0;
  std::size_t column = 0;

  bool is_crossing() const { return gen == Gen::x || gen == Gen::y; }
  std::string to_string() const;
  friend bool operator==(const Layer& a, const Layer& b) {
    return a.gen == b.gen && a.pos == b.pos && (a.gen != Gen::cup || a.chirality == b.chirality);
  }
};

/// A word read bottom to top: `w1 ; w2` stacks w2 above w1.
struct TangleWord {
  SignSeq source;
  std::vector<Layer> layers;

  friend bool operator==(const TangleWord&, const TangleWord&) = default;
  std::string to_string() const;
};

TangleWord parse_word(std::string_view text, std::size_t first_line = 1);
/// Lines `name = word`; a word may continue onto following lines without `=`.
std::vector<std::pair<std::string, TangleWord>> parse_word_file(std::string_view text);

struct Typing {
  SignSeq source;
  SignSeq target;
  /// levels[k] is the boundary below layer k; levels.back() is the target.
  std::vector<SignSeq> levels;
};

Typing typecheck(const TangleWord& w);
/// Boundary after applying one layer; throws BoundaryMismatch or CapOrientation.
SignSeq apply_layer(const SignSeq& below, const Layer& layer, std::size_t index);

/// +1 or -1 for a crossing layer acting on the given boundary.
int crossing_sign(const Layer& layer, const SignSeq& below);

TangleWord closure(const TangleWord& w);
/// Word-level juxtaposition: `b` placed to the right of `a`.
TangleWord tensor(const TangleWord& a, const TangleWord& b);
/// `a` followed by `b` (b stacked on top).
TangleWord then(const TangleWord& a, const TangleWord& b);
/// Layers [from, to) with the matching source boundary.
TangleWord slice(const TangleWord& w, std::size_t from, std::size_t to);
bool is_braid_word(const TangleWord& w);

/// Planar data of a typechecked word with arcs merged maximally.
struct Diagram {
  struct Crossing {
    std::size_t over = 0;
    std::size_t in = 0;   // under-strand arc before the crossing (along orientation)
    std::size_t out = 0;  // under-strand arc after the crossing
    int sign = 1;
    std::size_t layer = 0;
  };

  std::size_t arcs = 0;
  std::vector<Crossing> crossings;
  std::vector<std::size_t> bottom;  // arc at each source point
  std::vector<std::size_t> top;     // arc at each target point
  std::vector<int> arc_color;
  SignSeq source;
  SignSeq target;
  std::size_t components = 0;
  std::vector<std::size_t> bottom_component;  // component through each source point
  std::vector<std::size_t> top_component;
};

Diagram make_diagram(const TangleWord& w);

}  // namespace tanglecospan
