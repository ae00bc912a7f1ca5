#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tanglecospan/cospan.hpp"
#include "tanglecospan/tangle.hpp"

namespace tanglecospan {

struct Letter {
  std::size_t gen = 0;
  int power = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using GroupWord = std::vector<Letter>;

/// Wirtinger-type presentation: one weight-1 meridian per arc.
struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<GroupWord> relators;
  std::vector<int> colors;  // color index of each generator
  std::vector<GroupWord> bottom_words;
  std::vector<GroupWord> top_words;
  SignSeq source;
  SignSeq target;

  std::string to_string() const;
};

GroupPresentation wirtinger(const Diagram& d);

/// Product of the counterclockwise loops around the bottom punctures,
/// rightmost first; it bounds once the disc is capped to a sphere.
GroupWord bottom_big_loop(const GroupPresentation& p);

/// Abelianized Fox derivatives of w; `image` gives the (unit) image of each generator.
template <class R, class Image>
std::vector<R> fox_derivative(const GroupWord& w, std::size_t generators, Image image) {
  std::vector<R> d(generators);
  R prefix(1);
  for (const auto& l : w) {
    if (l.gen >= generators) throw MalformedDiagram("letter refers to generator " + std::to_string(l.gen));
    const R g = image(l.gen);
    if (l.power > 0) {
      d[l.gen] += prefix;
      prefix = prefix * g;
    } else {
      prefix = prefix * g.unit_inverse();
      d[l.gen] -= prefix;
    }
  }
  return d;
}

LVector fox_derivative(const GroupWord& w, std::size_t generators);
/// Rows = generators, columns = relators; every meridian maps to t.
LMatrix fox_jacobian(const GroupPresentation& p);
/// Meridians map to t_color.
Matrix<MultiLaurent> fox_jacobian_colored(const GroupPresentation& p);
/// sum_x (dr/dx)(x - 1) = image(r) - 1 for every column.
bool augmentation_holds(const GroupPresentation& p, const LMatrix& fox);

enum class Variant { reduced, unreduced };
std::string to_string(Variant v);

/// Cospan read off the whole exterior at once. Unreduced: relative modules
/// with free objects of rank n. Reduced: absolute modules (disc objects when
/// the algebraic sign count is nonzero, sphere objects otherwise) with forms.
Cospan oracle_cospan(const TangleWord& w, Variant v = Variant::unreduced);
MultiCospan oracle_cospan_colored(const TangleWord& w);

/// Unit-normalized gcd of the maximal minors after deleting generator row `row`.
Laurent oracle_alexander(const TangleWord& closed_word, std::size_t row = 0);

/// Rank of the reduced object on a boundary.
std::size_t reduced_rank(const SignSeq& s);
/// Gram matrix of the reduced object, from intersections of lifted loops.
LMatrix reduced_gram(const SignSeq& s);
/// Gram matrix on the n - 1 difference loops of the punctured disc.
LMatrix disc_gram(const SignSeq& s);

}  // namespace tanglecospan
