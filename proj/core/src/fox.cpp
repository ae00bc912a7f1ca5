#include "tanglecospan/fox.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tanglecospan {

std::string GroupPresentation::to_string() const {
  auto word = [](const GroupWord& w) {
    if (w.empty()) return std::string("1");
    std::string s;
    for (const auto& l : w) {
      if (!s.empty()) s += ' ';
      s += 'g' + std::to_string(l.gen + 1);
      if (l.power < 0) s += "^-1";
    }
    return s;
  };
  std::ostringstream os;
  os << "presentation gens=" << generators << " rels=" << relators.size() << '\n';
  for (const auto& r : relators) os << "  " << word(r) << '\n';
  os << "bottom:";
  for (const auto& w : bottom_words) os << ' ' << word(w);
  os << "\ntop:";
  for (const auto& w : top_words) os << ' ' << word(w);
  os << '\n';
  return os.str();
}

GroupPresentation wirtinger(const Diagram& d) {
  GroupPresentation p;
  p.generators = d.arcs;
  p.colors = d.arc_color;
  p.source = d.source;
  p.target = d.target;
  if (p.colors.size() != d.arcs) throw MalformedDiagram("arc colors do not match the arc count");
  for (const auto& c : d.crossings) {
    if (c.over >= d.arcs || c.in >= d.arcs || c.out >= d.arcs) throw MalformedDiagram("crossing refers to a missing arc");
    if (c.sign > 0)
      p.relators.push_back({{c.over, -1}, {c.in, 1}, {c.over, 1}, {c.out, -1}});
    else
      p.relators.push_back({{c.over, 1}, {c.in, 1}, {c.over, -1}, {c.out, -1}});
  }
  if (d.bottom.size() != d.source.size() || d.top.size() != d.target.size())
    throw MalformedDiagram("boundary arcs do not match the boundary");
  for (auto a : d.bottom) p.bottom_words.push_back({{a, 1}});
  for (auto a : d.top) p.top_words.push_back({{a, 1}});
  return p;
}

GroupWord bottom_big_loop(const GroupPresentation& p) {
  GroupWord w;
  for (std::size_t j = p.bottom_words.size(); j-- > 0;)
    w.push_back({p.bottom_words[j].at(0).gen, p.source.signs[j]});
  return w;
}

LVector fox_derivative(const GroupWord& w, std::size_t generators) {
  return fox_derivative<Laurent>(w, generators, [](std::size_t) { return Laurent::t(); });
}

LMatrix fox_jacobian(const GroupPresentation& p) {
  std::vector<LVector> cols;
  for (const auto& r : p.relators) cols.push_back(fox_derivative(r, p.generators));
  return LMatrix::from_columns(cols, p.generators);
}

Matrix<MultiLaurent> fox_jacobian_colored(const GroupPresentation& p) {
  std::vector<std::vector<MultiLaurent>> cols;
  for (const auto& r : p.relators)
    cols.push_back(fox_derivative<MultiLaurent>(r, p.generators, [&](std::size_t g) { return MultiLaurent::var(p.colors[g]); }));
  return Matrix<MultiLaurent>::from_columns(cols, p.generators);
}

bool augmentation_holds(const GroupPresentation& p, const LMatrix& fox) {
  for (std::size_t c = 0; c < p.relators.size(); ++c) {
    Laurent lhs;
    for (std::size_t x = 0; x < p.generators; ++x) lhs += fox(x, c) * (Laurent::t() - Laurent(1));
    int weight = 0;
    for (const auto& l : p.relators[c]) weight += l.power;
    if (lhs != Laurent::t(weight) - Laurent(1)) return false;
  }
  return true;
}

std::string to_string(Variant v) { return v == Variant::reduced ? "reduced" : "unreduced"; }

namespace {

LMatrix boundary_matrix(const std::vector<GroupWord>& words, std::size_t generators) {
  std::vector<LVector> cols;
  for (const auto& w : words) cols.push_back(fox_derivative(w, generators));
  return LMatrix::from_columns(cols, generators);
}

/// Coordinates of {x : sum x = 0} in the basis g_a - g_(a+1): partial sums.
LMatrix partial_sums(std::size_t g) {
  if (g == 0) return LMatrix(0, 0);
  LMatrix m(g - 1, g);
  for (std::size_t a = 0; a + 1 < g; ++a)
    for (std::size_t i = 0; i <= a; ++i) m(a, i) = Laurent(1);
  return m;
}

/// Columns b_j = e_j - e_(j+1) spanning the reduced object.
LMatrix reduced_basis(const SignSeq& s) {
  const std::size_t n = s.size();
  const bool sphere = s.sign_sum() == 0;
  LMatrix b(n, reduced_rank(s));
  const std::size_t first = sphere ? 1 : 0;
  for (std::size_t k = 0; k < b.cols(); ++k) {
    b(first + k, k) = Laurent(1);
    b(first + k + 1, k) = Laurent(-1);
  }
  return b;
}

}  // namespace

std::size_t reduced_rank(const SignSeq& s) {
  const std::size_t n = s.size();
  if (s.sign_sum() == 0) return n >= 2 ? n - 2 : 0;
  return n - 1;
}

Cospan oracle_cospan(const TangleWord& w, Variant v) {
  const Diagram d = make_diagram(w);
  const GroupPresentation p = wirtinger(d);
  LMatrix rels = fox_jacobian(p);
  const LMatrix bottom = boundary_matrix(p.bottom_words, p.generators);
  const LMatrix top = boundary_matrix(p.top_words, p.generators);
  Cospan c;
  c.src_rank = d.source.size();
  c.dst_rank = d.target.size();
  if (v == Variant::unreduced) {
    c.centre = Module(p.generators, rels);
    c.leg_src = bottom;
    c.leg_dst = top;
    return c;
  }
  if (d.source.sign_sum() == 0 && p.generators > 0)
    rels = rels.hconcat(LMatrix::from_columns({fox_derivative(bottom_big_loop(p), p.generators)}, p.generators));
  const LMatrix sums = partial_sums(p.generators);
  const std::size_t g = sums.rows();
  c.centre = Module(g, p.generators == 0 ? LMatrix(0, 0) : sums * rels);
  c.src_rank = reduced_rank(d.source);
  c.dst_rank = reduced_rank(d.target);
  c.leg_src = p.generators == 0 ? LMatrix(0, c.src_rank) : sums * bottom * reduced_basis(d.source);
  c.leg_dst = p.generators == 0 ? LMatrix(0, c.dst_rank) : sums * top * reduced_basis(d.target);
  c.src_form = HermitianModule(reduced_gram(d.source));
  c.dst_form = HermitianModule(reduced_gram(d.target));
  return c;
}

MultiCospan oracle_cospan_colored(const TangleWord& w) {
  const Diagram d = make_diagram(w);
  const GroupPresentation p = wirtinger(d);
  auto boundary = [&](const std::vector<GroupWord>& words) {
    std::vector<std::vector<MultiLaurent>> cols;
    for (const auto& bw : words)
      cols.push_back(fox_derivative<MultiLaurent>(bw, p.generators, [&](std::size_t g) { return MultiLaurent::var(p.colors[g]); }));
    return Matrix<MultiLaurent>::from_columns(cols, p.generators);
  };
  MultiCospan c;
  c.src_rank = d.source.size();
  c.dst_rank = d.target.size();
  c.centre = MultiModule(p.generators, fox_jacobian_colored(p));
  c.leg_src = boundary(p.bottom_words);
  c.leg_dst = boundary(p.top_words);
  return c;
}

Laurent oracle_alexander(const TangleWord& closed_word, std::size_t row) {
  const Typing ty = typecheck(closed_word);
  const TangleWord w = ty.source.size() == 0 && ty.target.size() == 0 ? closed_word : closure(closed_word);
  const GroupPresentation p = wirtinger(make_diagram(w));
  if (p.generators == 0) return Laurent(1);
  if (row >= p.generators) throw ShapeMismatch("deleted row out of range");
  return gcd_of_minors(fox_jacobian(p).without_row(row), p.generators - 1);
}

// ---- intersection form on the punctured disc ----
//
// Punctures sit at (100 j, 0). A loop around puncture j leaves the basepoint,
// walks to the bottom of a square of half-size r around the puncture, goes
// round it (counterclockwise for an upward strand) and returns. The cover is
// cut along vertical rays above the punctures; crossing ray j right to left
// raises the sheet by the sign of the puncture.

namespace {

struct Point {
  long long x, y;
};

struct Segment {
  Point a, b;
  int sheet;
};

struct LoopModel {
  Point base;
  long long r;
};

void append_loop(std::vector<Segment>& out, const SignSeq& s, std::size_t j, int power, int& sheet, const LoopModel& m) {
  const long long cx = 100 * static_cast<long long>(j + 1), r = m.r;
  const Point foot{cx, -r};
  // Counterclockwise corners starting at the foot; the cut sits at (cx, r).
  std::vector<Point> ccw = {foot, {cx + r, -r}, {cx + r, r}, {cx, r}, {cx - r, r}, {cx - r, -r}, foot};
  const bool counterclockwise = (s.signs[j] > 0) == (power > 0);
  if (!counterclockwise) std::reverse(ccw.begin(), ccw.end());
  out.push_back({m.base, foot, sheet});
  for (std::size_t k = 0; k + 1 < ccw.size(); ++k) {
    out.push_back({ccw[k], ccw[k + 1], sheet});
    if (ccw[k + 1].x == cx && ccw[k + 1].y == r) sheet += power;
  }
  out.push_back({foot, m.base, sheet});
}

/// Closed lift of the difference loop e_j e_(j+1)^-1.
std::vector<Segment> difference_loop(const SignSeq& s, std::size_t j, const LoopModel& m) {
  std::vector<Segment> out;
  int sheet = 0;
  append_loop(out, s, j, 1, sheet, m);
  append_loop(out, s, j + 1, -1, sheet, m);
  if (sheet != 0) throw std::logic_error("difference loop does not close in the cover");
  return out;
}

long long orient(Point p, Point q, Point r) { return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x); }

/// +1/-1 for a transverse interior crossing, 0 for disjoint segments.
int crossing(const Segment& u, const Segment& v) {
  const long long o1 = orient(u.a, u.b, v.a), o2 = orient(u.a, u.b, v.b);
  const long long o3 = orient(v.a, v.b, u.a), o4 = orient(v.a, v.b, u.b);
  auto sgn = [](long long x) { return (x > 0) - (x < 0); };
  if (sgn(o1) * sgn(o2) > 0 || sgn(o3) * sgn(o4) > 0) return 0;
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
    auto within = [](long long a, long long b, long long c) { return std::min(a, b) <= c && c <= std::max(a, b); };
    auto on = [&](Point p, Point q, Point x) { return within(p.x, q.x, x.x) && within(p.y, q.y, x.y); };
    if ((o1 == 0 && on(u.a, u.b, v.a)) || (o2 == 0 && on(u.a, u.b, v.b)) || (o3 == 0 && on(v.a, v.b, u.a)) ||
        (o4 == 0 && on(v.a, v.b, u.b)))
      throw std::logic_error("loop model is not in general position");
    return 0;
  }
  const long long dx1 = u.b.x - u.a.x, dy1 = u.b.y - u.a.y, dx2 = v.b.x - v.a.x, dy2 = v.b.y - v.a.y;
  return sgn(dx1 * dy2 - dy1 * dx2);
}

Laurent intersection(const std::vector<Segment>& x, const std::vector<Segment>& y) {
  std::vector<Laurent::Term> terms;
  for (const auto& u : x)
    for (const auto& v : y)
      if (int s = crossing(u, v)) terms.push_back({u.sheet - v.sheet, s});
  return Laurent::from_terms(std::move(terms));
}

}  // namespace

LMatrix disc_gram(const SignSeq& s) {
  const std::size_t n = s.size();
  if (n < 2) return LMatrix(0, 0);
  const LoopModel first{{37, -1000}, 20}, second{{53, -1100}, 13};
  std::vector<std::vector<Segment>> xs, ys;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    xs.push_back(difference_loop(s, j, first));
    ys.push_back(difference_loop(s, j, second));
  }
  LMatrix g(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) g(i, j) = intersection(xs[i], ys[j]);
  return g;
}

LMatrix reduced_gram(const SignSeq& s) {
  const LMatrix disc = disc_gram(s);
  if (s.sign_sum() != 0) return disc;
  const std::size_t r = reduced_rank(s);
  if (r == 0) return LMatrix(0, 0);
  return disc.block(1, 1, r, r);
}

}  // namespace tanglecospan
