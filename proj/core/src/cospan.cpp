#include "tanglecospan/cospan.hpp"

#include <sstream>

namespace tanglecospan {

namespace {

Laurent as_laurent(const RationalFunction& f) {
  auto q = exact_divide(f.numerator(), f.denominator());
  if (!q) throw NotInvertible("entry " + f.to_string() + " is not a Laurent polynomial");
  return *q;
}

bool square_free_legs(const Cospan& c) {
  return c.centre.is_free() && c.centre.gens == c.src_rank && c.centre.gens == c.dst_rank;
}

/// The map becomes surjective after tensoring with Q(t).
bool rationally_onto(const Module& target, const LMatrix& mat) {
  return rank(target.rels.hconcat(mat)) == target.gens;
}

}  // namespace

SaturatedSubspace relation_subspace(const Cospan& c) {
  const Map joint(Module::free(c.src_rank + c.dst_rank), c.centre, (-c.leg_src).hconcat(c.leg_dst));
  return saturated_kernel(joint);
}

LagrangianRelation lagrangian_relation(const Cospan& c) {
  if (!c.src_form || !c.dst_form) throw ShapeMismatch("the relation needs objects with forms");
  return make_relation(*c.src_form, *c.dst_form, relation_subspace(c));
}

bool is_lagrangian(const Cospan& c) {
  if (!c.src_form || !c.dst_form) return false;
  return is_lagrangian(relation_subspace(c), relation_ambient(*c.src_form, *c.dst_form));
}

Cospan relation_to_cospan(const LagrangianRelation& n) {
  const LagrangianRelation checked = make_relation(n.src, n.dst, n.subspace);
  const std::size_t a = checked.src.rank(), b = checked.dst.rank();
  Cospan c;
  c.src_rank = a;
  c.dst_rank = b;
  c.centre = Module(a + b, checked.subspace.matrix());
  c.leg_src = LMatrix(a + b, a);
  c.leg_dst = LMatrix(a + b, b);
  for (std::size_t i = 0; i < a; ++i) c.leg_src(i, i) = Laurent(-1);
  for (std::size_t i = 0; i < b; ++i) c.leg_dst(a + i, i) = Laurent(1);
  c.src_form = checked.src;
  c.dst_form = checked.dst;
  return c;
}

std::string to_string(Invertibility v) {
  switch (v) {
    case Invertibility::invertible: return "invertible";
    case Invertibility::rationally_invertible: return "rationally_invertible";
    case Invertibility::neither: return "neither";
  }
  return "neither";
}

Invertibility invertibility(const Cospan& raw) {
  const Cospan c = tidy(raw);
  if (square_free_legs(c)) {
    const Laurent d1 = determinant(c.leg_src), d2 = determinant(c.leg_dst);
    if (d1.is_zero() || d2.is_zero()) return Invertibility::neither;
    return d1.is_unit() && d2.is_unit() ? Invertibility::invertible : Invertibility::rationally_invertible;
  }
  const std::size_t dim = rationalize(c.centre).dim;
  if (dim != c.src_rank || dim != c.dst_rank) return Invertibility::neither;
  if (!rationally_onto(c.centre, c.leg_src) || !rationally_onto(c.centre, c.leg_dst)) return Invertibility::neither;
  return Invertibility::rationally_invertible;
}

std::string CoreIso::to_string() const { return integral ? laurent.to_string() : rational.to_string(); }

CoreIso core_to_iso(const Cospan& raw) {
  const Cospan c = tidy(raw);
  CoreIso out;
  if (square_free_legs(c)) {
    const Laurent d1 = determinant(c.leg_src), d2 = determinant(c.leg_dst);
    if (d1.is_zero() || d2.is_zero()) throw NotInvertible("a leg has zero determinant");
    out.rational = rational_solve(c.leg_dst, c.leg_src);
    if (d1.is_unit() && d2.is_unit()) {
      out.integral = true;
      out.laurent = out.rational.map(as_laurent);
    }
    return out;
  }
  // Coordinates on the centre tensored with Q(t): rows of the left kernel of the relations.
  const auto coords = left_kernel_basis(c.centre.rels);
  if (coords.size() != c.src_rank || coords.size() != c.dst_rank)
    throw NotInvertible("centre has rational dimension " + std::to_string(coords.size()));
  const LMatrix q = LMatrix::from_rows(coords, c.centre.gens);
  out.rational = rational_solve(q * c.leg_dst, q * c.leg_src);
  return out;
}

Matrix<MultiLaurent> core_to_iso(const MultiCospan& raw) {
  const MultiCospan c = tidy(raw);
  if (!c.centre.is_free() || c.centre.gens != c.src_rank || c.centre.gens != c.dst_rank)
    throw NotInvertible("legs did not simplify to square matrices");
  return unit_inverse(c.leg_dst) * c.leg_src;
}

// ---- 2-cospans ----

bool is_valid(const TwoCospan& a) {
  if (a.from.src_rank != a.to.src_rank || a.from.dst_rank != a.to.dst_rank) return false;
  const Module hs = Module::free(a.from.src_rank), hd = Module::free(a.from.dst_rank);
  const Map s1(hs, a.centre, a.leg_from * a.from.leg_src), s2(hs, a.centre, a.leg_to * a.to.leg_src);
  const Map d1(hd, a.centre, a.leg_from * a.from.leg_dst), d2(hd, a.centre, a.leg_to * a.to.leg_dst);
  return compare_maps(s1, s2) != MapEquality::unequal && compare_maps(d1, d2) != MapEquality::unequal;
}

TwoCospan identity_2cell(const Cospan& c) {
  return {c, c, c.centre, LMatrix::identity(c.centre.gens), LMatrix::identity(c.centre.gens)};
}

TwoCospan vcompose(const TwoCospan& a, const TwoCospan& b) {
  if (a.to != b.from) throw ShapeMismatch("vertical composite of 2-cospans that do not meet");
  const auto p = pushout(a.to_map(), b.from_map());
  return {a.from, b.to, p.module, p.left.mat * a.leg_from, p.right.mat * b.leg_to};
}

TwoCospan hcompose(const TwoCospan& a, const TwoCospan& b) {
  if (a.from.dst_rank != b.from.src_rank) throw ShapeMismatch("horizontal composite of 2-cospans that do not meet");
  const Module middle = Module::free(a.from.dst_rank);
  const auto p = pushout(Map(middle, a.centre, a.leg_from * a.from.leg_dst), Map(middle, b.centre, b.leg_from * b.from.leg_src));
  TwoCospan out;
  out.from = compose_cospans(a.from, b.from);
  out.to = compose_cospans(a.to, b.to);
  out.centre = p.module;
  out.leg_from = LMatrix::block_diag(a.leg_from, b.leg_from);
  out.leg_to = LMatrix::block_diag(a.leg_to, b.leg_to);
  return out;
}

TwoCospan associator(const Cospan& t1, const Cospan& t2, const Cospan& t3) {
  // Both canonical presentations list the generators as t1, t2, t3; only the
  // order of the relation columns differs.
  TwoCospan out;
  out.from = compose_cospans(t1, compose_cospans(t2, t3));
  out.to = compose_cospans(compose_cospans(t1, t2), t3);
  out.centre = out.to.centre;
  out.leg_from = LMatrix::identity(out.centre.gens);
  out.leg_to = LMatrix::identity(out.centre.gens);
  return out;
}

TwoCospan left_unitor(const Cospan& t) {
  TwoCospan out;
  out.from = compose_cospans(t, identity_cospan<Laurent>(t.dst_rank, t.dst_form));
  out.to = t;
  out.centre = t.centre;
  out.leg_from = LMatrix::identity(t.centre.gens).hconcat(t.leg_dst);
  out.leg_to = LMatrix::identity(t.centre.gens);
  return out;
}

TwoCospan right_unitor(const Cospan& t) {
  TwoCospan out;
  out.from = compose_cospans(identity_cospan<Laurent>(t.src_rank, t.src_form), t);
  out.to = t;
  out.centre = t.centre;
  out.leg_from = t.leg_src.hconcat(LMatrix::identity(t.centre.gens));
  out.leg_to = LMatrix::identity(t.centre.gens);
  return out;
}

bool is_invertible_cell(const TwoCospan& a) {
  const auto mid = invariants(a.centre);
  if (invariants(a.from.centre) != mid || invariants(a.to.centre) != mid) return false;
  return rationally_onto(a.centre, a.leg_from) && rationally_onto(a.centre, a.leg_to);
}

CellInvariants cell_invariants(const TwoCospan& a) {
  const std::size_t f = a.from.centre.gens, t = a.to.centre.gens;
  CellInvariants out;
  out.centre = invariants(a.centre);
  out.from_kernel = saturated_kernel(Map(Module::free(f), a.centre, a.leg_from));
  out.to_kernel = saturated_kernel(Map(Module::free(t), a.centre, a.leg_to));
  out.joint_kernel = saturated_kernel(Map(Module::free(f + t), a.centre, a.leg_from.hconcat(a.leg_to)));
  return out;
}

CospanInvariants cospan_invariants(const Cospan& c) { return {invariants(c.centre), relation_subspace(c)}; }

std::string serialize(const Cospan& c) {
  std::ostringstream os;
  os << "cospan src=" << c.src_rank << " dst=" << c.dst_rank << '\n';
  auto form = [&](const char* name, const std::optional<HermitianModule>& h) {
    os << name << ':';
    if (!h) {
      os << " none\n";
      return;
    }
    os << '\n' << h->gram().to_string();
  };
  form("src_form", c.src_form);
  form("dst_form", c.dst_form);
  os << "centre:\n" << c.centre.to_string();
  os << "leg_src:\n" << c.src_map().to_string();
  os << "leg_dst:\n" << c.dst_map().to_string();
  os << "lagrangian: " << (c.src_form && c.dst_form ? (is_lagrangian(c) ? "yes" : "no") : "n/a") << '\n';
  os << "invertible: " << to_string(invertibility(c)) << '\n';
  return os.str();
}

std::string serialize(const TwoCospan& a) {
  std::ostringstream os;
  os << "2-cospan\nfrom:\n" << serialize(a.from) << "to:\n" << serialize(a.to);
  os << "centre:\n" << a.centre.to_string();
  os << "leg_from:\n" << a.from_map().to_string();
  os << "leg_to:\n" << a.to_map().to_string();
  return os.str();
}

}  // namespace tanglecospan
