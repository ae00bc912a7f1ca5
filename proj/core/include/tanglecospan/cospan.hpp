#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "tanglecospan/hermitian.hpp"
#include "tanglecospan/linalg.hpp"
#include "tanglecospan/presented_module.hpp"

namespace tanglecospan {

/// src -> centre <- dst between free objects. Objects may carry a form
/// (reduced mode); unreduced cospans leave them empty.
template <class R>
struct BasicCospan {
  std::size_t src_rank = 0;
  std::size_t dst_rank = 0;
  PresentedModule<R> centre;
  Matrix<R> leg_src;  // centre.gens x src_rank
  Matrix<R> leg_dst;  // centre.gens x dst_rank
  std::optional<HermitianModule> src_form;
  std::optional<HermitianModule> dst_form;

  ModuleMap<R> src_map() const { return {PresentedModule<R>::free(src_rank), centre, leg_src}; }
  ModuleMap<R> dst_map() const { return {PresentedModule<R>::free(dst_rank), centre, leg_dst}; }

  friend bool operator==(const BasicCospan&, const BasicCospan&) = default;
};

using Cospan = BasicCospan<Laurent>;
using MultiCospan = BasicCospan<MultiLaurent>;

template <class R>
BasicCospan<R> identity_cospan(std::size_t rank, std::optional<HermitianModule> form = std::nullopt) {
  BasicCospan<R> c;
  c.src_rank = c.dst_rank = rank;
  c.centre = PresentedModule<R>::free(rank);
  c.leg_src = c.leg_dst = Matrix<R>::identity(rank);
  c.src_form = c.dst_form = std::move(form);
  return c;
}

/// Canonical composite (first t1, then t2) by the fixed pushout; no simplification.
template <class R>
BasicCospan<R> compose_cospans(const BasicCospan<R>& t1, const BasicCospan<R>& t2) {
  if (t1.dst_rank != t2.src_rank) throw ShapeMismatch("cospans are not composable");
  if (t1.dst_form && t2.src_form && *t1.dst_form != *t2.src_form) throw ShapeMismatch("middle objects carry different forms");
  const auto p = pushout(t1.dst_map(), t2.src_map());
  BasicCospan<R> c;
  c.src_rank = t1.src_rank;
  c.dst_rank = t2.dst_rank;
  c.centre = p.module;
  c.leg_src = p.left.mat * t1.leg_src;
  c.leg_dst = p.right.mat * t2.leg_dst;
  c.src_form = t1.src_form;
  c.dst_form = t2.dst_form;
  return c;
}

/// Simplifies the centre and, when it ends up free with an invertible square
/// source leg, changes basis so that leg is the identity.
template <class R>
BasicCospan<R> tidy(const BasicCospan<R>& c, std::size_t budget = std::numeric_limits<std::size_t>::max()) {
  auto s = simplify(c.centre, {c.src_map(), c.dst_map()}, {}, budget);
  BasicCospan<R> out = c;
  out.centre = s.module;
  out.leg_src = s.into[0].mat;
  out.leg_dst = s.into[1].mat;
  if (out.centre.is_free() && out.centre.relations() > 0) out.centre = PresentedModule<R>::free(out.centre.gens);
  const std::size_t n = out.centre.gens;
  if (out.centre.is_free() && out.leg_src.cols() == n && n > 0 && n <= 12 && out.leg_src != Matrix<R>::identity(n)) {
    const R det = expansion_determinant(out.leg_src);
    if (!det.is_zero() && det.is_unit()) {
      const Matrix<R> inv = det.unit_inverse() * adjugate(out.leg_src);
      out.leg_dst = inv * out.leg_dst;
      out.leg_src = Matrix<R>::identity(n);
    }
  }
  return out;
}

template <class R>
BasicCospan<R> compose_tidy(const BasicCospan<R>& t1, const BasicCospan<R>& t2) {
  return tidy(compose_cospans(t1, t2));
}

template <class R>
BasicCospan<R> direct_sum(const BasicCospan<R>& a, const BasicCospan<R>& b) {
  BasicCospan<R> c;
  c.src_rank = a.src_rank + b.src_rank;
  c.dst_rank = a.dst_rank + b.dst_rank;
  c.centre = direct_sum(a.centre, b.centre);
  c.leg_src = Matrix<R>::block_diag(a.leg_src, b.leg_src);
  c.leg_dst = Matrix<R>::block_diag(a.leg_dst, b.leg_dst);
  return c;
}

// ---- Laurent-only operations ----

/// {(x, y) : -leg_src x + leg_dst y is torsion} in src + dst.
SaturatedSubspace relation_subspace(const Cospan& c);
/// Requires both object forms.
LagrangianRelation lagrangian_relation(const Cospan& c);
bool is_lagrangian(const Cospan& c);
/// Centre (src + dst) / n.subspace with legs x -> (-x, 0) and y -> (0, y).
Cospan relation_to_cospan(const LagrangianRelation& n);

enum class Invertibility { invertible, rationally_invertible, neither };
std::string to_string(Invertibility v);
Invertibility invertibility(const Cospan& c);

/// i'^-1 i, over the ring when the cospan is invertible and over Q(t) otherwise.
struct CoreIso {
  bool integral = false;
  LMatrix laurent;
  QMatrix rational;
  std::string to_string() const;
};
CoreIso core_to_iso(const Cospan& c);
/// Λ-inverse for multivariable cospans; throws NotInvertible.
Matrix<MultiLaurent> core_to_iso(const MultiCospan& c);

/// A 2-morphism from -> to: legs from the two centres into `centre`.
struct TwoCospan {
  Cospan from;
  Cospan to;
  Module centre;
  LMatrix leg_from;  // centre.gens x from.centre.gens
  LMatrix leg_to;

  Map from_map() const { return {from.centre, centre, leg_from}; }
  Map to_map() const { return {to.centre, centre, leg_to}; }
};

/// Both boundary squares commute (exactly or rationally).
bool is_valid(const TwoCospan& a);
TwoCospan identity_2cell(const Cospan& c);
/// A then B (A.to = B.from).
TwoCospan vcompose(const TwoCospan& a, const TwoCospan& b);
/// A over (H, H') then B over (H', H''): from B.from o A.from to B.to o A.to.
TwoCospan hcompose(const TwoCospan& a, const TwoCospan& b);

/// (t3 o t2) o t1  =>  t3 o (t2 o t1)
TwoCospan associator(const Cospan& t1, const Cospan& t2, const Cospan& t3);
/// I_dst o t  =>  t
TwoCospan left_unitor(const Cospan& t);
/// t o I_src  =>  t
TwoCospan right_unitor(const Cospan& t);
/// Legs of the cell are isomorphisms after simplification.
bool is_invertible_cell(const TwoCospan& a);

/// Isomorphism-invariant fingerprint of a 2-cospan.
struct CellInvariants {
  ModuleInvariants centre;
  SaturatedSubspace from_kernel;
  SaturatedSubspace to_kernel;
  SaturatedSubspace joint_kernel;
  friend bool operator==(const CellInvariants&, const CellInvariants&) = default;
};
CellInvariants cell_invariants(const TwoCospan& a);

/// Fingerprint of a cospan: centre invariants and the relation subspace.
struct CospanInvariants {
  ModuleInvariants centre;
  SaturatedSubspace relation;
  friend bool operator==(const CospanInvariants&, const CospanInvariants&) = default;
};
CospanInvariants cospan_invariants(const Cospan& c);

std::string serialize(const Cospan& c);
std::string serialize(const TwoCospan& a);

}  // namespace tanglecospan
