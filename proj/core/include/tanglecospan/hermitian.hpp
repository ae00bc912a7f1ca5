#pragma once

#include <string>

#include "tanglecospan/linalg.hpp"
#include "tanglecospan/presented_module.hpp"

namespace tanglecospan {

/// A free module with a nondegenerate skew-Hermitian form
/// w(x, y) = x^T gram conj(y), linear in x.
class HermitianModule {
 public:
  HermitianModule() = default;
  /// Validates gram* = -gram and det(gram) != 0.
  explicit HermitianModule(LMatrix gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const LMatrix& gram() const noexcept { return gram_; }
  Laurent form(const LVector& x, const LVector& y) const;
  /// The same module with the form negated.
  HermitianModule negated() const;

  friend bool operator==(const HermitianModule&, const HermitianModule&) = default;
  std::string to_string() const;

 private:
  LMatrix gram_;
};

/// (-src) + dst
LMatrix relation_ambient(const HermitianModule& src, const HermitianModule& dst);

/// {x : w(v, x) = 0 for all v in s} for the form with Gram matrix `ambient`.
SaturatedSubspace annihilator(const LMatrix& ambient, const SaturatedSubspace& s);
bool is_lagrangian(const SaturatedSubspace& s, const LMatrix& ambient);

struct LagrangianRelation {
  HermitianModule src;
  HermitianModule dst;
  SaturatedSubspace subspace;

  friend bool operator==(const LagrangianRelation&, const LagrangianRelation&) = default;
};

/// Validates the Lagrangian condition; throws NotLagrangian.
LagrangianRelation make_relation(HermitianModule src, HermitianModule dst, SaturatedSubspace s);
LagrangianRelation diagonal(const HermitianModule& h);
/// N2 after N1.
LagrangianRelation compose_relations(const LagrangianRelation& n1, const LagrangianRelation& n2);

/// f^T gram_dst conj(f) == gram_src.
bool is_unitary(const LMatrix& f, const HermitianModule& src, const HermitianModule& dst);
bool is_unitary(const QMatrix& f, const HermitianModule& src, const HermitianModule& dst);
/// Graph of a unitary map (restricted graph for rational entries); throws NotUnitary.
LagrangianRelation graph(const LMatrix& f, const HermitianModule& src, const HermitianModule& dst);
LagrangianRelation graph(const QMatrix& f, const HermitianModule& src, const HermitianModule& dst);

}  // namespace tanglecospan
