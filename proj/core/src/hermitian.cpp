#include "tanglecospan/hermitian.hpp"

namespace tanglecospan {

HermitianModule::HermitianModule(LMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw ShapeMismatch("Gram matrix must be square");
  if (gram_.star() != -gram_) throw Error("Gram matrix is not skew-Hermitian");
  if (determinant(gram_).is_zero()) throw Error("Gram matrix is degenerate");
}

Laurent HermitianModule::form(const LVector& x, const LVector& y) const {
  Laurent sum;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (!gram_(i, j).is_zero()) sum += x[i] * gram_(i, j) * y[j].involute();
  return sum;
}

HermitianModule HermitianModule::negated() const {
  HermitianModule h;
  h.gram_ = -gram_;
  return h;
}

std::string HermitianModule::to_string() const {
  return "hermitian rank=" + std::to_string(rank()) + "\n" + gram_.to_string();
}

LMatrix relation_ambient(const HermitianModule& src, const HermitianModule& dst) {
  return LMatrix::block_diag(-src.gram(), dst.gram());
}

SaturatedSubspace annihilator(const LMatrix& ambient, const SaturatedSubspace& s) {
  if (ambient.rows() != s.ambient()) throw ShapeMismatch("subspace does not live in the ambient form");
  if (s.dim() == 0) return SaturatedSubspace::full(s.ambient());
  // w(v, x) = v^T A conj(x) = 0  <=>  conj(v^T A) x = 0
  const LMatrix conditions = (s.matrix().transpose() * ambient).conjugate();
  return {s.ambient(), kernel_basis(conditions)};
}

bool is_lagrangian(const SaturatedSubspace& s, const LMatrix& ambient) {
  if (2 * s.dim() != s.ambient()) return false;
  return annihilator(ambient, s) == s;
}

LagrangianRelation make_relation(HermitianModule src, HermitianModule dst, SaturatedSubspace s) {
  if (s.ambient() != src.rank() + dst.rank()) throw ShapeMismatch("relation subspace has the wrong ambient rank");
  if (!is_lagrangian(s, relation_ambient(src, dst))) throw NotLagrangian("subspace is not Lagrangian");
  return {std::move(src), std::move(dst), std::move(s)};
}

LagrangianRelation diagonal(const HermitianModule& h) {
  const std::size_t n = h.rank();
  std::vector<LVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    LVector v(2 * n);
    v[i] = 1;
    v[n + i] = 1;
    rows.push_back(std::move(v));
  }
  return {h, h, SaturatedSubspace(2 * n, rows)};
}

LagrangianRelation compose_relations(const LagrangianRelation& n1, const LagrangianRelation& n2) {
  if (n1.dst != n2.src) throw ShapeMismatch("relations are not composable");
  const std::size_t a = n1.src.rank(), b = n1.dst.rank(), c = n2.dst.rank();
  const LMatrix v1 = n1.subspace.matrix(), v2 = n2.subspace.matrix();
  const std::size_t k1 = v1.cols(), k2 = v2.cols();
  const LMatrix middle = v1.block(a, 0, b, k1).hconcat(-v2.block(0, 0, b, k2));
  std::vector<LVector> pairs;
  for (const auto& coeffs : kernel_basis(middle)) {
    const LVector c1(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(k1));
    const LVector c2(coeffs.begin() + static_cast<std::ptrdiff_t>(k1), coeffs.end());
    LVector x = v1.block(0, 0, a, k1).apply(c1);
    const LVector z = v2.block(b, 0, c, k2).apply(c2);
    x.insert(x.end(), z.begin(), z.end());
    pairs.push_back(std::move(x));
  }
  return {n1.src, n2.dst, SaturatedSubspace(a + c, pairs)};
}

bool is_unitary(const LMatrix& f, const HermitianModule& src, const HermitianModule& dst) {
  if (f.rows() != dst.rank() || f.cols() != src.rank()) return false;
  return f.transpose() * dst.gram() * f.conjugate() == src.gram();
}

bool is_unitary(const QMatrix& f, const HermitianModule& src, const HermitianModule& dst) {
  if (f.rows() != dst.rank() || f.cols() != src.rank()) return false;
  return f.transpose() * to_rational(dst.gram()) * f.conjugate() == to_rational(src.gram());
}

LagrangianRelation graph(const LMatrix& f, const HermitianModule& src, const HermitianModule& dst) {
  if (!is_unitary(f, src, dst)) throw NotUnitary("map does not preserve the forms");
  const LMatrix basis = LMatrix::identity(src.rank()).vconcat(f);
  std::vector<LVector> cols;
  for (std::size_t j = 0; j < basis.cols(); ++j) cols.push_back(basis.column(j));
  return {src, dst, SaturatedSubspace(src.rank() + dst.rank(), cols)};
}

LagrangianRelation graph(const QMatrix& f, const HermitianModule& src, const HermitianModule& dst) {
  if (!is_unitary(f, src, dst)) throw NotUnitary("map does not preserve the forms");
  const QMatrix basis = to_rational(LMatrix::identity(src.rank())).vconcat(f);
  const LMatrix cleared = clear_denominators(basis.transpose());
  std::vector<LVector> rows;
  for (std::size_t i = 0; i < cleared.rows(); ++i) rows.push_back(cleared.row(i));
  return {src, dst, SaturatedSubspace(src.rank() + dst.rank(), rows)};
}

}  // namespace tanglecospan
