#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tanglecospan/error.hpp"
#include "tanglecospan/laurent.hpp"
#include "tanglecospan/linalg.hpp"
#include "tanglecospan/matrix.hpp"
#include "tanglecospan/multi_laurent.hpp"

namespace tanglecospan {

/// coker(rels): generators index the rows, relations the columns.
template <class R>
struct PresentedModule {
  std::size_t gens = 0;
  Matrix<R> rels;

  PresentedModule() = default;
  PresentedModule(std::size_t g, Matrix<R> r) : gens(g), rels(std::move(r)) {
    if (rels.rows() != gens) {
      if (rels.rows() == 0 && rels.cols() == 0)
        rels = Matrix<R>(gens, 0);
      else
        throw ShapeMismatch("relation matrix has " + std::to_string(rels.rows()) + " rows for " +
                            std::to_string(gens) + " generators");
    }
  }
  static PresentedModule free(std::size_t n) { return {n, Matrix<R>(n, 0)}; }

  std::size_t relations() const { return rels.cols(); }
  bool is_free() const { return rels.is_zero(); }

  friend bool operator==(const PresentedModule&, const PresentedModule&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "module gens=" << gens << " rels=" << rels.cols() << '\n' << rels.to_string();
    return os.str();
  }
};

/// A map given on generators: column j is the image of source generator j.
template <class R>
struct ModuleMap {
  PresentedModule<R> src;
  PresentedModule<R> dst;
  Matrix<R> mat;

  ModuleMap() = default;
  /// Unchecked; callers are responsible for well-definedness.
  ModuleMap(PresentedModule<R> s, PresentedModule<R> d, Matrix<R> m) : src(std::move(s)), dst(std::move(d)), mat(std::move(m)) {
    if (mat.rows() != dst.gens || mat.cols() != src.gens)
      throw ShapeMismatch("map matrix " + mat.shape() + " between modules with " + std::to_string(src.gens) + " and " +
                          std::to_string(dst.gens) + " generators");
  }

  static ModuleMap identity(const PresentedModule<R>& m) { return {m, m, Matrix<R>::identity(m.gens)}; }
  static ModuleMap zero(const PresentedModule<R>& s, const PresentedModule<R>& d) { return {s, d, Matrix<R>(d.gens, s.gens)}; }

  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "map " << mat.rows() << 'x' << mat.cols() << '\n' << mat.to_string();
    return os.str();
  }
};

using Module = PresentedModule<Laurent>;
using Map = ModuleMap<Laurent>;
using MultiModule = PresentedModule<MultiLaurent>;
using MultiMap = ModuleMap<MultiLaurent>;

/// Builds a map and verifies that source relations land in the rational span of the target relations.
Map make_map(Module src, Module dst, LMatrix mat);
bool is_rationally_well_defined(const Map& f);

/// g after f.
template <class R>
ModuleMap<R> compose(const ModuleMap<R>& g, const ModuleMap<R>& f) {
  if (f.dst.gens != g.src.gens) throw ShapeMismatch("maps are not composable");
  return {f.src, g.dst, g.mat * f.mat};
}

template <class R>
PresentedModule<R> direct_sum(const PresentedModule<R>& a, const PresentedModule<R>& b) {
  return {a.gens + b.gens, Matrix<R>::block_diag(a.rels, b.rels)};
}

template <class R>
ModuleMap<R> direct_sum(const ModuleMap<R>& f, const ModuleMap<R>& g) {
  return {direct_sum(f.src, g.src), direct_sum(f.dst, g.dst), Matrix<R>::block_diag(f.mat, g.mat)};
}

template <class R>
struct Pushout {
  PresentedModule<R> module;
  ModuleMap<R> left;   // from the target of f
  ModuleMap<R> right;  // from the target of g
};

/// Canonical pushout of T1 <-f- H -g-> T2: generators T1 then T2, relations
/// [R1 0 -f; 0 R2 g].
template <class R>
Pushout<R> pushout(const ModuleMap<R>& f, const ModuleMap<R>& g) {
  if (f.src.gens != g.src.gens || f.src.rels != g.src.rels) throw SourceMismatch("pushout legs have different sources");
  const std::size_t g1 = f.dst.gens, g2 = g.dst.gens, h = f.src.gens;
  const std::size_t r1 = f.dst.rels.cols(), r2 = g.dst.rels.cols();
  Matrix<R> rels(g1 + g2, r1 + r2 + h);
  rels.set_block(0, 0, f.dst.rels);
  rels.set_block(g1, r1, g.dst.rels);
  rels.set_block(0, r1 + r2, -f.mat);
  rels.set_block(g1, r1 + r2, g.mat);
  PresentedModule<R> p(g1 + g2, std::move(rels));
  Matrix<R> i1(g1 + g2, g1), i2(g1 + g2, g2);
  for (std::size_t k = 0; k < g1; ++k) i1(k, k) = R(1);
  for (std::size_t k = 0; k < g2; ++k) i2(g1 + k, k) = R(1);
  return {p, ModuleMap<R>(f.dst, p, std::move(i1)), ModuleMap<R>(g.dst, p, std::move(i2))};
}

/// The map out of the canonical pushout (or any direct-sum presentation) induced by a cocone.
template <class R>
ModuleMap<R> copair(const PresentedModule<R>& p, const ModuleMap<R>& a, const ModuleMap<R>& b) {
  if (a.dst.gens != b.dst.gens) throw ShapeMismatch("cocone legs have different targets");
  return {p, a.dst, a.mat.hconcat(b.mat)};
}

template <class R>
struct Coequalizer {
  PresentedModule<R> module;
  ModuleMap<R> projection;
};

template <class R>
Coequalizer<R> coequalizer(const ModuleMap<R>& i, const ModuleMap<R>& j) {
  if (i.src.gens != j.src.gens || i.dst.gens != j.dst.gens) throw ShapeMismatch("coequalizer of maps with different shapes");
  PresentedModule<R> c(i.dst.gens, i.dst.rels.hconcat(i.mat - j.mat));
  return {c, ModuleMap<R>(i.dst, c, Matrix<R>::identity(i.dst.gens))};
}

namespace detail {

inline int unit_cost(const Laurent& u) { return std::abs(u.terms()[0].exp); }
inline int unit_cost(const MultiLaurent& u) {
  int c = 0;
  for (int e : u.terms()[0].exp) c += std::abs(e);
  return c;
}

}  // namespace detail

template <class R>
struct Simplified {
  PresentedModule<R> module;
  std::vector<ModuleMap<R>> into;   // transported maps with target the module
  std::vector<ModuleMap<R>> out_of; // transported maps with source the module
  bool complete = true;             // false when the step budget ran out
};

/// Eliminates generators through relation columns with a unit entry, then
/// drops zero relation columns. Pivot: smallest |exponent| (so ±1 first),
/// then lowest row, then lowest column.
template <class R>
Simplified<R> simplify(const PresentedModule<R>& m, std::vector<ModuleMap<R>> into = {},
                       std::vector<ModuleMap<R>> out_of = {},
                       std::size_t budget = std::numeric_limits<std::size_t>::max()) {
  for (const auto& f : into)
    if (f.dst.gens != m.gens) throw ShapeMismatch("map into the module has the wrong target");
  for (const auto& f : out_of)
    if (f.src.gens != m.gens) throw ShapeMismatch("map out of the module has the wrong source");

  // Columns: relations first, then the columns of every map into the module.
  std::size_t width = m.rels.cols();
  for (const auto& f : into) width += f.mat.cols();
  Matrix<R> work(m.gens, width);
  work.set_block(0, 0, m.rels);
  {
    std::size_t at = m.rels.cols();
    for (const auto& f : into) {
      work.set_block(0, at, f.mat);
      at += f.mat.cols();
    }
  }
  std::vector<bool> row_alive(m.gens, true), col_alive(m.rels.cols(), true);
  const std::size_t nrels = m.rels.cols();

  bool complete = true;
  std::size_t steps = 0;
  while (true) {
    std::size_t pr = 0, pc = 0;
    int best = -1;
    for (std::size_t i = 0; i < m.gens; ++i) {
      if (!row_alive[i]) continue;
      for (std::size_t c = 0; c < nrels; ++c) {
        if (!col_alive[c]) continue;
        const R& x = work(i, c);
        if (x.is_zero() || !x.is_unit()) continue;
        const int cost = detail::unit_cost(x);
        if (best < 0 || cost < best) {
          best = cost;
          pr = i;
          pc = c;
        }
        if (best == 0) break;
      }
      if (best == 0) break;
    }
    if (best < 0) break;
    if (steps++ == budget) {
      complete = false;
      break;
    }
    // e_pr = -u^{-1} sum_{i != pr} work(i, pc) e_i
    const R uinv = work(pr, pc).unit_inverse();
    for (std::size_t c = 0; c < width; ++c) {
      if (c == pc || (c < nrels && !col_alive[c]) || work(pr, c).is_zero()) continue;
      const R f = work(pr, c) * uinv;
      for (std::size_t i = 0; i < m.gens; ++i)
        if (row_alive[i] && i != pr && !work(i, pc).is_zero()) work(i, c) -= f * work(i, pc);
      work(pr, c) = R{};
    }
    row_alive[pr] = false;
    col_alive[pc] = false;
  }

  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m.gens; ++i)
    if (row_alive[i]) rows.push_back(i);
  std::vector<std::size_t> rel_cols;
  for (std::size_t c = 0; c < nrels; ++c) {
    if (!col_alive[c]) continue;
    bool zero = true;
    for (auto i : rows)
      if (!work(i, c).is_zero()) {
        zero = false;
        break;
      }
    if (!zero) rel_cols.push_back(c);
  }
  Matrix<R> reduced = work.select_rows(rows);
  PresentedModule<R> result(rows.size(), reduced.select_cols(rel_cols));

  Simplified<R> out;
  out.module = result;
  out.complete = complete;
  std::size_t at = nrels;
  for (const auto& f : into) {
    out.into.emplace_back(f.src, result, reduced.block(0, at, rows.size(), f.mat.cols()));
    at += f.mat.cols();
  }
  for (const auto& f : out_of) out.out_of.emplace_back(result, f.dst, f.mat.select_cols(rows));
  return out;
}

/// Re-expresses the module in the generators given by the columns of basis,
/// which must be invertible over the ring; maps are transported.
template <class R>
Simplified<R> change_basis(const PresentedModule<R>& m, const Matrix<R>& basis, const Matrix<R>& basis_inverse,
                           std::vector<ModuleMap<R>> into = {}, std::vector<ModuleMap<R>> out_of = {}) {
  Simplified<R> out;
  out.module = PresentedModule<R>(m.gens, basis_inverse * m.rels);
  for (const auto& f : into) out.into.emplace_back(f.src, out.module, basis_inverse * f.mat);
  for (const auto& f : out_of) out.out_of.emplace_back(out.module, f.dst, f.mat * basis);
  return out;
}

// ---- Laurent-only invariants ----

struct RationalForm {
  std::size_t dim = 0;
  /// Generators whose images form a Q(t)-basis of the module tensored with Q(t).
  std::vector<std::size_t> basis_generators;
};

RationalForm rationalize(const Module& m);

/// A Q(t)-subspace of Λ^ambient stored by a canonical primitive echelon basis.
class SaturatedSubspace {
 public:
  SaturatedSubspace() = default;
  SaturatedSubspace(std::size_t ambient, const std::vector<LVector>& spanning);
  static SaturatedSubspace full(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<LVector>& basis() const noexcept { return basis_; }
  /// ambient x dim, basis vectors as columns.
  LMatrix matrix() const;
  bool contains(const LVector& v) const;
  bool contains(const SaturatedSubspace& other) const;

  friend bool operator==(const SaturatedSubspace&, const SaturatedSubspace&) = default;
  std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<LVector> basis_;
};

/// {x in F : f(x) is torsion}, for f with free source.
SaturatedSubspace saturated_kernel(const Map& f);

struct ModuleInvariants {
  std::size_t dim = 0;
  std::vector<Laurent> torsion;  // non-unit nonzero invariant factors
  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
  std::string to_string() const;
};

ModuleInvariants invariants(const Module& m);

enum class MapEquality { exact, rational, unequal };
std::string to_string(MapEquality e);

/// Exact if the matrices agree (directly or after simplifying the common target),
/// rational if they agree after tensoring with Q(t).
MapEquality compare_maps(const Map& f, const Map& g);

Module parse_module(const std::string& text);
Map parse_map(const std::string& text, const Module& src, const Module& dst);

}  // namespace tanglecospan
