#include "tanglecospan/presented_module.hpp"

#include <sstream>

namespace tanglecospan {

bool is_rationally_well_defined(const Map& f) {
  if (f.src.is_free()) return true;
  return column_span_contains(f.dst.rels, f.mat * f.src.rels);
}

Map make_map(Module src, Module dst, LMatrix mat) {
  Map f(std::move(src), std::move(dst), std::move(mat));
  if (!is_rationally_well_defined(f)) throw ShapeMismatch("map does not respect the source relations");
  return f;
}

RationalForm rationalize(const Module& m) {
  const Echelon e = echelon(m.rels.transpose());
  std::vector<bool> pivot(m.gens, false);
  for (auto c : e.pivot_cols) pivot[c] = true;
  RationalForm out;
  out.dim = m.gens - e.rank();
  for (std::size_t i = 0; i < m.gens; ++i)
    if (!pivot[i]) out.basis_generators.push_back(i);
  return out;
}

SaturatedSubspace::SaturatedSubspace(std::size_t ambient, const std::vector<LVector>& spanning) : ambient_(ambient) {
  if (spanning.empty()) return;
  for (const auto& v : spanning)
    if (v.size() != ambient) throw ShapeMismatch("spanning vector outside the ambient rank");
  const Echelon e = echelon(LMatrix::from_rows(spanning, ambient));
  for (std::size_t k = 0; k < e.rank(); ++k) basis_.push_back(primitive(e.matrix.row(k)));
}

SaturatedSubspace SaturatedSubspace::full(std::size_t ambient) {
  std::vector<LVector> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    LVector v(ambient);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return {ambient, rows};
}

LMatrix SaturatedSubspace::matrix() const { return LMatrix::from_columns(basis_, ambient_); }

bool SaturatedSubspace::contains(const LVector& v) const {
  if (v.size() != ambient_) throw ShapeMismatch("vector outside the ambient rank");
  return column_span_contains(matrix(), LMatrix::from_columns({v}, ambient_));
}

bool SaturatedSubspace::contains(const SaturatedSubspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeMismatch("subspaces of different ambient rank");
  return column_span_contains(matrix(), other.matrix());
}

std::string SaturatedSubspace::to_string() const {
  std::ostringstream os;
  os << "subspace ambient=" << ambient_ << " dim=" << basis_.size() << '\n';
  os << LMatrix::from_rows(basis_, ambient_).to_string();
  return os.str();
}

SaturatedSubspace saturated_kernel(const Map& f) {
  if (!f.src.is_free()) throw NonFreeSource();
  const auto cokernel_coords = left_kernel_basis(f.dst.rels);
  const LMatrix q = LMatrix::from_rows(cokernel_coords, f.dst.gens);
  return {f.src.gens, kernel_basis(q * f.mat)};
}

ModuleInvariants invariants(const Module& m) {
  ModuleInvariants out;
  out.dim = rationalize(m).dim;
  for (auto& d : invariant_factors(m.rels))
    if (!d.is_zero() && !d.is_one()) out.torsion.push_back(std::move(d));
  return out;
}

std::string ModuleInvariants::to_string() const {
  std::string s = "dim=" + std::to_string(dim) + " torsion=[";
  for (std::size_t i = 0; i < torsion.size(); ++i) s += (i ? "; " : "") + torsion[i].to_string();
  return s + "]";
}

std::string to_string(MapEquality e) {
  switch (e) {
    case MapEquality::exact: return "exact";
    case MapEquality::rational: return "rational";
    case MapEquality::unequal: return "unequal";
  }
  return "unequal";
}

MapEquality compare_maps(const Map& f, const Map& g) {
  if (f.src.gens != g.src.gens || f.dst.gens != g.dst.gens) throw ShapeMismatch("comparing maps of different shapes");
  if (f.mat == g.mat) return MapEquality::exact;
  const auto s = simplify(f.dst, {f, g});
  if (s.into[0].mat == s.into[1].mat) return MapEquality::exact;
  const LMatrix diff = f.mat - g.mat;
  if (!column_span_contains(f.dst.rels, diff)) return MapEquality::unequal;
  // The difference lies in the rational span; it is exactly zero when the
  // unique coefficients over an independent set of relation columns are Laurent.
  const LMatrix rels = f.dst.rels.select_cols(echelon(f.dst.rels).pivot_cols);
  const std::size_t k = rels.cols();
  const Echelon solved = echelon(rels.hconcat(diff));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < diff.cols(); ++j) {
      const Laurent& rhs = solved.matrix(i, k + j);
      if (!rhs.is_zero() && !exact_divide(rhs, solved.matrix(i, i)).has_value()) return MapEquality::rational;
    }
  return MapEquality::exact;
  return MapEquality::unequal;
}

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  return lines;
}

std::size_t field(const std::string& header, const std::string& key, std::size_t line) {
  const auto at = header.find(key + "=");
  if (at == std::string::npos) throw SyntaxError("missing " + key + "=", line, 1);
  try {
    return std::stoul(header.substr(at + key.size() + 1));
  } catch (const std::exception&) {
    throw SyntaxError("bad value for " + key, line, at + key.size() + 2);
  }
}

}  // namespace

Module parse_module(const std::string& text) {
  auto lines = lines_of(text);
  if (lines.empty() || lines[0].rfind("module", 0) != 0) throw SyntaxError("expected 'module gens=<g> rels=<r>'", 1, 1);
  const std::size_t g = field(lines[0], "gens", 1), r = field(lines[0], "rels", 1);
  if (lines.size() != g + 1) throw SyntaxError("expected " + std::to_string(g) + " matrix rows", lines.size(), 1);
  std::vector<std::string> rows(lines.begin() + 1, lines.end());
  return {g, parse_matrix_rows<Laurent>(rows, r, [](const std::string& e) { return Laurent::parse(e); }, 2)};
}

Map parse_map(const std::string& text, const Module& src, const Module& dst) {
  auto lines = lines_of(text);
  if (lines.empty() || lines[0].rfind("map ", 0) != 0) throw SyntaxError("expected 'map <rows>x<cols>'", 1, 1);
  std::size_t rows = 0, cols = 0;
  char x = 0;
  std::istringstream header(lines[0].substr(4));
  if (!(header >> rows >> x >> cols) || x != 'x') throw SyntaxError("bad map dimensions", 1, 5);
  if (lines.size() != rows + 1) throw SyntaxError("expected " + std::to_string(rows) + " matrix rows", lines.size(), 1);
  std::vector<std::string> body(lines.begin() + 1, lines.end());
  return make_map(src, dst, parse_matrix_rows<Laurent>(body, cols, [](const std::string& e) { return Laurent::parse(e); }, 2));
}

}  // namespace tanglecospan
