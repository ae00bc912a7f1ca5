#include "tanglecospan/laws.hpp"

#include <map>
#include <sstream>

#include "tanglecospan/functor.hpp"
#include "tanglecospan/parallel.hpp"

namespace tanglecospan {

namespace {

constexpr WordOptions kSmall{4, 4, true};

Laurent small_laurent(Rng& rng) {
  std::uniform_int_distribution<int> coef(-2, 2), exp(-1, 1);
  return Laurent::from_terms({{exp(rng), coef(rng)}, {exp(rng), coef(rng)}});
}

Cospan evaluate_reduced(const TangleWord& w) { return evaluate(w, Variant::reduced).cospan; }

ObjectSpace boundary_object(const SignSeq& s) { return object_space(s, Variant::reduced); }

/// Zeroes the source leg of the cell, which changes its kernels unless that leg was already torsion.
TwoCospan corrupted(TwoCospan a) {
  a.leg_from = LMatrix(a.leg_from.rows(), a.leg_from.cols());
  return a;
}

std::string describe(const std::vector<const Cospan*>& parts, const CellInvariants& lhs, const CellInvariants& rhs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k)
    os << "cospan " << k + 1 << ": src=" << parts[k]->src_rank << " dst=" << parts[k]->dst_rank << " centre "
       << invariants(parts[k]->centre).to_string() << '\n';
  os << "lhs centre " << lhs.centre.to_string() << " kernels " << lhs.from_kernel.dim() << '/' << lhs.to_kernel.dim() << '/'
     << lhs.joint_kernel.dim() << '\n';
  os << "rhs centre " << rhs.centre.to_string() << " kernels " << rhs.from_kernel.dim() << '/' << rhs.to_kernel.dim() << '/'
     << rhs.joint_kernel.dim() << '\n';
  return os.str();
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome compare_cells(const TwoCospan& lhs, const TwoCospan& rhs, const std::vector<const Cospan*>& parts) {
  if (lhs.from != rhs.from || lhs.to != rhs.to) return {false, "the two sides have different boundary cospans\n"};
  if (!is_valid(lhs) || !is_valid(rhs)) return {false, "a composite is not a valid 2-cospan\n"};
  const auto a = cell_invariants(lhs), b = cell_invariants(rhs);
  if (a == b) return {};
  return {false, describe(parts, a, b)};
}

/// Chain of composable cospans along random words.
std::vector<Cospan> random_chain(Rng& rng, std::size_t length, bool identities) {
  SignSeq level = random_boundary(rng, Family::any, kSmall.max_width);
  std::vector<Cospan> out;
  for (std::size_t k = 0; k < length; ++k) {
    if (identities) {
      const auto o = boundary_object(level);
      out.push_back(identity_cospan<Laurent>(o.rank, o.form));
      continue;
    }
    const TangleWord w = random_word(rng, level, kSmall);
    out.push_back(evaluate_reduced(w));
    level = typecheck(w).target;
  }
  return out;
}

Outcome interchange_sample(Rng& rng, const LawOptions& opt) {
  const SignSeq h = random_boundary(rng, Family::any, kSmall.max_width);
  SignSeq h1, h2;
  std::vector<Cospan> first, second;
  if (opt.identities_only) {
    const auto o = boundary_object(h);
    first = second = {identity_cospan<Laurent>(o.rank, o.form)};
  } else {
    first = random_parallel_cospans(rng, h, 3, h1);
    second = random_parallel_cospans(rng, h1, 3, h2);
  }
  auto choose = [&](const std::vector<Cospan>& pool) { return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]; };
  // Half of the samples use a single cospan per column, so the cells can be
  // thickenings rather than gluings (whose centres are mostly torsion).
  const bool same = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const Cospan t1 = choose(first), t2 = same ? t1 : choose(first), t3 = same ? t1 : choose(first);
  const Cospan t4 = choose(second), t5 = same ? t4 : choose(second), t6 = same ? t4 : choose(second);
  auto cell = [&](const Cospan& a, const Cospan& b) { return opt.identities_only ? identity_2cell(a) : random_two_cospan(rng, a, b); };
  const TwoCospan alpha = cell(t1, t2), gamma = cell(t2, t3), beta = cell(t4, t5), delta = cell(t5, t6);
  TwoCospan lhs = vcompose(hcompose(alpha, beta), hcompose(gamma, delta));
  const TwoCospan rhs = hcompose(vcompose(alpha, gamma), vcompose(beta, delta));
  if (opt.corrupt) lhs = corrupted(lhs);
  return compare_cells(lhs, rhs, {&t1, &t2, &t3, &t4, &t5, &t6});
}

Outcome pentagon_sample(Rng& rng, const LawOptions& opt) {
  const auto chain = random_chain(rng, 4, opt.identities_only);
  const Cospan &e = chain[0], &f = chain[1], &g = chain[2], &h = chain[3];
  const Cospan fe = compose_cospans(e, f), gf = compose_cospans(f, g), hg = compose_cospans(g, h);
  TwoCospan route_a = vcompose(associator(e, f, hg), associator(fe, g, h));
  const TwoCospan route_b =
      vcompose(vcompose(hcompose(identity_2cell(e), associator(f, g, h)), associator(e, gf, h)), hcompose(associator(e, f, g), identity_2cell(h)));
  if (opt.corrupt) route_a = corrupted(route_a);
  return compare_cells(route_a, route_b, {&e, &f, &g, &h});
}

Outcome triangle_sample(Rng& rng, const LawOptions& opt) {
  const auto chain = random_chain(rng, 2, opt.identities_only);
  const Cospan &f = chain[0], &g = chain[1];
  const Cospan unit = identity_cospan<Laurent>(f.dst_rank, f.dst_form);
  TwoCospan via_associator = vcompose(associator(f, unit, g), hcompose(left_unitor(f), identity_2cell(g)));
  const TwoCospan via_unitor = hcompose(identity_2cell(f), right_unitor(g));
  if (opt.corrupt) via_associator = corrupted(via_associator);
  return compare_cells(via_associator, via_unitor, {&f, &g});
}

}  // namespace

std::vector<Cospan> random_parallel_cospans(Rng& rng, const SignSeq& source, std::size_t count, SignSeq& target) {
  std::map<std::vector<int>, std::vector<Cospan>> by_target;
  std::map<std::vector<int>, SignSeq> boundary;
  for (std::size_t k = 0; k < 3 * count; ++k) {
    const TangleWord w = random_word(rng, source, kSmall);
    const SignSeq t = typecheck(w).target;
    by_target[t.signs].push_back(evaluate_reduced(w));
    boundary[t.signs] = t;
  }
  auto best = by_target.begin();
  for (auto it = by_target.begin(); it != by_target.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;
  target = boundary[best->first];
  auto out = best->second;
  if (out.size() > count) out.resize(count);
  return out;
}

TwoCospan random_two_cospan(Rng& rng, const Cospan& a, const Cospan& b) {
  if (a.src_rank != b.src_rank || a.dst_rank != b.dst_rank) throw ShapeMismatch("2-cospan between cospans with different ends");
  const std::size_t ga = a.centre.gens, gb = b.centre.gens;
  std::uniform_int_distribution<int> coin(0, 1);
  if (a == b && coin(rng)) {
    // Thickening: (C + free) / random column, both legs the inclusion of C.
    const std::size_t gens = ga + 1 + static_cast<std::size_t>(coin(rng));
    LMatrix col(gens, 1);
    for (std::size_t i = 0; i < gens; ++i) col(i, 0) = small_laurent(rng);
    LMatrix base(gens, a.centre.relations());
    base.set_block(0, 0, a.centre.rels);
    LMatrix inclusion(gens, ga);
    for (std::size_t i = 0; i < ga; ++i) inclusion(i, i) = Laurent(1);
    return {a, b, Module(gens, base.hconcat(col)), inclusion, inclusion};
  }
  const std::size_t extra = static_cast<std::size_t>(coin(rng));
  const std::size_t gens = ga + gb + extra;
  // [Ra 0 | ia  ia' ; 0 Rb | -ib -ib'] plus zero rows for the extra generators.
  LMatrix glue(gens, a.src_rank + a.dst_rank);
  glue.set_block(0, 0, a.leg_src.hconcat(a.leg_dst));
  glue.set_block(ga, 0, -b.leg_src.hconcat(b.leg_dst));
  LMatrix base(gens, a.centre.relations() + b.centre.relations());
  base.set_block(0, 0, a.centre.rels);
  base.set_block(ga, a.centre.relations(), b.centre.rels);
  LMatrix rels = base.hconcat(glue);
  if (coin(rng)) {
    LMatrix col(gens, 1);
    for (std::size_t i = 0; i < gens; ++i) col(i, 0) = small_laurent(rng);
    rels = rels.hconcat(col);
  }
  TwoCospan out;
  out.from = a;
  out.to = b;
  out.centre = Module(gens, rels);
  out.leg_from = LMatrix(gens, ga);
  out.leg_to = LMatrix(gens, gb);
  for (std::size_t i = 0; i < ga; ++i) out.leg_from(i, i) = Laurent(1);
  for (std::size_t i = 0; i < gb; ++i) out.leg_to(ga + i, i) = Laurent(1);
  return out;
}

std::vector<LawReport> check_laws(const LawOptions& opt) {
  using Sample = Outcome (*)(Rng&, const LawOptions&);
  const std::vector<std::pair<std::string, Sample>> laws = {
      {"interchange", interchange_sample}, {"pentagon", pentagon_sample}, {"triangle", triangle_sample}};
  std::vector<LawReport> reports;
  for (std::size_t l = 0; l < laws.size(); ++l) {
    const auto outcomes = parallel_map(opt.samples, [&](std::size_t i) {
      Rng rng = sample_rng(opt.seed, 100 + l, i);
      return laws[l].second(rng, opt);
    });
    LawReport r;
    r.law = laws[l].first;
    r.samples = opt.samples;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].ok) continue;
      if (r.failures++ == 0) r.counterexample = "sample " + std::to_string(i) + "\n" + outcomes[i].detail;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace tanglecospan
