#include "tanglecospan/selftest.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "tanglecospan/functor.hpp"
#include "tanglecospan/laws.hpp"
#include "tanglecospan/parallel.hpp"
#include "tanglecospan/random.hpp"

namespace tanglecospan {

namespace {

using Failure = std::optional<std::string>;

/// Collects per-sample failures in sample order.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void add(const Failure& f) {
    ++checked;
    if (!f) return;
    if (failed++ == 0) first = *f;
  }
  void add_all(const std::vector<Failure>& fs) {
    for (const auto& f : fs) add(f);
  }
};

CriterionResult finish(int id, std::string name, const Tally& t, std::string what) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.pass = t.failed == 0 && t.checked > 0;
  r.summary = std::to_string(t.checked) + " " + what + ", " + std::to_string(t.failed) + " failed";
  r.counterexample = t.first;
  return r;
}

Layer crossing(Gen g, std::size_t i) {
  Layer l;
  l.gen = g;
  l.pos = i;
  return l;
}

TangleWord word_of(const SignSeq& s, std::vector<Layer> layers) {
  TangleWord w;
  w.source = s;
  w.layers = std::move(layers);
  return w;
}

std::vector<SignSeq> all_contexts(std::size_t n) {
  std::vector<SignSeq> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = (mask >> j & 1) ? -1 : 1;
    out.emplace_back(s);
  }
  return out;
}

Failure expect_equal(const std::string& what, const LMatrix& a, const LMatrix& b) {
  if (a == b) return std::nullopt;
  return what + "\n" + a.to_string() + "versus\n" + b.to_string();
}

}  // namespace

bool SelftestReport::ok() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

std::string SelftestReport::to_string() const {
  std::ostringstream os;
  for (const auto& r : results)
    os << "criterion " << r.id << " " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.summary << ")\n";
  for (const auto& r : results)
    if (!r.counterexample.empty()) os << "--- criterion " << r.id << " counterexample\n" << r.counterexample << '\n';
  os << "selftest: " << (ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

CriterionResult criterion_alexander_fixtures() {
  struct Fixture {
    const char* word;
    const char* polynomial;
  };
  const std::vector<Fixture> fixtures = {
      {"@[++] x1;x1;x1", "t^2 - t + 1"},
      {"@[+++] x1;y2;x1;y2", "t^2 - 3*t + 1"},
      {"@[+] ", "1"},
      {"@[++] x1", "1"},
      {"@[] cup1+-;cap1", "1"},
  };
  Tally t;
  for (const auto& f : fixtures) {
    const TangleWord w = parse_word(f.word);
    const Laurent expected = Laurent::parse(f.polynomial);
    const Laurent compositional = alexander(w).polynomial;
    Failure failure;
    if (compositional != expected) failure = std::string(f.word) + ": compositional " + compositional.to_string();
    const Typing ty = typecheck(w);
    const TangleWord closed = ty.source.size() == 0 ? w : closure(w);
    const std::size_t gens = make_diagram(closed).arcs;
    for (std::size_t row = 0; row < std::max<std::size_t>(gens, 1); ++row) {
      const Laurent oracle = oracle_alexander(w, row);
      if (oracle != expected && !failure)
        failure = std::string(f.word) + ": oracle (row " + std::to_string(row + 1) + " deleted) " + oracle.to_string();
    }
    t.add(failure);
  }
  return finish(1, "alexander fixtures", t, "fixtures");
}

CriterionResult criterion_burau_laws() {
  GeneratorTable& table = default_table();
  Tally t;
  auto matrix = [&](const SignSeq& s, std::vector<Layer> layers) { return burau_matrix(word_of(s, std::move(layers)), Variant::reduced, table); };
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& s : all_contexts(n)) {
      for (std::size_t i = 1; i < n; ++i) {
        // x_i and y_i are mutually inverse.
        const LMatrix id = LMatrix::identity(reduced_rank(s));
        t.add(expect_equal(s.to_string() + " x" + std::to_string(i) + ";y" + std::to_string(i), matrix(s, {crossing(Gen::x, i), crossing(Gen::y, i)}), id));
        for (Gen g : {Gen::x, Gen::y}) {
          if (i + 1 < n) {
            const auto lhs = matrix(s, {crossing(g, i), crossing(g, i + 1), crossing(g, i)});
            const auto rhs = matrix(s, {crossing(g, i + 1), crossing(g, i), crossing(g, i + 1)});
            t.add(expect_equal(s.to_string() + " braid relation at " + std::to_string(i), lhs, rhs));
          }
          for (std::size_t j = i + 2; j < n; ++j)
            for (Gen h : {Gen::x, Gen::y}) {
              const auto lhs = matrix(s, {crossing(g, i), crossing(h, j)});
              const auto rhs = matrix(s, {crossing(h, j), crossing(g, i)});
              t.add(expect_equal(s.to_string() + " far commutation " + std::to_string(i) + "," + std::to_string(j), lhs, rhs));
            }
        }
      }
    }
  return finish(2, "burau braid relations", t, "relations");
}

CriterionResult criterion_unitarity() {
  Tally t;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& s : all_contexts(n))
      for (std::size_t i = 1; i < n; ++i)
        for (Gen g : {Gen::x, Gen::y}) {
          const TangleWord w = word_of(s, {crossing(g, i)});
          const LMatrix m = burau_matrix(w);
          const auto src = object_space(s, Variant::reduced), dst = object_space(typecheck(w).target, Variant::reduced);
          Failure f;
          if (!is_unitary(m, *src.form, *dst.form)) f = w.to_string() + " is not unitary:\n" + m.to_string();
          t.add(f);
        }
  return finish(3, "unitarity", t, "generator contexts");
}

CriterionResult criterion_lagrangian(std::uint64_t seed, std::size_t samples) {
  std::size_t zero = 0;
  const auto failures = parallel_map(samples, [&](std::size_t i) -> Failure {
    Rng rng = sample_rng(seed, 4, i);
    const Family f = i % 2 == 0 ? Family::zero_sum : Family::nonzero_sum;
    const TangleWord w = random_word(rng, f, WordOptions{});
    const Cospan c = evaluate(w, Variant::reduced).cospan;
    if (is_lagrangian(c)) return std::nullopt;
    return w.to_string() + " is not Lagrangian\n" + serialize(c);
  });
  Tally t;
  t.add_all(failures);
  zero = (samples + 1) / 2;
  auto r = finish(4, "lagrangian", t, "words");
  r.summary += ", " + std::to_string(zero) + " with zero sign sum";
  return r;
}

CriterionResult criterion_cross_check(std::uint64_t seed, std::size_t samples) {
  const auto failures = parallel_map(samples, [&](std::size_t i) -> Failure {
    Rng rng = sample_rng(seed, 5, i);
    const TangleWord w = random_word(rng, Family::any, WordOptions{});
    const auto report = cross_check(w);
    if (report.ok()) return std::nullopt;
    return w.to_string() + "\n" + report.to_string();
  });
  Tally t;
  t.add_all(failures);
  return finish(5, "oracle agreement", t, "words");
}

CriterionResult criterion_f_functor(std::uint64_t seed, std::size_t pairs, std::size_t relations) {
  const auto composed = parallel_map(pairs, [&](std::size_t i) -> Failure {
    Rng rng = sample_rng(seed, 6, i);
    const TangleWord w1 = random_word(rng, Family::any, WordOptions{});
    const TangleWord w2 = random_word(rng, typecheck(w1).target, WordOptions{});
    const Cospan t1 = evaluate(w1, Variant::reduced).cospan, t2 = evaluate(w2, Variant::reduced).cospan;
    const auto lhs = relation_subspace(compose_cospans(t1, t2));
    const auto rhs = compose_relations(lagrangian_relation(t1), lagrangian_relation(t2)).subspace;
    if (lhs == rhs) return std::nullopt;
    return w1.to_string() + " then " + w2.to_string() + "\ncomposite " + lhs.to_string() + "\nrelations " + rhs.to_string();
  });
  const auto fullness = parallel_map(relations, [&](std::size_t i) -> Failure {
    Rng rng = sample_rng(seed, 61, i);
    const TangleWord w = random_word(rng, Family::any, WordOptions{});
    const LagrangianRelation n = lagrangian_relation(evaluate(w, Variant::reduced).cospan);
    const LagrangianRelation back = lagrangian_relation(relation_to_cospan(n));
    if (back == n) return std::nullopt;
    return w.to_string() + "\nrelation " + n.subspace.to_string() + "\nround trip " + back.subspace.to_string();
  });
  Tally t;
  t.add_all(composed);
  t.add_all(fullness);
  auto r = finish(6, "relation functor", t, "checks");
  r.summary = std::to_string(pairs) + " composable pairs, " + std::to_string(relations) + " round trips, " + std::to_string(t.failed) + " failed";
  return r;
}

CriterionResult criterion_bicategory_laws(std::uint64_t seed, std::size_t samples) {
  LawOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  Tally t;
  std::string summary;
  for (const auto& law : check_laws(opt)) {
    for (std::size_t i = 0; i < law.samples; ++i) t.add(std::nullopt);
    t.failed += law.failures;
    if (!law.ok() && t.first.empty()) t.first = law.law + " " + law.counterexample;
    summary += (summary.empty() ? "" : ", ") + law.law + " " + std::to_string(law.samples - law.failures) + "/" + std::to_string(law.samples);
  }
  auto r = finish(7, "bicategory laws", t, "samples");
  r.summary = summary;
  return r;
}

CriterionResult criterion_trace(std::uint64_t seed, std::size_t pairs) {
  const auto failures = parallel_map(pairs, [&](std::size_t i) -> Failure {
    Rng rng = sample_rng(seed, 8, i);
    const WordOptions opt{4, 4, true};
    const SignSeq s = random_boundary(rng, Family::any, opt.max_width);
    const TangleWord w1 = random_word(rng, s, opt);
    const SignSeq target = typecheck(w1).target;
    // A second word with the same ends, turned upside down, comes back.
    TangleWord w3 = w1;
    for (int attempt = 0; attempt < 20; ++attempt) {
      TangleWord candidate = random_word(rng, s, opt);
      if (typecheck(candidate).target == target) {
        w3 = candidate;
        break;
      }
    }
    const TangleWord w2 = flip(w3);
    const Cospan t1 = evaluate(w1, Variant::unreduced).cospan, t2 = evaluate(w2, Variant::unreduced).cospan;
    const Cospan a = compose_cospans(t1, t2), b = compose_cospans(t2, t1);
    const Module ta = trace(a), tb = trace(b);
    if (invariants(ta) != invariants(tb))
      return w1.to_string() + " / " + w2.to_string() + ": traces " + invariants(ta).to_string() + " and " + invariants(tb).to_string();
    const Module sum = trace(direct_sum(a, b)), separate = direct_sum(ta, tb);
    if (invariants(sum) != invariants(separate) || sum.gens != separate.gens)
      return w1.to_string() + ": trace of the sum " + invariants(sum).to_string() + " versus " + invariants(separate).to_string();
    const Cospan closed = evaluate(closure(then(w1, w2)), Variant::unreduced).cospan;
    if (trace(closed) != closed.centre) return w1.to_string() + ": trace on the empty boundary changed the centre";
    return std::nullopt;
  });
  Tally t;
  t.add_all(failures);
  return finish(8, "trace", t, "pairs");
}

CriterionResult criterion_core_equivalence(std::uint64_t seed, std::size_t braids, std::size_t string_links) {
  const auto braid_failures = parallel_map(braids, [&](std::size_t i) -> Failure {
    Rng rng = sample_rng(seed, 9, i);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const TangleWord w = random_braid_word(rng, n, len);
    const Cospan c = evaluate(w, Variant::reduced).cospan;
    if (invertibility(c) != Invertibility::invertible) return w.to_string() + ": not invertible";
    const CoreIso core = core_to_iso(c);
    if (!core.integral || !is_unitary(core.laurent, *c.src_form, *c.dst_form)) return w.to_string() + ": core is not unitary";
    if (graph(core.laurent, *c.src_form, *c.dst_form) != lagrangian_relation(c)) return w.to_string() + ": graph of the core differs from the relation";
    return std::nullopt;
  });
  const auto link_failures = parallel_map(string_links, [&](std::size_t i) -> Failure {
    Rng rng = sample_rng(seed, 91, i);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const TangleWord w = i % 2 == 0 ? random_braid_word(rng, n, 6) : random_string_link(rng, n, 6);
    const Cospan c = evaluate(w, Variant::reduced).cospan;
    if (invertibility(c) == Invertibility::neither) return w.to_string() + ": not rationally invertible";
    return std::nullopt;
  });
  Tally t;
  t.add_all(braid_failures);
  t.add_all(link_failures);
  auto r = finish(9, "core equivalence", t, "words");
  r.summary = std::to_string(braids) + " braids, " + std::to_string(string_links) + " string links, " + std::to_string(t.failed) + " failed";
  return r;
}

CriterionResult criterion_gassner(std::uint64_t seed, std::size_t samples) {
  const auto failures = parallel_map(samples, [&](std::size_t i) -> Failure {
    Rng rng = sample_rng(seed, 10, i);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const TangleWord w = random_colored_braid(rng, n, len);
    const LMatrix specialized = gassner_matrix(w).map([](const MultiLaurent& p) { return p.specialize(); });
    TangleWord plain = w;
    plain.source = SignSeq(w.source.signs);
    return expect_equal(w.to_string() + ": specialized multivariable matrix differs", specialized, burau_matrix(plain, Variant::unreduced));
  });
  Tally t;
  t.add_all(failures);
  return finish(10, "gassner specialization", t, "colored braids");
}

SelftestReport run_selftest(std::uint64_t seed, std::ostream* timing) {
  struct Entry {
    double limit;
    CriterionResult (*run)(std::uint64_t);
  };
  const std::vector<Entry> entries = {
      {5, [](std::uint64_t) { return criterion_alexander_fixtures(); }},
      {10, [](std::uint64_t) { return criterion_burau_laws(); }},
      {0, [](std::uint64_t) { return criterion_unitarity(); }},
      {60, [](std::uint64_t s) { return criterion_lagrangian(s); }},
      {120, [](std::uint64_t s) { return criterion_cross_check(s); }},
      {0, [](std::uint64_t s) { return criterion_f_functor(s); }},
      {60, [](std::uint64_t s) { return criterion_bicategory_laws(s); }},
      {0, [](std::uint64_t s) { return criterion_trace(s); }},
      {0, [](std::uint64_t s) { return criterion_core_equivalence(s); }},
      {0, [](std::uint64_t s) { return criterion_gassner(s); }},
  };
  SelftestReport report;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = e.run(seed);
    } catch (const std::exception& ex) {
      r.id = static_cast<int>(report.results.size()) + 1;
      r.name = "criterion";
      r.summary = "error";
      r.counterexample = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.limit = e.limit;
    if (r.limit > 0 && r.seconds > r.limit) {
      r.pass = false;
      r.counterexample += "time limit of " + std::to_string(static_cast<int>(r.limit)) + " s exceeded\n";
    }
    if (timing) *timing << "criterion " << r.id << ": " << r.seconds << " s\n";
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace tanglecospan
