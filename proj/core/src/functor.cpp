#include "tanglecospan/functor.hpp"

#include <sstream>

namespace tanglecospan {

ObjectSpace object_space(const SignSeq& s, Variant v) {
  if (v == Variant::unreduced) return {s.size(), std::nullopt};
  static std::mutex mutex;
  static std::map<std::vector<int>, HermitianModule> forms;
  {
    std::lock_guard lock(mutex);
    if (auto it = forms.find(s.signs); it != forms.end()) return {it->second.rank(), it->second};
  }
  HermitianModule h(reduced_gram(s));
  std::lock_guard lock(mutex);
  forms.emplace(s.signs, h);
  return {h.rank(), h};
}

GeneratorTable::GeneratorTable(const GeneratorTable& other) {
  std::lock_guard lock(other.mutex_);
  entries_ = other.entries_;
  colored_ = other.colored_;
}

GeneratorTable& GeneratorTable::operator=(const GeneratorTable& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_, other.mutex_);
  entries_ = other.entries_;
  colored_ = other.colored_;
  return *this;
}

GeneratorTable::Key GeneratorTable::key(const Layer& layer, const SignSeq& context, Variant v) {
  const int chirality = layer.gen == Gen::cup ? layer.chirality : 0;
  return {static_cast<int>(layer.gen), layer.pos, chirality, context.signs, {}, static_cast<int>(v)};
}

namespace {

SignSeq checked_target(const Layer& layer, const SignSeq& context) {
  try {
    return apply_layer(context, layer, 0);
  } catch (const TypeError& e) {
    throw ContextMismatch(std::string("layer does not act on ") + context.to_string() + ": " + e.what());
  }
}

}  // namespace

Cospan GeneratorTable::get(const Layer& layer, const SignSeq& context, Variant v) {
  const Key k = key(layer, context, v);
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(k); it != entries_.end()) return it->second;
  }
  checked_target(layer, context);
  Cospan c;
  if (layer.gen == Gen::id) {
    const ObjectSpace o = object_space(context, v);
    c = identity_cospan<Laurent>(o.rank, o.form);
  } else {
    TangleWord w;
    w.source = SignSeq(context.signs);
    w.layers = {layer};
    c = tidy(oracle_cospan(w, v));
  }
  std::lock_guard lock(mutex_);
  return entries_.emplace(k, std::move(c)).first->second;
}

MultiCospan GeneratorTable::get_colored(const Layer& layer, const SignSeq& context) {
  Key k = key(layer, context, Variant::unreduced);
  std::get<4>(k) = context.colors;
  {
    std::lock_guard lock(mutex_);
    if (auto it = colored_.find(k); it != colored_.end()) return it->second;
  }
  checked_target(layer, context);
  MultiCospan c;
  if (layer.gen == Gen::id) {
    c = identity_cospan<MultiLaurent>(context.size());
  } else {
    TangleWord w;
    w.source = context;
    w.layers = {layer};
    c = tidy(oracle_cospan_colored(w));
  }
  std::lock_guard lock(mutex_);
  return colored_.emplace(k, std::move(c)).first->second;
}

void GeneratorTable::replace(const Layer& layer, const SignSeq& context, Variant v, Cospan c) {
  std::lock_guard lock(mutex_);
  entries_[key(layer, context, v)] = std::move(c);
}

std::size_t GeneratorTable::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size() + colored_.size();
}

GeneratorTable& default_table() {
  static GeneratorTable table;
  return table;
}

Cospan elementary_cospan(const Layer& layer, const SignSeq& context, Variant v, GeneratorTable& table) {
  return table.get(layer, context, v);
}

FunctorResult evaluate(const TangleWord& w, Variant v, GeneratorTable& table) {
  const Typing ty = typecheck(w);
  const ObjectSpace o = object_space(w.source, v);
  FunctorResult r;
  r.variant = v;
  r.cospan = identity_cospan<Laurent>(o.rank, o.form);
  for (std::size_t k = 0; k < w.layers.size(); ++k) {
    Cospan piece = table.get(w.layers[k], ty.levels[k], v);
    r.cospan = compose_tidy(r.cospan, piece);
    const std::size_t glue = piece.src_rank;
    r.trail.push_back({w.layers[k], std::move(piece), glue});
  }
  return r;
}

Cospan replay(const FunctorResult& r) {
  if (r.trail.empty()) return r.cospan;
  const Cospan& first = r.trail.front().piece;
  Cospan acc = identity_cospan<Laurent>(first.src_rank, first.src_form);
  for (const auto& step : r.trail) acc = compose_tidy(acc, step.piece);
  return acc;
}

MultiCospan evaluate_colored(const TangleWord& w, GeneratorTable& table) {
  const Typing ty = typecheck(w);
  MultiCospan acc = identity_cospan<MultiLaurent>(w.source.size());
  for (std::size_t k = 0; k < w.layers.size(); ++k) acc = compose_tidy(acc, table.get_colored(w.layers[k], ty.levels[k]));
  return acc;
}

LMatrix burau_matrix(const TangleWord& w, Variant v, GeneratorTable& table) {
  if (!is_braid_word(w)) throw NotABraidWord("word contains cups or caps");
  const CoreIso core = core_to_iso(evaluate(w, v, table).cospan);
  if (!core.integral) throw NotInvertible("braid cospan is not invertible over the ring");
  return core.laurent;
}

Matrix<MultiLaurent> gassner_matrix(const TangleWord& w, GeneratorTable& table) {
  if (!is_braid_word(w)) throw NotABraidWord("word contains cups or caps");
  return core_to_iso(evaluate_colored(w, table));
}

Module trace(const Cospan& c) {
  if (c.src_rank != c.dst_rank || c.src_form != c.dst_form) throw NotEndomorphism("trace of a cospan between different objects");
  return coequalizer(c.src_map(), c.dst_map()).module;
}

Laurent relative_order(const Module& m) {
  if (m.gens == 0) return Laurent(1);
  return gcd_of_minors(m.rels, m.gens - 1);
}

AlexanderResult alexander(const TangleWord& w, GeneratorTable& table) {
  const Typing ty = typecheck(w);
  const TangleWord closed = ty.source.size() == 0 && ty.target.size() == 0 ? w : closure(w);
  AlexanderResult r;
  r.module = evaluate(closed, Variant::reduced, table).cospan.centre;
  r.polynomial = relative_order(evaluate(closed, Variant::unreduced, table).cospan.centre);
  return r;
}

// ---- cross check ----

bool CrossCheckReport::ok() const {
  for (const auto& l : lines)
    if (!l.ok) return false;
  return true;
}

std::string CrossCheckReport::to_string() const {
  std::ostringstream os;
  for (const auto& l : lines) {
    os << l.name << ": ";
    if (l.ok)
      os << "ok\n";
    else
      os << "MISMATCH oracle=" << l.expected << " compositional=" << l.actual << '\n';
  }
  if (localized) os << "localized: layers " << localized->first + 1 << ".." << localized->second << ": " << localized_word << '\n';
  return os.str();
}

namespace {

std::vector<CheckLine> compare_pipelines(const TangleWord& w, GeneratorTable& table) {
  const Cospan oracle = oracle_cospan(w, Variant::unreduced);
  const Cospan fold = evaluate(w, Variant::unreduced, table).cospan;
  std::vector<CheckLine> lines;
  auto add = [&](std::string name, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    lines.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
  };
  const auto io = invariants(oracle.centre), ifold = invariants(fold.centre);
  add("dimension", std::to_string(io.dim), std::to_string(ifold.dim));
  add("invariant factors", io.to_string(), ifold.to_string());
  const auto no = relation_subspace(oracle), nf = relation_subspace(fold);
  lines.push_back({"kernel", no == nf, no.to_string(), nf.to_string()});
  if (oracle.src_rank == 0 && oracle.dst_rank == 0)
    add("alexander", relative_order(oracle.centre).to_string(), relative_order(fold.centre).to_string());
  return lines;
}

bool agrees(const TangleWord& w, GeneratorTable& table) {
  for (const auto& l : compare_pipelines(w, table))
    if (!l.ok) return false;
  return true;
}

}  // namespace

CrossCheckReport cross_check(const TangleWord& w, GeneratorTable& table) {
  CrossCheckReport r;
  r.lines = compare_pipelines(w, table);
  if (r.ok() || w.layers.empty()) return r;
  std::size_t a = 0, b = w.layers.size();
  while (b - a > 1) {
    const std::size_t m = a + (b - a) / 2;
    if (!agrees(slice(w, a, m), table))
      b = m;
    else if (!agrees(slice(w, m, b), table))
      a = m;
    else
      break;
  }
  r.localized = std::make_pair(a, b);
  r.localized_word = slice(w, a, b).to_string();
  return r;
}

}  // namespace tanglecospan
