#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tanglecospan/cospan.hpp"
#include "tanglecospan/fox.hpp"
#include "tanglecospan/tangle.hpp"

namespace tanglecospan {

/// Object of the functor on a boundary: a form in the reduced variant, a
/// bare rank in the unreduced one.
struct ObjectSpace {
  std::size_t rank = 0;
  std::optional<HermitianModule> form;
};
ObjectSpace object_space(const SignSeq& s, Variant v);

/// Cospans of single layers, read off the oracle once per context and kept.
/// Entries can be replaced, which the negative controls use.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  GeneratorTable(const GeneratorTable& other);
  GeneratorTable& operator=(const GeneratorTable& other);

  Cospan get(const Layer& layer, const SignSeq& context, Variant v);
  MultiCospan get_colored(const Layer& layer, const SignSeq& context);
  void replace(const Layer& layer, const SignSeq& context, Variant v, Cospan c);
  std::size_t size() const;

 private:
  using Key = std::tuple<int, std::size_t, int, std::vector<int>, std::vector<int>, int>;
  static Key key(const Layer& layer, const SignSeq& context, Variant v);

  mutable std::mutex mutex_;
  std::map<Key, Cospan> entries_;
  std::map<Key, MultiCospan> colored_;
};

/// Shared table used when no table is passed explicitly.
GeneratorTable& default_table();

/// Throws ContextMismatch when the layer does not act on `context`.
Cospan elementary_cospan(const Layer& layer, const SignSeq& context, Variant v, GeneratorTable& table = default_table());

struct FunctorStep {
  Layer layer;
  Cospan piece;
  std::size_t glue_rank = 0;
};

struct FunctorResult {
  Cospan cospan;
  std::vector<FunctorStep> trail;
  Variant variant = Variant::reduced;
};

FunctorResult evaluate(const TangleWord& w, Variant v, GeneratorTable& table = default_table());
/// Recomputes the fold from the recorded pieces.
Cospan replay(const FunctorResult& r);
MultiCospan evaluate_colored(const TangleWord& w, GeneratorTable& table = default_table());

/// Throws NotABraidWord.
LMatrix burau_matrix(const TangleWord& w, Variant v = Variant::reduced, GeneratorTable& table = default_table());
/// Unreduced, one variable per color.
Matrix<MultiLaurent> gassner_matrix(const TangleWord& w, GeneratorTable& table = default_table());

/// Coequalizer of the two legs; throws NotEndomorphism.
Module trace(const Cospan& c);

struct AlexanderResult {
  Module module;
  Laurent polynomial;
};
/// Accepts a link word or an endomorphism word (closed first).
AlexanderResult alexander(const TangleWord& w, GeneratorTable& table = default_table());
/// Unit-normalized gcd of the (gens - 1)-minors of a relative presentation.
Laurent relative_order(const Module& m);

struct CheckLine {
  std::string name;
  bool ok = true;
  std::string expected;
  std::string actual;
};

struct CrossCheckReport {
  std::vector<CheckLine> lines;
  /// Minimal failing layer range [first, last) when the check fails.
  std::optional<std::pair<std::size_t, std::size_t>> localized;
  std::string localized_word;

  bool ok() const;
  std::string to_string() const;
};

/// Compares the oracle with the layer-by-layer fold (unreduced variant).
CrossCheckReport cross_check(const TangleWord& w, GeneratorTable& table = default_table());

}  // namespace tanglecospan
