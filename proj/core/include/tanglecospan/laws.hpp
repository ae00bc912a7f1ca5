#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tanglecospan/cospan.hpp"
#include "tanglecospan/random.hpp"

namespace tanglecospan {

struct LawReport {
  std::string law;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string counterexample;  // first failing sample, if any

  bool ok() const { return failures == 0; }
};

struct LawOptions {
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  /// Negative control: zero one leg on one side of every comparison.
  bool corrupt = false;
  /// Use identity cospans only.
  bool identities_only = false;
};

/// Parallel cospans src -> dst evaluated from random words; at least one.
std::vector<Cospan> random_parallel_cospans(Rng& rng, const SignSeq& source, std::size_t count, SignSeq& target);
/// Cospan a => b glued along both boundaries, with random extra generators and relations.
TwoCospan random_two_cospan(Rng& rng, const Cospan& a, const Cospan& b);

/// Interchange, pentagon and triangle, in that order.
std::vector<LawReport> check_laws(const LawOptions& opt);

}  // namespace tanglecospan
