#pragma once

#include <cstdint>
#include <random>

#include "tanglecospan/tangle.hpp"

namespace tanglecospan {

using Rng = std::mt19937_64;

/// Independent stream for sample `index` of check `stream`.
Rng sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

enum class Family { any, zero_sum, nonzero_sum };

struct WordOptions {
  std::size_t max_width = 4;
  std::size_t max_length = 6;
  bool cups_and_caps = true;
};

SignSeq random_signs(Rng& rng, std::size_t n);
/// A boundary of size at most max_width in the given family.
SignSeq random_boundary(Rng& rng, Family f, std::size_t max_width);
/// Random typechecked word from `source`, never wider than max_width.
TangleWord random_word(Rng& rng, const SignSeq& source, const WordOptions& opt);
TangleWord random_word(Rng& rng, Family f, const WordOptions& opt);
/// Crossings only, on n strands with arbitrary orientations.
TangleWord random_braid_word(Rng& rng, std::size_t n, std::size_t length);
/// Braid word on colored strands (colors 1..n, possibly repeated).
TangleWord random_colored_braid(Rng& rng, std::size_t n, std::size_t length);
/// Every component runs from the bottom to the top, with at least one cup.
TangleWord random_string_link(Rng& rng, std::size_t n, std::size_t length);

/// Upside-down copy with all orientations reversed: a word from the target
/// of w back to its source.
TangleWord flip(const TangleWord& w);

}  // namespace tanglecospan
