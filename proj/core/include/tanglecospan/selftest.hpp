#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tanglecospan {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;      // one line, deterministic
  std::string counterexample;
  double seconds = 0;       // wall time, not part of the report
  double limit = 0;         // 0 = no limit
};

struct SelftestReport {
  std::vector<CriterionResult> results;

  bool ok() const;
  /// Deterministic text: one line per criterion, then counterexamples.
  std::string to_string() const;
};

/// Runs criteria 1-10. Criterion 11 (reproducibility of this report) needs
/// two runs and is checked by the callers.
SelftestReport run_selftest(std::uint64_t seed, std::ostream* timing = nullptr);

/// Individual criteria, each self-contained.
CriterionResult criterion_alexander_fixtures();
CriterionResult criterion_burau_laws();
CriterionResult criterion_unitarity();
CriterionResult criterion_lagrangian(std::uint64_t seed, std::size_t samples = 100);
CriterionResult criterion_cross_check(std::uint64_t seed, std::size_t samples = 200);
CriterionResult criterion_f_functor(std::uint64_t seed, std::size_t pairs = 100, std::size_t relations = 50);
CriterionResult criterion_bicategory_laws(std::uint64_t seed, std::size_t samples = 50);
CriterionResult criterion_trace(std::uint64_t seed, std::size_t pairs = 50);
CriterionResult criterion_core_equivalence(std::uint64_t seed, std::size_t braids = 50, std::size_t string_links = 20);
CriterionResult criterion_gassner(std::uint64_t seed, std::size_t samples = 30);

}  // namespace tanglecospan
