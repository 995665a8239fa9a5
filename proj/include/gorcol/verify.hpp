#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gorcol/codim2.hpp"

namespace gorcol {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // populated on failure or with notable diagnostics
  double elapsed_ms = 0.0;
};

/// Seeded random m-primary monomial ideals with generator exponents in
/// [1, max_exp]; deterministic for a fixed seed.
std::vector<MonomialIdeal2> verification_corpus(std::size_t count, int max_exp,
                                                std::uint64_t seed);

constexpr std::uint64_t kCorpusSeed = 1234567;

/// Runs one verification criterion (1..9).
CriterionResult run_criterion(int number);

/// Runs every criterion in order.
std::vector<CriterionResult> run_all_criteria();

}  // namespace gorcol
