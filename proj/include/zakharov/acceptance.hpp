#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "zakharov/field.hpp"

namespace zakharov::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Identifiers of the exit criteria, in order.
std::vector<int> criterion_ids();

/// Runs one criterion; exceptions are reported as failures.
CriterionResult run_criterion(int id);

/// Runs the given criteria, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_all(const std::vector<int>& ids, std::ostream& out);

/// Real, band-limited random field sum_{k<=max_mode} (a_k cos + b_k sin)(kappa_k x)
/// with a_k, b_k ~ N(0, 1) / (1 + k^2). Physical representation.
Field random_real_field(const GridPtr& grid, std::mt19937_64& rng, int max_mode);

/// Complex band-limited random field with independent real and imaginary parts.
Field random_complex_field(const GridPtr& grid, std::mt19937_64& rng, int max_mode);

}  // namespace zakharov::acceptance
