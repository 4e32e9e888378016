#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zakharov/integrators.hpp"

namespace zakharov {

enum class Problem { soliton, example1, custom };

std::string to_string(Method m);
std::string to_string(Problem p);
Method parse_method(const std::string& name);
Problem parse_problem(const std::string& name);

/// Ordered key=value metadata embedded in every CSV.
using Params = std::vector<std::pair<std::string, std::string>>;

struct ProblemSetup {
  Problem problem = Problem::soliton;
  GridPtr grid;
  SolitonParams soliton;
  /// Initial data for Problem::custom.
  std::optional<FieldTriple> custom_data;

  FieldTriple initial_data() const;
  Params params() const;
};

struct ConvergenceRow {
  double tau = 0.0;
  double err_E = 0.0;
  double err_u = 0.0;
  double err_uprime = 0.0;
  double err_composite = 0.0;
};

struct ConvergenceRecord {
  Method scheme = Method::first_order;
  Problem problem = Problem::soliton;
  double s_index = 0.0;
  double T = 0.0;
  Params params;  // self-description, written to the CSV header
  std::vector<ConvergenceRow> rows;
};

/// Reference solution at time T, with a description of how it was obtained.
struct Reference {
  FieldTriple state;
  std::string kind;
  double tau_ref = 0.0;
  /// ||.||_(0) distance between the two independent references (0 for exact).
  double cross_check = 0.0;
};

/// Agreement required between the RK4 oracle and the fine second order run.
inline constexpr double kReferenceAgreement = 1e-7;

/// Exact solution for the soliton. Otherwise the RK4 oracle at
/// tau_ref = min(tau_min / 100, stability bound), cross-checked against the
/// second order scheme at tau_min / 100; throws ReferenceDisagreementError
/// when they differ by more than kReferenceAgreement in ||.||_(0).
Reference reference_solution(const ProblemSetup& setup, double T, double tau_min,
                             const StepOptions& options = {});

struct StudyOptions {
  StepOptions step;
  /// Run the (scheme, tau) cells concurrently; results are ordered by tau.
  bool parallel = true;
};

/// Errors at t = T for every tau in tau_list (at least four distinct values,
/// each dividing T), sorted by decreasing tau.
ConvergenceRecord convergence_study(Method scheme, const ProblemSetup& setup,
                                    std::vector<double> tau_list, double T, double s,
                                    const StudyOptions& options = {},
                                    const Reference* reference = nullptr);

struct OrderFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t used = 0;
  std::size_t excluded = 0;
};

/// Errors at or below this are treated as rounding noise by fit_order.
inline constexpr double kRoundingFloor = 1e-14;

/// Least-squares line through (log tau, log error). Rows with error <=
/// kRoundingFloor are excluded; throws std::invalid_argument when fewer than
/// two rows remain.
OrderFit fit_order(std::span<const std::pair<double, double>> rows);
OrderFit fit_order(const ConvergenceRecord& record);

struct RunRow {
  double t = 0.0;
  double l2_E = 0.0;
  double hamiltonian = 0.0;
  double dev_l2 = 0.0;
  double dev_H = 0.0;
  double mean_u = 0.0;
  double mean_uprime = 0.0;
};

struct RunRecord {
  Method scheme = Method::first_order;
  Problem problem = Problem::soliton;
  double cfl = 0.0;
  double tau = 0.0;
  bool mean_zero_warning = false;
  Params params;
  std::vector<RunRow> rows;
};

RunRecord make_run_record(const Trajectory& trajectory, const ProblemSetup& setup);

/// Step size tau = CFL dx^2, rounded so that an integer number of steps
/// covers [0, T]. Returns the adjusted tau.
double cfl_step(const TorusGrid& grid, double cfl, double T);

/// Time series of L^2 and energy deviations at the (adjusted) CFL number.
RunRecord conservation_run(Method scheme, const ProblemSetup& setup, double cfl, double T,
                           const RunOptions& options = {});

}  // namespace zakharov
