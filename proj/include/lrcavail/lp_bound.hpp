#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrcavail/bounds.hpp"
#include "lrcavail/combinatorics.hpp"
#include "lrcavail/numeric.hpp"

namespace lrcavail {

enum class Sense { less_equal, greater_equal };

struct LinearConstraint {
  std::string label;
  std::vector<Rational> coeffs;
  Sense sense = Sense::less_equal;
  Rational rhs;
};

/// maximize objective_offset + objective . x subject to constraints, x >= 0.
///
/// For the weight-distribution LP the variables are A_{t+1}..A_n; A_1..A_t
/// are fixed to zero because every availability-t code has distance >= t+1.
struct LPModel {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  Rational objective_offset = 0;
  std::vector<LinearConstraint> constraints;

  unsigned q = 2;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;
  std::int64_t m = 0;  // n t / (r+1)

  /// Weight index carried by variable v (t+1+v).
  std::int64_t weight_of(std::size_t v) const { return t + 1 + static_cast<std::int64_t>(v); }
};

struct LPOptions {
  /// Adds A_i <= (q-1)^i C(n, i) for every variable.
  bool strengthen = false;
};

/// Assembles the dual-nonnegativity rows (B_j >= 0, j = 0..n), the folded
/// (r+1) B_{r+1} >= n t row, B_{2r} >= n C(t,2) for r > 2 and
/// B_{2(r+1)} >= C(m,2) - n C(t,2) for r >= 2, all rewritten in A-space through the
/// MacWilliams identity. Rows whose dual weight exceeds n are omitted.
/// Throws std::invalid_argument unless (r+1) | n t, q >= 2 and n >= t.
LPModel build_lp(unsigned q, std::int64_t n, std::int64_t r, std::int64_t t,
                 const LPOptions& options = {});

enum class LPStatus { optimal, infeasible, unbounded, iteration_limit };
enum class SolverMode { exact, floating };

std::string to_string(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  SolverMode mode = SolverMode::exact;
  std::optional<Rational> exact_value;  // exact mode, optimal only
  double value = 0.0;
  std::vector<Rational> exact_x;
  std::vector<double> x;
  std::size_t iterations = 0;
};

struct SolveOptions {
  SolverMode mode = SolverMode::exact;
  std::size_t max_iterations = 200000;
  double feasibility_tolerance = 1e-9;
};

/// Two-phase primal simplex with Bland's rule. The floating mode equilibrates
/// columns, then normalizes each row (and the objective) by its largest
/// coefficient magnitude.
LPSolution solve_lp(const LPModel& model, const SolveOptions& options = {});

/// Checks a point against every constraint of the model in exact arithmetic.
/// Returns the labels of violated constraints.
std::vector<std::string> violated_constraints(const LPModel& model,
                                              const std::vector<Rational>& point);

/// Extracts (A_{t+1}, ..., A_n) from a weight distribution as an LP point.
std::vector<Rational> lp_point(const LPModel& model, const WeightDistribution& dist);

struct LPBoundResult {
  LPStatus status = LPStatus::infeasible;
  std::optional<BoundResult> bound;  // present when optimal
  LPSolution solution;
};

/// k <= log_q(M) where M is the LP optimum.
LPBoundResult lp_dimension_bound(unsigned q, std::int64_t n, std::int64_t r, std::int64_t t,
                                 const LPOptions& options = {},
                                 const SolveOptions& solve = {});

}  // namespace lrcavail
