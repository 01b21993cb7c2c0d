#include "lrcavail/lp_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lrcavail {

namespace {

// ---- scalar policies for the simplex --------------------------------------

struct ExactPolicy {
  using Scalar = Rational;
  static bool positive(const Scalar& v) { return v > 0; }
  static bool negative(const Scalar& v) { return v < 0; }
  static bool nonzero(const Scalar& v) { return v != 0; }
  static Scalar from_rational(const Rational& v) { return v; }
};

struct FloatPolicy {
  using Scalar = long double;
  static inline long double eps = 1e-9L;
  static bool positive(const Scalar& v) { return v > eps; }
  static bool negative(const Scalar& v) { return v < -eps; }
  static bool nonzero(const Scalar& v) { return v > eps || v < -eps; }
  static Scalar from_rational(const Rational& v) { return v.convert_to<long double>(); }
};

template <class Policy>
struct SimplexResult {
  LPStatus status = LPStatus::infeasible;
  std::vector<typename Policy::Scalar> x;
  std::size_t iterations = 0;
};

template <class Policy>
class Tableau {
 public:
  using Scalar = typename Policy::Scalar;

  // Rows are a . x <= b after sign normalization; rows with b < 0 get an
  // artificial variable.
  Tableau(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
          std::size_t num_vars)
      : rows_(a.size()), vars_(num_vars) {
    std::size_t artificial = 0;
    for (const auto& v : b) artificial += Policy::negative(v) ? 1 : 0;
    cols_ = vars_ + rows_ + artificial;
    first_artificial_ = vars_ + rows_;
    cell_.assign(rows_, std::vector<Scalar>(cols_ + 1, Scalar(0)));
    basis_.assign(rows_, 0);
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = Policy::negative(b[i]);
      const Scalar sign = flip ? Scalar(-1) : Scalar(1);
      for (std::size_t j = 0; j < vars_; ++j) cell_[i][j] = sign * a[i][j];
      cell_[i][vars_ + i] = sign;
      cell_[i][cols_] = sign * b[i];
      if (flip) {
        cell_[i][next_art] = Scalar(1);
        basis_[i] = next_art++;
      } else {
        basis_[i] = vars_ + i;
      }
    }
  }

  bool has_artificial() const { return first_artificial_ < cols_; }

  // Maximizes cost . z over the tableau columns. Columns >= `barred` may not enter.
  LPStatus optimize(const std::vector<Scalar>& cost, std::size_t barred, std::size_t& iterations,
                    std::size_t max_iterations) {
    std::vector<Scalar> reduced(cols_, Scalar(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      Scalar d = cost[j];
      for (std::size_t i = 0; i < rows_; ++i) {
        if (Policy::nonzero(cost[basis_[i]]) && Policy::nonzero(cell_[i][j])) {
          d -= cost[basis_[i]] * cell_[i][j];
        }
      }
      reduced[j] = d;
    }
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < barred; ++j) {
        if (Policy::positive(reduced[j])) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return LPStatus::optimal;
      if (iterations >= max_iterations) return LPStatus::iteration_limit;

      std::size_t leave = rows_;
      Scalar best_ratio{};
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!Policy::positive(cell_[i][enter])) continue;
        Scalar ratio = cell_[i][cols_] / cell_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (!Policy::nonzero(ratio - best_ratio) && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return LPStatus::unbounded;
      pivot(leave, enter, reduced);
      ++iterations;
    }
  }

  // Pivots basic artificials (at value zero) out where a structural column allows.
  void expel_artificials() {
    std::vector<Scalar> unused(cols_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (Policy::nonzero(cell_[i][j])) {
          pivot(i, j, unused);
          break;
        }
      }
    }
  }

  Scalar basic_sum(std::size_t from, std::size_t to) const {
    Scalar total(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= from && basis_[i] < to) total += cell_[i][cols_];
    }
    return total;
  }

  std::vector<Scalar> solution() const {
    std::vector<Scalar> x(vars_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) x[basis_[i]] = cell_[i][cols_];
    }
    return x;
  }

  std::size_t cols() const { return cols_; }
  std::size_t first_artificial() const { return first_artificial_; }

 private:
  void pivot(std::size_t row, std::size_t col, std::vector<Scalar>& reduced) {
    const Scalar p = cell_[row][col];
    for (auto& v : cell_[row]) {
      if (Policy::nonzero(v)) v /= p;
    }
    cell_[row][col] = Scalar(1);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || !Policy::nonzero(cell_[i][col])) continue;
      const Scalar f = cell_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (Policy::nonzero(cell_[row][j])) cell_[i][j] -= f * cell_[row][j];
      }
      cell_[i][col] = Scalar(0);
    }
    if (Policy::nonzero(reduced[col])) {
      const Scalar f = reduced[col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (Policy::nonzero(cell_[row][j])) reduced[j] -= f * cell_[row][j];
      }
      reduced[col] = Scalar(0);
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<Scalar>> cell_;
  std::vector<std::size_t> basis_;
};

template <class Policy>
SimplexResult<Policy> run_simplex(const LPModel& model, bool normalize,
                                  std::size_t max_iterations) {
  using Scalar = typename Policy::Scalar;
  auto magnitude = [](const Scalar& v) { return v < Scalar(0) ? -v : v; };
  std::vector<std::vector<Scalar>> a;
  std::vector<Scalar> b;
  for (const auto& c : model.constraints) {
    const Scalar sign = c.sense == Sense::less_equal ? Scalar(1) : Scalar(-1);
    std::vector<Scalar> row(model.num_vars);
    for (std::size_t j = 0; j < model.num_vars; ++j) {
      row[j] = sign * Policy::from_rational(c.coeffs[j]);
    }
    a.push_back(std::move(row));
    b.push_back(sign * Policy::from_rational(c.rhs));
  }
  std::vector<Scalar> cost(model.num_vars);
  for (std::size_t j = 0; j < model.num_vars; ++j) cost[j] = Policy::from_rational(model.objective[j]);

  // Column equilibration (x_j = y_j / s_j), then row and objective scaling.
  std::vector<Scalar> col_scale(model.num_vars, Scalar(1));
  if (normalize) {
    for (std::size_t j = 0; j < model.num_vars; ++j) {
      Scalar s(0);
      for (const auto& row : a) s = std::max(s, magnitude(row[j]));
      if (s > Scalar(0)) {
        col_scale[j] = s;
        for (auto& row : a) row[j] /= s;
        cost[j] /= s;
      }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      Scalar s(0);
      for (const auto& v : a[i]) s = std::max(s, magnitude(v));
      if (s > Scalar(0)) {
        for (auto& v : a[i]) v /= s;
        b[i] /= s;
      }
    }
    Scalar s(0);
    for (const auto& v : cost) s = std::max(s, magnitude(v));
    if (s > Scalar(0)) {
      for (auto& v : cost) v /= s;
    }
  }

  SimplexResult<Policy> result;
  Tableau<Policy> tab(a, b, model.num_vars);
  if (tab.has_artificial()) {
    std::vector<Scalar> phase1(tab.cols(), Scalar(0));
    for (std::size_t j = tab.first_artificial(); j < tab.cols(); ++j) phase1[j] = Scalar(-1);
    const auto status = tab.optimize(phase1, tab.cols(), result.iterations, max_iterations);
    if (status == LPStatus::iteration_limit) {
      result.status = status;
      return result;
    }
    if (Policy::positive(tab.basic_sum(tab.first_artificial(), tab.cols()))) {
      result.status = LPStatus::infeasible;
      return result;
    }
    tab.expel_artificials();
  }
  std::vector<Scalar> phase2(tab.cols(), Scalar(0));
  for (std::size_t j = 0; j < model.num_vars; ++j) {
    phase2[j] = cost[j];
  }
  result.status = tab.optimize(phase2, tab.first_artificial(), result.iterations, max_iterations);
  if (result.status == LPStatus::optimal) {
    result.x = tab.solution();
    for (std::size_t j = 0; j < model.num_vars; ++j) result.x[j] /= col_scale[j];
  }
  return result;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

std::string to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::unbounded:
      return "unbounded";
    case LPStatus::iteration_limit:
      return "iteration_limit";
  }
  return "unknown";
}

LPModel build_lp(unsigned q, std::int64_t n, std::int64_t r, std::int64_t t,
                 const LPOptions& options) {
  require(q >= 2, "build_lp: need q >= 2");
  require(r >= 1 && t >= 1, "build_lp: need r >= 1, t >= 1");
  require(n >= t, "build_lp: need n >= t");
  require((n * t) % (r + 1) == 0, "build_lp: (r+1) must divide n t");

  LPModel model;
  model.q = q;
  model.n = n;
  model.r = r;
  model.t = t;
  model.m = n * t / (r + 1);
  model.num_vars = static_cast<std::size_t>(n - t);
  model.objective.assign(model.num_vars, Rational(1));
  model.objective_offset = 1;

  const auto un = static_cast<std::size_t>(n);
  auto kraw_row = [&](std::size_t j) {
    std::vector<Rational> row(model.num_vars);
    for (std::size_t v = 0; v < model.num_vars; ++v) {
      row[v] = Rational(krawtchouk(q, un, j, static_cast<std::size_t>(model.weight_of(v))));
    }
    return row;
  };
  auto dual_weight_total = [&](std::size_t j) {  // K_j(0) = (q-1)^j C(n, j)
    return Rational(boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(j)) *
                    binomial(un, j));
  };
  // B_j >= lower, folded into A-space:
  //   sum_i A_i (lower - K_j(i)) <= K_j(0) - lower
  auto dual_lower_bound = [&](std::string label, std::size_t j, const Rational& lower) {
    auto k = kraw_row(j);
    LinearConstraint c{std::move(label), {}, Sense::less_equal, dual_weight_total(j) - lower};
    c.coeffs.reserve(model.num_vars);
    for (auto& v : k) c.coeffs.push_back(lower - v);
    model.constraints.push_back(std::move(c));
  };

  for (std::size_t j = 0; j <= un; ++j) {
    model.constraints.push_back(
        {"B_" + std::to_string(j), kraw_row(j), Sense::greater_equal, -dual_weight_total(j)});
  }
  const Rational pair_words = Rational(n * (t * (t - 1) / 2));
  if (r > 2 && 2 * r <= n) {
    dual_lower_bound("B_2r", static_cast<std::size_t>(2 * r), pair_words);
  }
  // For r = 1 the rows are graph edges and two disjoint pairs on a 4-cycle
  // sum to the same word, so the count is not a lower bound there.
  if (r >= 2 && 2 * (r + 1) <= n) {
    const Rational disjoint = Rational(binomial(static_cast<std::size_t>(model.m), 2)) - pair_words;
    dual_lower_bound("B_2(r+1)", static_cast<std::size_t>(2 * (r + 1)), disjoint);
  }
  if (r + 1 <= n) {
    dual_lower_bound("local_parities", static_cast<std::size_t>(r + 1), Rational(model.m));
  }
  if (options.strengthen) {
    for (std::size_t v = 0; v < model.num_vars; ++v) {
      std::vector<Rational> row(model.num_vars, Rational(0));
      row[v] = 1;
      const auto w = static_cast<std::size_t>(model.weight_of(v));
      model.constraints.push_back(
          {"cap_A_" + std::to_string(w), std::move(row), Sense::less_equal, dual_weight_total(w)});
    }
  }
  return model;
}

LPSolution solve_lp(const LPModel& model, const SolveOptions& options) {
  for (const auto& c : model.constraints) {
    require(c.coeffs.size() == model.num_vars, "solve_lp: constraint width mismatch");
  }
  require(model.objective.size() == model.num_vars, "solve_lp: objective width mismatch");

  LPSolution sol;
  sol.mode = options.mode;
  if (options.mode == SolverMode::exact) {
    auto res = run_simplex<ExactPolicy>(model, false, options.max_iterations);
    sol.status = res.status;
    sol.iterations = res.iterations;
    if (res.status == LPStatus::optimal) {
      Rational value = model.objective_offset;
      for (std::size_t j = 0; j < model.num_vars; ++j) value += model.objective[j] * res.x[j];
      sol.exact_value = value;
      sol.value = to_double(value);
      sol.exact_x = res.x;
      for (const auto& v : res.x) sol.x.push_back(to_double(v));
    }
  } else {
    FloatPolicy::eps = static_cast<long double>(options.feasibility_tolerance);
    auto res = run_simplex<FloatPolicy>(model, true, options.max_iterations);
    sol.status = res.status;
    sol.iterations = res.iterations;
    if (res.status == LPStatus::optimal) {
      long double value = model.objective_offset.convert_to<long double>();
      for (std::size_t j = 0; j < model.num_vars; ++j) {
        value += model.objective[j].convert_to<long double>() * res.x[j];
      }
      sol.value = static_cast<double>(value);
      for (const auto& v : res.x) sol.x.push_back(static_cast<double>(v));
    }
  }
  return sol;
}

std::vector<std::string> violated_constraints(const LPModel& model,
                                              const std::vector<Rational>& point) {
  require(point.size() == model.num_vars, "violated_constraints: point width mismatch");
  std::vector<std::string> out;
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (point[v] < 0) out.push_back("A_" + std::to_string(model.weight_of(v)) + ">=0");
  }
  for (const auto& c : model.constraints) {
    Rational lhs = 0;
    for (std::size_t v = 0; v < point.size(); ++v) {
      if (point[v] != 0) lhs += c.coeffs[v] * point[v];
    }
    const bool ok = c.sense == Sense::less_equal ? lhs <= c.rhs : lhs >= c.rhs;
    if (!ok) out.push_back(c.label);
  }
  return out;
}

std::vector<Rational> lp_point(const LPModel& model, const WeightDistribution& dist) {
  if (dist.n != static_cast<std::size_t>(model.n) || dist.q != model.q) {
    throw std::invalid_argument("lp_point: distribution does not match the model's (q, n)");
  }
  for (std::int64_t i = 1; i <= model.t; ++i) {
    if (dist.A[static_cast<std::size_t>(i)] != 0) {
      throw std::domain_error("lp_point: code has codewords of weight " + std::to_string(i) +
                              " <= t");
    }
  }
  std::vector<Rational> point;
  for (std::size_t v = 0; v < model.num_vars; ++v) {
    point.emplace_back(dist.A[static_cast<std::size_t>(model.weight_of(v))]);
  }
  return point;
}

LPBoundResult lp_dimension_bound(unsigned q, std::int64_t n, std::int64_t r, std::int64_t t,
                                 const LPOptions& options, const SolveOptions& solve) {
  const LPModel model = build_lp(q, n, r, t, options);
  LPBoundResult out;
  out.solution = solve_lp(model, solve);
  out.status = out.solution.status;
  if (out.status != LPStatus::optimal) return out;

  BoundResult bound;
  bound.name = "lp";
  bound.kind = BoundKind::dimension;
  bound.params = {{"q", q}, {"n", n}, {"r", r}, {"t", t}, {"strengthen", options.strengthen}};
  const double m_value = out.solution.value;
  bound.value = std::log(m_value) / std::log(static_cast<double>(q));
  if (out.solution.exact_value) bound.diagnostics["M"] = *out.solution.exact_value;
  out.bound = std::move(bound);
  return out;
}

}  // namespace lrcavail
