#include "lrcavail/report.hpp"

#include <cstdio>
#include <functional>
#include <stdexcept>

#include "lrcavail/combinatorics.hpp"

namespace lrcavail {

Json to_json(const BoundResult& bound) {
  Json params = Json::object();
  for (const auto& [k, v] : bound.params) params[k] = v;
  Json out;
  out["name"] = bound.name;
  out["params"] = params;
  out["value_exact"] = bound.exact ? Json(to_string(*bound.exact)) : Json(nullptr);
  out["value_float"] = bound.value;
  out["kind"] = to_string(bound.kind);
  if (!bound.diagnostics.empty()) {
    Json diag = Json::object();
    for (const auto& [k, v] : bound.diagnostics) diag[k] = to_string(v);
    out["diagnostics"] = diag;
  }
  return out;
}

Json to_json(const GHWBoundProfile& profile) {
  Json out;
  out["n"] = profile.n;
  out["r"] = profile.r;
  out["t"] = profile.t;
  out["variant"] = to_string(profile.variant);
  if (profile.variant == ProfileVariant::m_delta) {
    out["M"] = profile.M;
    out["delta"] = profile.delta;
    out["J"] = profile.J;
  }
  out["e"] = profile.e;
  return out;
}

Json to_json(const StrictCheckReport& report) {
  Json pairs = Json::array();
  for (const auto& [a, b] : report.intersection_violations) pairs.push_back({a, b});
  Json out;
  out["pass"] = report.pass;
  out["balance_ok"] = report.balance_ok;
  out["row_weight_violations"] = report.row_weight_violations;
  out["column_weight_violations"] = report.column_weight_violations;
  out["intersection_violations"] = pairs;
  return out;
}

Json to_json(const AvailabilityReport& report) {
  Json failing = Json::array();
  for (std::size_t c = 0; c < report.column_ok.size(); ++c) {
    if (!report.column_ok[c]) failing.push_back(c);
  }
  Json out;
  out["pass"] = report.pass;
  out["failing_columns"] = failing;
  out["witnesses"] = report.witnesses;
  return out;
}

Json to_json(const GreedyTrace& trace) {
  Json out;
  out["sigma"] = trace.sigma;
  out["g"] = trace.g;
  out["final_bound"] = trace.final_bound;
  out["disconnected"] = trace.disconnected;
  out["stall"] = trace.stall;
  out["component_starts"] = trace.component_starts;
  return out;
}

Json to_json(const LPSolution& solution) {
  Json out;
  out["status"] = to_string(solution.status);
  out["mode"] = solution.mode == SolverMode::exact ? "exact" : "float";
  out["iterations"] = solution.iterations;
  if (solution.status != LPStatus::optimal) return out;
  out["M_exact"] = solution.exact_value ? Json(to_string(*solution.exact_value)) : Json(nullptr);
  out["M"] = solution.value;
  Json a = Json::array();
  if (!solution.exact_x.empty()) {
    for (const auto& v : solution.exact_x) a.push_back(to_string(v));
  } else {
    for (double v : solution.x) a.push_back(v);
  }
  out["A"] = a;
  return out;
}

Json code_sidecar(const AvailabilityCode& code) {
  Json params = Json::object();
  for (const auto& [k, v] : code.parameters()) params[k] = v;
  Json out;
  out["n"] = code.n();
  out["m"] = code.m();
  out["r"] = code.r();
  out["t"] = code.t();
  out["kind"] = to_string(code.kind());
  out["k"] = code.k();
  out["construction"] = code.construction();
  out["parameters"] = params;
  return out;
}

// ---- figures ---------------------------------------------------------------

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::rate3:
      return "rate3";
    case FigureId::rate4:
      return "rate4";
    case FigureId::dmin3:
      return "dmin3";
    case FigureId::dmin3_mdelta:
      return "dmin3_mdelta";
    case FigureId::lp3:
      return "lp3";
  }
  return "unknown";
}

FigureId parse_figure_id(const std::string& name) {
  for (auto id : {FigureId::rate3, FigureId::rate4, FigureId::dmin3, FigureId::dmin3_mdelta,
                  FigureId::lp3}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown figure id: " + name);
}

FigureSpec default_figure_spec(FigureId id) {
  switch (id) {
    case FigureId::rate3:
    case FigureId::rate4:
      return {id, 1, 20, false};
    case FigureId::dmin3:
    case FigureId::dmin3_mdelta:
      return {id, 3, 10, false};
    case FigureId::lp3:
      return {id, 3, kLpFigureDefaultMaxR, false};
  }
  return {id, 1, 1, false};
}

std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

struct Cell {
  std::optional<double> value;
  std::optional<Rational> exact;
};

Cell cell(const BoundResult& b) { return {b.value, b.exact}; }

Cell rational_cell(const Rational& v) { return {to_double(v), v}; }

struct FigureLayout {
  std::vector<std::string> columns;
  std::function<std::vector<Cell>(std::int64_t)> row;
};

std::int64_t tetrahedral_n(std::int64_t r) { return (r + 3) * (r + 2) * (r + 1) / 6; }

FigureLayout layout(const FigureSpec& spec) {
  switch (spec.id) {
    case FigureId::rate3:
      return {{"greedy_g115", "tamo_barg", "song_yue", "achievable_wzl"}, [](std::int64_t r) {
                return std::vector<Cell>{cell(rate_greedy_t3(tetrahedral_n(r), r)),
                                         cell(rate_tamo_barg(r, 3)), cell(rate_prime(r, 3)),
                                         cell(rate_wzl_achievable(r, 3))};
              }};
    case FigureId::rate4:
      return {{"transpose", "tamo_barg", "achievable_wzl"}, [](std::int64_t r) {
                return std::vector<Cell>{cell(rate_transpose(r, 4)), cell(rate_tamo_barg(r, 4)),
                                         cell(rate_wzl_achievable(r, 4))};
              }};
    case FigureId::dmin3:
    case FigureId::dmin3_mdelta: {
      std::vector<std::string> cols{"shortening_cor1", "tamo_barg_dmin", "wang_dmin"};
      const bool with_m_delta = spec.id == FigureId::dmin3_mdelta;
      if (with_m_delta) {
        cols.push_back("m_delta");
        cols.push_back("m_delta_max");
      }
      return {cols, [with_m_delta](std::int64_t r) {
                const std::int64_t n = tetrahedral_n(r);
                const std::int64_t k = r * (r + 1) * (r + 2) / 6;
                std::vector<Cell> out{
                    cell(dmin_shortening(n, k, r, 3, ghw_profile_simple(n, r, 3))),
                    cell(dmin_tamo_barg(n, k, r, 3)), cell(dmin_wang(n, k, r, 3))};
                if (with_m_delta) {
                  out.push_back(cell(dmin_m_delta(n, k, r, 3, n - k, 3)));
                  const auto best = dmin_m_delta_max(n, k, r, 3);
                  out.push_back(best ? cell(*best) : Cell{});
                }
                return out;
              }};
    }
    case FigureId::lp3:
      return {{"lp_bound_rate", "tamo_barg", "huang_griesmer"}, [](std::int64_t r) {
                const std::int64_t n = (r + 1) * (r + 1);
                const auto lp = lp_dimension_bound(2, n, r, 3);
                if (lp.status != LPStatus::optimal) {
                  throw std::runtime_error("lp " + to_string(lp.status));
                }
                const auto huang = dim_huang(n, 4, r, 3);
                return std::vector<Cell>{Cell{lp.bound->value / static_cast<double>(n), {}},
                                         cell(rate_tamo_barg(r, 3)),
                                         rational_cell(*huang.exact / n)};
              }};
  }
  throw std::invalid_argument("unknown figure");
}

}  // namespace

FigureTable figure_table(const FigureSpec& spec) {
  if (spec.r_min < 1 || spec.r_max < spec.r_min) {
    throw std::invalid_argument("figure: need 1 <= r_min <= r_max");
  }
  const FigureLayout lay = layout(spec);
  FigureTable table;
  table.header.push_back("r");
  for (const auto& c : lay.columns) {
    table.header.push_back(c);
    table.header.push_back(c + "_exact");
  }
  table.header.push_back("status");

  for (std::int64_t r = spec.r_min; r <= spec.r_max; ++r) {
    std::vector<std::string> row{std::to_string(r)};
    std::string status = "ok";
    std::vector<Cell> cells;
    if (spec.id == FigureId::lp3 && r > kLpFigureDefaultMaxR && !spec.budget) {
      status = "skipped_budget";
    } else {
      try {
        cells = lay.row(r);
      } catch (const BudgetExceeded&) {
        status = "skipped_budget";
      } catch (const std::exception&) {
        status = "skipped_error";
      }
    }
    cells.resize(lay.columns.size());
    for (const auto& c : cells) {
      row.push_back(c.value ? format_value(*c.value) : "");
      row.push_back(c.exact ? to_string(*c.exact) : "");
    }
    row.push_back(status);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_csv(const FigureTable& table) {
  auto join = [](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ',';
      line += cells[i];
    }
    return line + "\n";
  };
  std::string out = join(table.header);
  for (const auto& row : table.rows) out += join(row);
  return out;
}

}  // namespace lrcavail
