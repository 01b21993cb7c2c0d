#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrcavail/bounds.hpp"
#include "lrcavail/constructions.hpp"
#include "lrcavail/finite_field.hpp"
#include "lrcavail/lp_bound.hpp"
#include "lrcavail/matrix_io.hpp"
#include "lrcavail/report.hpp"
#include "lrcavail/verification.hpp"

namespace fs = std::filesystem;
using namespace lrcavail;

namespace {

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Relative output paths land in $LRCAVAIL_OUT_DIR when it is set.
fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("LRCAVAIL_OUT_DIR"); dir && *dir) return fs::path(dir) / p;
  }
  return p;
}

void emit_code(const AvailabilityCode& code, const std::string& out) {
  if (out.empty()) {
    std::cout << serialize_matrix(code.parity_check());
    return;
  }
  const fs::path path = resolve_output(out);
  write_matrix_file(path.string(), code.parity_check());
  std::ofstream side(path.string() + ".json");
  if (!side) throw std::runtime_error("cannot write " + path.string() + ".json");
  side << code_sidecar(code).dump(2) << "\n";
  Json j;
  j["code"] = code_sidecar(code);
  j["output"] = path.string();
  print_json(j);
}

struct RateArgs {
  std::int64_t r = 0, t = 0, n = 0;
  std::string method = "all";
};

int run_bounds_rate(const RateArgs& a) {
  Json list = Json::array();
  const auto want = [&](const std::string& m) { return a.method == "all" || a.method == m; };
  if (want("tamo_barg")) list.push_back(to_json(rate_tamo_barg(a.r, a.t)));
  if (want("song_yue") && a.t >= 2) list.push_back(to_json(rate_prime(a.r, a.t)));
  if (want("transpose") && a.t >= 2) list.push_back(to_json(rate_transpose(a.r, a.t)));
  if (want("greedy_t3")) {
    if (a.n > 0 && a.t == 3) {
      list.push_back(to_json(rate_greedy_t3(a.n, a.r)));
    } else if (a.method == "greedy_t3") {
      throw std::invalid_argument("greedy_t3 needs --n and --t 3");
    }
  }
  if (want("achievable_wzl")) list.push_back(to_json(rate_wzl_achievable(a.r, a.t)));
  if (list.empty()) throw std::invalid_argument("no rate bound applies to these parameters");
  print_json(Json{{"bounds", list}});
  return 0;
}

struct DminArgs {
  std::int64_t n = 0, k = 0, r = 0, t = 0, M = -1, delta = -1;
  std::string method = "all";
};

int run_bounds_dmin(const DminArgs& a) {
  Json list = Json::array();
  const auto want = [&](const std::string& m) { return a.method == "all" || a.method == m; };
  if (want("tamo_barg")) list.push_back(to_json(dmin_tamo_barg(a.n, a.k, a.r, a.t)));
  if (want("wang")) list.push_back(to_json(dmin_wang(a.n, a.k, a.r, a.t)));
  if (want("shortening") && a.t >= 2) {
    list.push_back(to_json(dmin_shortening(a.n, a.k, a.r, a.t, ghw_profile_simple(a.n, a.r, a.t))));
  }
  if (want("m_delta")) {
    if (a.M >= 0 && a.delta >= 0) {
      list.push_back(to_json(dmin_m_delta(a.n, a.k, a.r, a.t, a.M, a.delta)));
    } else if (a.method == "m_delta") {
      throw std::invalid_argument("m_delta needs --M and --delta");
    }
  }
  if (want("m_delta_max") && a.t >= 2) {
    if (auto best = dmin_m_delta_max(a.n, a.k, a.r, a.t)) list.push_back(to_json(*best));
  }
  print_json(Json{{"bounds", list}});
  return 0;
}

struct LpArgs {
  unsigned q = 2;
  std::int64_t n = 0, r = 0, t = 0;
  bool floating = false, strengthen = false;
};

int run_bounds_lp(const LpArgs& a) {
  SolveOptions solve;
  solve.mode = a.floating ? SolverMode::floating : SolverMode::exact;
  const auto res = lp_dimension_bound(a.q, a.n, a.r, a.t, {a.strengthen}, solve);
  Json j;
  if (res.bound) j["bounds"] = Json::array({to_json(*res.bound)});
  j["lp"] = to_json(res.solution);
  if (res.status == LPStatus::infeasible) j["lp"]["note"] = "no code exists under relaxation";
  print_json(j);
  return res.status == LPStatus::iteration_limit ? 1 : 0;
}

struct AnalyzeArgs {
  std::string in;
  std::size_t r = 0, t = 0;
  bool dmin = false, greedy = false;
  std::size_t ghw = 0;
  std::size_t start = 0;
  std::optional<std::uint64_t> seed;
};

int run_analyze(const AnalyzeArgs& a) {
  BitMatrix h = read_matrix_file(a.in);
  std::size_t r = a.r;
  std::size_t t = a.t;
  if (r == 0) {
    for (std::size_t i = 0; i < h.rows(); ++i) r = std::max(r, h.row_weight(i));
    r = r > 0 ? r - 1 : 0;
  }
  if (t == 0 && h.cols() > 0) {
    t = h.column_weight(0);
    for (std::size_t c = 1; c < h.cols(); ++c) t = std::min(t, h.column_weight(c));
  }
  const AvailabilityCode code(std::move(h), r, t);
  Json out;
  out["code"] = {{"n", code.n()}, {"m", code.m()}, {"rank", code.rank()}, {"k", code.k()},
                 {"r", r},        {"t", t},        {"rate", to_string(code.rate())}};
  if (a.dmin) {
    const auto d = min_distance_bruteforce(code);
    out["code"]["dmin"] = d ? Json(*d) : Json(nullptr);
  }
  if (a.ghw > 0) {
    Json ghw = Json::array();
    for (std::size_t i = 1; i <= a.ghw; ++i) {
      const auto g = dual_ghw_bruteforce(code, i);
      ghw.push_back({{"i", g.i}, {"d_dual", g.d_i_dual}});
    }
    out["code"]["dual_ghw"] = ghw;
  }
  if (a.greedy) {
    GreedyOptions opts;
    opts.seed_coordinate = a.start;
    if (a.seed) {
      opts.tiebreak = TieBreak::random;
      opts.rng_seed = *a.seed;
    }
    out["trace"] = to_json(greedy_cover(code, opts));
  }
  print_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and bound erasure codes with availability"};
  app.require_subcommand(1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate rate, distance or LP bounds");
  bounds->require_subcommand(1);
  RateArgs rate;
  auto* rate_cmd = bounds->add_subcommand("rate", "Rate bounds");
  rate_cmd->add_option("--r", rate.r)->required()->check(CLI::PositiveNumber);
  rate_cmd->add_option("--t", rate.t)->required()->check(CLI::PositiveNumber);
  rate_cmd->add_option("--n", rate.n, "length (greedy_t3 only)");
  rate_cmd->add_option("--method", rate.method)
      ->check(CLI::IsMember({"all", "tamo_barg", "song_yue", "transpose", "greedy_t3",
                             "achievable_wzl"}));
  DminArgs dmin;
  auto* dmin_cmd = bounds->add_subcommand("dmin", "Minimum-distance bounds");
  dmin_cmd->add_option("--n", dmin.n)->required()->check(CLI::PositiveNumber);
  dmin_cmd->add_option("--k", dmin.k)->required()->check(CLI::PositiveNumber);
  dmin_cmd->add_option("--r", dmin.r)->required()->check(CLI::PositiveNumber);
  dmin_cmd->add_option("--t", dmin.t)->required()->check(CLI::PositiveNumber);
  dmin_cmd->add_option("--M", dmin.M);
  dmin_cmd->add_option("--delta", dmin.delta);
  dmin_cmd->add_option("--method", dmin.method)
      ->check(CLI::IsMember({"all", "tamo_barg", "wang", "shortening", "m_delta", "m_delta_max"}));
  LpArgs lp;
  auto* lp_cmd = bounds->add_subcommand("lp", "Weight-distribution LP dimension bound");
  lp_cmd->add_option("--q", lp.q)->default_val(2);
  lp_cmd->add_option("--n", lp.n)->required()->check(CLI::PositiveNumber);
  lp_cmd->add_option("--r", lp.r)->required()->check(CLI::PositiveNumber);
  lp_cmd->add_option("--t", lp.t)->required()->check(CLI::PositiveNumber);
  lp_cmd->add_flag("--float", lp.floating);
  lp_cmd->add_flag("--strengthen", lp.strengthen);
  std::int64_t dim_n = 0, dim_d = 0, dim_r = 0, dim_t = 0;
  unsigned dim_q = 2;
  auto* dim_cmd = bounds->add_subcommand("dim", "Dimension bound via a Griesmer oracle");
  dim_cmd->add_option("--n", dim_n)->required()->check(CLI::PositiveNumber);
  dim_cmd->add_option("--d", dim_d)->required()->check(CLI::PositiveNumber);
  dim_cmd->add_option("--r", dim_r)->required()->check(CLI::PositiveNumber);
  dim_cmd->add_option("--t", dim_t)->required()->check(CLI::PositiveNumber);
  dim_cmd->add_option("--q", dim_q)->default_val(2);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a parity-check matrix");
  construct->require_subcommand(1);
  std::string out_path;
  std::size_t part_r = 0, part_g = 0, part_t = 0;
  std::vector<std::size_t> part_choice;
  auto* part_cmd = construct->add_subcommand("partition", "Recursive orthogonal-partition code");
  part_cmd->add_option("--r", part_r)->required()->check(CLI::PositiveNumber);
  part_cmd->add_option("--g", part_g)->required()->check(CLI::PositiveNumber);
  part_cmd->add_option("--t", part_t)->required()->check(CLI::PositiveNumber);
  part_cmd->add_option("--choice", part_choice, "0-based partition indices")->delimiter(',');
  part_cmd->add_option("-o,--out", out_path);
  unsigned fun_q = 2;
  std::size_t fun_t = 0;
  auto* fun_cmd =
      construct->add_subcommand("functional", "Line code over F_q^2 with projective functionals");
  fun_cmd->add_option("--q", fun_q)->required();
  fun_cmd->add_option("--t", fun_t)->required()->check(CLI::PositiveNumber);
  fun_cmd->add_option("-o,--out", out_path);
  std::size_t prod_r = 0, prod_t = 0;
  auto* prod_cmd = construct->add_subcommand("product", "Product code on the (r+1)^t grid");
  prod_cmd->add_option("--r", prod_r)->required()->check(CLI::PositiveNumber);
  prod_cmd->add_option("--t", prod_t)->required()->check(CLI::PositiveNumber);
  prod_cmd->add_option("-o,--out", out_path);

  // verify
  std::string verify_in;
  std::size_t verify_r = 0, verify_t = 0;
  bool verify_strict = false;
  auto* verify = app.add_subcommand("verify", "Check availability of a parity-check matrix");
  verify->add_option("--in", verify_in)->required()->check(CLI::ExistingFile);
  verify->add_option("--r", verify_r)->required()->check(CLI::PositiveNumber);
  verify->add_option("--t", verify_t)->required()->check(CLI::PositiveNumber);
  verify->add_flag("--strict", verify_strict);

  // analyze
  AnalyzeArgs analyze;
  std::uint64_t seed_value = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Rank, distance, greedy trace, dual GHWs");
  analyze_cmd->add_option("--in", analyze.in)->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--r", analyze.r, "locality (default: max row weight - 1)");
  analyze_cmd->add_option("--t", analyze.t, "availability (default: min column weight)");
  analyze_cmd->add_flag("--dmin", analyze.dmin);
  analyze_cmd->add_flag("--greedy", analyze.greedy);
  analyze_cmd->add_option("--ghw", analyze.ghw, "dual GHWs d_1..d_i")->check(CLI::Range(1, 3));
  analyze_cmd->add_option("--start", analyze.start, "0-based greedy seed coordinate");
  auto* seed_opt =
      analyze_cmd->add_option("--seed", seed_value, "random tie-breaking with this seed");

  // figure
  std::string figure_id;
  std::int64_t rmin = 0, rmax = 0;
  bool budget = false;
  auto* figure = app.add_subcommand("figure", "Emit figure data as CSV");
  figure->add_option("id", figure_id)
      ->required()
      ->check(CLI::IsMember({"rate3", "rate4", "dmin3", "dmin3_mdelta", "lp3"}));
  auto* rmin_opt = figure->add_option("--rmin", rmin)->check(CLI::PositiveNumber);
  auto* rmax_opt = figure->add_option("--rmax", rmax)->check(CLI::PositiveNumber);
  figure->add_flag("--budget", budget, "allow lp3 rows beyond the default r budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cerr, std::cerr);
    return e.get_exit_code() == 0 ? code : 2;
  }

  try {
    if (rate_cmd->parsed()) return run_bounds_rate(rate);
    if (dmin_cmd->parsed()) return run_bounds_dmin(dmin);
    if (lp_cmd->parsed()) return run_bounds_lp(lp);
    if (dim_cmd->parsed()) {
      print_json(Json{{"bounds", Json::array({to_json(dim_huang(dim_n, dim_d, dim_r, dim_t, dim_q))})}});
      return 0;
    }
    if (part_cmd->parsed()) {
      const auto family = build_partition_family(part_r, part_g);
      std::optional<std::vector<std::size_t>> choice;
      if (!part_choice.empty()) choice = part_choice;
      emit_code(partition_code(family, part_t, choice), out_path);
      return 0;
    }
    if (fun_cmd->parsed()) {
      const FiniteField field(fun_q);
      emit_code(functional_code(field, 2, 1, projective_functionals(field, fun_t)), out_path);
      return 0;
    }
    if (prod_cmd->parsed()) {
      emit_code(product_code(prod_r, prod_t), out_path);
      return 0;
    }
    if (verify->parsed()) {
      const BitMatrix h = read_matrix_file(verify_in);
      Json checks;
      if (verify_strict) {
        checks["strict"] = to_json(check_strict_availability(h, verify_r, verify_t));
      } else {
        checks["availability"] = to_json(check_availability(h, verify_r, verify_t));
      }
      print_json(Json{{"checks", checks}});
      return 0;
    }
    if (analyze_cmd->parsed()) {
      if (seed_opt->count() > 0) analyze.seed = seed_value;
      return run_analyze(analyze);
    }
    if (figure->parsed()) {
      FigureSpec spec = default_figure_spec(parse_figure_id(figure_id));
      if (rmin_opt->count() > 0) spec.r_min = rmin;
      if (rmax_opt->count() > 0) spec.r_max = rmax;
      spec.budget = budget;
      std::cout << emit_figure_data(spec);
      return 0;
    }
  } catch (const MatrixParseError& e) {
    // A malformed input file is a usage error.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
