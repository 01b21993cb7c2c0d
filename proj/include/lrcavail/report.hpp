#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrcavail/availability_code.hpp"
#include "lrcavail/bounds.hpp"
#include "lrcavail/lp_bound.hpp"
#include "lrcavail/verification.hpp"

namespace lrcavail {

using Json = nlohmann::ordered_json;

Json to_json(const BoundResult& bound);
Json to_json(const GHWBoundProfile& profile);
Json to_json(const StrictCheckReport& report);
Json to_json(const AvailabilityReport& report);
Json to_json(const GreedyTrace& trace);
Json to_json(const LPSolution& solution);

/// Code metadata written next to a serialized parity-check matrix.
Json code_sidecar(const AvailabilityCode& code);

// ---- figure data -----------------------------------------------------------

enum class FigureId { rate3, rate4, dmin3, dmin3_mdelta, lp3 };

std::string to_string(FigureId id);
/// Throws std::invalid_argument on an unknown name.
FigureId parse_figure_id(const std::string& name);

inline constexpr std::int64_t kLpFigureDefaultMaxR = 6;

struct FigureSpec {
  FigureId id = FigureId::rate3;
  std::int64_t r_min = 1;
  std::int64_t r_max = 1;
  /// Lifts the lp3 row budget (r <= kLpFigureDefaultMaxR).
  bool budget = false;
};

/// Default r-range per figure.
FigureSpec default_figure_spec(FigureId id);

struct FigureTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// One row per r, ascending. Every bound column `c` is followed by `c_exact`
/// (p/q, empty when the value has no exact form); the last column is
/// `status`, "ok" or the reason the row was skipped.
/// Throws std::invalid_argument for r_min < 1 or r_max < r_min.
FigureTable figure_table(const FigureSpec& spec);

std::string to_csv(const FigureTable& table);

inline std::string emit_figure_data(const FigureSpec& spec) { return to_csv(figure_table(spec)); }

/// Shortest decimal with 12 significant digits, '.' separator.
std::string format_value(double value);

}  // namespace lrcavail
