#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrcavail/availability_code.hpp"

namespace lrcavail {

struct StrictCheckReport {
  bool pass = false;
  std::vector<std::size_t> row_weight_violations;     // rows with weight != r+1
  std::vector<std::size_t> column_weight_violations;  // columns with weight != t
  std::vector<std::pair<std::size_t, std::size_t>> intersection_violations;  // row pairs sharing >= 2
  bool balance_ok = false;                            // m(r+1) == n t
};

StrictCheckReport check_strict_availability(const BitMatrix& h, std::size_t r, std::size_t t);

struct AvailabilityReport {
  bool pass = false;
  std::vector<bool> column_ok;
  /// For each column that passes, the rows of one witnessing repair set.
  std::vector<std::vector<std::size_t>> witnesses;
};

/// For every column i, searches the rows of weight <= r+1 through i for t of
/// them whose supports pairwise meet exactly in {i}.
AvailabilityReport check_availability(const BitMatrix& h_des, std::size_t r, std::size_t t);

/// Minimum nonzero codeword weight; nullopt for the zero code (k = 0).
std::optional<std::size_t> min_distance_bruteforce(const AvailabilityCode& code);

inline constexpr std::size_t kMaxGhwDualDimension = 16;
inline constexpr std::size_t kMaxGhwOrder = 3;

struct GHWResult {
  std::size_t i = 0;
  std::size_t d_i_dual = 0;
};

/// i-th generalized Hamming weight of the dual code (the row space of H).
/// Throws BudgetExceeded when dim(dual) > 16 or i > 3, and
/// std::invalid_argument when i is 0 or exceeds dim(dual).
GHWResult dual_ghw_bruteforce(const AvailabilityCode& code, std::size_t i);

enum class TieBreak { deterministic, random };

struct GreedyOptions {
  std::size_t seed_coordinate = 0;
  TieBreak tiebreak = TieBreak::deterministic;
  std::uint64_t rng_seed = 0;
};

struct GreedyTrace {
  std::vector<std::size_t> sigma;  // chosen coordinates in order (0-based)
  std::vector<std::size_t> g;      // rows newly added to P at each step
  std::size_t final_bound = 0;     // n - |S|
  bool disconnected = false;       // restarted on a fresh Tanner-graph component
  bool stall = false;              // a zero-score coordinate had to be taken
  std::vector<std::size_t> component_starts;  // indices into sigma where a component begins
};

/// Greedy covering: repeatedly picks the coordinate maximizing
/// |D_j| * [|D_j| <= 2], where D_j are the already-covered rows through j,
/// until every row of H is covered. k <= n - |S| at the end.
GreedyTrace greedy_cover(const AvailabilityCode& code, const GreedyOptions& options = {});

}  // namespace lrcavail
