#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrcavail/numeric.hpp"

namespace lrcavail {

enum class BoundKind { rate, distance, dimension };

std::string to_string(BoundKind kind);

/// A named bound value. `exact` is absent only for bounds that are
/// irrational by construction (the LP's log_q M).
struct BoundResult {
  std::string name;
  std::map<std::string, std::int64_t> params;
  std::optional<Rational> exact;
  double value = 0.0;
  BoundKind kind = BoundKind::rate;
  std::map<std::string, Rational> diagnostics;
};

// ---- rate bounds ---------------------------------------------------------

/// 1 / prod_{j=1..t} (1 + 1/(j r)); valid for every (n,k,r,t) availability code.
BoundResult rate_tamo_barg(std::int64_t r, std::int64_t t);

/// r/(r+2) for t = 2, r^2/(r+1)^2 for t = 3, rate_tamo_barg above.
/// Throws std::invalid_argument for t < 2.
BoundResult rate_prime(std::int64_t r, std::int64_t t);

/// Greedy-covering bound for strict t = 3 codes with a connected Tanner
/// graph. Diagnostics: m, L1_prime, L2, L1.
/// Throws std::invalid_argument unless (r+1) divides 3n.
BoundResult rate_greedy_t3(std::int64_t n, std::int64_t r);

/// One step of R(r,t) = 1 - t/(r+1) + t/(r+1) R(t-1, r+1) with a supplied
/// bound on R(t-1, r+1).
Rational rate_transpose_step(std::int64_t r, std::int64_t t, const Rational& inner_bound);

/// rate_transpose_step fed with rate_tamo_barg(t-1, r+1).
BoundResult rate_transpose(std::int64_t r, std::int64_t t);

/// Achievable reference rate r/(r+t).
BoundResult rate_wzl_achievable(std::int64_t r, std::int64_t t);

// ---- GHW profiles --------------------------------------------------------

enum class ProfileVariant { simple, m_delta, linear };

std::string to_string(ProfileVariant variant);

/// Upper bounds e_1..e_b on the dual generalized Hamming weights.
struct GHWBoundProfile {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;
  ProfileVariant variant = ProfileVariant::simple;
  std::int64_t M = 0;
  std::int64_t delta = 0;
  std::vector<std::int64_t> e;  // e[0] is e_1
  std::vector<std::int64_t> J;  // m_delta only; J[0] is J_1 = 0

  std::size_t b() const { return e.size(); }
};

/// b = ceil(n (1 - R'(r,t))), e_b = n, e_{i-1} = min(e_i, e_i - ceil(2 e_i / i) + r + 1).
GHWBoundProfile ghw_profile_simple(std::int64_t n, std::int64_t r, std::int64_t t);

/// e_i(M, delta) with the four-case J_i rule; e_1 = r+1, values clamped at n.
GHWBoundProfile ghw_profile_m_delta(std::int64_t n, std::int64_t r, std::int64_t M,
                                    std::int64_t delta, std::int64_t t = 0);

/// e_i = min(i r + 1, n) for i = 1..b.
GHWBoundProfile ghw_profile_linear(std::int64_t n, std::int64_t r, std::int64_t t,
                                   std::int64_t b);

// ---- distance bounds -----------------------------------------------------

/// n - sum_{i=0..t} floor((k-1)/r^i), clamped below at 1.
BoundResult dmin_tamo_barg(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t);

/// n - k + 2 - ceil((t(k-1)+1)/(t(r-1)+1)), clamped below at 1.
BoundResult dmin_wang(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t);

using DistanceBound =
    std::function<BoundResult(std::int64_t, std::int64_t, std::int64_t, std::int64_t)>;

/// min over S = {i : e_i - i < k} of inner(n - e_i, k + i - e_i, r, t).
/// Diagnostics: S_size, argmin_i (absent when S is empty and the inner bound
/// at (n, k) is returned).
BoundResult dmin_shortening(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t,
                            const GHWBoundProfile& profile,
                            const DistanceBound& inner = dmin_tamo_barg);

BoundResult dmin_m_delta(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t,
                         std::int64_t M, std::int64_t delta);

/// Maximum of dmin_m_delta over ceil(n(1-R')) <= M <= n-k, 0 <= delta <= n-k.
/// Returns nullopt when that grid is empty.
std::optional<BoundResult> dmin_m_delta_max(std::int64_t n, std::int64_t k, std::int64_t r,
                                            std::int64_t t);

// ---- dimension bounds ----------------------------------------------------

/// Largest dimension of a q-ary linear [n, k, d] code, or a surrogate for it.
using DimensionOracle = std::function<std::int64_t(unsigned q, std::int64_t n, std::int64_t d)>;

/// Largest k with sum_{i<k} ceil(d / q^i) <= n; 0 when d > n.
std::int64_t k_opt_griesmer(unsigned q, std::int64_t n, std::int64_t d);

/// Largest k* <= n with k* <= A + k_opt(n - B, d) for every x in
/// [1, ceil((k*-1)/((r-1)t+1))], s = sum(y) in [x, t x] with A = (r-1)s + x < k*,
/// B = r s + x.
BoundResult dim_huang(std::int64_t n, std::int64_t d, std::int64_t r, std::int64_t t,
                      unsigned q = 2, const DimensionOracle& k_opt = k_opt_griesmer);

}  // namespace lrcavail
