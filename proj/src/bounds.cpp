#include "lrcavail/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace lrcavail {

namespace {

BoundResult make_result(std::string name, std::map<std::string, std::int64_t> params,
                        const Rational& value, BoundKind kind) {
  BoundResult out;
  out.name = std::move(name);
  out.params = std::move(params);
  out.exact = value;
  out.value = to_double(value);
  out.kind = kind;
  return out;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// prod_{j=1..count} (1 + 1/(j * step))
Rational harmonic_product(std::int64_t step, std::int64_t count) {
  Rational p = 1;
  for (std::int64_t j = 1; j <= count; ++j) p *= Rational(j * step + 1, j * step);
  return p;
}

std::int64_t to_int(const BigInt& v) { return v.convert_to<std::int64_t>(); }

Rational rate_prime_value(std::int64_t r, std::int64_t t) {
  if (t == 2) return Rational(r, r + 2);
  if (t == 3) return Rational(r * r, (r + 1) * (r + 1));
  return 1 / harmonic_product(r, t);
}

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t v = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (v > std::numeric_limits<std::int64_t>::max() / std::max<std::int64_t>(base, 1)) {
      return std::numeric_limits<std::int64_t>::max();
    }
    v *= base;
  }
  return v;
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::rate:
      return "rate";
    case BoundKind::distance:
      return "distance";
    case BoundKind::dimension:
      return "dimension";
  }
  return "unknown";
}

std::string to_string(ProfileVariant variant) {
  switch (variant) {
    case ProfileVariant::simple:
      return "simple";
    case ProfileVariant::m_delta:
      return "m_delta";
    case ProfileVariant::linear:
      return "linear";
  }
  return "unknown";
}

BoundResult rate_tamo_barg(std::int64_t r, std::int64_t t) {
  require(r >= 1 && t >= 1, "rate_tamo_barg: need r >= 1, t >= 1");
  return make_result("tamo_barg", {{"r", r}, {"t", t}}, 1 / harmonic_product(r, t),
                     BoundKind::rate);
}

BoundResult rate_prime(std::int64_t r, std::int64_t t) {
  require(r >= 1, "rate_prime: need r >= 1");
  require(t >= 2, "rate_prime: selector is undefined for t < 2");
  return make_result("rate_prime", {{"r", r}, {"t", t}}, rate_prime_value(r, t),
                     BoundKind::rate);
}

BoundResult rate_greedy_t3(std::int64_t n, std::int64_t r) {
  require(n >= 1 && r >= 1, "rate_greedy_t3: need n >= 1, r >= 1");
  require((3 * n) % (r + 1) == 0, "rate_greedy_t3: (r+1) must divide 3n");
  const std::int64_t m = 3 * n / (r + 1);
  const Rational inner =
      Rational((2 * r - 1) * m, 3 * (r + 2)) - Rational(1, r + 2) - 1;
  const std::int64_t l1_prime = to_int(ceil(inner));
  const std::int64_t l2 = floor_div(m - 3 - l1_prime, 2);
  const std::int64_t l1 = m - 3 - 2 * l2;
  const Rational value =
      1 - Rational(3 * (1 + l1 + l2), (r + 1) * (3 + l1 + 2 * l2));
  BoundResult out = make_result("greedy_t3", {{"n", n}, {"r", r}, {"t", 3}}, value,
                                BoundKind::rate);
  out.diagnostics = {{"m", m}, {"L1_prime", l1_prime}, {"L2", l2}, {"L1", l1}};
  return out;
}

Rational rate_transpose_step(std::int64_t r, std::int64_t t, const Rational& inner_bound) {
  require(r >= 1 && t >= 1, "rate_transpose_step: need r >= 1, t >= 1");
  require(inner_bound >= 0 && inner_bound <= 1, "rate_transpose_step: inner bound outside [0,1]");
  const Rational share(t, r + 1);
  return 1 - share + share * inner_bound;
}

BoundResult rate_transpose(std::int64_t r, std::int64_t t) {
  require(r >= 1 && t >= 2, "rate_transpose: need r >= 1, t >= 2");
  const Rational inner = 1 / harmonic_product(t - 1, r + 1);
  return make_result("transpose", {{"r", r}, {"t", t}}, rate_transpose_step(r, t, inner),
                     BoundKind::rate);
}

BoundResult rate_wzl_achievable(std::int64_t r, std::int64_t t) {
  require(r >= 0 && t >= 0 && r + t > 0, "rate_wzl_achievable: need r + t > 0");
  return make_result("achievable_wzl", {{"r", r}, {"t", t}}, Rational(r, r + t),
                     BoundKind::rate);
}

GHWBoundProfile ghw_profile_simple(std::int64_t n, std::int64_t r, std::int64_t t) {
  require(r >= 1 && t >= 2, "ghw_profile_simple: need r >= 1, t >= 2");
  require(n >= r + 1, "ghw_profile_simple: need n >= r + 1");
  const std::int64_t b = to_int(ceil(Rational(n) * (1 - rate_prime_value(r, t))));
  GHWBoundProfile p;
  p.n = n;
  p.r = r;
  p.t = t;
  p.variant = ProfileVariant::simple;
  p.e.assign(static_cast<std::size_t>(std::max<std::int64_t>(b, 1)), 0);
  p.e.back() = n;
  for (std::int64_t i = static_cast<std::int64_t>(p.e.size()); i >= 2; --i) {
    const std::int64_t ei = p.e[i - 1];
    p.e[i - 2] = std::min(ei, ei - ceil_div(2 * ei, i) + r + 1);
  }
  return p;
}

GHWBoundProfile ghw_profile_m_delta(std::int64_t n, std::int64_t r, std::int64_t M,
                                    std::int64_t delta, std::int64_t t) {
  require(M >= 1 && delta >= 0 && r >= 1, "ghw_profile_m_delta: need M >= 1, delta >= 0, r >= 1");
  require(n >= r + 1, "ghw_profile_m_delta: need n >= r + 1");
  GHWBoundProfile p;
  p.n = n;
  p.r = r;
  p.t = t;
  p.variant = ProfileVariant::m_delta;
  p.M = M;
  p.delta = delta;
  p.e.push_back(r + 1);
  p.J.push_back(0);
  for (std::int64_t i = 2; i <= M; ++i) {
    const std::int64_t prev = p.e.back();
    const std::int64_t free_coords = n - prev;
    const std::int64_t remaining = M - i + 1;
    const std::int64_t j1 = r + 1 - floor_div(delta * free_coords, remaining);
    const std::int64_t j2 = ceil_div(2 * prev - (i - 1) - (i - 1) * (r + 1), remaining);
    const std::int64_t floor_term = (r + 1 - p.J.back() >= 2) ? 1 : 0;
    std::int64_t j = free_coords >= M ? std::max({j1, j2, floor_term}) : std::max(j1, floor_term);
    // A picked row cannot contribute fewer than zero new coordinates.
    j = std::min(j, r + 1);
    p.J.push_back(j);
    p.e.push_back(std::min(n, prev + r + 1 - j));
  }
  return p;
}

GHWBoundProfile ghw_profile_linear(std::int64_t n, std::int64_t r, std::int64_t t,
                                   std::int64_t b) {
  require(b >= 1 && r >= 1, "ghw_profile_linear: need b >= 1, r >= 1");
  GHWBoundProfile p;
  p.n = n;
  p.r = r;
  p.t = t;
  p.variant = ProfileVariant::linear;
  for (std::int64_t i = 1; i <= b; ++i) p.e.push_back(std::min(n, i * r + 1));
  return p;
}

BoundResult dmin_tamo_barg(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t) {
  require(k >= 1 && k <= n && r >= 1 && t >= 0, "dmin_tamo_barg: need 1 <= k <= n, r >= 1");
  std::int64_t sum = 0;
  std::int64_t power = 1;
  for (std::int64_t i = 0; i <= t; ++i) {
    sum += (k - 1) / power;
    if (power > (k - 1)) break;  // remaining terms vanish
    power *= r;
  }
  const std::int64_t value = std::max<std::int64_t>(1, n - sum);
  return make_result("tamo_barg_dmin", {{"n", n}, {"k", k}, {"r", r}, {"t", t}}, value,
                     BoundKind::distance);
}

BoundResult dmin_wang(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t) {
  require(k >= 1 && k <= n && r >= 1 && t >= 1, "dmin_wang: need 1 <= k <= n, r >= 1, t >= 1");
  const std::int64_t value =
      std::max<std::int64_t>(1, n - k + 2 - ceil_div(t * (k - 1) + 1, t * (r - 1) + 1));
  return make_result("wang_dmin", {{"n", n}, {"k", k}, {"r", r}, {"t", t}}, value,
                     BoundKind::distance);
}

BoundResult dmin_shortening(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t,
                            const GHWBoundProfile& profile, const DistanceBound& inner) {
  require(profile.n == n && profile.r == r && (profile.t == 0 || profile.t == t),
          "dmin_shortening: profile parameters do not match (n, r, t)");
  std::optional<std::int64_t> best;
  std::int64_t argmin = 0;
  std::int64_t s_size = 0;
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(profile.b()); ++i) {
    const std::int64_t ei = profile.e[i - 1];
    if (ei - i >= k) continue;
    ++s_size;
    const std::int64_t shortened_k = k + i - ei;
    const std::int64_t shortened_n = n - ei;
    if (shortened_k > shortened_n) continue;  // i > n - k: no i-dim subspace of the dual
    const auto v = inner(shortened_n, shortened_k, r, t);
    const std::int64_t value = to_int(boost::multiprecision::numerator(*v.exact));
    if (!best || value < *best) {
      best = value;
      argmin = i;
    }
  }
  std::map<std::string, std::int64_t> params{{"n", n}, {"k", k}, {"r", r}, {"t", t}};
  std::string name = "shortening_" + to_string(profile.variant);
  if (profile.variant == ProfileVariant::m_delta) {
    params["M"] = profile.M;
    params["delta"] = profile.delta;
  }
  BoundResult out;
  if (best) {
    out = make_result(name, params, std::max<std::int64_t>(1, *best), BoundKind::distance);
    out.diagnostics["argmin_i"] = argmin;
  } else {
    const auto fallback = inner(n, k, r, t);
    out = make_result(name, params, *fallback.exact, BoundKind::distance);
  }
  out.diagnostics["S_size"] = s_size;
  return out;
}

BoundResult dmin_m_delta(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t,
                         std::int64_t M, std::int64_t delta) {
  return dmin_shortening(n, k, r, t, ghw_profile_m_delta(n, r, M, delta, t));
}

std::optional<BoundResult> dmin_m_delta_max(std::int64_t n, std::int64_t k, std::int64_t r,
                                            std::int64_t t) {
  require(k >= 1 && k < n, "dmin_m_delta_max: need 1 <= k < n");
  const std::int64_t lo =
      std::max<std::int64_t>(1, to_int(ceil(Rational(n) * (1 - rate_prime_value(r, t)))));
  const std::int64_t hi = n - k;
  if (lo > hi) return std::nullopt;
  std::optional<BoundResult> best;
  for (std::int64_t M = lo; M <= hi; ++M) {
    for (std::int64_t delta = 0; delta <= hi; ++delta) {
      auto v = dmin_m_delta(n, k, r, t, M, delta);
      if (!best || *v.exact > *best->exact) {
        best = v;
        best->diagnostics["argmax_M"] = M;
        best->diagnostics["argmax_delta"] = delta;
      }
    }
  }
  best->name = "m_delta_max";
  best->params = {{"n", n}, {"k", k}, {"r", r}, {"t", t}};
  return best;
}

std::int64_t k_opt_griesmer(unsigned q, std::int64_t n, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("k_opt_griesmer: need d >= 1");
  if (n < 0 || d > n) return 0;
  std::int64_t k = 0;
  std::int64_t used = 0;
  std::int64_t power = 1;
  while (true) {
    const std::int64_t term = ceil_div(d, power);
    if (used + term > n) break;
    used += term;
    ++k;
    if (power < d) power = ipow(q, k);
  }
  return k;
}

BoundResult dim_huang(std::int64_t n, std::int64_t d, std::int64_t r, std::int64_t t, unsigned q,
                      const DimensionOracle& k_opt) {
  require(d >= 1 && n >= 1 && r >= 1 && t >= 1, "dim_huang: need n, d, r, t >= 1");
  const std::int64_t group = (r - 1) * t + 1;
  std::int64_t answer = 0;
  for (std::int64_t cand = n; cand >= 0; --cand) {
    std::int64_t limit = std::numeric_limits<std::int64_t>::max();
    const std::int64_t x_max = cand >= 1 ? ceil_div(cand - 1, group) : 0;
    for (std::int64_t x = 1; x <= x_max; ++x) {
      for (std::int64_t s = x; s <= t * x; ++s) {
        const std::int64_t a = (r - 1) * s + x;
        if (a >= cand) continue;
        const std::int64_t b = r * s + x;
        if (b > n) continue;
        limit = std::min(limit, a + k_opt(q, n - b, d));
      }
    }
    if (cand <= limit) {
      answer = cand;
      break;
    }
  }
  return make_result("huang", {{"n", n}, {"d", d}, {"r", r}, {"t", t}, {"q", q}}, answer,
                     BoundKind::dimension);
}

}  // namespace lrcavail
