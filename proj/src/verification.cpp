#include "lrcavail/verification.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace lrcavail {

StrictCheckReport check_strict_availability(const BitMatrix& h, std::size_t r, std::size_t t) {
  StrictCheckReport report;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  report.balance_ok = m * (r + 1) == n * t;

  for (std::size_t i = 0; i < m; ++i) {
    if (h.row_weight(i) != r + 1) report.row_weight_violations.push_back(i);
  }
  std::vector<std::vector<std::size_t>> rows_through(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (auto c : h.row_support(i)) rows_through[c].push_back(i);
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (rows_through[c].size() != t) report.column_weight_violations.push_back(c);
  }

  std::vector<std::size_t> shared(m, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < m; ++i) {
    touched.clear();
    for (auto c : h.row_support(i)) {
      for (auto j : rows_through[c]) {
        if (j <= i) continue;
        if (shared[j]++ == 0) touched.push_back(j);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto j : touched) {
      if (shared[j] >= 2) report.intersection_violations.emplace_back(i, j);
      shared[j] = 0;
    }
  }

  report.pass = report.balance_ok && report.row_weight_violations.empty() &&
                report.column_weight_violations.empty() &&
                report.intersection_violations.empty();
  return report;
}

namespace {

std::size_t intersection_size(const BitMatrix& h, std::size_t a, std::size_t b) {
  auto ra = h.row(a);
  auto rb = h.row(b);
  std::size_t total = 0;
  for (std::size_t w = 0; w < ra.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(ra[w] & rb[w]));
  }
  return total;
}

// Branch and bound for a t-clique in the compatibility graph of candidate rows.
bool find_repair_set(const std::vector<std::vector<bool>>& compatible, std::size_t t,
                     std::size_t start, std::vector<std::size_t>& chosen) {
  if (chosen.size() == t) return true;
  const std::size_t count = compatible.size();
  for (std::size_t c = start; c < count; ++c) {
    if (chosen.size() + (count - c) < t) return false;
    bool ok = true;
    for (auto prev : chosen) ok = ok && compatible[prev][c];
    if (!ok) continue;
    chosen.push_back(c);
    if (find_repair_set(compatible, t, c + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

AvailabilityReport check_availability(const BitMatrix& h_des, std::size_t r, std::size_t t) {
  const std::size_t n = h_des.cols();
  AvailabilityReport report;
  report.column_ok.assign(n, false);
  report.witnesses.assign(n, {});

  std::vector<std::vector<std::size_t>> rows_through(n);
  for (std::size_t i = 0; i < h_des.rows(); ++i) {
    if (h_des.row_weight(i) > r + 1) continue;
    for (auto c : h_des.row_support(i)) rows_through[c].push_back(i);
  }

  for (std::size_t c = 0; c < n; ++c) {
    // Identical rows can never both be in a repair set; keep one copy.
    std::vector<std::size_t> candidates;
    std::set<std::vector<std::size_t>> seen;
    for (auto row : rows_through[c]) {
      if (seen.insert(h_des.row_support(row)).second) candidates.push_back(row);
    }
    std::vector<std::vector<bool>> compatible(candidates.size(),
                                              std::vector<bool>(candidates.size(), false));
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        const bool ok = intersection_size(h_des, candidates[a], candidates[b]) == 1;
        compatible[a][b] = compatible[b][a] = ok;
      }
    }
    std::vector<std::size_t> chosen;
    if (find_repair_set(compatible, t, 0, chosen)) {
      report.column_ok[c] = true;
      for (auto idx : chosen) report.witnesses[c].push_back(candidates[idx]);
    }
  }
  report.pass = std::all_of(report.column_ok.begin(), report.column_ok.end(),
                            [](bool b) { return b; });
  return report;
}

std::optional<std::size_t> min_distance_bruteforce(const AvailabilityCode& code) {
  if (code.k() == 0) return std::nullopt;
  std::size_t best = code.n();
  for_each_codeword_weight(code.generator(), [&](std::size_t w) {
    if (w > 0 && w < best) best = w;
  });
  return best;
}

GHWResult dual_ghw_bruteforce(const AvailabilityCode& code, std::size_t i) {
  const BitMatrix basis = row_space_basis(code.parity_check());
  const std::size_t dim = basis.rows();
  if (dim > kMaxGhwDualDimension) {
    throw BudgetExceeded("dual_ghw_bruteforce: dual dimension " + std::to_string(dim) +
                         " exceeds " + std::to_string(kMaxGhwDualDimension));
  }
  if (i > kMaxGhwOrder) {
    throw BudgetExceeded("dual_ghw_bruteforce: order " + std::to_string(i) + " exceeds " +
                         std::to_string(kMaxGhwOrder));
  }
  if (i == 0 || i > dim) {
    throw std::invalid_argument("dual_ghw_bruteforce: order must be in [1, dim(dual)]");
  }

  const std::size_t words = basis.words_per_row();
  std::vector<BitMatrix::Word> pool;
  std::vector<std::size_t> weight;
  for_each_codeword(basis, [&](std::span<const BitMatrix::Word> w) {
    const std::size_t wt = popcount(w);
    if (wt == 0) return;
    pool.insert(pool.end(), w.begin(), w.end());
    weight.push_back(wt);
  });
  std::vector<std::size_t> order(weight.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });

  auto word_at = [&](std::size_t idx) {
    return std::span<const BitMatrix::Word>(pool.data() + order[idx] * words, words);
  };

  std::size_t best = code.n() + 1;
  std::vector<std::vector<BitMatrix::Word>> span;  // all combinations of chosen vectors
  std::vector<BitMatrix::Word> empty(words, 0);
  span.push_back(empty);

  // Vectors are taken in increasing index order; every i-subspace has a basis
  // reachable this way, and the union support only grows along a branch.
  auto search = [&](auto&& self, std::size_t depth, std::size_t start,
                    const std::vector<BitMatrix::Word>& uni) -> void {
    for (std::size_t idx = start; idx < order.size(); ++idx) {
      if (weight[order[idx]] >= best) break;
      auto v = word_at(idx);
      bool dependent = false;
      for (const auto& s : span) {
        if (std::equal(s.begin(), s.end(), v.begin())) {
          dependent = true;
          break;
        }
      }
      if (dependent) continue;
      std::vector<BitMatrix::Word> next(words);
      for (std::size_t w = 0; w < words; ++w) next[w] = uni[w] | v[w];
      const std::size_t support = popcount(next);
      if (support >= best) continue;
      if (depth + 1 == i) {
        best = support;
        continue;
      }
      const std::size_t old = span.size();
      for (std::size_t s = 0; s < old; ++s) {
        std::vector<BitMatrix::Word> combo(words);
        for (std::size_t w = 0; w < words; ++w) combo[w] = span[s][w] ^ v[w];
        span.push_back(std::move(combo));
      }
      self(self, depth + 1, idx + 1, next);
      span.resize(old);
    }
  };
  search(search, 0, 0, empty);
  return {i, best};
}

GreedyTrace greedy_cover(const AvailabilityCode& code, const GreedyOptions& options) {
  const BitMatrix& h = code.parity_check();
  const std::size_t n = h.cols();
  const std::size_t m = h.rows();
  if (options.seed_coordinate >= n) {
    throw std::invalid_argument("greedy_cover: seed coordinate out of range");
  }

  std::vector<std::vector<std::size_t>> rows_through(n);
  std::vector<std::vector<std::size_t>> support(m);
  for (std::size_t i = 0; i < m; ++i) {
    support[i] = h.row_support(i);
    for (auto c : support[i]) rows_through[c].push_back(i);
  }

  std::vector<bool> in_p(m, false);
  std::vector<bool> in_s(n, false);
  std::vector<std::size_t> covered_through(n, 0);  // |D_j|
  std::vector<std::size_t> uncovered_through(n);
  for (std::size_t c = 0; c < n; ++c) uncovered_through[c] = rows_through[c].size();
  std::size_t p_size = 0;
  std::mt19937_64 rng(options.rng_seed);

  GreedyTrace trace;
  auto take = [&](std::size_t coord) {
    in_s[coord] = true;
    trace.sigma.push_back(coord);
    std::size_t added = 0;
    for (auto row : rows_through[coord]) {
      if (in_p[row]) continue;
      in_p[row] = true;
      ++added;
      for (auto c : support[row]) {
        ++covered_through[c];
        --uncovered_through[c];
      }
    }
    p_size += added;
    trace.g.push_back(added);
  };
  auto pick = [&](const std::vector<std::size_t>& candidates) {
    if (options.tiebreak == TieBreak::deterministic || candidates.size() == 1) {
      return candidates.front();
    }
    std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
    return candidates[dist(rng)];
  };

  trace.component_starts.push_back(0);
  take(options.seed_coordinate);

  std::vector<std::size_t> candidates;
  while (p_size < m) {
    std::size_t best = 0;
    candidates.clear();
    for (std::size_t j = 0; j < n; ++j) {
      // A coordinate whose rows are all in P adds nothing and would break k <= n - |S|.
      if (in_s[j] || uncovered_through[j] == 0) continue;
      const std::size_t d = covered_through[j];
      const std::size_t score = d <= 2 ? d : 0;
      if (score > best) {
        best = score;
        candidates.clear();
      }
      if (score == best && score > 0) candidates.push_back(j);
    }
    if (best > 0) {
      take(pick(candidates));
      continue;
    }
    // Every score is zero: prefer coordinates still touching P, else restart.
    std::vector<std::size_t> touching;
    std::vector<std::size_t> fresh;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_s[j] || uncovered_through[j] == 0) continue;
      (covered_through[j] > 0 ? touching : fresh).push_back(j);
    }
    if (!touching.empty()) {
      trace.stall = true;
      take(pick(touching));
    } else {
      trace.disconnected = true;
      trace.component_starts.push_back(trace.sigma.size());
      take(pick(fresh));
    }
  }
  trace.final_bound = n - trace.sigma.size();
  return trace;
}

}  // namespace lrcavail
