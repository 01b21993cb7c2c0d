#include <doctest.h>

#include <numeric>
#include <set>

#include "lrcavail/constructions.hpp"
#include "lrcavail/verification.hpp"
#include "support/oracles.hpp"

using namespace lrcavail;

namespace {

// d_i of the dual by enumerating every i-subset of nonzero dual words
// (independence checked by span size), for tiny duals only.
std::size_t ghw_oracle(const BitMatrix& h, std::size_t i) {
  const std::size_t n = h.cols();
  std::vector<std::uint64_t> words;
  std::vector<std::uint64_t> rows;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::uint64_t w = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (h.get(r, c)) w |= std::uint64_t{1} << c;
    }
    rows.push_back(w);
  }
  std::set<std::uint64_t> span{0};
  for (auto w : rows) {
    std::set<std::uint64_t> next = span;
    for (auto s : span) next.insert(s ^ w);
    span = next;
  }
  for (auto w : span) {
    if (w) words.push_back(w);
  }
  std::size_t best = n + 1;
  std::vector<std::size_t> idx(i);
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == i) {
      std::set<std::uint64_t> sub{0};
      std::uint64_t uni = 0;
      for (auto k : idx) {
        std::set<std::uint64_t> next = sub;
        for (auto s : sub) next.insert(s ^ words[k]);
        sub = next;
        uni |= words[k];
      }
      if (sub.size() == (std::size_t{1} << i)) {
        best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(uni)));
      }
      return;
    }
    for (std::size_t k = start; k < words.size(); ++k) {
      idx[depth] = k;
      self(self, depth + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

TEST_CASE("strict availability check") {
  const auto k4 = oracle::k4_incidence();
  CHECK(check_strict_availability(k4, 1, 3).pass);
  CHECK(check_strict_availability(k4.transpose(), 2, 2).pass);

  const auto id = check_strict_availability(BitMatrix::identity(4), 1, 1);
  CHECK_FALSE(id.pass);
  CHECK(id.row_weight_violations.size() == 4);

  // Two rows sharing two coordinates.
  const auto bad = BitMatrix::from_rows(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}});
  const auto rep = check_strict_availability(bad, 1, 2);
  CHECK_FALSE(rep.pass);
  CHECK(rep.intersection_violations ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 3}});
  CHECK(rep.balance_ok);

  const auto unbalanced = check_strict_availability(k4, 1, 2);
  CHECK_FALSE(unbalanced.balance_ok);
  CHECK(unbalanced.column_weight_violations.size() == 4);
}

TEST_CASE("general availability check") {
  for (const auto& [label, code] : oracle::constructed_codes()) {
    if (code.n() > 64) continue;
    INFO(label);
    const auto rep = check_availability(code.parity_check(), code.r(), code.t());
    CHECK(rep.pass);
  }
  SUBCASE("zero column fails") {
    const auto h = BitMatrix::from_rows(3, {{0, 1}});
    const auto rep = check_availability(h, 1, 1);
    CHECK_FALSE(rep.pass);
    CHECK(rep.column_ok == std::vector<bool>{true, true, false});
  }
  SUBCASE("duplicated row is harmless") {
    const auto h = product_code(2, 2).parity_check();
    auto dup = vstack(h, h.select_rows({0}));
    CHECK(check_availability(dup, 2, 2).pass);
    CHECK_FALSE(check_availability(dup, 2, 3).pass);
  }
  SUBCASE("non-strict matrix with availability") {
    // Heavier rows are ignored; column 0 has two disjoint repair groups.
    const auto h = BitMatrix::from_rows(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {0, 3, 4}, {1, 3}, {2, 4}});
    const auto rep = check_availability(h, 1, 2);
    CHECK(rep.column_ok[0]);
    CHECK(rep.witnesses[0].size() == 2);
  }
}

TEST_CASE("brute-force minimum distance") {
  const AvailabilityCode rep(BitMatrix::from_rows(3, {{0, 1}, {1, 2}}), 1, 1);
  CHECK(min_distance_bruteforce(rep) == std::optional<std::size_t>(3));
  CHECK(min_distance_bruteforce(product_code(2, 2)) == std::optional<std::size_t>(4));
  CHECK(min_distance_bruteforce(AvailabilityCode(oracle::k4_incidence(), 1, 3)) ==
        std::optional<std::size_t>(4));
  CHECK_FALSE(min_distance_bruteforce(AvailabilityCode(BitMatrix::identity(3), 0, 1)).has_value());
  for (const auto& [label, code] : oracle::constructed_codes()) {
    if (code.k() == 0 || code.n() > 22) continue;
    INFO(label);
    CHECK(*min_distance_bruteforce(code) == oracle::min_distance_direct(code.parity_check()));
  }
}

TEST_CASE("dual generalized Hamming weights") {
  const AvailabilityCode k4(oracle::k4_incidence(), 1, 3);
  CHECK(dual_ghw_bruteforce(k4, 1).d_i_dual == 2);
  CHECK(dual_ghw_bruteforce(k4, 2).d_i_dual == 3);
  CHECK(dual_ghw_bruteforce(k4, 3).d_i_dual == 4);
  CHECK(dual_ghw_bruteforce(product_code(1, 2), 1).d_i_dual == 2);
  CHECK_THROWS_AS(dual_ghw_bruteforce(k4, 0), std::invalid_argument);
  CHECK_THROWS_AS(dual_ghw_bruteforce(product_code(1, 2), 4), BudgetExceeded);
  CHECK_THROWS_AS(dual_ghw_bruteforce(product_code(4, 3), 1), BudgetExceeded);

  for (const auto& [label, code] : oracle::constructed_codes()) {
    if (code.rank() > 6 || code.n() > 64) continue;
    INFO(label);
    std::size_t prev = 0;
    for (std::size_t i = 1; i <= std::min<std::size_t>(3, code.rank()); ++i) {
      const auto d = dual_ghw_bruteforce(code, i).d_i_dual;
      CHECK(d == ghw_oracle(code.parity_check(), i));
      CHECK(d > prev);
      prev = d;
    }
  }
}

TEST_CASE("greedy cover") {
  const AvailabilityCode k4(oracle::k4_incidence(), 1, 3, AvailabilityKind::strict);
  SUBCASE("K4 hand trace") {
    const auto tr = greedy_cover(k4);
    CHECK(tr.g == std::vector<std::size_t>{3, 2, 1});
    CHECK(tr.sigma.size() == 3);
    CHECK(tr.final_bound == 1);
    CHECK_FALSE(tr.disconnected);
  }
  SUBCASE("soundness and trace invariants") {
    for (const auto& [label, code] : oracle::constructed_codes()) {
      INFO(label);
      for (std::size_t seed : {std::size_t{0}, code.n() / 2, code.n() - 1}) {
        const auto tr = greedy_cover(code, {seed});
        CHECK(tr.final_bound >= code.k());
        CHECK(std::accumulate(tr.g.begin(), tr.g.end(), std::size_t{0}) == code.m());
        CHECK(tr.g.front() == code.t());
        CHECK(tr.final_bound == code.n() - tr.sigma.size());
      }
    }
  }
  SUBCASE("random tie-breaking is reproducible") {
    const auto c = product_code(2, 3);
    GreedyOptions o{0, TieBreak::random, 42};
    CHECK(greedy_cover(c, o).sigma == greedy_cover(c, o).sigma);
    CHECK(greedy_cover(c, o).final_bound >= c.k());
  }
  SUBCASE("disconnected Tanner graph restarts") {
    // Two disjoint copies of K4.
    const auto h = BitMatrix::from_rows(
        8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    const AvailabilityCode two(h, 1, 3, AvailabilityKind::strict);
    const auto tr = greedy_cover(two);
    CHECK(tr.disconnected);
    CHECK(tr.component_starts == std::vector<std::size_t>{0, 3});
    CHECK(tr.final_bound == 2);
    CHECK(two.k() == 2);
  }
  CHECK_THROWS_AS(greedy_cover(k4, {9}), std::invalid_argument);
}
