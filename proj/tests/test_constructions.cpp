#include <doctest.h>

#include <set>

#include "lrcavail/constructions.hpp"
#include "lrcavail/verification.hpp"
#include "support/oracles.hpp"

using namespace lrcavail;

namespace {

std::set<std::set<std::set<std::size_t>>> as_sets(const std::vector<Partition>& parts) {
  std::set<std::set<std::set<std::size_t>>> out;
  for (const auto& p : parts) {
    std::set<std::set<std::size_t>> ps;
    for (const auto& b : p) ps.insert(std::set<std::size_t>(b.begin(), b.end()));
    out.insert(ps);
  }
  return out;
}

// The four structural properties, checked exhaustively.
void check_family(const PartitionFamily& fam, std::size_t r) {
  const std::size_t n = fam.n;
  for (const auto& p : fam.partitions) {
    std::vector<int> seen(n + 1, 0);
    for (const auto& b : p) {
      CHECK(b.size() == r + 1);
      for (auto x : b) {
        REQUIRE(x >= 1);
        REQUIRE(x <= n);
        ++seen[x];
      }
    }
    for (std::size_t x = 1; x <= n; ++x) CHECK(seen[x] == 1);
  }
  for (std::size_t a = 0; a < fam.partitions.size(); ++a) {
    for (std::size_t b = a + 1; b < fam.partitions.size(); ++b) {
      for (const auto& x : fam.partitions[a]) {
        for (const auto& y : fam.partitions[b]) {
          std::size_t common = 0;
          for (auto e : x) common += std::count(y.begin(), y.end(), e);
          CHECK(common <= 1);
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("MOLS generation") {
  SUBCASE("q = 2") {
    const auto m = generate_mols(2);
    CHECK(m.mols_count() == 1);
    CHECK(m.squares[1].grid == std::vector<std::vector<unsigned>>{{1, 2}, {2, 1}});
    CHECK(m.squares.front().auxiliary);
    CHECK(m.squares.back().auxiliary);
  }
  SUBCASE("pairwise orthogonality") {
    for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) {
      const auto m = generate_mols(q);
      CHECK(m.mols_count() == q - 1);
      for (std::size_t a = 0; a < m.squares.size(); ++a) {
        if (!m.squares[a].auxiliary) CHECK(m.squares[a].is_latin());
        for (std::size_t b = a + 1; b < m.squares.size(); ++b) {
          CHECK(are_orthogonal(m.squares[a], m.squares[b]));
        }
      }
    }
  }
  SUBCASE("q = 3 superposition yields 9 pairs") {
    const auto m = generate_mols(3);
    std::set<std::pair<unsigned, unsigned>> pairs;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) pairs.emplace(m.squares[1].at(i, j), m.squares[2].at(i, j));
    }
    CHECK(pairs.size() == 9);
  }
  CHECK_THROWS_AS(generate_mols(6), std::invalid_argument);
}

TEST_CASE("partition family") {
  SUBCASE("r=1 g=1") {
    const auto fam = build_partition_family(1, 1);
    REQUIRE(fam.partitions.size() == 1);
    CHECK(fam.partitions[0] == Partition{{1, 2}});
  }
  SUBCASE("r=1 g=2 gives the three matchings of K4") {
    const auto fam = build_partition_family(1, 2);
    const std::vector<Partition> expected{
        {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}};
    CHECK(as_sets(fam.partitions) == as_sets(expected));
    CHECK(fam.partitions.front() == Partition{{1, 2}, {3, 4}});
  }
  SUBCASE("counts and intersection properties") {
    for (std::size_t g = 1; g <= 5; ++g) {
      const auto fam = build_partition_family(1, g);
      CHECK(fam.partitions.size() == (std::size_t{1} << g) - 1);
      check_family(fam, 1);
    }
    for (std::size_t r : {2U, 3U, 4U}) {
      for (std::size_t g = 1; g <= 3; ++g) {
        std::size_t n = 1, count = 0, f_pow = 1;
        for (std::size_t i = 0; i < g; ++i) {
          n *= r + 1;
          count += f_pow;
          f_pow *= r + 1;
        }
        if (n > 256) continue;
        const auto fam = build_partition_family(r, g);
        CHECK(fam.n == n);
        CHECK(fam.partitions.size() == count);
        check_family(fam, r);
      }
    }
  }
  CHECK_THROWS_AS(build_partition_family(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_partition_family(1, 13), BudgetExceeded);
}

TEST_CASE("partition code") {
  const auto fam = build_partition_family(1, 2);
  SUBCASE("t=3 is the K4 edge code") {
    const auto code = partition_code(fam, 3);
    CHECK(code.m() == 6);
    CHECK(code.k() == 1);
    CHECK(oracle::permutation_equivalent(code.parity_check(), oracle::k4_incidence()));
    CHECK(code.kind() == AvailabilityKind::strict);
  }
  SUBCASE("t=2") {
    const auto code = partition_code(fam, 2);
    CHECK(code.m() == 4);
    CHECK(code.k() == 1);
  }
  SUBCASE("t=1 is disjoint parities") {
    const auto fam3 = build_partition_family(2, 2);
    const auto code = partition_code(fam3, 1);
    CHECK(code.k() == 9 - 3);
  }
  SUBCASE("explicit choice and guards") {
    const auto code = partition_code(fam, 2, std::vector<std::size_t>{2, 1});
    CHECK(code.m() == 4);
    CHECK_THROWS_AS(partition_code(fam, 4), std::invalid_argument);
    CHECK_THROWS_AS(partition_code(fam, 2, std::vector<std::size_t>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partition_code(fam, 2, std::vector<std::size_t>{0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(partition_code(fam, 2, std::vector<std::size_t>{0}), std::invalid_argument);
  }
}

TEST_CASE("functional code") {
  SUBCASE("q=2 projective functionals") {
    const FiniteField f(2);
    const auto fns = projective_functionals(f, 3);
    CHECK(fns == std::vector<FieldMatrix>{{{1, 0}}, {{0, 1}}, {{1, 1}}});
    const auto code = functional_code(f, 2, 1, fns);
    CHECK(code.m() == 6);
    CHECK(code.n() == 4);
    CHECK(code.k() == 1);
    CHECK(oracle::permutation_equivalent(code.parity_check(), oracle::k4_incidence()));
  }
  SUBCASE("q=3 all four directions") {
    const FiniteField f(3);
    const auto code = functional_code(f, 2, 1, projective_functionals(f, 4));
    CHECK(code.n() == 9);
    CHECK(code.r() == 2);
    CHECK(check_strict_availability(code.parity_check(), 2, 4).pass);
  }
  SUBCASE("larger n1") {
    const FiniteField f(2);
    // Three 2x4 functionals with pairwise trivially intersecting kernels.
    const std::vector<FieldMatrix> fns{
        {{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 1, 0}, {0, 0, 0, 1}}, {{1, 0, 1, 0}, {0, 1, 0, 1}}};
    const auto code = functional_code(f, 4, 2, fns);
    CHECK(code.n() == 16);
    CHECK(code.m() == 12);
    CHECK(check_strict_availability(code.parity_check(), 3, 3).pass);
  }
  SUBCASE("guards") {
    const FiniteField f(2);
    CHECK_THROWS_AS(functional_code(f, 2, 1, {{{0, 0}}, {{1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(functional_code(f, 2, 1, {{{1, 0}}, {{1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(functional_code(f, 3, 1, {{{1, 0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(projective_functionals(f, 4), std::invalid_argument);
    try {
      functional_code(f, 2, 1, {{{1, 0}}, {{0, 1}}, {{1, 0}}});
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("(0, 2)") != std::string::npos);
    }
  }
  SUBCASE("q=3 pairwise independence") {
    const FiniteField f(3);
    const auto fns = projective_functionals(f, 4);
    for (std::size_t a = 0; a < fns.size(); ++a) {
      for (std::size_t b = a + 1; b < fns.size(); ++b) {
        CHECK(field_rank(f, {fns[a][0], fns[b][0]}) == 2);
      }
    }
  }
}

TEST_CASE("product code") {
  SUBCASE("(1,2)") {
    const auto c = product_code(1, 2);
    CHECK(c.n() == 4);
    CHECK(c.k() == 1);
    CHECK(oracle::min_distance_direct(c.parity_check()) == 4);
  }
  SUBCASE("(2,2)") {
    const auto c = product_code(2, 2);
    CHECK(c.n() == 9);
    CHECK(c.k() == 4);
    CHECK(oracle::min_distance_direct(c.parity_check()) == 4);
  }
  SUBCASE("k = r^t") {
    for (std::size_t r = 1; r <= 4; ++r) {
      for (std::size_t t = 1; t <= 3; ++t) {
        const auto c = product_code(r, t);
        std::size_t expect = 1;
        for (std::size_t i = 0; i < t; ++i) expect *= r;
        CHECK(c.k() == expect);
      }
    }
  }
  CHECK_THROWS_AS(product_code(3, 7), BudgetExceeded);
}

TEST_CASE("every constructed code is strict, and so is its transpose with swapped roles") {
  for (const auto& [label, code] : oracle::constructed_codes()) {
    INFO(label);
    const auto& h = code.parity_check();
    CHECK(check_strict_availability(h, code.r(), code.t()).pass);
    if (code.t() >= 2) CHECK(check_strict_availability(h.transpose(), code.t() - 1, code.r() + 1).pass);
    CHECK(code.m() * (code.r() + 1) == code.n() * code.t());
  }
}

TEST_CASE("constructed codes have d >= t+1") {
  for (const auto& [label, code] : oracle::constructed_codes()) {
    if (code.k() == 0 || code.n() > 22) continue;
    INFO(label);
    CHECK(oracle::min_distance_direct(code.parity_check()) >= code.t() + 1);
  }
}
