#include "lrcavail/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lrcavail {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit,
                          const char* what) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > limit / base) {
      throw BudgetExceeded(std::string(what) + ": length " + std::to_string(base) + "^" +
                           std::to_string(exp) + " exceeds " + std::to_string(limit));
    }
    v *= base;
  }
  return v;
}

PartitionFamily refine(const MOLSSet& mols, std::size_t g) {
  const std::size_t q = mols.order;
  if (g == 1) {
    Block all(q);
    for (std::size_t i = 0; i < q; ++i) all[i] = i + 1;
    return {q, q, {Partition{all}}};
  }
  const PartitionFamily sub = refine(mols, g - 1);
  const std::size_t n = sub.n * q;

  auto natural_block = [q](std::size_t x) {  // x is 1-based
    Block b(q);
    for (std::size_t s = 0; s < q; ++s) b[s] = (x - 1) * q + s + 1;
    return b;
  };

  PartitionFamily out{n, q, {}};
  Partition natural;
  for (std::size_t x = 1; x <= n / q; ++x) natural.push_back(natural_block(x));
  out.partitions.push_back(std::move(natural));

  for (const Partition& coarse : sub.partitions) {
    for (std::size_t j = 1; j <= mols.refinement_count(); ++j) {
      const LatinSquare& square = mols.squares[j];
      Partition fine;
      fine.reserve(n / q);
      for (const Block& sigma : coarse) {
        // U(a, b): b-th element of the natural block indexed by sigma[a].
        std::vector<Block> u;
        u.reserve(q);
        for (std::size_t a = 0; a < q; ++a) u.push_back(natural_block(sigma[a]));
        for (unsigned x = 1; x <= q; ++x) {
          Block block;
          block.reserve(q);
          for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = 0; b < q; ++b) {
              if (square.at(a, b) == x) block.push_back(u[a][b]);
            }
          }
          std::sort(block.begin(), block.end());
          fine.push_back(std::move(block));
        }
      }
      out.partitions.push_back(std::move(fine));
    }
  }
  return out;
}

std::vector<FieldElement> radix_digits(std::size_t value, unsigned q, std::size_t len) {
  std::vector<FieldElement> d(len);
  for (std::size_t i = len; i-- > 0;) {
    d[i] = static_cast<FieldElement>(value % q);
    value /= q;
  }
  return d;
}

}  // namespace

bool LatinSquare::is_latin() const {
  for (std::size_t i = 0; i < order; ++i) {
    std::vector<bool> in_row(order + 1, false);
    std::vector<bool> in_col(order + 1, false);
    for (std::size_t j = 0; j < order; ++j) {
      const unsigned a = grid[i][j];
      const unsigned b = grid[j][i];
      if (a < 1 || a > order || b < 1 || b > order || in_row[a] || in_col[b]) return false;
      in_row[a] = true;
      in_col[b] = true;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order != b.order) return false;
  const std::size_t q = a.order;
  std::vector<bool> seen(q * q, false);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t key = (a.at(i, j) - 1) * q + (b.at(i, j) - 1);
      if (seen[key]) return false;
      seen[key] = true;
    }
  }
  return true;
}

MOLSSet generate_mols(unsigned q) {
  if (!prime_power_decomposition(q) || q > FiniteField::kMaxOrder) {
    throw std::invalid_argument("generate_mols: order " + std::to_string(q) +
                                " is not a prime power <= 64; no MOLS count is available");
  }
  const FiniteField field(q);
  MOLSSet set;
  set.order = q;

  LatinSquare rows{q, std::vector<std::vector<unsigned>>(q, std::vector<unsigned>(q)), true};
  LatinSquare cols = rows;
  for (unsigned i = 0; i < q; ++i) {
    for (unsigned j = 0; j < q; ++j) {
      rows.grid[i][j] = i + 1;
      cols.grid[i][j] = j + 1;
    }
  }
  set.squares.push_back(rows);
  for (unsigned a = 1; a < q; ++a) {
    LatinSquare s{q, std::vector<std::vector<unsigned>>(q, std::vector<unsigned>(q)), false};
    for (unsigned i = 0; i < q; ++i) {
      for (unsigned j = 0; j < q; ++j) {
        const auto v = field.add(field.mul(static_cast<FieldElement>(a),
                                           static_cast<FieldElement>(i)),
                                 static_cast<FieldElement>(j));
        s.grid[i][j] = static_cast<unsigned>(v) + 1;
      }
    }
    set.squares.push_back(std::move(s));
  }
  set.squares.push_back(cols);
  return set;
}

PartitionFamily build_partition_family(std::size_t r, std::size_t g) {
  if (r < 1 || g < 1) throw std::invalid_argument("build_partition_family: need r >= 1, g >= 1");
  if (!prime_power_decomposition(static_cast<unsigned>(r + 1)) || r + 1 > FiniteField::kMaxOrder) {
    throw std::invalid_argument("build_partition_family: r+1 = " + std::to_string(r + 1) +
                                " is not a prime power <= 64");
  }
  checked_power(r + 1, g, kMaxConstructionLength, "build_partition_family");
  return refine(generate_mols(static_cast<unsigned>(r + 1)), g);
}

AvailabilityCode partition_code(const PartitionFamily& family, std::size_t t,
                                const std::optional<std::vector<std::size_t>>& choice) {
  if (t < 1 || t > family.partitions.size()) {
    throw std::invalid_argument("partition_code: t = " + std::to_string(t) + " but family has " +
                                std::to_string(family.partitions.size()) + " partitions");
  }
  std::vector<std::size_t> picked;
  if (choice) {
    picked = *choice;
    if (picked.size() != t) {
      throw std::invalid_argument("partition_code: choice must list exactly t indices");
    }
    std::set<std::size_t> distinct(picked.begin(), picked.end());
    if (distinct.size() != t) throw std::invalid_argument("partition_code: repeated partition index");
    for (auto p : picked) {
      if (p >= family.partitions.size()) {
        throw std::invalid_argument("partition_code: partition index " + std::to_string(p) +
                                    " out of range");
      }
    }
  } else {
    for (std::size_t i = 0; i < t; ++i) picked.push_back(i);
  }

  std::vector<std::vector<std::size_t>> rows;
  for (auto p : picked) {
    for (const Block& block : family.partitions[p]) {
      std::vector<std::size_t> support;
      for (auto e : block) support.push_back(e - 1);
      rows.push_back(std::move(support));
    }
  }
  return AvailabilityCode(BitMatrix::from_rows(family.n, rows), family.block_size - 1, t,
                          AvailabilityKind::strict, "partition",
                          {{"n", static_cast<std::int64_t>(family.n)},
                           {"r", static_cast<std::int64_t>(family.block_size - 1)},
                           {"t", static_cast<std::int64_t>(t)},
                           {"partitions", static_cast<std::int64_t>(family.partitions.size())}});
}

AvailabilityCode functional_code(const FiniteField& field, std::size_t n1, std::size_t m1,
                                 const std::vector<FieldMatrix>& functionals) {
  const unsigned q = field.order();
  if (m1 < 1 || m1 >= n1 || 2 * m1 < n1) {
    throw std::invalid_argument("functional_code: need 1 <= m1 < n1 <= 2 m1");
  }
  if (functionals.empty()) throw std::invalid_argument("functional_code: no functionals given");
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    const auto& a = functionals[i];
    bool shape_ok = a.size() == m1;
    for (const auto& row : a) shape_ok = shape_ok && row.size() == n1;
    if (!shape_ok) {
      throw std::invalid_argument("functional_code: functional " + std::to_string(i) +
                                  " is not m1 x n1");
    }
    for (const auto& row : a) {
      for (auto v : row) {
        if (v >= q) throw std::invalid_argument("functional_code: entry outside the field");
      }
    }
    if (field_rank(field, a) != m1) {
      throw std::invalid_argument("functional_code: functional " + std::to_string(i) +
                                  " does not have rank m1");
    }
  }
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    for (std::size_t j = i + 1; j < functionals.size(); ++j) {
      FieldMatrix stacked = functionals[i];
      stacked.insert(stacked.end(), functionals[j].begin(), functionals[j].end());
      if (field_rank(field, stacked) != n1) {
        throw std::invalid_argument("functional_code: functionals (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") stack to rank below n1");
      }
    }
  }

  const std::size_t n = checked_power(q, n1, kMaxConstructionLength, "functional_code");
  const std::size_t l = checked_power(q, m1, kMaxConstructionLength, "functional_code");
  const std::size_t t = functionals.size();
  BitMatrix h(t * l, n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xd = radix_digits(x, q, n1);
    for (std::size_t i = 0; i < t; ++i) {
      std::size_t y = 0;
      for (std::size_t row = 0; row < m1; ++row) {
        FieldElement acc = 0;
        for (std::size_t c = 0; c < n1; ++c) {
          acc = field.add(acc, field.mul(functionals[i][row][c], xd[c]));
        }
        y = y * q + acc;
      }
      h.set(i * l + y, x);
    }
  }
  const std::size_t r = n / l - 1;
  return AvailabilityCode(std::move(h), r, t, AvailabilityKind::strict, "functional",
                          {{"q", q},
                           {"n1", static_cast<std::int64_t>(n1)},
                           {"m1", static_cast<std::int64_t>(m1)},
                           {"t", static_cast<std::int64_t>(t)}});
}

std::vector<FieldMatrix> projective_functionals(const FiniteField& field, std::size_t t) {
  const unsigned q = field.order();
  if (t > q + 1) {
    throw std::invalid_argument("projective_functionals: t = " + std::to_string(t) +
                                " exceeds the q+1 = " + std::to_string(q + 1) + " directions");
  }
  std::vector<FieldMatrix> all;
  all.push_back({{1, 0}});
  all.push_back({{0, 1}});
  for (unsigned a = 1; a < q; ++a) all.push_back({{1, static_cast<FieldElement>(a)}});
  all.resize(t);
  return all;
}

AvailabilityCode product_code(std::size_t r, std::size_t t) {
  if (r < 1 || t < 1) throw std::invalid_argument("product_code: need r >= 1, t >= 1");
  const std::size_t side = r + 1;
  const std::size_t n = checked_power(side, t, kMaxConstructionLength, "product_code");
  std::vector<std::vector<std::size_t>> rows;
  std::size_t stride = 1;
  for (std::size_t axis = 0; axis < t; ++axis) {
    for (std::size_t c = 0; c < n; ++c) {
      if ((c / stride) % side != 0) continue;
      std::vector<std::size_t> line;
      for (std::size_t s = 0; s < side; ++s) line.push_back(c + s * stride);
      rows.push_back(std::move(line));
    }
    stride *= side;
  }
  return AvailabilityCode(BitMatrix::from_rows(n, rows), r, t, AvailabilityKind::strict, "product",
                          {{"r", static_cast<std::int64_t>(r)}, {"t", static_cast<std::int64_t>(t)}});
}

}  // namespace lrcavail
