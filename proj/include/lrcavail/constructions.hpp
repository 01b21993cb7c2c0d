#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrcavail/availability_code.hpp"
#include "lrcavail/finite_field.hpp"

namespace lrcavail {

/// order x order grid with symbols 1..order. Auxiliary squares (constant rows
/// or constant columns) are not Latin but take part in the orthogonality checks.
struct LatinSquare {
  std::size_t order = 0;
  std::vector<std::vector<unsigned>> grid;
  bool auxiliary = false;

  unsigned at(std::size_t row, std::size_t col) const { return grid[row][col]; }
  bool is_latin() const;
};

/// Superposing the two squares yields every ordered symbol pair exactly once.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// squares = {S_0, S_1, ..., S_N, S_{N+1}} where S_0 has constant rows,
/// S_{N+1} constant columns and S_1..S_N are the q-1 field MOLS.
struct MOLSSet {
  std::size_t order = 0;
  std::vector<LatinSquare> squares;

  std::size_t mols_count() const { return squares.size() - 2; }
  /// Squares used per refinement step: N + 1 (S_1..S_{N+1}).
  std::size_t refinement_count() const { return squares.size() - 1; }
};

/// Throws std::invalid_argument when q is not a prime power <= 64.
MOLSSet generate_mols(unsigned q);

using Block = std::vector<std::size_t>;     // sorted, 1-based elements
using Partition = std::vector<Block>;

struct PartitionFamily {
  std::size_t n = 0;
  std::size_t block_size = 0;
  std::vector<Partition> partitions;
};

inline constexpr std::size_t kMaxConstructionLength = 4096;

/// Recursive Latin-square refinement of the natural partition of [(r+1)^g].
/// Produces (f^g - 1)/(f - 1) partitions with f = r + 1, the natural partition
/// first. Throws std::invalid_argument when r+1 is not a prime power and
/// BudgetExceeded when (r+1)^g > kMaxConstructionLength.
PartitionFamily build_partition_family(std::size_t r, std::size_t g);

/// Parity-check matrix whose rows are the blocks of the chosen partitions
/// (0-based indices; default: the first t).
AvailabilityCode partition_code(const PartitionFamily& family, std::size_t t,
                                const std::optional<std::vector<std::size_t>>& choice = {});

/// Rows indexed (i, y) for each functional A_i and y in F_q^{m1}; columns
/// indexed by x in F_q^{n1} in radix-q order (first coordinate most
/// significant). Entry 1 iff A_i x = y.
AvailabilityCode functional_code(const FiniteField& field, std::size_t n1, std::size_t m1,
                                 const std::vector<FieldMatrix>& functionals);

/// t of the q+1 pairwise independent 1x2 functionals: [1 0], [0 1], [1 a] (a = 1..q-1).
std::vector<FieldMatrix> projective_functionals(const FiniteField& field, std::size_t t);

/// t-dimensional single-parity product code on the (r+1)^t grid.
AvailabilityCode product_code(std::size_t r, std::size_t t);

}  // namespace lrcavail
