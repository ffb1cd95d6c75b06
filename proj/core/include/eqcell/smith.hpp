#pragma once

// Sparse integer matrices and Smith normal form invariants.

#include "eqcell/common.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace eqcell {

/// Column-major sparse integer matrix. Each column is sorted by row and
/// stores no zeros.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, Integer>>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_.at(c); }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  /// Adds `value` at (row, col); entries summing to zero are dropped.
  void add(std::size_t row, std::size_t col, const Integer& value);
  Integer at(std::size_t row, std::size_t col) const;

  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  bool operator==(const SparseMatrix&) const = default;

  std::vector<std::vector<Integer>> to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

struct SmithInvariants {
  std::size_t rank = 0;
  /// Invariant factors greater than one, ascending.
  std::vector<Integer> torsion;
};

/// Rank and nontrivial invariant factors by unimodular elimination. Unit
/// pivots are eliminated sparsely; whatever remains is diagonalised densely
/// with minimal-absolute-value pivoting.
SmithInvariants smith_invariants(const SparseMatrix& m);

/// Dense Smith normal form diagonal (all nonzero invariant factors,
/// each dividing the next).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> dense);

}  // namespace eqcell
