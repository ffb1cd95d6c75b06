#include "eqcell/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eqcell {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Integer& value) {
  if (value == 0) return;
  if (row >= rows_) throw InternalError("SparseMatrix row out of range");
  Column& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& entry, std::size_t r) { return entry.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += value;
    if (it->second == 0) c.erase(it);
  } else {
    c.insert(it, {row, value});
  }
}

Integer SparseMatrix::at(std::size_t row, std::size_t col) const {
  const Column& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& entry, std::size_t r) { return entry.first < r; });
  return (it != c.end() && it->first == row) ? it->second : Integer(0);
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols() != rhs.rows()) throw InternalError("SparseMatrix product dimension mismatch");
  SparseMatrix out(rows_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    std::map<std::size_t, Integer> acc;
    for (const auto& [k, b] : rhs.columns_[j]) {
      for (const auto& [i, a] : columns_[k]) acc[i] += a * b;
    }
    for (const auto& [i, v] : acc) {
      if (v != 0) out.columns_[j].emplace_back(i, v);
    }
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw InternalError("SparseMatrix difference dimension mismatch");
  }
  SparseMatrix out = *this;
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (const auto& [i, v] : rhs.columns_[j]) out.add(i, j, -v);
  }
  return out;
}

std::vector<std::vector<Integer>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols(), 0));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, v] : columns_[j]) out[i][j] = v;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto place_min_pivot = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return false;
      std::swap(a[t], a[bi]);
      swap_cols(t, bj);
      return true;
    };
    if (!place_min_pivot()) break;

    for (;;) {
      const Integer p = a[t][t];
      bool remainder = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        remainder = remainder || a[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        remainder = remainder || a[t][j] != 0;
      }
      if (remainder) {
        place_min_pivot();
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

SmithInvariants smith_invariants(const SparseMatrix& m) {
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols();
  std::vector<std::map<std::size_t, Integer>> cols(n_cols);
  std::vector<std::set<std::size_t>> row_cols(n_rows);
  for (std::size_t j = 0; j < n_cols; ++j) {
    for (const auto& [i, v] : m.column(j)) {
      cols[j].emplace(i, v);
      row_cols[i].insert(j);
    }
  }

  std::vector<std::size_t> order(n_cols);
  for (std::size_t j = 0; j < n_cols; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return cols[x].size() < cols[y].size(); });

  SmithInvariants out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c : order) {
      while (!cols[c].empty()) {
        // Unit pivot in this column whose row is lightest.
        std::size_t pivot_row = n_rows;
        for (const auto& [r, v] : cols[c]) {
          if (abs(v) == 1 && (pivot_row == n_rows || row_cols[r].size() < row_cols[pivot_row].size())) {
            pivot_row = r;
          }
        }
        if (pivot_row == n_rows) break;
        const Integer p = cols[c].at(pivot_row);
        const std::vector<std::size_t> others(row_cols[pivot_row].begin(), row_cols[pivot_row].end());
        for (std::size_t c2 : others) {
          if (c2 == c) continue;
          const Integer factor = cols[c2].at(pivot_row) * p;
          for (const auto& [r2, v2] : cols[c]) {
            auto [it, inserted] = cols[c2].try_emplace(r2, 0);
            it->second -= factor * v2;
            if (it->second == 0) {
              cols[c2].erase(it);
              row_cols[r2].erase(c2);
            } else if (inserted) {
              row_cols[r2].insert(c2);
            }
          }
        }
        for (const auto& [r2, v2] : cols[c]) row_cols[r2].erase(c);
        cols[c].clear();
        ++out.rank;
        progress = true;
      }
    }
  }

  std::vector<std::size_t> rest_cols;
  std::set<std::size_t> rest_rows_set;
  for (std::size_t j = 0; j < n_cols; ++j) {
    if (cols[j].empty()) continue;
    rest_cols.push_back(j);
    for (const auto& [i, v] : cols[j]) rest_rows_set.insert(i);
  }
  if (rest_cols.empty()) return out;

  const std::vector<std::size_t> rest_rows(rest_rows_set.begin(), rest_rows_set.end());
  std::vector<std::vector<Integer>> dense(rest_rows.size(), std::vector<Integer>(rest_cols.size(), 0));
  for (std::size_t jj = 0; jj < rest_cols.size(); ++jj) {
    for (const auto& [i, v] : cols[rest_cols[jj]]) {
      const auto ii = std::lower_bound(rest_rows.begin(), rest_rows.end(), i) - rest_rows.begin();
      dense[ii][jj] = v;
    }
  }
  for (const Integer& d : smith_diagonal(std::move(dense))) {
    ++out.rank;
    if (d != 1) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace eqcell
