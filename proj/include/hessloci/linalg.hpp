#pragma once

// Dense linear algebra over GF(p): small-matrix rank and an incremental row
// echelon basis with delayed modular reduction, used by the graded
// Hilbert-function computations.

#include "hessloci/field.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace hessloci {

/// Row-major grid of GF(p) residues.
struct ModMatrix {
  std::uint32_t p = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> data;

  ModMatrix() = default;
  ModMatrix(std::uint32_t prime, std::size_t r, std::size_t c)
      : p(prime), rows(r), cols(c), data(r * c, 0) {}

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static ModMatrix identity(std::uint32_t prime, std::size_t n) {
    ModMatrix m(prime, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
};

/// Rank by Gaussian elimination; the argument is consumed.
inline std::size_t rank_ff(ModMatrix m) {
  PrimeField F(m.p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    auto inv = F.inv(m(rank, c));
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      auto factor = F.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

/// Row echelon basis grown one row at a time. Each stored row has a leading 1
/// at its pivot column and zeros before it.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, std::size_t cols)
      : F_(p), cols_(cols), pivot_row_(cols, -1), acc_(cols) {
    const std::uint64_t pm1 = p - 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max() - p;
    budget_ = pm1 == 0 ? 1 : std::max<std::uint64_t>(1, max / (pm1 * pm1));
  }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }

  /// Reduces `row` against the basis; returns true and stores it when it is
  /// independent of the rows already present.
  bool add_row(std::span<const std::uint32_t> row) {
    if (row.size() != cols_) throw std::invalid_argument("EchelonBasis: row length mismatch");
    if (full()) return false;
    const std::uint64_t p = F_.modulus();
    for (std::size_t j = 0; j < cols_; ++j) acc_[j] = row[j];
    std::uint64_t pending = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::uint64_t a = acc_[c] % p;
      if (a == 0) continue;
      int r = pivot_row_[c];
      if (r < 0) {
        // new pivot at column c
        for (std::size_t j = c; j < cols_; ++j) acc_[j] %= p;
        std::vector<std::uint32_t> stored(cols_, 0);
        auto inv = F_.inv(static_cast<std::uint32_t>(a));
        for (std::size_t j = c; j < cols_; ++j)
          stored[j] = F_.mul(static_cast<std::uint32_t>(acc_[j]), inv);
        pivot_row_[c] = static_cast<int>(rows_.size());
        pivots_.push_back(c);
        rows_.push_back(std::move(stored));
        return true;
      }
      const std::uint64_t m = p - a;
      const std::uint32_t* src = rows_[static_cast<std::size_t>(r)].data();
      std::uint64_t* dst = acc_.data();
      for (std::size_t j = c; j < cols_; ++j) dst[j] += m * src[j];
      if (++pending >= budget_) {
        for (std::size_t j = c; j < cols_; ++j) acc_[j] %= p;
        pending = 0;
      }
    }
    return false;
  }

  /// Basis of { x : r.x = 0 for every stored row r }.
  std::vector<std::vector<std::uint32_t>> nullspace() const {
    // Reduced row echelon form by back substitution, pivots in increasing column order.
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<std::vector<std::uint32_t>> rref;
    std::vector<std::size_t> pcol;
    rref.reserve(order.size());
    for (auto i : order) {
      rref.push_back(rows_[i]);
      pcol.push_back(pivots_[i]);
    }
    const std::uint64_t p = F_.modulus();
    std::vector<std::uint64_t> acc(cols_);
    for (std::size_t ii = rref.size(); ii-- > 0;) {
      auto& row = rref[ii];
      for (std::size_t j = 0; j < cols_; ++j) acc[j] = row[j];
      std::uint64_t pending = 0;
      for (std::size_t k = ii + 1; k < rref.size(); ++k) {
        std::size_t c = pcol[k];
        std::uint64_t a = acc[c] % p;
        if (a == 0) continue;
        const std::uint64_t m = p - a;
        const auto& src = rref[k];
        for (std::size_t j = c; j < cols_; ++j) acc[j] += m * src[j];
        if (++pending >= budget_) {
          for (std::size_t j = c; j < cols_; ++j) acc[j] %= p;
          pending = 0;
        }
      }
      for (std::size_t j = 0; j < cols_; ++j) row[j] = static_cast<std::uint32_t>(acc[j] % p);
    }
    std::vector<char> is_pivot(cols_, 0);
    for (auto c : pcol) is_pivot[c] = 1;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<std::uint32_t> x(cols_, 0);
      x[f] = 1;
      for (std::size_t k = 0; k < rref.size(); ++k) x[pcol[k]] = F_.neg(rref[k][f]);
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  PrimeField F_;
  std::size_t cols_;
  std::uint64_t budget_;
  std::vector<int> pivot_row_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::uint64_t> acc_;
};

}  // namespace hessloci
