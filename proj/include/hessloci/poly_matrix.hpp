#pragma once

#include "hessloci/linalg.hpp"
#include "hessloci/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hessloci {

inline constexpr int kMaxDetSize = 8;

/// Square matrix of polynomials sharing one ring.
template <class Field>
class PolyMatrix {
 public:
  using Poly = Polynomial<Field>;
  using Elem = typename Field::Elem;

  /// `symmetric` is validated entrywise.
  PolyMatrix(int size, std::vector<Poly> entries, bool symmetric = false)
      : size_(size), entries_(std::move(entries)), symmetric_(symmetric) {
    if (size < 1) throw std::invalid_argument("PolyMatrix: size must be positive");
    if (entries_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
      throw std::invalid_argument("PolyMatrix: expected size*size entries");
    for (const auto& e : entries_)
      if (e.nvars() != entries_.front().nvars() || !(e.field() == entries_.front().field()))
        throw std::invalid_argument("PolyMatrix: entries live in different rings");
    if (symmetric_)
      for (int i = 0; i < size_; ++i)
        for (int j = i + 1; j < size_; ++j)
          if (!(at(i, j) == at(j, i)))
            throw std::invalid_argument("PolyMatrix: flagged symmetric but entry (" +
                                        std::to_string(i) + "," + std::to_string(j) + ") differs");
  }

  int size() const { return size_; }
  bool symmetric() const { return symmetric_; }
  const Field& field() const { return entries_.front().field(); }
  int nvars() const { return entries_.front().nvars(); }
  const Poly& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * size_ + j)];
  }
  const std::vector<Poly>& entries() const { return entries_; }

  /// Entrywise evaluation at a point, row-major.
  std::vector<Elem> evaluate(std::span<const Elem> point) const {
    std::vector<Elem> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.eval(point));
    return out;
  }

  /// Determinants of all |rows| x |rows| minors with the given rows, indexed by
  /// column bitmask: dynamic programming over column subsets, one row at a time.
  std::vector<std::optional<Poly>> row_subset_minors(const std::vector<int>& rows) const {
    const std::size_t full = std::size_t{1} << size_;
    std::vector<std::optional<Poly>> dp(full);
    dp[0] = Poly::constant(field(), nvars(), field().one());
    std::vector<std::size_t> layer{0};
    for (int r : rows) {
      std::vector<std::optional<Poly>> next(full);
      std::vector<std::size_t> next_layer;
      for (auto mask : layer) {
        if (!dp[mask]) continue;
        for (int c = 0; c < size_; ++c) {
          if (mask & (std::size_t{1} << c)) continue;
          const Poly& entry = at(r, c);
          if (entry.is_zero()) continue;
          std::size_t above = mask >> (c + 1);
          Poly term = *dp[mask] * entry;
          if (std::popcount(above) & 1) term = -term;
          std::size_t nm = mask | (std::size_t{1} << c);
          if (!next[nm]) {
            next[nm] = std::move(term);
            next_layer.push_back(nm);
          } else {
            *next[nm] += term;
          }
        }
      }
      dp = std::move(next);
      layer = std::move(next_layer);
    }
    return dp;
  }

 private:
  int size_;
  std::vector<Poly> entries_;
  bool symmetric_;
};

/// Exact determinant via column-subset dynamic programming.
template <class Field>
Polynomial<Field> det(const PolyMatrix<Field>& m) {
  if (m.size() > kMaxDetSize)
    throw std::invalid_argument("det: matrices larger than 8x8 are out of scope");
  std::vector<int> rows(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) rows[static_cast<std::size_t>(i)] = i;
  auto dp = m.row_subset_minors(rows);
  auto& top = dp[(std::size_t{1} << m.size()) - 1];
  return top ? *top : Polynomial<Field>(m.field(), m.nvars());
}

/// Index subsets of {0..n-1} with k elements, lexicographic.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// All order x order minors, ordered by (row set, column set) lexicographically.
/// With dedupe_symmetric on a symmetric matrix only column sets >= the row set
/// are kept, one representative per unordered pair.
template <class Field>
std::vector<Polynomial<Field>> minors(const PolyMatrix<Field>& m, int order, bool dedupe_symmetric) {
  if (order < 1 || order > m.size())
    throw std::invalid_argument("minors: order must lie in [1, size]");
  if (m.size() > kMaxDetSize)
    throw std::invalid_argument("minors: matrices larger than 8x8 are out of scope");
  const bool dedupe = dedupe_symmetric && m.symmetric();
  auto subsets = k_subsets(m.size(), order);
  std::vector<Polynomial<Field>> out;
  for (std::size_t ri = 0; ri < subsets.size(); ++ri) {
    auto dp = m.row_subset_minors(subsets[ri]);
    for (std::size_t ci = dedupe ? ri : 0; ci < subsets.size(); ++ci) {
      std::size_t mask = 0;
      for (int c : subsets[ci]) mask |= std::size_t{1} << c;
      out.push_back(dp[mask] ? *dp[mask] : Polynomial<Field>(m.field(), m.nvars()));
    }
  }
  return out;
}

/// Evaluated matrix as a ModMatrix.
inline ModMatrix evaluate_mod(const PolyMatrix<PrimeField>& m, std::span<const std::uint32_t> point) {
  ModMatrix out(m.field().modulus(), static_cast<std::size_t>(m.size()), static_cast<std::size_t>(m.size()));
  out.data = m.evaluate(point);
  return out;
}

}  // namespace hessloci
