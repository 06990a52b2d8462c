#pragma once

// Bott's algorithm for S_lambda(S) on Gr(k, n), the plethysm of wedge powers of
// Sym^2, and the Koszul vanishing certificates on Gr(4,6) x P^5.

#include "hessloci/field.hpp"
#include "hessloci/monomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hessloci {

/// Weakly decreasing non-negative parts, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part in " + to_string());
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts not weakly decreasing in " + to_string());
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(length() ? parts_[0] : 0), 0);
    for (int p : parts_)
      for (int i = 0; i < p; ++i) ++c[static_cast<std::size_t>(i)];
    return Partition(c);
  }
  /// Frobenius coordinates (a | b): a_i = lambda_i - i - 1, b_i = lambda'_i - i - 1 over the diagonal.
  std::pair<std::vector<int>, std::vector<int>> frobenius() const {
    Partition c = conjugate();
    std::vector<int> a, b;
    for (int i = 0; i < length() && parts_[static_cast<std::size_t>(i)] > i; ++i) {
      a.push_back(parts_[static_cast<std::size_t>(i)] - i - 1);
      b.push_back(c[i] - i - 1);
    }
    return {a, b};
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }
  auto operator<=>(const Partition&) const = default;
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

 private:
  std::vector<int> parts_;
};

/// All partitions of n with at most max_parts parts, in reverse lex order.
inline std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0 && max_parts >= 0) rec(rec, n, n);
  return out;
}

/// Summands of wedge^j Sym^2 V, dim V = rank: partitions of 2j with Frobenius form (b+1 | b).
inline std::vector<Partition> wedge_sym2_decompose(int j, int rank) {
  if (rank < 1 || j < 1 || static_cast<std::uint64_t>(j) > binomial(rank + 1, 2))
    throw std::invalid_argument("wedge_sym2_decompose: need 1 <= j <= C(rank+1,2), got j=" + std::to_string(j) +
                                " rank=" + std::to_string(rank));
  std::vector<Partition> out;
  for (auto& p : partitions_of(2 * j, rank)) {
    auto [a, b] = p.frobenius();
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[i] + 1;
    if (ok) out.push_back(p);
  }
  return out;
}

/// prod_{i<j} (w_i - w_j + j - i)/(j - i) for weakly decreasing w.
inline BigInt weyl_dimension(const std::vector<int>& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] > w[i - 1]) throw std::invalid_argument("weyl_dimension: weight not dominant");
  BigInt num = 1, den = 1;
  const int m = static_cast<int>(w.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      num *= w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

/// dim S_lambda(C^m); zero when lambda has more than m parts.
inline BigInt schur_dimension(const Partition& lambda, int m) {
  if (lambda.length() > m) return 0;
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < lambda.length(); ++i) w[static_cast<std::size_t>(i)] = lambda[i];
  return weyl_dimension(w);
}

/// GL(n) weight split as (quotient block | sub block).
struct WeightVector {
  std::vector<int> entries;
  int quotient_len = 0;

  static WeightVector for_sub(const Partition& lambda, int k_sub, int n_amb) {
    WeightVector w;
    w.quotient_len = n_amb - k_sub;
    w.entries.assign(static_cast<std::size_t>(n_amb), 0);
    for (int i = 0; i < lambda.length(); ++i) w.entries[static_cast<std::size_t>(w.quotient_len + i)] = lambda[i];
    return w;
  }
  bool block_dominant() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (static_cast<int>(i) != quotient_len && entries[i] > entries[i - 1]) return false;
    return true;
  }
};

/// dim == 0 means every cohomology group vanishes.
struct CohomologyEntry {
  int i = 0;
  BigInt dim = 0;
  bool vanishes() const { return dim == 0; }
  bool operator==(const CohomologyEntry&) const = default;
};

/// Bott's algorithm for S_lambda(S), S the rank k_sub tautological subbundle on Gr(k_sub, n_amb).
inline CohomologyEntry bott_cohomology(const Partition& lambda, int k_sub, int n_amb) {
  if (k_sub < 1 || k_sub > n_amb) throw std::invalid_argument("bott_cohomology: need 1 <= k_sub <= n_amb");
  if (lambda.length() > k_sub)
    throw std::invalid_argument("bott_cohomology: " + lambda.to_string() + " has more than " + std::to_string(k_sub) + " parts");
  auto w = WeightVector::for_sub(lambda, k_sub, n_amb).entries;
  for (int i = 0; i < n_amb; ++i) w[static_cast<std::size_t>(i)] += n_amb - 1 - i;
  // bubble sort to strictly decreasing; ell counts transpositions
  int ell = 0;
  for (int pass = 0; pass < n_amb; ++pass)
    for (int i = 0; i + 1 < n_amb; ++i) {
      auto& a = w[static_cast<std::size_t>(i)];
      auto& b = w[static_cast<std::size_t>(i + 1)];
      if (a == b) return {0, 0};
      if (a < b) {
        std::swap(a, b);
        ++ell;
      }
    }
  for (int i = 0; i < n_amb; ++i) w[static_cast<std::size_t>(i)] -= n_amb - 1 - i;
  return {ell, weyl_dimension(w)};
}

/// H^i(wedge^j Sym^2 S) on Gr(4,6), summed over summands, nonzero degrees only.
inline std::map<int, BigInt> wedge_sym2_cohomology(int j) {
  std::map<int, BigInt> out;
  for (const auto& lambda : wedge_sym2_decompose(j, 4)) {
    auto e = bott_cohomology(lambda, 4, 6);
    if (!e.vanishes()) out[e.i] += e.dim;
  }
  return out;
}

/// (i, j) with H^i(wedge^j Sym^2 S) != 0 on Gr(4,6), j = 1..10.
inline std::set<std::pair<int, int>> vanishing_table() {
  std::set<std::pair<int, int>> out;
  for (int j = 1; j <= 10; ++j)
    for (const auto& [i, dim] : wedge_sym2_cohomology(j)) out.insert({i, j});
  return out;
}

/// Nonzero H^b(O_{P^5}(m)), as (b, dim).
inline std::vector<CohomologyEntry> line_bundle_cohomology_p5(int m) {
  if (m >= 0) return {{0, BigInt(binomial(m + 5, 5))}};
  if (m <= -6) return {{5, BigInt(binomial(-m - 1, 5))}};
  return {};
}

/// H^i(pi_2^* O(d) tensor wedge^j P^*) on Gr(4,6) x P^5 with P^* = Sym^2 S boxtimes O(-1);
/// nonzero degrees only, ascending in i.
inline std::vector<CohomologyEntry> kunneth_h(int j, int d) {
  if (j < 1 || j > 10) throw std::invalid_argument("kunneth_h: need 1 <= j <= 10");
  std::map<int, BigInt> acc;
  auto line = line_bundle_cohomology_p5(d - j);
  for (const auto& [a, da] : wedge_sym2_cohomology(j))
    for (const auto& lb : line) acc[a + lb.i] += da * lb.dim;
  std::vector<CohomologyEntry> out;
  for (auto& [i, dim] : acc) out.push_back({i, dim});
  return out;
}

inline bool kunneth_vanishes(int j, int d, int i) {
  for (const auto& e : kunneth_h(j, d))
    if (e.i == i) return false;
  return true;
}

/// H^{j+k-1}(O(d) tensor wedge^j P^*) = 0 for j = 1..10, which forces H^k(I_Z tensor O(d)) = 0.
inline bool koszul_certificate(int k, int d) {
  for (int j = 1; j <= 10; ++j)
    if (!kunneth_vanishes(j, d, j + k - 1)) return false;
  return true;
}

struct DoubleCoverProfile {
  int h = 0;
  int m = 0;  // dimension of a maximal isotropic subspace
  int families = 0;
  BigInt family_dim = 0;
  int edim_Z = 0;
};

/// Isotropic-subspace profile for a quadric of rank k on a rank e_rank bundle over P^5.
inline DoubleCoverProfile double_cover_profile(int e_rank, int k) {
  if (k < 1 || k > e_rank)
    throw std::invalid_argument("double_cover_profile: need 1 <= k <= e_rank, got e_rank=" + std::to_string(e_rank) +
                                " k=" + std::to_string(k));
  DoubleCoverProfile p;
  p.h = k / 2;
  p.m = e_rank - k + p.h;
  if (k % 2 == 0) {
    p.families = 2;
    p.family_dim = BigInt(binomial(p.h, 2));
  } else {
    p.families = 1;
    p.family_dim = BigInt(binomial(p.h + 1, 2));
  }
  p.edim_Z = 5 + p.m * (e_rank - p.m) - static_cast<int>(binomial(p.m + 1, 2));
  return p;
}

}  // namespace hessloci
