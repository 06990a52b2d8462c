#pragma once

// Exhaustive enumeration of P^n(F_p) against the Hessian of a cubic: rank
// strata, the pointwise singular-locus criterion, the correspondence
// H(x)y = 0 and its triangles. Every statement here is about rational points.

#include "hessloci/hessian.hpp"
#include "hessloci/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hessloci {

inline constexpr std::uint64_t kEnumerationBudget = 30'000'000;

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const char* const kRationalPointCaveat =
    "rational points only: agreement over F_p is a necessary condition, not a statement over the closure";

/// Point of P^n(F_p) scaled so its first nonzero coordinate is 1.
struct ProjPoint {
  std::vector<std::uint32_t> coords;

  static ProjPoint normalized(std::vector<std::uint32_t> v, const PrimeField& F) {
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
    if (it == v.end()) throw std::invalid_argument("ProjPoint: zero vector");
    auto inv = F.inv(*it);
    for (auto& c : v) c = F.mul(c, inv);
    return ProjPoint{std::move(v)};
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ":" : "") + std::to_string(coords[i]);
    return s + ")";
  }
  auto operator<=>(const ProjPoint&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }

inline std::uint64_t projective_point_count(int n, std::uint32_t p) {
  std::uint64_t total = 0, pw = 1;
  for (int i = 0; i <= n; ++i) {
    total += pw;
    pw *= p;
  }
  return total;
}

/// Calls fn(coords) for every normalized point in ascending lexicographic order.
template <class Fn>
void for_each_point(int nvars, std::uint32_t p, Fn&& fn) {
  std::vector<std::uint32_t> x(static_cast<std::size_t>(nvars));
  for (int lead = nvars - 1; lead >= 0; --lead) {
    std::fill(x.begin(), x.end(), 0u);
    x[static_cast<std::size_t>(lead)] = 1;
    for (;;) {
      fn(std::span<const std::uint32_t>(x));
      int i = nvars - 1;
      while (i > lead && x[static_cast<std::size_t>(i)] == p - 1) x[static_cast<std::size_t>(i--)] = 0;
      if (i == lead) break;
      ++x[static_cast<std::size_t>(i)];
    }
  }
}

inline void check_budget(int nvars, std::uint32_t p, std::uint64_t budget) {
  auto count = projective_point_count(nvars - 1, p);
  if (count > budget)
    throw BudgetError("enumeration of P^" + std::to_string(nvars - 1) + "(F_" + std::to_string(p) + ") needs " +
                      std::to_string(count) + " points, budget is " + std::to_string(budget));
}

/// Fast pointwise access to H_f(x) = sum_k x_k T_k, with T_k the constant
/// matrices of third partials.
class HessianEvaluator {
 public:
  explicit HessianEvaluator(const CubicForm<PrimeField>& f) : f_(f), hd_(hessian_data(f)), F_(f.field()) {
    N_ = f.nvars();
    T_.assign(static_cast<std::size_t>(N_ * N_ * N_), 0);
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j)
        for (int k = 0; k < N_; ++k)
          T_[idx(k, i, j)] = hd_.matrix.at(i, j).coeff(Monomial::var(k));
    for (int k = 0; k < N_; ++k) hess_grad_.push_back(hd_.hess.diff(k));
  }

  int nvars() const { return N_; }
  const PrimeField& field() const { return F_; }
  const CubicForm<PrimeField>& cubic() const { return f_; }
  const HessianData<PrimeField>& data() const { return hd_; }

  /// Row-major N x N evaluation.
  void matrix_at(std::span<const std::uint32_t> x, std::uint32_t* out) const {
    const std::uint64_t p = F_.modulus();
    const std::size_t NN = static_cast<std::size_t>(N_ * N_);
    std::array<std::uint64_t, kMaxDetSize * kMaxDetSize> acc{};
    for (int k = 0; k < N_; ++k) {
      std::uint64_t xk = x[static_cast<std::size_t>(k)];
      if (xk == 0) continue;
      const std::uint32_t* t = T_.data() + static_cast<std::size_t>(k) * NN;
      for (std::size_t e = 0; e < NN; ++e) acc[e] += xk * t[e];
    }
    for (std::size_t e = 0; e < NN; ++e) out[e] = static_cast<std::uint32_t>(acc[e] % p);
  }

  std::vector<std::uint32_t> matrix_at(std::span<const std::uint32_t> x) const {
    std::vector<std::uint32_t> m(static_cast<std::size_t>(N_ * N_));
    matrix_at(x, m.data());
    return m;
  }

  int rank_at(std::span<const std::uint32_t> x) const {
    std::array<std::uint32_t, kMaxDetSize * kMaxDetSize> m{};
    matrix_at(x, m.data());
    return small_rank(m.data());
  }

  /// y^T-contraction H(x) y.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const {
    auto m = matrix_at(x);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(N_), 0);
    const std::uint64_t p = F_.modulus();
    for (int i = 0; i < N_; ++i) {
      std::uint64_t s = 0;
      for (int j = 0; j < N_; ++j) s += static_cast<std::uint64_t>(m[static_cast<std::size_t>(i * N_ + j)]) * y[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(s % p);
    }
    return out;
  }

  bool annihilates(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const {
    auto v = apply(x, y);
    return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
  }

  /// Projective points of P(ker H(x)), sorted.
  std::vector<ProjPoint> kernel_points(std::span<const std::uint32_t> x) const {
    auto m = matrix_at(x);
    EchelonBasis eb(F_.modulus(), static_cast<std::size_t>(N_));
    for (int i = 0; i < N_; ++i)
      eb.add_row(std::span<const std::uint32_t>(m.data() + i * N_, static_cast<std::size_t>(N_)));
    return span_points(eb.nullspace());
  }

  std::uint32_t hess_at(std::span<const std::uint32_t> x) const { return hd_.hess.eval(x); }
  bool hess_gradient_vanishes(std::span<const std::uint32_t> x) const {
    for (const auto& g : hess_grad_)
      if (g.eval(x) != 0) return false;
    return true;
  }

  /// Normalized points of the projectivized span of `basis`.
  std::vector<ProjPoint> span_points(const std::vector<std::vector<std::uint32_t>>& basis) const {
    std::vector<ProjPoint> out;
    const int dim = static_cast<int>(basis.size());
    if (dim == 0) return out;
    std::vector<std::uint32_t> coef(static_cast<std::size_t>(dim));
    const std::uint64_t p = F_.modulus();
    for_each_point(dim, F_.modulus(), [&](std::span<const std::uint32_t> c) {
      std::vector<std::uint32_t> v(static_cast<std::size_t>(N_), 0);
      for (int b = 0; b < dim; ++b) {
        if (c[static_cast<std::size_t>(b)] == 0) continue;
        for (int i = 0; i < N_; ++i)
          v[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(
              (v[static_cast<std::size_t>(i)] + static_cast<std::uint64_t>(c[static_cast<std::size_t>(b)]) * basis[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]) % p);
      }
      out.push_back(ProjPoint::normalized(std::move(v), F_));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t idx(int k, int i, int j) const { return static_cast<std::size_t>((k * N_ + i) * N_ + j); }

  int small_rank(std::uint32_t* m) const {
    const std::uint32_t p = F_.modulus();
    int rank = 0;
    for (int c = 0; c < N_ && rank < N_; ++c) {
      int piv = rank;
      while (piv < N_ && m[piv * N_ + c] == 0) ++piv;
      if (piv == N_) continue;
      if (piv != rank)
        for (int j = c; j < N_; ++j) std::swap(m[piv * N_ + j], m[rank * N_ + j]);
      std::uint64_t inv = F_.inv(m[rank * N_ + c]);
      for (int i = rank + 1; i < N_; ++i) {
        if (m[i * N_ + c] == 0) continue;
        std::uint64_t factor = p - m[i * N_ + c] * inv % p;
        for (int j = c; j < N_; ++j)
          m[i * N_ + j] = static_cast<std::uint32_t>((m[i * N_ + j] + factor * m[rank * N_ + j]) % p);
      }
      ++rank;
    }
    return rank;
  }

  CubicForm<PrimeField> f_;
  HessianData<PrimeField> hd_;
  PrimeField F_;
  int N_ = 0;
  std::vector<std::uint32_t> T_;
  std::vector<Polynomial<PrimeField>> hess_grad_;
};

struct StratumReport {
  std::uint32_t prime = 0;
  int n = 0;
  std::vector<std::uint64_t> counts;  // counts[k] = #{x : rank H(x) = k}, k = 0..n+1
  struct RankList {
    int rank = -1;
    std::vector<ProjPoint> points;  // first kListCap points in enumeration order
    bool truncated = false;
  };
  std::vector<RankList> lowest;  // the two smallest nonempty ranks
  static constexpr std::size_t kListCap = 4096;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  /// #{x : rank H(x) <= k}
  std::uint64_t at_most(int k) const {
    std::uint64_t t = 0;
    for (int i = 0; i <= k && i < static_cast<int>(counts.size()); ++i) t += counts[static_cast<std::size_t>(i)];
    return t;
  }
};

inline StratumReport stratify(const HessianEvaluator& ev, std::uint64_t budget = kEnumerationBudget) {
  const int N = ev.nvars();
  const std::uint32_t p = ev.field().modulus();
  check_budget(N, p, budget);
  StratumReport r;
  r.prime = p;
  r.n = N - 1;
  r.counts.assign(static_cast<std::size_t>(N + 1), 0);
  std::map<int, StratumReport::RankList> lists;
  for_each_point(N, p, [&](std::span<const std::uint32_t> x) {
    int k = ev.rank_at(x);
    ++r.counts[static_cast<std::size_t>(k)];
    // a rank evicted once can never return to the two smallest
    auto it = lists.find(k);
    if (it == lists.end()) {
      if (lists.size() == 2 && k > std::prev(lists.end())->first) return;
      it = lists.emplace(k, StratumReport::RankList{k, {}, false}).first;
      if (lists.size() > 2) lists.erase(std::prev(lists.end()));
    }
    auto& l = it->second;
    if (l.points.size() < StratumReport::kListCap)
      l.points.push_back(ProjPoint{{x.begin(), x.end()}});
    else
      l.truncated = true;
  });
  for (auto& [k, l] : lists) r.lowest.push_back(std::move(l));
  return r;
}

inline StratumReport stratify(const CubicForm<PrimeField>& f, std::uint64_t budget = kEnumerationBudget) {
  check_budget(f.nvars(), f.field().modulus(), budget);
  return stratify(HessianEvaluator(f), budget);
}

/// All points of rank <= k, in enumeration order.
inline std::vector<ProjPoint> rank_locus_points(const HessianEvaluator& ev, int k,
                                                std::uint64_t budget = kEnumerationBudget) {
  check_budget(ev.nvars(), ev.field().modulus(), budget);
  std::vector<ProjPoint> out;
  for_each_point(ev.nvars(), ev.field().modulus(), [&](std::span<const std::uint32_t> x) {
    if (ev.rank_at(x) <= k) out.push_back(ProjPoint{{x.begin(), x.end()}});
  });
  return out;
}

struct TheoremACertificate {
  std::uint32_t prime = 0;
  bool pass = false;
  std::uint64_t hypersurface_points = 0;    // h_f(x) = 0
  std::uint64_t singular_points = 0;        // h_f and all its partials vanish
  std::uint64_t low_rank_points = 0;        // rank <= n-1
  struct Counterexample {
    ProjPoint point;
    int rank;
    bool gradient_vanishes;
  };
  std::vector<Counterexample> counterexamples;  // first kCap in enumeration order
  std::uint64_t counterexample_count = 0;
  static constexpr std::size_t kCap = 64;
  std::string caveat = kRationalPointCaveat;
};

/// For each rational x with h_f(x) = 0: grad h_f(x) = 0  <=>  rank H_f(x) <= n-1.
inline TheoremACertificate verify_theorem_A(const HessianEvaluator& ev, std::uint64_t budget = kEnumerationBudget) {
  const int N = ev.nvars();
  check_budget(N, ev.field().modulus(), budget);
  TheoremACertificate cert;
  cert.prime = ev.field().modulus();
  for_each_point(N, cert.prime, [&](std::span<const std::uint32_t> x) {
    if (ev.hess_at(x) != 0) return;
    ++cert.hypersurface_points;
    bool sing = ev.hess_gradient_vanishes(x);
    int rank = ev.rank_at(x);
    bool low = rank <= N - 2;
    cert.singular_points += sing;
    cert.low_rank_points += low;
    if (sing != low) {
      ++cert.counterexample_count;
      if (cert.counterexamples.size() < TheoremACertificate::kCap)
        cert.counterexamples.push_back({ProjPoint{{x.begin(), x.end()}}, rank, sing});
    }
  });
  cert.pass = cert.counterexample_count == 0;
  return cert;
}

inline TheoremACertificate verify_theorem_A(const CubicForm<PrimeField>& f, std::uint64_t budget = kEnumerationBudget) {
  check_budget(f.nvars(), f.field().modulus(), budget);
  return verify_theorem_A(HessianEvaluator(f), budget);
}

/// Pair ([x],[y]) with H_f(x)y = 0.
class GammaPair {
 public:
  GammaPair(const HessianEvaluator& ev, ProjPoint x, ProjPoint y) : x_(std::move(x)), y_(std::move(y)) {
    if (!ev.annihilates(x_.coords, y_.coords))
      throw std::invalid_argument("GammaPair: H(x)y != 0 for x = " + x_.to_string() + ", y = " + y_.to_string());
  }
  const ProjPoint& x() const { return x_; }
  const ProjPoint& y() const { return y_; }
  auto operator<=>(const GammaPair&) const = default;

 private:
  ProjPoint x_, y_;
};

/// All rational pairs, sorted by (x, y).
inline std::vector<GammaPair> gamma_pairs(const HessianEvaluator& ev, std::uint64_t budget = kEnumerationBudget) {
  const int N = ev.nvars();
  check_budget(N, ev.field().modulus(), budget);
  std::vector<GammaPair> out;
  for_each_point(N, ev.field().modulus(), [&](std::span<const std::uint32_t> x) {
    if (ev.rank_at(x) == N) return;
    ProjPoint px{{x.begin(), x.end()}};
    for (auto& y : ev.kernel_points(x)) out.emplace_back(ev, px, std::move(y));
  });
  return out;
}

/// (x, y) is singular on the correspondence iff the block Jacobian
/// (H(y) | H(x)) has rank below n+1, i.e. ker H(x) and ker H(y) meet.
inline bool gamma_pair_singular(const HessianEvaluator& ev, const GammaPair& g) {
  const int N = ev.nvars();
  auto a = ev.matrix_at(g.y().coords);
  auto b = ev.matrix_at(g.x().coords);
  ModMatrix block(ev.field().modulus(), static_cast<std::size_t>(N), static_cast<std::size_t>(2 * N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      block(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = a[static_cast<std::size_t>(i * N + j)];
      block(static_cast<std::size_t>(i), static_cast<std::size_t>(N + j)) = b[static_cast<std::size_t>(i * N + j)];
    }
  return rank_ff(std::move(block)) < static_cast<std::size_t>(N);
}

inline std::vector<GammaPair> gamma_singular_pairs(const HessianEvaluator& ev, const std::vector<GammaPair>& pairs) {
  std::vector<GammaPair> out;
  for (const auto& g : pairs)
    if (gamma_pair_singular(ev, g)) out.push_back(g);
  return out;
}

/// Unordered triple with vertices sorted; coinciding vertices are allowed.
struct Triangle {
  std::array<ProjPoint, 3> v;
  auto operator<=>(const Triangle&) const = default;
};

/// Every rational triangle, once, as its sorted vertex multiset.
/// Distinct vertices each have two independent kernel vectors, so they lie in
/// rank <= n-1; a repeated vertex x needs H(x)x = 0, i.e. a singular point of V(f).
inline std::vector<Triangle> find_triangles(const HessianEvaluator& ev, std::uint64_t budget = kEnumerationBudget) {
  const int N = ev.nvars();
  check_budget(N, ev.field().modulus(), budget);
  std::set<Triangle> found;

  std::vector<ProjPoint> verts;
  std::vector<ProjPoint> diagonal;
  for_each_point(N, ev.field().modulus(), [&](std::span<const std::uint32_t> x) {
    int r = ev.rank_at(x);
    if (r <= N - 2) verts.push_back(ProjPoint{{x.begin(), x.end()}});
    if (r < N && ev.annihilates(x, x)) diagonal.push_back(ProjPoint{{x.begin(), x.end()}});
  });

  std::set<ProjPoint> vset(verts.begin(), verts.end());
  std::map<ProjPoint, std::set<ProjPoint>> nbr;
  for (const auto& x : verts) {
    auto& s = nbr[x];
    for (auto& y : ev.kernel_points(x.coords))
      if (y != x && vset.count(y)) s.insert(std::move(y));
  }
  for (const auto& [x, nx] : nbr)
    for (auto yi = nx.upper_bound(x); yi != nx.end(); ++yi)
      for (auto zi = std::next(yi); zi != nx.end(); ++zi)
        if (nbr[*yi].count(*zi)) found.insert(Triangle{{x, *yi, *zi}});

  for (const auto& x : diagonal)
    for (auto& z : ev.kernel_points(x.coords)) {
      std::array<ProjPoint, 3> t{x, x, z};
      std::sort(t.begin(), t.end());
      found.insert(Triangle{t});
    }
  return {found.begin(), found.end()};
}

/// x in iota(y), y in iota(z), z in iota(x).
inline bool is_triangle(const HessianEvaluator& ev, const ProjPoint& x, const ProjPoint& y, const ProjPoint& z) {
  return ev.annihilates(y.coords, x.coords) && ev.annihilates(z.coords, y.coords) &&
         ev.annihilates(x.coords, z.coords);
}

struct RankBoundReport {
  bool pass = true;
  int trials = 0;
  int tight = 0;  // trials attaining rank = 2(e+1-l)
  std::string first_failure;
};

/// Random symmetric phi on K^{e+1} vanishing on a random l-dimensional W
/// (drawn uniformly from the linear space of such forms); asserts
/// rank phi <= 2(e+1-l).
inline RankBoundReport rank_bound_lemma_check(int trials, std::uint64_t seed, std::uint32_t p = 101) {
  PrimeField F(p);
  std::mt19937_64 rng(seed);
  RankBoundReport rep;
  for (int t = 0; t < trials; ++t) {
    const int dim = 2 + static_cast<int>(rng() % 6);  // e+1 in [2,7]
    const int l = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    std::vector<std::vector<std::uint32_t>> W;
    for (int i = 0; i < l; ++i) {
      std::vector<std::uint32_t> w(static_cast<std::size_t>(dim));
      for (auto& c : w) c = static_cast<std::uint32_t>(rng() % p);
      W.push_back(std::move(w));
    }
    // unknowns: phi_{ab}, a <= b
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < dim; ++a)
      for (int b = a; b < dim; ++b) slots.emplace_back(a, b);
    EchelonBasis eq(p, slots.size());
    for (int i = 0; i < l; ++i)
      for (int j = i; j < l; ++j) {
        std::vector<std::uint32_t> row(slots.size());
        for (std::size_t s = 0; s < slots.size(); ++s) {
          auto [a, b] = slots[s];
          const auto& wi = W[static_cast<std::size_t>(i)];
          const auto& wj = W[static_cast<std::size_t>(j)];
          std::uint32_t c = F.mul(wi[static_cast<std::size_t>(a)], wj[static_cast<std::size_t>(b)]);
          if (a != b) c = F.add(c, F.mul(wi[static_cast<std::size_t>(b)], wj[static_cast<std::size_t>(a)]));
          row[s] = c;
        }
        eq.add_row(row);
      }
    auto ker = eq.nullspace();
    ModMatrix phi(p, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (const auto& k : ker) {
      auto c = static_cast<std::uint32_t>(rng() % p);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        auto [a, b] = slots[s];
        auto v = F.add(phi(static_cast<std::size_t>(a), static_cast<std::size_t>(b)), F.mul(c, k[s]));
        phi(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = v;
        phi(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = v;
      }
    }
    // the bound is about dim W = l; skip degenerate draws of W
    ModMatrix wm(p, static_cast<std::size_t>(l), static_cast<std::size_t>(dim));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < dim; ++j) wm(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = W[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (rank_ff(wm) != static_cast<std::size_t>(l)) continue;
    ++rep.trials;
    auto r = static_cast<int>(rank_ff(phi));
    const int bound = 2 * (dim - l);
    if (r == std::min(bound, dim)) ++rep.tight;
    if (r > bound && rep.pass) {
      rep.pass = false;
      rep.first_failure = "e+1=" + std::to_string(dim) + " l=" + std::to_string(l) + " rank=" + std::to_string(r);
    }
  }
  return rep;
}

/// x0*x4 + x1*x5 on K^6 vanishes on span(e0..e3): rank 4 against the bound 2(6-4).
inline std::pair<int, int> rank_bound_tight_example(std::uint32_t p = 101) {
  ModMatrix phi(p, 6, 6);
  phi(0, 4) = phi(4, 0) = 1;
  phi(1, 5) = phi(5, 1) = 1;
  return {static_cast<int>(rank_ff(phi)), 2 * (6 - 4)};
}

}  // namespace hessloci
