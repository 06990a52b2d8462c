#pragma once

// Hilbert functions of graded ideals over GF(p) by linear algebra in each
// degree, Hilbert-polynomial fitting and invariant extraction.
//
// Two routes compute HF(S/I, d):
//   hf_value   - rank of the Macaulay matrix {g*m} in degree d, taken literally;
//   hf_window  - the annihilator of I_d under the contraction pairing, lifted
//                degree by degree from the annihilator of I_{d-1}.

#include "hessloci/linalg.hpp"
#include "hessloci/monomial.hpp"
#include "hessloci/polynomial.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hessloci {

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Homogeneous generators over GF(p).
class GradedIdeal {
 public:
  using Poly = Polynomial<PrimeField>;

  GradedIdeal(PrimeField field, int nvars, std::vector<Poly> gens)
      : field_(field), nvars_(nvars), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (g.nvars() != nvars_ || !(g.field() == field_))
        throw std::invalid_argument("GradedIdeal: generator lives in a different ring");
      if (!g.is_homogeneous()) throw std::invalid_argument("GradedIdeal: generator is not homogeneous");
    }
  }

  const PrimeField& field() const { return field_; }
  std::uint32_t prime() const { return field_.modulus(); }
  int nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }

  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& g : gens_) d.push_back(g.degree());
    return d;
  }

  /// True when two generators coincide exactly.
  bool has_duplicates() const {
    std::set<std::string> seen;
    for (const auto& g : gens_)
      if (!seen.insert(g.to_string()).second) return true;
    return false;
  }

  GradedIdeal with_generator(Poly g) const {
    auto gens = gens_;
    gens.push_back(std::move(g));
    return GradedIdeal(field_, nvars_, std::move(gens));
  }

 private:
  PrimeField field_;
  int nvars_;
  std::vector<Poly> gens_;
};

/// Positions of the degree-d monomials in descending grlex order.
class MonomialIndex {
 public:
  MonomialIndex(int nvars, int d) : mons_(monomials_of_degree(nvars, d)) {
    index_.reserve(mons_.size() * 2);
    for (std::size_t i = 0; i < mons_.size(); ++i) index_.emplace(mons_[i], i);
  }
  std::size_t size() const { return mons_.size(); }
  const std::vector<Monomial>& monomials() const { return mons_; }
  std::size_t at(const Monomial& m) const { return index_.at(m); }

 private:
  std::vector<Monomial> mons_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// HF(S/I, d) = dim S^d - rank{ g*m : deg g + deg m = d }, computed over GF(p).
inline std::uint64_t hf_value(const GradedIdeal& I, int d) {
  if (d < 0) throw std::invalid_argument("hf_value: negative degree");
  MonomialIndex cols(I.nvars(), d);
  EchelonBasis basis(I.prime(), cols.size());
  std::vector<std::uint32_t> row(cols.size());
  for (const auto& g : I.generators()) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(I.nvars(), d - g.degree())) {
      std::fill(row.begin(), row.end(), 0u);
      for (const auto& [t, c] : g.terms()) row[cols.at(t * m)] = c;
      basis.add_row(row);
      if (basis.full()) return 0;
    }
  }
  return cols.size() - basis.rank();
}

struct HilbertWindow {
  std::uint32_t prime = 0;
  int d0 = 0, d1 = -1;
  std::vector<std::uint64_t> values;  // values[i] = HF(S/I, d0 + i)

  std::uint64_t at(int d) const { return values.at(static_cast<std::size_t>(d - d0)); }
  bool operator==(const HilbertWindow&) const = default;
};

namespace detail {

/// Annihilator of I_d inside the dual of S^d, stored monomial-major:
/// coords[idx * dim + k] is the coefficient of basis vector k at monomial idx.
struct InverseSystemSlice {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<std::uint32_t> coords;
};

class InverseSystemLift {
 public:
  explicit InverseSystemLift(const GradedIdeal& I) : I_(I), F_(I.field()) {
    InverseSystemSlice s0;
    bool killed = false;
    for (const auto& g : I.generators())
      if (!g.is_zero() && g.degree() == 0) killed = true;
    s0.dim = killed ? 0 : 1;
    if (!killed) s0.coords = {1u};
    index_.emplace_back(I.nvars(), 0);
    current_ = std::move(s0);
  }

  const InverseSystemSlice& current() const { return current_; }

  void step() {
    const int d = current_.degree + 1;
    const int n = I_.nvars();
    const std::uint64_t p = F_.modulus();
    const std::size_t h_prev = current_.dim;
    const MonomialIndex& prev_index = index_.back();
    MonomialIndex cur_index(n, d);

    InverseSystemSlice next;
    next.degree = d;
    if (h_prev == 0) {
      // Annihilator already zero: I contains all of S^(d-1) and hence S^d.
      index_.push_back(std::move(cur_index));
      if (index_.size() > 2) index_.erase(index_.begin());
      current_ = std::move(next);
      return;
    }

    // x0-free monomials of degree d carry the unknowns beta; alpha are the
    // coordinates of y0 -| F in the previous annihilator basis.
    std::vector<std::int64_t> free_pos(cur_index.size(), -1);
    std::size_t n_free = 0;
    for (std::size_t i = 0; i < cur_index.size(); ++i)
      if (cur_index.monomials()[i][0] == 0) free_pos[i] = static_cast<std::int64_t>(n_free++);
    const std::size_t unknowns = h_prev + n_free;

    EchelonBasis eq(F_.modulus(), unknowns);
    std::vector<std::uint64_t> acc(unknowns);
    std::vector<std::uint32_t> row(unknowns);
    const auto& prev = current_.coords;

    for (const auto& g : I_.generators()) {
      if (g.is_zero() || g.degree() > d) continue;
      // multipliers m of degree d - deg g without x0
      std::vector<Monomial> mults;
      for (const auto& m : monomials_of_degree(n, d - g.degree()))
        if (m[0] == 0) mults.push_back(m);
      for (const auto& m : mults) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [t, c] : g.terms()) {
          Monomial u = t * m;
          if (u[0] > 0) {
            std::size_t idx = prev_index.at(u.lowered(0));
            const std::uint32_t* v = prev.data() + idx * h_prev;
            for (std::size_t k = 0; k < h_prev; ++k) acc[k] += static_cast<std::uint64_t>(c) * v[k];
          } else {
            acc[h_prev + static_cast<std::size_t>(free_pos[cur_index.at(u)])] += c;
          }
        }
        // at most (#terms) products accumulated, far below overflow for p < 2^31
        for (std::size_t k = 0; k < unknowns; ++k) row[k] = static_cast<std::uint32_t>(acc[k] % p);
        eq.add_row(row);
        if (eq.full()) break;
      }
      if (eq.full()) break;
    }

    auto kernel = eq.nullspace();
    next.dim = kernel.size();
    next.coords.assign(cur_index.size() * next.dim, 0);
    const std::size_t h = next.dim;
    std::vector<std::uint64_t> dot(h);
    for (std::size_t i = 0; i < cur_index.size(); ++i) {
      const Monomial& u = cur_index.monomials()[i];
      std::uint32_t* out = next.coords.data() + i * h;
      if (u[0] == 0) {
        std::size_t b = h_prev + static_cast<std::size_t>(free_pos[i]);
        for (std::size_t k = 0; k < h; ++k) out[k] = kernel[k][b];
        continue;
      }
      const std::uint32_t* v = prev.data() + prev_index.at(u.lowered(0)) * h_prev;
      for (std::size_t k = 0; k < h; ++k) {
        const std::uint32_t* a = kernel[k].data();
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < h_prev; ++j) {
          s += static_cast<std::uint64_t>(a[j]) * v[j];
          if ((j & 1023) == 1023) s %= p;
        }
        out[k] = static_cast<std::uint32_t>(s % p);
      }
    }
    index_.push_back(std::move(cur_index));
    if (index_.size() > 2) index_.erase(index_.begin());
    current_ = std::move(next);
  }

 private:
  const GradedIdeal& I_;
  PrimeField F_;
  std::vector<MonomialIndex> index_;  // index of current degree is back()
  InverseSystemSlice current_;
};

}  // namespace detail

/// HF(S/I, d) for d in [d0, d1], sharing one degree-by-degree lift of the
/// annihilator of I.
inline HilbertWindow hf_window(const GradedIdeal& I, int d0, int d1) {
  if (d0 < 0 || d1 < d0) throw std::invalid_argument("hf_window: need 0 <= d0 <= d1");
  HilbertWindow w;
  w.prime = I.prime();
  w.d0 = d0;
  w.d1 = d1;
  detail::InverseSystemLift lift(I);
  for (int d = 0; d <= d1; ++d) {
    if (d > 0) lift.step();
    if (d >= d0) w.values.push_back(lift.current().dim);
  }
  return w;
}

/// Polynomial in d with rational coefficients; coeffs[i] multiplies d^i.
struct HilbertPolynomial {
  std::vector<Rational> coeffs;

  int degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
      if (coeffs[i] != 0) return static_cast<int>(i);
    return -1;
  }
  Rational operator()(const Rational& d) const {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * d + coeffs[i];
    return acc;
  }
  bool operator==(const HilbertPolynomial& o) const {
    auto a = coeffs, b = o.coeffs;
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (!b.empty() && b.back() == 0) b.pop_back();
    return a == b;
  }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] == 0) continue;
      Rational c = coeffs[i];
      bool neg = c < 0;
      if (neg) c = -c;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono = i == 0 ? "" : (i == 1 ? "d" : "d^" + std::to_string(i));
      if (mono.empty())
        s += c.str();
      else if (c == 1)
        s += mono;
      else
        s += "(" + c.str() + ")*" + mono;
    }
    return s.empty() ? "0" : s;
  }
};

struct HilbertFit {
  HilbertPolynomial poly;
  int first_degree = 0;  // fit holds on [first_degree, window.d1]
  int d0 = 0, d1 = 0;
};

namespace detail {

/// Interpolating polynomial through (x_i, y_i), expanded in the power basis.
inline HilbertPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> nb(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        nb[k + 1] += basis[k];
        nb[k] -= basis[k] * xs[j];
      }
      basis = std::move(nb);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] += basis[k] * ys[i] / denom;
  }
  return HilbertPolynomial{out};
}

}  // namespace detail

/// Least-degree polynomial (degree <= dim_hint) agreeing with the tail of the
/// window on at least degree+3 consecutive values.
inline HilbertFit fit_hilbert_polynomial(const HilbertWindow& w, int dim_hint) {
  const int len = static_cast<int>(w.values.size());
  if (dim_hint < 0) throw std::invalid_argument("fit_hilbert_polynomial: negative dimension hint");
  if (len < dim_hint + 3)
    throw std::invalid_argument("fit_hilbert_polynomial: window of " + std::to_string(len) +
                                " values cannot fit degree " + std::to_string(dim_hint) +
                                " with two confirmations");
  for (int k = 0; k <= dim_hint; ++k) {
    std::vector<Rational> xs, ys;
    for (int d = w.d1 - k; d <= w.d1; ++d) {
      xs.emplace_back(d);
      ys.emplace_back(static_cast<long long>(w.at(d)));
    }
    HilbertPolynomial hp = detail::interpolate(xs, ys);
    int first = w.d1 + 1;
    for (int d = w.d1; d >= w.d0; --d) {
      if (hp(Rational(d)) != Rational(static_cast<long long>(w.at(d)))) break;
      first = d;
    }
    if (w.d1 - first + 1 >= k + 3) return HilbertFit{hp, first, w.d0, w.d1};
  }
  throw FitError("fit_hilbert_polynomial: no polynomial of degree <= " + std::to_string(dim_hint) +
                 " fits the tail of the window [" + std::to_string(w.d0) + "," + std::to_string(w.d1) + "]");
}

struct ProjectiveInvariants {
  int dimension = -1;
  BigInt degree = 0;
  BigInt chi = 0;  // HP(0), the arithmetic Euler characteristic
};

/// dimension = deg HP, degree = leading coefficient * dimension!, chi = HP(0).
inline ProjectiveInvariants extract_invariants(const HilbertPolynomial& hp) {
  ProjectiveInvariants inv;
  inv.dimension = hp.degree();
  if (inv.dimension < 0) return inv;
  Rational lead = hp.coeffs[static_cast<std::size_t>(inv.dimension)];
  for (int i = 2; i <= inv.dimension; ++i) lead *= i;
  if (denominator(lead) != 1) throw FitError("extract_invariants: non-integral degree " + lead.str());
  inv.degree = numerator(lead);
  Rational chi = hp(Rational(0));
  if (denominator(chi) != 1) throw FitError("extract_invariants: non-integral constant term " + chi.str());
  inv.chi = numerator(chi);
  return inv;
}

/// numerator(t) / (1 - t)^k.
struct HilbertSeriesRat {
  std::vector<BigInt> numerator;
  int k = 0;

  BigInt coefficient(int d) const {
    BigInt acc = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
      int e = d - static_cast<int>(i);
      if (e < 0) break;
      BigInt c = k == 0 ? BigInt(e == 0 ? 1 : 0) : BigInt(binomial(e + k - 1, k - 1));
      acc += numerator[i] * c;
    }
    return acc;
  }
};

inline bool series_match(const HilbertWindow& w, const HilbertSeriesRat& s) {
  for (int d = w.d0; d <= w.d1; ++d)
    if (s.coefficient(d) != BigInt(w.at(d))) return false;
  return true;
}

/// Checks, as formal power series through t^up_to, that
///   7(18t^2 - 21t + 8)/(1-t)^3 - sum_i h2[i] t^i  ==  (15t^4+10t^3+6t^2+3t+1)/(1-t)^3,
/// i.e. that h^0(O_Y(d)) agrees with the coordinate-ring Hilbert function.
inline bool proj_normality_series_check(const std::vector<BigInt>& h2_corrections = {55, 15},
                                        int up_to = 30) {
  HilbertSeriesRat chi_series{{56, -147, 126}, 3};
  HilbertSeriesRat coordinate_ring{{1, 3, 6, 10, 15}, 3};
  for (int d = 0; d <= up_to; ++d) {
    BigInt lhs = chi_series.coefficient(d);
    if (static_cast<std::size_t>(d) < h2_corrections.size()) lhs -= h2_corrections[static_cast<std::size_t>(d)];
    if (lhs != coordinate_ring.coefficient(d)) return false;
  }
  return true;
}

}  // namespace hessloci
