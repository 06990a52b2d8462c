#pragma once

// Closed-form intersection numbers for rank loci of symmetric maps and the
// invariants of the degeneracy surface of a cubic fourfold. Exact rationals only.

#include "hessloci/field.hpp"
#include "hessloci/hilbert.hpp"
#include "hessloci/monomial.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hessloci {

/// sum_i coeffs[i] H^i in Q[H]/(H^{n+1}).
struct IntersectionClass {
  int n = 0;
  std::vector<Rational> coeffs;

  explicit IntersectionClass(int ambient, std::vector<Rational> c = {}) : n(ambient), coeffs(std::move(c)) {
    if (ambient < 0) throw std::invalid_argument("IntersectionClass: negative ambient dimension");
    coeffs.resize(static_cast<std::size_t>(n + 1), Rational(0));
  }
  static IntersectionClass monomial(int ambient, int power, Rational c) {
    IntersectionClass r(ambient);
    if (power >= 0 && power <= ambient) r.coeffs[static_cast<std::size_t>(power)] = c;
    return r;
  }

  const Rational& operator[](int i) const { return coeffs.at(static_cast<std::size_t>(i)); }
  /// Degree of the zero-dimensional part.
  const Rational& degree() const { return coeffs.back(); }

  IntersectionClass operator+(const IntersectionClass& o) const {
    check(o);
    IntersectionClass r(n);
    for (int i = 0; i <= n; ++i) r.coeffs[static_cast<std::size_t>(i)] = coeffs[static_cast<std::size_t>(i)] + o.coeffs[static_cast<std::size_t>(i)];
    return r;
  }
  IntersectionClass operator-(const IntersectionClass& o) const { return *this + o * Rational(-1); }
  IntersectionClass operator*(const Rational& s) const {
    IntersectionClass r(n);
    for (int i = 0; i <= n; ++i) r.coeffs[static_cast<std::size_t>(i)] = coeffs[static_cast<std::size_t>(i)] * s;
    return r;
  }
  IntersectionClass operator*(const IntersectionClass& o) const {
    check(o);
    IntersectionClass r(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        r.coeffs[static_cast<std::size_t>(i + j)] += coeffs[static_cast<std::size_t>(i)] * o.coeffs[static_cast<std::size_t>(j)];
    return r;
  }
  bool operator==(const IntersectionClass&) const = default;

  std::string to_string() const {
    std::string s;
    for (int i = n; i >= 0; --i) {
      Rational c = coeffs[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      bool neg = c < 0;
      if (neg) c = -c;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string h = i == 0 ? "" : (i == 1 ? "H" : "H^" + std::to_string(i));
      bool frac = denominator(c) != 1;
      if (h.empty())
        s += c.str();
      else if (c == 1)
        s += h;
      else
        s += (frac ? "(" + c.str() + ")" : c.str()) + h;
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check(const IntersectionClass& o) const {
    if (o.n != n) throw std::invalid_argument("IntersectionClass: ambient dimensions differ");
  }
};

/// Codimension of rank <= k quadrics in P(S^2 K^{n+1}).
inline int expected_codim(int n, int k) {
  if (n < 1 || k < 1 || k > n + 1)
    throw std::invalid_argument("expected_codim: need 1 <= k <= n+1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  return static_cast<int>(binomial(n - k + 2, 2));
}

/// prod_{t=0}^{n-k} C(n+t+1, n-k-t+1) / C(2t+1, t).
inline BigInt degree_Qk(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("degree_Qk: need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  Rational acc = 1;
  for (int t = 0; t <= n - k; ++t) {
    acc *= Rational(BigInt(binomial(n + t + 1, n - k - t + 1)));
    acc /= Rational(BigInt(binomial(2 * t + 1, t)));
  }
  if (denominator(acc) != 1) throw std::logic_error("degree_Qk: non-integral product " + acc.str());
  return numerator(acc);
}

/// Coefficient c with 2K = c H on the rank-k locus of a symmetric map of rank n+1.
inline int canonical_double(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("canonical_double: need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  return (n + 1) * (n - k);
}

struct LocusCurve {
  int n = 0, k = 0;
  BigInt degree = 0;
  BigInt two_k_coeff = 0;  // 2K = two_k_coeff * H
  BigInt genus = 0;
};

/// n_s = C(s+1,2)+1, k_s = C(s,2)+2; 2K = (C(s+1,2)+2)(s-1) H; g = deg K / 2 + 1.
inline LocusCurve smallest_locus_curve(int s) {
  if (s < 1) throw std::invalid_argument("smallest_locus_curve: s must be positive");
  LocusCurve c;
  c.n = static_cast<int>(binomial(s + 1, 2)) + 1;
  c.k = static_cast<int>(binomial(s, 2)) + 2;
  c.degree = degree_Qk(c.n, c.k);
  c.two_k_coeff = BigInt((binomial(s + 1, 2) + 2) * static_cast<std::uint64_t>(s - 1));
  BigInt two_deg_k = c.two_k_coeff * c.degree;
  if (two_deg_k % 4 != 0) throw std::logic_error("smallest_locus_curve: odd canonical degree");
  c.genus = two_deg_k / 4 + 1;
  return c;
}

/// Coefficient of t^r in ((1 + Ht/2) / (1 - Ht/2))^6, placed at H^r.
inline IntersectionClass q_schur_onerow(int r, int n) {
  if (r < 0 || n < 0) throw std::invalid_argument("q_schur_onerow: negative index");
  // (1+u)^6 (1-u)^-6 at u^r, then u = H/2
  BigInt c = 0;
  for (int i = 0; i <= std::min(r, 6); ++i) c += BigInt(binomial(6, i)) * BigInt(binomial(r - i + 5, 5));
  Rational v(c);
  for (int i = 0; i < r; ++i) v /= 2;
  return IntersectionClass::monomial(n, r, v);
}

/// Q_{a,b} = Q_a Q_b + 2 sum_{i=1}^{b} (-1)^i Q_{a+i} Q_{b-i}.
inline IntersectionClass q_schur_tworow(int a, int b, int n) {
  if (!(a > b && b >= 0)) throw std::invalid_argument("q_schur_tworow: need a > b >= 0");
  IntersectionClass acc = q_schur_onerow(a, n) * q_schur_onerow(b, n);
  for (int i = 1; i <= b; ++i) {
    Rational sign = (i % 2) ? Rational(-2) : Rational(2);
    acc = acc + q_schur_onerow(a + i, n) * q_schur_onerow(b - i, n) * sign;
  }
  return acc;
}

/// Q_{a,b} of six copies of O(1/2) on P^5 as printed in the literature table.
inline IntersectionClass q_schur_tabulated(int a, int b) {
  static const std::map<std::pair<int, int>, std::pair<int, Rational>> table{
      {{2, 1}, {3, Rational(35)}},
      {{3, 1}, {4, Rational(105)}},
      {{4, 1}, {5, Rational(777, 4)}},
      {{3, 2}, {5, Rational(483, 4)}},
  };
  auto it = table.find({a, b});
  if (it == table.end()) throw std::invalid_argument("q_schur_tabulated: no entry for (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return IntersectionClass::monomial(5, it->second.first, it->second.second);
}

enum class QSource { computed, tabulated };

struct PrattTerm {
  int i1, i2;
  int coefficient;  // ((i1+1, i2)), an input table
  IntersectionClass value;
};

/// The four summands (-1)^{i1+i2} ((i1+1,i2)) Q_{(i1+2,i2+1)} c_{2-i1-i2}(P^5)
/// over (i1,i2) in {(2,0),(1,1),(1,0),(0,0)}.
inline std::vector<PrattTerm> pratt_euler_terms(QSource source = QSource::computed) {
  static const std::map<std::pair<int, int>, int> coefficients{{{1, 0}, 1}, {{2, 0}, 3}, {{3, 0}, 7}, {{2, 1}, 3}};
  const std::array<std::pair<int, int>, 4> index{{{2, 0}, {1, 1}, {1, 0}, {0, 0}}};
  std::vector<PrattTerm> out;
  for (auto [i1, i2] : index) {
    int coef = coefficients.at({i1 + 1, i2});
    auto q = source == QSource::computed ? q_schur_tworow(i1 + 2, i2 + 1, 5) : q_schur_tabulated(i1 + 2, i2 + 1);
    int j = 2 - i1 - i2;
    auto chern_p5 = IntersectionClass::monomial(5, j, Rational(BigInt(binomial(6, j))));
    Rational sign = (i1 + i2) % 2 ? Rational(-coef) : Rational(coef);
    out.push_back({i1, i2, coef, q * chern_p5 * sign});
  }
  return out;
}

/// deg c_2(Y) for the rank-4 locus of the Hessian of a cubic fourfold.
inline Rational pratt_euler(QSource source = QSource::computed) {
  Rational total = 0;
  for (const auto& t : pratt_euler_terms(source)) total += t.value.degree();
  return total;
}

struct SurfaceInvariants {
  BigInt e = 0;
  BigInt H2 = 0, KH = 0, K2 = 0;
  BigInt chi = 0, pg = 0, q = 0, h11 = 0;
  HilbertPolynomial chi_twist;  // m -> chi(O_Y(m))
};

/// Noether and Riemann-Roch from e, H^2 and K = cK * H numerically; q is an input.
inline SurfaceInvariants surface_invariants(const BigInt& e, const BigInt& H2, const Rational& K_over_H, const BigInt& q) {
  SurfaceInvariants s;
  s.e = e;
  s.H2 = H2;
  Rational KH = K_over_H * Rational(H2), K2 = K_over_H * K_over_H * Rational(H2);
  if (denominator(KH) != 1 || denominator(K2) != 1) throw std::invalid_argument("surface_invariants: non-integral K.H or K^2");
  s.KH = numerator(KH);
  s.K2 = numerator(K2);
  if ((e + s.K2) % 12 != 0)
    throw std::domain_error("surface_invariants: Noether quotient (e + K^2)/12 is not integral");
  s.chi = (e + s.K2) / 12;
  s.q = q;
  s.pg = s.chi - 1 + q;
  s.h11 = e - 2 + 4 * q - 2 * s.pg;
  // chi(O(m)) = chi + (m^2 H^2 - m K.H)/2
  s.chi_twist = HilbertPolynomial{{Rational(s.chi), -Rational(s.KH) / 2, Rational(s.H2) / 2}};
  return s;
}

/// Invariants of the degeneracy surface: e from pratt_euler, H^2 = deg Q_4 in P^5,
/// K = (1/2) canonical_double(5,4) H, q = 0.
inline SurfaceInvariants surface_invariants() {
  Rational e = pratt_euler();
  if (denominator(e) != 1) throw std::domain_error("surface_invariants: non-integral Euler number");
  return surface_invariants(numerator(e), degree_Qk(5, 4), Rational(canonical_double(5, 4), 2), 0);
}

/// p_g < h^0(O_Y(3)) rules out K = 3H, so the 2-torsion class is nontrivial.
inline bool eta_certificate(const BigInt& pg, const BigInt& hf_degree3) { return pg < hf_degree3; }

}  // namespace hessloci
