#pragma once

#include "hessloci/hilbert.hpp"
#include "hessloci/poly_matrix.hpp"
#include "hessloci/polynomial.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hessloci {

/// Homogeneous cubic in n+1 variables.
template <class Field>
class CubicForm {
 public:
  using Poly = Polynomial<Field>;

  explicit CubicForm(Poly f) : f_(std::move(f)) {
    if (f_.is_zero() || !f_.is_homogeneous() || f_.degree() != 3)
      throw std::invalid_argument("CubicForm: not a nonzero homogeneous cubic: " + f_.to_string());
  }

  const Poly& poly() const { return f_; }
  int nvars() const { return f_.nvars(); }
  int n() const { return f_.nvars() - 1; }
  const Field& field() const { return f_.field(); }

 private:
  Poly f_;
};

template <class Field>
struct HessianData {
  PolyMatrix<Field> matrix;                 // second partials, factor 2 kept
  Polynomial<Field> hess;                   // det(matrix)
  std::vector<Polynomial<Field>> gradient;  // first partials
};

template <class Field>
HessianData<Field> hessian_data(const CubicForm<Field>& f) {
  const int N = f.nvars();
  if (N > kMaxDetSize) throw std::invalid_argument("hessian_data: at most 8 variables");
  std::vector<Polynomial<Field>> grad;
  for (int i = 0; i < N; ++i) grad.push_back(f.poly().diff(i));
  std::vector<Polynomial<Field>> entries;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) entries.push_back(grad[static_cast<std::size_t>(i)].diff(j));
  PolyMatrix<Field> m(N, std::move(entries), true);
  auto h = det(m);
  return HessianData<Field>{std::move(m), std::move(h), std::move(grad)};
}

/// v(g) = sum_k v_k dg/dx_k, applied `order` times.
template <class Field>
Polynomial<Field> directional(const Polynomial<Field>& g, std::span<const typename Field::Elem> v, int order = 1) {
  if (static_cast<int>(v.size()) != g.nvars())
    throw std::invalid_argument("directional: vector length " + std::to_string(v.size()) + " != " +
                                std::to_string(g.nvars()) + " variables");
  if (order < 0) throw std::invalid_argument("directional: negative order");
  const Field& F = g.field();
  Polynomial<Field> cur = g;
  for (int o = 0; o < order; ++o) {
    Polynomial<Field> next(F, g.nvars());
    for (int k = 0; k < g.nvars(); ++k)
      if (!F.is_zero(v[static_cast<std::size_t>(k)])) next += cur.diff(k).scaled(v[static_cast<std::size_t>(k)]);
    cur = std::move(next);
  }
  return cur;
}

template <class Field>
std::vector<typename Field::Elem> mat_vec(const Field& F, const std::vector<typename Field::Elem>& m, int size,
                                          std::span<const typename Field::Elem> x) {
  std::vector<typename Field::Elem> out(static_cast<std::size_t>(size), F.zero());
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      out[static_cast<std::size_t>(i)] =
          F.add(out[static_cast<std::size_t>(i)], F.mul(m[static_cast<std::size_t>(i * size + j)], x[static_cast<std::size_t>(j)]));
  return out;
}

struct MagicReport {
  bool a = false;  // H(v)w = grad(vw(f)) and H(v)w = H(w)v
  bool b = false;  // 2 grad f(v) = H(v)v
  bool c = false;  // w^T H(v) w = 2 (v(f))(w)
  bool all() const { return a && b && c; }
};

/// Identities evaluated against the supplied Hessian data (which may be
/// deliberately corrupted by a self-test).
template <class Field>
MagicReport check_magic_identities(const CubicForm<Field>& f, const HessianData<Field>& hd,
                                   std::span<const typename Field::Elem> v, std::span<const typename Field::Elem> w) {
  using Elem = typename Field::Elem;
  const Field& F = f.field();
  const int N = f.nvars();
  if (static_cast<int>(v.size()) != N || static_cast<int>(w.size()) != N)
    throw std::invalid_argument("check_magic_identities: vector length mismatch");
  auto eq = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!F.equal(x[i], y[i])) return false;
    return true;
  };
  auto Hv = hd.matrix.evaluate(v);
  auto Hw = hd.matrix.evaluate(w);
  auto Hv_w = mat_vec(F, Hv, N, w);
  auto Hw_v = mat_vec(F, Hw, N, v);
  auto Hv_v = mat_vec(F, Hv, N, v);

  // vw(f) is linear: its gradient is its coefficient vector
  auto vwf = directional(directional(f.poly(), v), w);
  std::vector<Elem> grad_vwf(static_cast<std::size_t>(N), F.zero());
  for (int i = 0; i < N; ++i) grad_vwf[static_cast<std::size_t>(i)] = vwf.coeff(Monomial::var(i));

  std::vector<Elem> two_grad(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    two_grad[static_cast<std::size_t>(i)] = F.mul(F.from_int(2), hd.gradient[static_cast<std::size_t>(i)].eval(v));

  Elem quad = F.zero();
  for (int i = 0; i < N; ++i) quad = F.add(quad, F.mul(w[static_cast<std::size_t>(i)], Hv_w[static_cast<std::size_t>(i)]));
  Elem rhs = F.mul(F.from_int(2), directional(f.poly(), v).eval(w));

  MagicReport r;
  r.a = eq(Hv_w, grad_vwf) && eq(Hv_w, Hw_v);
  r.b = eq(two_grad, Hv_v);
  r.c = F.equal(quad, rhs);
  return r;
}

template <class Field>
MagicReport check_magic_identities(const CubicForm<Field>& f, std::span<const typename Field::Elem> v,
                                   std::span<const typename Field::Elem> w) {
  return check_magic_identities(f, hessian_data(f), v, w);
}

/// v^m(G) = m! G(v) for G homogeneous of degree m.
template <class Field>
bool euler_identity_check(const Polynomial<Field>& G, std::span<const typename Field::Elem> v) {
  if (!G.is_homogeneous()) throw std::invalid_argument("euler_identity_check: input is not homogeneous");
  const Field& F = G.field();
  if (G.is_zero()) return true;
  const int m = G.degree();
  auto lhs = directional(G, v, m);
  if (lhs.degree() > 0) return false;
  typename Field::Elem fact = F.one();
  for (int i = 2; i <= m; ++i) fact = F.mul(fact, F.from_int(i));
  return F.equal(lhs.coeff(Monomial{}), F.mul(fact, G.eval(v)));
}

enum class CubicName { fermat, klein6, cuspidal3 };

inline CubicName cubic_name_from_string(std::string_view s) {
  if (s == "fermat") return CubicName::fermat;
  if (s == "klein6") return CubicName::klein6;
  if (s == "cuspidal3") return CubicName::cuspidal3;
  throw std::invalid_argument("unknown cubic name '" + std::string(s) + "' (fermat, klein6, cuspidal3)");
}

inline std::string to_string(CubicName c) {
  switch (c) {
    case CubicName::fermat: return "fermat";
    case CubicName::klein6: return "klein6";
    case CubicName::cuspidal3: return "cuspidal3";
  }
  return "?";
}

/// fermat: sum x_i^3 in P^n; klein6: sum x_i^2 x_{i+1} (indices mod 6), n = 5;
/// cuspidal3: x0^2 x2 - x1^3, n = 2.
template <class Field>
CubicForm<Field> named_cubic(const Field& F, CubicName name, int n) {
  switch (name) {
    case CubicName::fermat: {
      if (n < 1 || n + 1 > kMaxVars) throw std::invalid_argument("named_cubic: fermat needs 1 <= n <= 9");
      Polynomial<Field> f(F, n + 1);
      for (int i = 0; i <= n; ++i) f.add_term(Monomial::var(i, 3), F.one());
      return CubicForm<Field>(f);
    }
    case CubicName::klein6: {
      if (n != 5) throw std::invalid_argument("named_cubic: klein6 requires n = 5");
      Polynomial<Field> f(F, 6);
      for (int i = 0; i < 6; ++i) f.add_term(Monomial::var(i, 2) * Monomial::var((i + 1) % 6), F.one());
      return CubicForm<Field>(f);
    }
    case CubicName::cuspidal3: {
      if (n != 2) throw std::invalid_argument("named_cubic: cuspidal3 requires n = 2");
      return CubicForm<Field>(poly_parse(F, "x0^2*x2 - x1^3", 3));
    }
  }
  throw std::invalid_argument("named_cubic: unknown name");
}

/// Closed form of the Klein hessian up to scale, indices mod 6:
///   sum_{i<3} x_i^3 x_{i+3}^3 - x0x1x2x3x4x5 + sum_i x_i x_{i+1}^3 x_{i+3}^2
///   - sum_i x_i x_{i+1} x_{i+2} x_{i+3}^3 - sum_{i<2} x_i^2 x_{i+2}^2 x_{i+4}^2.
template <class Field>
Polynomial<Field> klein6_reference_hessian(const Field& F) {
  auto x = [](int i, int e) { return Monomial::var(((i % 6) + 6) % 6, e); };
  Polynomial<Field> h(F, 6);
  auto add = [&](const Monomial& m, std::int64_t c) { h += Polynomial<Field>::monomial(F, 6, m, F.from_int(c)); };
  for (int i = 0; i < 3; ++i) add(x(i, 3) * x(i + 3, 3), 1);
  add(x(0, 1) * x(1, 1) * x(2, 1) * x(3, 1) * x(4, 1) * x(5, 1), -1);
  for (int i = 0; i < 6; ++i) add(x(i, 1) * x(i + 1, 3) * x(i + 3, 2), 1);
  for (int i = 0; i < 6; ++i) add(x(i, 1) * x(i + 1, 1) * x(i + 2, 1) * x(i + 3, 3), -1);
  for (int i = 0; i < 2; ++i) add(x(i, 2) * x(i + 2, 2) * x(i + 4, 2), -1);
  return h;
}

/// Ideal of the (k+1) x (k+1) minors of the Hessian: cuts out D_k.
inline GradedIdeal rank_locus_ideal(const HessianData<PrimeField>& hd, int k) {
  auto gens = minors(hd.matrix, k + 1, true);
  std::vector<Polynomial<PrimeField>> nonzero;
  for (auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(std::move(g));
  return GradedIdeal(hd.matrix.field(), hd.matrix.nvars(), std::move(nonzero));
}

/// Smooth over the algebraic closure of GF(p): the Jacobian ideal of a smooth
/// cubic is a complete intersection of n+1 quadrics, whose quotient vanishes in
/// degree n+2; for a singular cubic the quotient never vanishes.
inline bool jacobian_is_irrelevant(const CubicForm<PrimeField>& f) {
  std::vector<Polynomial<PrimeField>> grad;
  for (int i = 0; i < f.nvars(); ++i) grad.push_back(f.poly().diff(i));
  GradedIdeal J(f.field(), f.nvars(), std::move(grad));
  return hf_value(J, f.n() + 2) == 0;
}

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded uniform cubic over GF(p) with smooth Jacobian locus and h_f != 0.
inline CubicForm<PrimeField> random_smooth_cubic(int n, std::uint32_t p, std::uint64_t seed, int max_attempts = 200) {
  if (n < 1 || n + 1 > kMaxDetSize) throw std::invalid_argument("random_smooth_cubic: need 1 <= n <= 7");
  PrimeField F(p);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), p};
  std::mt19937_64 rng(seq);
  const auto mons = monomials_of_degree(n + 1, 3);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Polynomial<PrimeField> f(F, n + 1);
    for (const auto& m : mons) f.add_term(m, static_cast<std::uint32_t>(rng() % p));
    if (f.is_zero() || f.degree() != 3) continue;
    CubicForm<PrimeField> c(f);
    if (!jacobian_is_irrelevant(c)) continue;
    if (hessian_data(c).hess.is_zero()) continue;
    return c;
  }
  throw SamplingError("random_smooth_cubic: no smooth cubic with nonzero hessian after " +
                      std::to_string(max_attempts) + " draws (n=" + std::to_string(n) + ", p=" +
                      std::to_string(p) + ")");
}

/// Integer lift with coefficients in [0, p), for reduction at another prime.
inline Polynomial<RationalField> lift_residues(const Polynomial<PrimeField>& f) {
  Polynomial<RationalField> out(RationalField{}, f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, Rational(c));
  return out;
}

inline CubicForm<PrimeField> change_prime(const CubicForm<PrimeField>& f, std::uint32_t q) {
  return CubicForm<PrimeField>(reduce_mod(lift_residues(f.poly()), PrimeField(q)));
}

}  // namespace hessloci
