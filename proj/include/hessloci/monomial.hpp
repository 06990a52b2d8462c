#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hessloci {

inline constexpr int kMaxVars = 10;

/// Exponent vector over x0..x9. Ordered graded-lexicographically with x0 the
/// largest variable.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exps{};
  int deg = 0;

  Monomial() = default;

  static Monomial from_exponents(const std::vector<int>& e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars))
      throw std::out_of_range("Monomial: too many variables");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > 255) throw std::out_of_range("Monomial: exponent out of range");
      m.exps[i] = static_cast<std::uint8_t>(e[i]);
      m.deg += e[i];
    }
    return m;
  }

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.exps.at(static_cast<std::size_t>(i)) = static_cast<std::uint8_t>(power);
    m.deg = power;
    return m;
  }

  int operator[](int i) const { return exps[static_cast<std::size_t>(i)]; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = exps[i] + o.exps[i];
      if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
      r.exps[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = deg + o.deg;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }

  /// this / x_i; requires exps[i] > 0.
  Monomial lowered(int i) const {
    Monomial r = *this;
    --r.exps[static_cast<std::size_t>(i)];
    --r.deg;
    return r;
  }
  Monomial raised(int i) const {
    Monomial r = *this;
    ++r.exps[static_cast<std::size_t>(i)];
    ++r.deg;
    return r;
  }

  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = deg <=> o.deg; c != 0) return c;
    return exps <=> o.exps;
  }
  bool operator==(const Monomial& o) const { return exps == o.exps; }

  std::string to_string(int nvars) const {
    std::string s;
    for (int i = 0; i < nvars; ++i) {
      if (exps[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += 'x' + std::to_string(i);
      if (exps[i] > 1) s += '^' + std::to_string(exps[i]);
    }
    return s;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exps) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

/// All monomials of total degree d in nvars variables, in descending grlex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (nvars <= 0 || d < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, d);
  return out;
}

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// dim S^d for S = K[x_0..x_{nvars-1}].
inline std::uint64_t monomial_count(int nvars, int d) {
  if (d < 0) return 0;
  return binomial(d + nvars - 1, nvars - 1);
}

}  // namespace hessloci
