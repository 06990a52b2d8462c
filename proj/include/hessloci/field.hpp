#pragma once

// Coefficient fields. A field is a small value object that owns the
// arithmetic; its elements are plain values (uint32_t residues or
// arbitrary-precision rationals). Polynomials and matrices carry the field
// object alongside their elements.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hessloci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// GF(p) for an odd prime p < 2^31. Residues live in [0, p-1].
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 5 || p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("PrimeField: modulus must be a prime in [5, 2^31), got " +
                                  std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid on signed 64-bit values
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem from_bigint(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  /// num/den reduced into the field; throws when den vanishes mod p.
  Elem from_fraction(const BigInt& num, const BigInt& den) const {
    Elem d = from_bigint(den);
    if (d == 0) throw std::domain_error("PrimeField: denominator divisible by p");
    return div(from_bigint(num), d);
  }

  std::string to_string(Elem a) const { return std::to_string(a); }
  bool is_negative_literal(Elem) const { return false; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals; elements are always fully reduced with positive denominator.
class RationalField {
 public:
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("RationalField: inverse of zero");
    return Rational(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem from_int(std::int64_t v) const { return Rational(v); }
  Elem from_bigint(const BigInt& v) const { return Rational(v); }
  Elem from_fraction(const BigInt& num, const BigInt& den) const {
    if (den == 0) throw std::domain_error("RationalField: zero denominator");
    return Rational(num) / Rational(den);
  }

  std::string to_string(const Elem& a) const { return a.str(); }
  bool is_negative_literal(const Elem& a) const { return a < 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace hessloci
