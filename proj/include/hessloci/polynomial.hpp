#pragma once

#include "hessloci/field.hpp"
#include "hessloci/monomial.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hessloci {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Sparse multivariate polynomial over a coefficient field. Terms are kept in
/// descending graded-lex order and no stored coefficient is zero.
template <class Field>
class Polynomial {
 public:
  using Elem = typename Field::Elem;
  using TermMap = std::map<Monomial, Elem, std::greater<Monomial>>;

  Polynomial(Field field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::out_of_range("Polynomial: nvars must lie in [1, " + std::to_string(kMaxVars) + "]");
  }

  static Polynomial constant(const Field& f, int nvars, const Elem& c) {
    Polynomial p(f, nvars);
    p.add_term(Monomial{}, c);
    return p;
  }
  static Polynomial variable(const Field& f, int nvars, int i) {
    Polynomial p(f, nvars);
    p.check_var(i);
    p.add_term(Monomial::var(i), f.one());
    return p;
  }
  static Polynomial monomial(const Field& f, int nvars, const Monomial& m, const Elem& c) {
    Polynomial p(f, nvars);
    p.add_term(m, c);
    return p;
  }

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.deg; }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.deg;
    for (const auto& [m, c] : terms_)
      if (m.deg != d) return false;
    return true;
  }

  Elem coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Monomial& m, const Elem& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const { return scaled(field_.neg(field_.one())); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.field_.mul(ca, cb));
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Elem& s) const {
    Polynomial r(field_, nvars_);
    if (field_.is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.mul(c, s));
    return r;
  }

  Polynomial times_monomial(const Monomial& mono) const {
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
    return r;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r = constant(field_, nvars_, field_.one());
    Polynomial b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Partial derivative with respect to x_i.
  Polynomial diff(int i) const {
    check_var(i);
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
      int e = m[i];
      if (e == 0) continue;
      r.add_term(m.lowered(i), field_.mul(c, field_.from_int(e)));
    }
    return r;
  }

  Elem eval(std::span<const Elem> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
      throw std::invalid_argument("Polynomial::eval: point has " + std::to_string(point.size()) +
                                  " coordinates, expected " + std::to_string(nvars_));
    Elem acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      Elem t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < m[i]; ++k) t = field_.mul(t, point[static_cast<std::size_t>(i)]);
      acc = field_.add(acc, t);
    }
    return acc;
  }

  /// Degree-d homogeneous component.
  Polynomial homogeneous_part(int d) const {
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_)
      if (m.deg == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == ib->first) || !a.field_.equal(c, ib->second)) return false;
      ++ib;
    }
    return true;
  }

  /// Canonical text: terms in descending grlex order, explicit '*' and '^'.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Elem mag = c;
      bool negative = field_.is_negative_literal(c);
      if (negative) mag = field_.neg(c);
      if (first)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      first = false;
      std::string ms = m.to_string(nvars_);
      bool unit = field_.equal(mag, field_.one());
      if (ms.empty())
        s += field_.to_string(mag);
      else if (unit)
        s += ms;
      else
        s += field_.to_string(mag) + "*" + ms;
    }
    return s;
  }

 private:
  void check_var(int i) const {
    if (i < 0 || i >= nvars_)
      throw std::out_of_range("variable index " + std::to_string(i) + " out of range for " +
                              std::to_string(nvars_) + " variables");
  }
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_ || !(o.field_ == field_))
      throw std::invalid_argument("Polynomial: operands live in different rings");
  }

  Field field_;
  int nvars_;
  TermMap terms_;
};

/// Returns s with a = s*b when a and b are nonzero scalar multiples of each
/// other; nullopt otherwise (including when exactly one of them is zero).
template <class Field>
std::optional<typename Field::Elem> proportionality_scalar(const Polynomial<Field>& a,
                                                           const Polynomial<Field>& b) {
  const Field& F = a.field();
  if (a.is_zero() && b.is_zero()) return F.one();
  if (a.is_zero() || b.is_zero() || a.term_count() != b.term_count()) return std::nullopt;
  auto s = F.div(a.terms().begin()->second, b.terms().begin()->second);
  if (a == b.scaled(s)) return s;
  return std::nullopt;
}

template <class Field>
bool proportional(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  return proportionality_scalar(a, b).has_value();
}

/// Image of an integer-coefficient (rational) polynomial in GF(p).
inline Polynomial<PrimeField> reduce_mod(const Polynomial<RationalField>& q, const PrimeField& F) {
  Polynomial<PrimeField> r(F, q.nvars());
  for (const auto& [m, c] : q.terms())
    r.add_term(m, F.from_fraction(boost::multiprecision::numerator(c),
                                  boost::multiprecision::denominator(c)));
  return r;
}

namespace detail {

template <class Field>
class PolyParser {
 public:
  using Poly = Polynomial<Field>;

  PolyParser(const Field& f, std::string_view text, int nvars) : F_(f), s_(text), nvars_(nvars) {}

  Poly parse() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    skip_ws();
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      BigInt e = digits();
      if (e > 255) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  BigInt digits() {
    std::size_t start = pos_;
    BigInt v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return v;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == 'x') {
      std::size_t start = pos_;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected variable index after 'x'", pos_);
      int idx = s_[pos_] - '0';
      ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("variable index must be a single digit", pos_);
      if (idx >= nvars_)
        throw ParseError("variable x" + std::to_string(idx) + " out of range for " +
                             std::to_string(nvars_) + " variables",
                         start);
      return Poly::variable(F_, nvars_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      BigInt num = digits();
      BigInt den = 1;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den == 0) throw ParseError("zero denominator", start);
      }
      try {
        return Poly::constant(F_, nvars_, F_.from_fraction(num, den));
      } catch (const std::domain_error& e) {
        throw ParseError(e.what(), start);
      }
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  const Field& F_;
  std::string_view s_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: sums/differences of products of integer or rational literals and
/// variables x0..x9 with optional '^' exponents; parentheses group.
template <class Field>
Polynomial<Field> poly_parse(const Field& f, std::string_view text, int nvars) {
  return detail::PolyParser<Field>(f, text, nvars).parse();
}

}  // namespace hessloci
