#include "hessloci/hessian.hpp"
#include "hessloci/linalg.hpp"
#include "hessloci/poly_matrix.hpp"
#include "hessloci/polynomial.hpp"
#include "oracles/det_oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hessloci;

namespace {

const PrimeField F101(101);
const PrimeField F32003(32003);
const RationalField Q;

Polynomial<PrimeField> P(const PrimeField& F, const char* s, int n) { return poly_parse(F, s, n); }

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  PrimeField F(31);
  EXPECT_EQ(F.add(30, 5), 4u);
  EXPECT_EQ(F.sub(2, 5), 28u);
  EXPECT_EQ(F.mul(F.inv(7), 7), 1u);
  EXPECT_EQ(F.from_int(-1), 30u);
  EXPECT_EQ(F.from_fraction(1, 2), 16u);
  EXPECT_THROW(PrimeField(15), std::invalid_argument);
  EXPECT_THROW(PrimeField(3), std::invalid_argument);
  EXPECT_THROW(F.inv(0), std::domain_error);
}

TEST(Field, RationalsReduced) {
  Rational r = Q.from_fraction(6, -4);
  EXPECT_EQ(numerator(r), -3);
  EXPECT_EQ(denominator(r), 2);
}

TEST(Monomial, GrlexOrder) {
  auto a = Monomial::from_exponents({2, 1, 0});
  auto b = Monomial::from_exponents({1, 2, 0});
  auto c = Monomial::from_exponents({3, 0, 0, 1});
  EXPECT_GT(a, b);
  EXPECT_GT(c, a);
  auto mons = monomials_of_degree(3, 2);
  ASSERT_EQ(mons.size(), 6u);
  for (std::size_t i = 1; i < mons.size(); ++i) EXPECT_GT(mons[i - 1], mons[i]);
  EXPECT_EQ(monomial_count(6, 5), 252u);
}

TEST(Parse, Examples) {
  auto f = poly_parse(Q, "x0^2*x1 - x1^3", 3);
  EXPECT_EQ(f.term_count(), 2u);
  EXPECT_EQ(f.to_string(), "x0^2*x1 - x1^3");
  EXPECT_TRUE(poly_parse(Q, "0", 2).is_zero());
  auto k = poly_parse(Q, "x0^2*x1+x1^2*x2+x2^2*x3+x3^2*x4+x4^2*x5+x5^2*x0", 6);
  EXPECT_EQ(k.term_count(), 6u);
  EXPECT_TRUE(k.is_homogeneous());
  EXPECT_EQ(k.degree(), 3);
  auto r = poly_parse(Q, "  1/2*x0 - (x1 + 3/4)^2 ", 2);
  EXPECT_EQ(r.to_string(), "-x1^2 + 1/2*x0 - 3/2*x1 - 9/16");
}

TEST(Parse, Errors) {
  try {
    poly_parse(Q, "x0 + * x1", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(poly_parse(Q, "x3", 3), ParseError);
  EXPECT_THROW(poly_parse(Q, "x0 x1", 2), ParseError);
  EXPECT_THROW(poly_parse(Q, "1/0", 2), ParseError);
}

TEST(Diff, Examples) {
  EXPECT_EQ(poly_parse(Q, "x0^3", 1).diff(0).to_string(), "3*x0^2");
  EXPECT_EQ(poly_parse(Q, "x0^2*x2 - x1^3", 3).diff(1).to_string(), "-3*x1^2");
  auto k = poly_parse(Q, "x0^2*x1+x1^2*x2+x2^2*x3+x3^2*x4+x4^2*x5+x5^2*x0", 6);
  EXPECT_EQ(k.diff(0), poly_parse(Q, "2*x0*x1 + x5^2", 6));
  EXPECT_THROW(k.diff(6), std::out_of_range);
}

TEST(Diff, KleinPartialByFiniteDifferences) {
  // Over GF(p) a cubic in t is pinned by 4 samples; its t-coefficient is the partial.
  auto k = P(F32003, "x0^2*x1+x1^2*x2+x2^2*x3+x3^2*x4+x4^2*x5+x5^2*x0", 6);
  auto d0 = k.diff(0);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = testutil::random_point(rng, 6, 32003);
    std::vector<std::uint32_t> vals;
    for (std::uint32_t t = 0; t < 4; ++t) {
      auto y = x;
      y[0] = F32003.add(y[0], t);
      vals.push_back(k.eval(y));
    }
    // derivative at t=0 of the cubic interpolant: (-11 f0 + 18 f1 - 9 f2 + 2 f3) / 6
    auto& F = F32003;
    auto num = F.add(F.add(F.mul(F.from_int(-11), vals[0]), F.mul(18, vals[1])),
                     F.add(F.mul(F.from_int(-9), vals[2]), F.mul(2, vals[3])));
    EXPECT_EQ(F.div(num, 6), d0.eval(x));
  }
}

TEST(Diff, MixedPartialsCommute) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = testutil::random_form(rng, F101, 4, 4, 40);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_EQ(f.diff(i).diff(j), f.diff(j).diff(i));
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(poly_parse(Q, "x0*x1", 2).eval(std::vector<Rational>{2, 3}), 6);
  EXPECT_EQ(Polynomial<RationalField>(Q, 3).eval(std::vector<Rational>{1, 2, 3}), 0);
  EXPECT_THROW(poly_parse(Q, "x0", 2).eval(std::vector<Rational>{1}), std::invalid_argument);
}

TEST(Det, Examples) {
  auto one = Polynomial<RationalField>::constant(Q, 3, 1);
  auto zero = Polynomial<RationalField>(Q, 3);
  PolyMatrix<RationalField> I(3, {one, zero, zero, zero, one, zero, zero, zero, one}, true);
  EXPECT_EQ(det(I).to_string(), "1");

  auto cusp = hessian_data(named_cubic(Q, CubicName::cuspidal3, 2));
  EXPECT_EQ(cusp.hess.to_string(), "24*x0^2*x1");
  EXPECT_EQ(cusp.hess, oracle::cofactor_det(cusp.matrix));
  auto fermat = hessian_data(named_cubic(Q, CubicName::fermat, 2));
  EXPECT_EQ(fermat.hess.to_string(), "216*x0*x1*x2");
  EXPECT_EQ(fermat.hess, oracle::cofactor_det(fermat.matrix));
}

TEST(Det, DynamicProgrammingMatchesCofactorExpansion) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int size = 1 + static_cast<int>(trial % 5);
    std::vector<Polynomial<PrimeField>> e;
    for (int i = 0; i < size * size; ++i) e.push_back(testutil::random_form(rng, F101, 4, 1, 70));
    PolyMatrix<PrimeField> m(size, e);
    auto d = det(m);
    EXPECT_EQ(d, oracle::cofactor_det(m));
    EXPECT_TRUE(d.is_zero() || (d.is_homogeneous() && d.degree() == size));
  }
}

TEST(Det, Alternating) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial<PrimeField>> e;
    for (int i = 0; i < 16; ++i) e.push_back(testutil::random_form(rng, F101, 3, 1 + static_cast<int>(rng() % 2), 60));
    auto swapped = e;
    for (int j = 0; j < 4; ++j) std::swap(swapped[static_cast<std::size_t>(j)], swapped[static_cast<std::size_t>(8 + j)]);
    auto repeated = e;
    for (int j = 0; j < 4; ++j) repeated[static_cast<std::size_t>(4 + j)] = repeated[static_cast<std::size_t>(j)];
    EXPECT_EQ(det(PolyMatrix<PrimeField>(4, swapped)), -det(PolyMatrix<PrimeField>(4, e)));
    EXPECT_TRUE(det(PolyMatrix<PrimeField>(4, repeated)).is_zero());
  }
}

TEST(Det, RejectsOversize) {
  std::vector<Polynomial<PrimeField>> e(81, Polynomial<PrimeField>(F101, 2));
  EXPECT_THROW(det(PolyMatrix<PrimeField>(9, e)), std::invalid_argument);
}

TEST(Minors, Counts) {
  auto klein = hessian_data(named_cubic(F32003, CubicName::klein6, 5));
  EXPECT_EQ(minors(klein.matrix, 5, true).size(), 21u);
  EXPECT_EQ(minors(klein.matrix, 5, false).size(), 36u);
  auto top = minors(klein.matrix, 6, true);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0], klein.hess);
  for (const auto& m : minors(klein.matrix, 5, true)) EXPECT_TRUE(m.is_zero() || m.degree() == 5);
}

TEST(Minors, SymmetricDedupeKeepsEveryMinorUpToTransposition) {
  auto f = random_smooth_cubic(4, 32003, 9);
  auto hd = hessian_data(f);
  auto all = minors(hd.matrix, 3, false);
  auto half = minors(hd.matrix, 3, true);
  EXPECT_EQ(all.size(), 100u);
  EXPECT_EQ(half.size(), 55u);
  std::set<std::string> a, b;
  for (auto& m : all) a.insert(m.to_string());
  for (auto& m : half) b.insert(m.to_string());
  EXPECT_EQ(a, b);
}

TEST(Evaluation, CommutesWithDetAndMinors) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = testutil::random_form(rng, F101, 4, 3);
    if (f.is_zero()) continue;
    auto hd = hessian_data(CubicForm<PrimeField>(f));
    auto ms = minors(hd.matrix, 2, false);
    auto subsets = k_subsets(4, 2);
    for (int pt = 0; pt < 50; ++pt) {
      auto x = testutil::random_point(rng, 4, 101);
      auto Hx = hd.matrix.evaluate(x);
      EXPECT_EQ(hd.hess.eval(x), oracle::cofactor_det_mod(Hx, 4, 101));
      std::size_t idx = 0;
      for (const auto& R : subsets)
        for (const auto& C : subsets) {
          std::vector<std::uint32_t> sub;
          for (int i : R)
            for (int j : C) sub.push_back(Hx[static_cast<std::size_t>(i * 4 + j)]);
          EXPECT_EQ(ms[idx++].eval(x), oracle::cofactor_det_mod(sub, 2, 101));
        }
    }
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank_ff(ModMatrix(31, 4, 4)), 0u);
  EXPECT_EQ(rank_ff(ModMatrix::identity(31, 6)), 6u);
  auto klein = hessian_data(named_cubic(PrimeField(31), CubicName::klein6, 5));
  std::vector<std::uint32_t> e0{1, 0, 0, 0, 0, 0};
  EXPECT_EQ(rank_ff(evaluate_mod(klein.matrix, e0)), 3u);
}

TEST(Rank, MatchesLargestNonvanishingMinor) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    ModMatrix m(101, 5, 5);
    // low-rank products hit every rank
    int r = static_cast<int>(trial % 6);
    for (int t = 0; t < r; ++t) {
      auto u = testutil::random_point(rng, 5, 101), v = testutil::random_point(rng, 5, 101);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = (m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) + u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)]) % 101;
    }
    EXPECT_EQ(static_cast<int>(rank_ff(m)), oracle::rank_by_minors(m.data, 5, 5, 101));
  }
}

TEST(EchelonBasis, NullspaceIsKernel) {
  std::mt19937_64 rng(7);
  const std::uint32_t p = 32003;
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t cols = 3 + rng() % 12, rows = rng() % 14;
    EchelonBasis eb(p, cols);
    std::vector<std::vector<std::uint32_t>> all;
    for (std::size_t r = 0; r < rows; ++r) {
      auto row = testutil::random_point(rng, static_cast<int>(cols), p);
      if (r % 3 == 2 && !all.empty()) row = all.front();  // dependent row
      eb.add_row(row);
      all.push_back(row);
    }
    auto ker = eb.nullspace();
    EXPECT_EQ(ker.size() + eb.rank(), cols);
    for (const auto& k : ker)
      for (const auto& row : all) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < cols; ++j) s = (s + static_cast<std::uint64_t>(row[j]) * k[j]) % p;
        EXPECT_EQ(s, 0u);
      }
  }
}

TEST(Proportional, UpToScalar) {
  auto a = poly_parse(Q, "2*x0 - 4*x1", 2);
  auto b = poly_parse(Q, "-x0 + 2*x1", 2);
  auto s = proportionality_scalar(a, b);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, Rational(-2));
  EXPECT_FALSE(proportional(a, poly_parse(Q, "x0 + 2*x1", 2)));
}
