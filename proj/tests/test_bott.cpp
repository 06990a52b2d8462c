#include "hessloci/bott.hpp"
#include "oracles/bott_oracle.hpp"
#include "oracles/plethysm_oracle.hpp"

#include <gtest/gtest.h>

using namespace hessloci;

namespace {

std::map<Partition, long long> as_multiset(const std::vector<Partition>& v) {
  std::map<Partition, long long> m;
  for (const auto& p : v) ++m[p];
  return m;
}

const std::set<std::pair<int, int>> kExceptions{{2, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}, {4, 7}, {6, 9}};

}  // namespace

TEST(PartitionType, NormalizesAndValidates) {
  Partition p{3, 1, 0, 0};
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.to_string(), "(3,1)");
  EXPECT_EQ(Partition({0, 0}), Partition());
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition({4, 1, 1}).conjugate(), Partition({3, 1, 1, 1}));
  auto [a, b] = Partition({4, 1, 1}).frobenius();
  EXPECT_EQ(a, std::vector<int>{3});
  EXPECT_EQ(b, std::vector<int>{2});
  EXPECT_EQ(partitions_of(5, 5).size(), 7u);
  EXPECT_EQ(partitions_of(6, 2).size(), 4u);
}

TEST(Plethysm, SmallCases) {
  EXPECT_EQ(wedge_sym2_decompose(1, 4), std::vector<Partition>{Partition({2})});
  EXPECT_EQ(wedge_sym2_decompose(2, 4), std::vector<Partition>{Partition({3, 1})});
  EXPECT_EQ(schur_dimension(Partition({3, 1}), 4), 45);
  EXPECT_EQ(as_multiset(wedge_sym2_decompose(3, 4)), as_multiset({Partition({4, 1, 1}), Partition({3, 3})}));
  EXPECT_EQ(wedge_sym2_decompose(10, 4), std::vector<Partition>{Partition({5, 5, 5, 5})});
  EXPECT_THROW(wedge_sym2_decompose(11, 4), std::invalid_argument);
  EXPECT_THROW(wedge_sym2_decompose(0, 4), std::invalid_argument);
}

TEST(Plethysm, MatchesCharacterBruteForce) {
  for (int rank = 2; rank <= 4; ++rank)
    for (int j = 1; j <= static_cast<int>(binomial(rank + 1, 2)); ++j) {
      auto by_chars = oracle::wedge_sym2_by_characters(j, rank);
      ASSERT_FALSE(by_chars.empty()) << "rank " << rank << " j " << j;
      EXPECT_EQ(as_multiset(wedge_sym2_decompose(j, rank)), by_chars) << "rank " << rank << " j " << j;
    }
}

TEST(Plethysm, DimensionBookkeeping) {
  for (int rank = 1; rank <= 5; ++rank) {
    int top = static_cast<int>(binomial(rank + 1, 2));
    for (int j = 1; j <= top; ++j) {
      BigInt total = 0;
      for (const auto& l : wedge_sym2_decompose(j, rank)) total += schur_dimension(l, rank);
      EXPECT_EQ(total, BigInt(binomial(top, j))) << "rank " << rank << " j " << j;
    }
  }
}

TEST(Weyl, Dimensions) {
  EXPECT_EQ(schur_dimension(Partition({1, 1, 1, 1}), 6), 15);
  EXPECT_EQ(schur_dimension(Partition({2}), 4), 10);
  EXPECT_EQ(schur_dimension(Partition({1, 1, 1}), 2), 0);
  EXPECT_EQ(weyl_dimension({1, 0, -1}), 8);
  EXPECT_EQ(weyl_dimension({-2, -2, -2}), 1);
  EXPECT_THROW(weyl_dimension({0, 1}), std::invalid_argument);
  for (int m = 1; m <= 6; ++m)
    for (int d = 0; d <= 6; ++d) {
      EXPECT_EQ(schur_dimension(Partition({d}), m), BigInt(monomial_count(m, d)));
      long long ssyt = 0;
      for (auto& [e, c] : oracle::schur_polynomial(Partition({d, d > 0 ? 1 : 0}), m)) ssyt += c;
      EXPECT_EQ(schur_dimension(Partition({d, d > 0 ? 1 : 0}), m), ssyt);
    }
}

TEST(Bott, StepThroughExamples) {
  auto e2 = bott_cohomology(Partition({2}), 4, 6);
  EXPECT_TRUE(e2.vanishes());
  auto e31 = bott_cohomology(Partition({3, 1}), 4, 6);
  EXPECT_EQ(e31.i, 2);
  EXPECT_EQ(e31.dim, 15);
  auto e0 = bott_cohomology(Partition(), 4, 6);
  EXPECT_EQ(e0, (CohomologyEntry{0, 1}));
  EXPECT_TRUE(bott_cohomology(Partition({5, 5, 5, 5}), 4, 6).vanishes());
  EXPECT_THROW(bott_cohomology(Partition({1, 1, 1, 1, 1}), 4, 6), std::invalid_argument);
  auto w = WeightVector::for_sub(Partition({3, 1}), 4, 6);
  EXPECT_EQ(w.entries, (std::vector<int>{0, 0, 3, 1, 0, 0}));
  EXPECT_TRUE(w.block_dominant());
}

TEST(Bott, AgreesWithWeylOrbitSearch) {
  int checked = 0;
  for (int size = 0; size <= 8; ++size)
    for (const auto& l : partitions_of(size, 4)) {
      auto fast = bott_cohomology(l, 4, 6);
      auto slow = oracle::bott_by_orbit(l, 4, 6);
      EXPECT_LE(slow.regular_count, 1);
      if (slow.regular_count == 0) {
        EXPECT_TRUE(fast.vanishes()) << l;
      } else {
        EXPECT_EQ(fast.i, slow.degree) << l;
        EXPECT_EQ(fast.dim, slow.dim) << l;
      }
      ++checked;
    }
  EXPECT_EQ(checked, 53);
  // other Grassmannians
  for (int size = 0; size <= 6; ++size)
    for (const auto& l : partitions_of(size, 2)) {
      auto fast = bott_cohomology(l, 2, 5);
      auto slow = oracle::bott_by_orbit(l, 2, 5);
      if (slow.regular_count == 0) {
        EXPECT_TRUE(fast.vanishes()) << l;
      } else {
        EXPECT_EQ(fast.i, slow.degree) << l;
        EXPECT_EQ(fast.dim, slow.dim) << l;
      }
    }
}

TEST(Bott, VanishingTable) {
  EXPECT_EQ(vanishing_table(), kExceptions);
  EXPECT_TRUE(wedge_sym2_cohomology(1).empty());
  EXPECT_TRUE(wedge_sym2_cohomology(10).empty());
  for (int j = 1; j <= 10; ++j) EXPECT_LE(wedge_sym2_cohomology(j).size(), 1u);
}

TEST(Kunneth, LineBundlesOnP5) {
  EXPECT_EQ(line_bundle_cohomology_p5(0), (std::vector<CohomologyEntry>{{0, 1}}));
  EXPECT_EQ(line_bundle_cohomology_p5(2), (std::vector<CohomologyEntry>{{0, 21}}));
  EXPECT_TRUE(line_bundle_cohomology_p5(-3).empty());
  EXPECT_EQ(line_bundle_cohomology_p5(-6), (std::vector<CohomologyEntry>{{5, 1}}));
  EXPECT_EQ(line_bundle_cohomology_p5(-8), (std::vector<CohomologyEntry>{{5, 21}}));
}

TEST(Kunneth, VanishingPattern) {
  for (int j = 1; j <= 10; ++j) {
    EXPECT_TRUE(kunneth_vanishes(j, 0, j)) << j;
    EXPECT_TRUE(kunneth_vanishes(j, 0, j + 1)) << j;
    EXPECT_TRUE(kunneth_vanishes(j, 1, j - 1)) << j;
    EXPECT_TRUE(kunneth_vanishes(j, 2, j - 1)) << j;
  }
  // H^2(wedge^2 Sym^2 S) = 15 sits against O(d - 2), nonzero once d >= 2
  EXPECT_EQ(kunneth_h(2, 2), (std::vector<CohomologyEntry>{{2, 15}}));
  EXPECT_EQ(kunneth_h(2, 4), (std::vector<CohomologyEntry>{{2, 15 * 21}}));
  EXPECT_TRUE(kunneth_h(2, 0).empty());
  EXPECT_EQ(kunneth_h(9, 3), (std::vector<CohomologyEntry>{{11, 1}}));
  EXPECT_THROW(kunneth_h(11, 0), std::invalid_argument);
}

TEST(Koszul, Certificates) {
  EXPECT_TRUE(koszul_certificate(1, 0));
  EXPECT_TRUE(koszul_certificate(2, 0));
  EXPECT_TRUE(koszul_certificate(0, 1));
  EXPECT_TRUE(koszul_certificate(0, 2));
  // not every pair certifies: H^2(wedge^2 Sym^2 S) tensor H^0(O(1)) obstructs k = 1, d = 3
  EXPECT_FALSE(koszul_certificate(1, 3));
  EXPECT_FALSE(koszul_certificate(3, 0));
}

TEST(DoubleCover, Profile) {
  auto p = double_cover_profile(6, 4);
  EXPECT_EQ(p.h, 2);
  EXPECT_EQ(p.m, 4);
  EXPECT_EQ(p.families, 2);
  EXPECT_EQ(p.family_dim, 1);
  EXPECT_EQ(p.edim_Z, 3);
  auto q = double_cover_profile(6, 5);
  EXPECT_EQ(q.families, 1);
  EXPECT_EQ(q.family_dim, 3);
  EXPECT_THROW(double_cover_profile(6, 0), std::invalid_argument);
  EXPECT_THROW(double_cover_profile(6, 7), std::invalid_argument);
  // Z is cut from Gr(4,6) x P^5 by a rank 10 bundle
  EXPECT_EQ(p.edim_Z, 8 + 5 - 10);
}
