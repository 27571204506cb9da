#include <gtest/gtest.h>

#include <numeric>

#include "engel/engel_ideal.hpp"
#include "engel/errors.hpp"
#include "engel/matching.hpp"
#include "support/magnus_oracle.hpp"

using namespace engel;

namespace {

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }
std::size_t double_factorial_odd(int m) {  // (2m)! / (2^m m!)
  std::size_t r = 1;
  for (int k = 1; k <= m; ++k) r *= static_cast<std::size_t>(2 * k - 1);
  return r;
}

}  // namespace

TEST(PairPartitionTest, EnumerationCounts) {
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(all_pair_partitions(m).size(), double_factorial_odd(m)) << m;
    EXPECT_EQ(all_matchings(m).size(), factorial(m)) << m;
  }
}

TEST(PairPartitionTest, NormIsSymmetricBetweenHalves) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& e : all_pair_partitions(m)) {
      EXPECT_EQ(e.norm(), e.right_norm()) << e.to_string();
      EXPECT_EQ(static_cast<int>(e.left_blocks().size()), e.norm());
      EXPECT_LE(2 * e.norm(), m);
    }
}

TEST(PairPartitionTest, ValidatesBlocks) {
  EXPECT_THROW(PairPartition::from_blocks(2, {IndexSet{2, 3}, IndexSet{4}}), UsageError);
  EXPECT_THROW(PairPartition::from_blocks(2, {IndexSet{2, 3}, IndexSet{3, 4}}), UsageError);
  EXPECT_THROW(PairPartition::from_blocks(2, {IndexSet{2, 3}, IndexSet{4, 6}}), UsageError);
  auto e = PairPartition::from_blocks(2, {IndexSet{4, 5}, IndexSet{2, 3}});
  EXPECT_EQ(e.blocks().front(), (IndexSet{2, 3}));
  EXPECT_EQ(e.norm(), 1);
}

TEST(PairPartitionTest, MatchingRoundTrip) {
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), m + 2);
    do {
      auto e = PairPartition::from_matching(sigma);
      EXPECT_EQ(e.norm(), 0);
      EXPECT_EQ(e.matching(), sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  auto mixed = PairPartition::from_blocks(2, {IndexSet{2, 3}, IndexSet{4, 5}});
  EXPECT_THROW(mixed.matching(), UsageError);
}

TEST(DecompositionTest, OneStepLowersNorm) {
  PrimeField f(5);
  for (int m = 2; m <= 5; ++m)
    for (const auto& e : all_pair_partitions(m)) {
      if (e.norm() == 0) {
        EXPECT_EQ(to_w0(f, e), WCombination(f, e));
        continue;
      }
      auto left = e.left_blocks(), right = e.right_blocks();
      WCombination d = decompose_one_step(f, e, left[0], right[0]);
      EXPECT_EQ(d.terms().size(), 2u);
      for (const auto& [t, c] : d.terms()) {
        EXPECT_EQ(t.norm(), e.norm() - 1);
        EXPECT_EQ(c, f.neg(1));
      }
      EXPECT_EQ(to_w0(f, e).max_norm(), 0);
      EXPECT_THROW(decompose_one_step(f, e, right[0], left[0]), UsageError);
    }
}

TEST(DecompositionTest, CanonicalPairingMatchesSortedBlocks) {
  auto e = PairPartition::from_blocks(4, {IndexSet{2, 4}, IndexSet{3, 5}, IndexSet{6, 8}, IndexSet{7, 9}});
  Pairing p = canonical_pairing(e);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], std::make_pair(IndexSet{2, 4}, IndexSet{6, 8}));
  EXPECT_EQ(p[1], std::make_pair(IndexSet{3, 5}, IndexSet{7, 9}));
}

TEST(DecompositionTest, OneStepRelationHoldsModuloJ) {
  PrimeField f(5);
  FreeMetabelian alg(f);
  EngelIdeal ideal(alg);
  for (int m = 2; m <= 3; ++m)
    for (const auto& e : all_pair_partitions(m)) {
      if (e.norm() == 0) continue;
      auto left = e.left_blocks(), right = e.right_blocks();
      WCombination rel = WCombination(f, e) - decompose_one_step(f, e, left[0], right[0]);
      LieElt lie = alg.zero();
      for (const auto& [t, c] : rel.terms()) lie.add_scaled(partition_element(alg, t.blocks()), c);
      EXPECT_TRUE(ideal.member(lie)) << e.to_string();
    }
}

TEST(QuadRelationTest, ThreeTermsAndReducedFlag) {
  PrimeField f(5);
  for (int m = 2; m <= 5; ++m) {
    auto all = quad_relations(m, false), reduced = quad_relations(m, true);
    EXPECT_LE(reduced.size(), all.size());
    for (const auto& q : all) {
      EXPECT_EQ(q.combination(f).terms().size(), 3u);
      int pure = 0;
      for (IndexSet b : q.rest) {
        IndexSet l = IndexSet::range(2, m + 1), r = IndexSet::range(m + 2, 2 * m + 1);
        if (b.subset_of(l) || b.subset_of(r)) ++pure;
      }
      EXPECT_EQ(q.is_reduced(), pure <= 2);
    }
  }
}

TEST(SignFunctionalTest, IdentityIsOneAndPositiveNormRejected) {
  PrimeField f(5);
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(sign_functional(WCombination(f, PairPartition::identity_matching(m))), 1u);
  auto swap = PairPartition::from_matching({5, 4});
  EXPECT_EQ(sign_functional(WCombination(f, swap)), f.neg(1));
  auto mixed = PairPartition::from_blocks(2, {IndexSet{2, 3}, IndexSet{4, 5}});
  EXPECT_THROW(sign_functional(WCombination(f, mixed)), UsageError);
}

TEST(SignFunctionalTest, KillsW0RelationsUpToSix) {
  PrimeField f(5);
  for (int m = 1; m <= 6; ++m) {
    W0Relations rels = relations_on_w0(f, m);
    for (const auto* fam : {&rels.triple, &rels.exchange})
      for (const auto& r : *fam) ASSERT_EQ(sign_functional(r), 0u) << r.to_string();
  }
}

TEST(WitnessTest, SignModeToSixRowReduceToThree) {
  PrimeField f(5);
  FreeMetabelian alg(f);
  EngelIdeal ideal(alg);
  for (int m = 1; m <= 6; ++m) {
    auto sign = witness_nonzero(ideal, m, WitnessMode::kSign);
    EXPECT_TRUE(sign.pass) << m;
    EXPECT_EQ(sign.identity_functional, 1u);
    if (m > 3) continue;
    auto row = witness_nonzero(ideal, m, WitnessMode::kRowReduce);
    EXPECT_TRUE(row.pass) << m;
    EXPECT_EQ(row.pass, sign.pass);
    EXPECT_TRUE(row.identity_outside_j);
    EXPECT_EQ(row.slice_dim, oracle::koszul_slice_dimension(m, 2 * m + 1));
    std::size_t orders = m == 1 ? 1 : static_cast<std::size_t>(m * (m - 1));
    EXPECT_EQ(row.w_dim, double_factorial_odd(m) * orders);
    EXPECT_EQ(row.quad_and_order_rank, row.w_cap_j_dim);
  }
}

TEST(MatchingCaseTest, AllFourCasesReplay) {
  PrimeField f(5);
  for (int c = 1; c <= 4; ++c) {
    auto r = case_check(f, c);
    EXPECT_TRUE(r.pass) << c;
    EXPECT_GT(r.instances, 0u);
    for (const auto& d : r.discrepancies) ADD_FAILURE() << "case " << c << ": " << d;
  }
  EXPECT_THROW(case_check(f, 5), UsageError);
}

TEST(MatchingCaseTest, PairingIndependenceToFive) {
  PrimeField f(5);
  auto r = sweep_pairing_independence(f, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.elements, 0u);
  EXPECT_EQ(r.max_norm_seen, 2);
}

TEST(MatchingCaseTest, ReducedRelationsGenerateAndSignSurvives) {
  PrimeField f(5);
  for (int m = 3; m <= 5; ++m) {
    auto g = generation_check(f, m);
    EXPECT_TRUE(g.reduced_spans_all) << m;
    EXPECT_TRUE(g.families_span_reduced) << m;
    EXPECT_EQ(g.w0_dim, factorial(m));
    EXPECT_LT(g.w0_relation_rank, g.w0_dim);  // the sign functional survives
  }
}
