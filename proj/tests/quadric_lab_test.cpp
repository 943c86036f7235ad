#include <gtest/gtest.h>

#include <set>

#include "qmod/bn_invariants.hpp"
#include "qmod/quadric_lab.hpp"

namespace {

using qmod::BinaryForm;
using qmod::DenseMatrix;
using qmod::Fp;
using qmod::PrimeField;
using qmod::RationalField;
using namespace qmod::quad;

const PrimeField kField;
using BF = BinaryForm<PrimeField>;

// x_i x_j pulls back to s^(2r-i-j) t^(i+j) on the rational normal curve, so
// dim I_2 = #pairs - #distinct sums.
std::size_t monomial_count_oracle(std::size_t r) {
  std::set<std::size_t> sums;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = i; j <= r; ++j, ++pairs) sums.insert(i + j);
  return pairs - sums.size();
}

TEST(ParamCurve, RejectsBasePoints) {
  // (s t, t^2): common zero at (1:0)
  EXPECT_THROW(ParamCurve<PrimeField>(kField, {BF::monomial(kField, 2, 1), BF::monomial(kField, 2, 2)}),
               qmod::DomainError);
  // (s^2, s t): common zero at (0:1)
  EXPECT_THROW(ParamCurve<PrimeField>(kField, {BF::monomial(kField, 2, 0), BF::monomial(kField, 2, 1)}),
               qmod::DomainError);
  EXPECT_NO_THROW(ParamCurve<PrimeField>::rational_normal(kField, 4));
  EXPECT_TRUE(ParamCurve<PrimeField>::rational_normal(kField, 4).is_rational_normal());
}

TEST(I2Basis, RationalNormalOverFp) {
  for (std::size_t r = 3; r <= 8; ++r) {
    const auto c = ParamCurve<PrimeField>::rational_normal(kField, r);
    const auto i2 = i2_basis(c);
    EXPECT_EQ(i2.dimension(), r * (r - 1) / 2);
    EXPECT_EQ(i2.dimension(), monomial_count_oracle(r));
    for (const auto& q : i2.basis()) EXPECT_TRUE(vanishes_on(q, c));
  }
}

TEST(I2Basis, RationalNormalOverQ) {
  const RationalField q;
  for (std::size_t r = 3; r <= 6; ++r) {
    const auto i2 = i2_basis(ParamCurve<RationalField>::rational_normal(q, r));
    EXPECT_EQ(i2.dimension(), r * (r - 1) / 2);
  }
}

TEST(I2Basis, Errors) {
  EXPECT_THROW(i2_basis(ParamCurve<PrimeField>::rational_normal(PrimeField(7), 4)), qmod::ConfigurationError);
  EXPECT_NO_THROW(i2_basis(ParamCurve<PrimeField>::rational_normal(PrimeField(11), 4)));
  EXPECT_THROW(i2_basis(ParamCurve<PrimeField>::rational_normal(kField, 2)), qmod::DomainError);
}

TEST(Rank3, HandExample) {
  const auto c = ParamCurve<PrimeField>::rational_normal(kField, 4);
  const PencilDecomposition<PrimeField> pd{BF::monomial(kField, 1, 0), BF::monomial(kField, 1, 1), std::nullopt,
                                           std::nullopt, BF::monomial(kField, 2, 1)};
  const auto q = rank3_from_decomposition(pd, c);
  // x1 x3 - x2^2
  EXPECT_EQ(q.rank(), 3u);
  EXPECT_TRUE(vanishes_on(q, c));
  EXPECT_TRUE(i2_basis(c).contains(q));
}

TEST(Rank3, EqualPencilMembersDegenerate) {
  auto rng = qmod::make_rng(1, 10);
  const auto c = ParamCurve<PrimeField>::rational_normal(kField, 6);
  const auto f = BF::random(kField, 2, rng);
  const PencilDecomposition<PrimeField> pd{f, f, std::nullopt, std::nullopt, BF::random(kField, 2, rng)};
  EXPECT_LE(rank3_from_decomposition(pd, c).rank(), 1u);
}

TEST(Rank3, ShapeErrors) {
  const auto c = ParamCurve<PrimeField>::rational_normal(kField, 4);
  const PencilDecomposition<PrimeField> bad{BF::monomial(kField, 1, 0), BF::monomial(kField, 1, 1), std::nullopt,
                                            std::nullopt, BF::monomial(kField, 1, 1)};
  EXPECT_THROW(rank3_from_decomposition(bad, c), qmod::DomainError);
}

TEST(Rank3, RandomInstancesInI2) {
  for (int r = 4; r <= 8; ++r) {
    const auto c = ParamCurve<PrimeField>::rational_normal(kField, static_cast<std::size_t>(r));
    const auto i2 = i2_basis(c);
    auto rng = qmod::make_rng(2, static_cast<std::uint64_t>(r));
    int full = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto strata_list = strata(r, 3);
      const auto s = strata_list[static_cast<std::size_t>(trial) % strata_list.size()];
      const PencilDecomposition<PrimeField> pd{BF::random(kField, s.m, rng), BF::random(kField, s.m, rng),
                                               std::nullopt, std::nullopt, BF::random(kField, s.x, rng)};
      const auto q = rank3_from_decomposition(pd, c);
      EXPECT_TRUE(i2.contains(q));
      EXPECT_LE(q.rank(), 3u);
      full += q.rank() == 3;
    }
    EXPECT_GE(full, 99) << r;
  }
}

TEST(Rank4, SpecialInputs) {
  auto rng = qmod::make_rng(3, 1);
  const auto c = ParamCurve<PrimeField>::rational_normal(kField, 6);
  const auto f = BF::random(kField, 2, rng);
  const auto g = BF::random(kField, 2, rng);
  const auto u = BF::random(kField, 2, rng);
  const auto h = BF::random(kField, 2, rng);
  EXPECT_TRUE(rank4_from_decomposition(PencilDecomposition<PrimeField>{f, g, u, u, h}, c).is_zero());
  // second pencil equal to the first: the rank-3 construction
  const auto same = rank4_from_decomposition(PencilDecomposition<PrimeField>{f, g, f, g, h}, c);
  EXPECT_EQ(same, rank3_quadric(kField, f, g, h));
  EXPECT_EQ(same.rank(), 3u);
}

TEST(Rank4, RandomInstancesInI2) {
  for (int r = 4; r <= 8; ++r) {
    const auto c = ParamCurve<PrimeField>::rational_normal(kField, static_cast<std::size_t>(r));
    const auto i2 = i2_basis(c);
    auto rng = qmod::make_rng(4, static_cast<std::uint64_t>(r));
    std::vector<Stratum> usable;
    for (const auto& s : strata(r, 4))
      if (s.m_prime >= 2) usable.push_back(s);  // m = m' = 1 forces rank <= 3
    int full = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto& s = usable[static_cast<std::size_t>(trial) % usable.size()];
      const PencilDecomposition<PrimeField> pd{BF::random(kField, s.m, rng), BF::random(kField, s.m, rng),
                                               BF::random(kField, s.m_prime, rng),
                                               BF::random(kField, s.m_prime, rng), BF::random(kField, s.x, rng)};
      const auto q = rank4_from_decomposition(pd, c);
      EXPECT_TRUE(i2.contains(q));
      EXPECT_LE(q.rank(), 4u);
      full += q.rank() == 4;
    }
    EXPECT_GE(full, 99) << r;
  }
}

TEST(FamilyDimension, RankThreeEveryStratum) {
  for (int r = 4; r <= 9; ++r) {
    for (const auto& s : strata(r, 3)) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        EXPECT_EQ(family_dimension(kField, r, 3, s, seed), r - 2) << r << " x=" << s.x;
      }
    }
    EXPECT_LE(best_family_dimension(kField, r, 3, 1), qmod::bn::expected_dim_q(0, r, r, 3));
  }
  EXPECT_EQ(family_dimension(kField, 5, 3, rank3_stratum(5, 1), 0), 3);
  EXPECT_EQ(family_dimension(kField, 5, 3, rank3_stratum(5, 3), 0), 3);
  EXPECT_EQ(family_dimension(kField, 8, 3, rank3_stratum(8, 0), 0), 6);
}

TEST(FamilyDimension, RankFourBestStratumMatchesExpected) {
  EXPECT_EQ(best_family_dimension(kField, 6, 4, 0), qmod::bn::expected_dim_q(0, 6, 6, 4));
  EXPECT_EQ(best_family_dimension(kField, 6, 4, 0), 8);
  for (int r = 4; r <= 8; ++r) EXPECT_EQ(best_family_dimension(kField, r, 4, 1), qmod::bn::expected_dim_q(0, r, r, 4));
}

TEST(FamilyDimension, Errors) {
  EXPECT_THROW(rank3_stratum(5, 0), qmod::DomainError);
  EXPECT_THROW(rank3_stratum(5, 5), qmod::DomainError);
  EXPECT_THROW(rank4_stratum(5, 3, 3), qmod::DomainError);
  EXPECT_THROW(family_dimension(kField, 5, 3, Stratum{1, 0, 1}, 0), qmod::DomainError);
}

TEST(Secant, TwistedCubicExplicit) {
  const auto c = ParamCurve<PrimeField>::rational_normal(kField, 3);
  const auto i2 = i2_basis(c);
  ASSERT_EQ(i2.dimension(), 3u);
  const Fp t1 = kField.from_int(2);
  const Fp t2 = kField.from_int(5);
  // members of I_2 vanishing at a third chord point: kernel of the 1 x 3 evaluation row
  const auto p1 = c.point(t1);
  const auto p2 = c.point(t2);
  std::vector<Fp> p3;
  for (std::size_t i = 0; i < 4; ++i) p3.push_back(p1[i] + p2[i]);
  DenseMatrix<PrimeField> row(kField, 1, 3);
  for (std::size_t k = 0; k < 3; ++k) row(0, k) = i2.basis()[k](p3);
  EXPECT_EQ(qmod::kernel_basis(row).size(), 2u);
  EXPECT_EQ(secant_condition(c, i2, t1, t2), 1u);
  EXPECT_THROW(secant_condition(c, i2, t1, t1), qmod::DomainError);
}

TEST(Secant, RandomChordsCodimensionOne) {
  for (std::size_t r = 3; r <= 8; ++r) {
    const auto c = ParamCurve<PrimeField>::rational_normal(kField, r);
    const auto i2 = i2_basis(c);
    auto rng = qmod::make_rng(5, r);
    for (int trial = 0; trial < 100; ++trial) {
      const auto t1 = kField.random(rng);
      auto t2 = kField.random(rng);
      while (t2 == t1) t2 = kField.random(rng);
      EXPECT_EQ(secant_condition(c, i2, t1, t2), 1u);
    }
  }
}

TEST(Cone, RankAndRoundTrip) {
  auto rng = qmod::make_rng(6, 1);
  const auto c = ParamCurve<PrimeField>::rational_normal(kField, 5);
  const auto i2 = i2_basis(c);
  for (std::size_t e = 0; e <= 3; ++e) {
    for (const auto& q : i2.basis()) {
      const auto cone = cone_quadric(q, e);
      EXPECT_EQ(cone.rank(), q.rank());
      EXPECT_EQ(project_quadric(cone, e), q);
    }
    const auto big = cone_curve(c, e, rng);
    for (const auto& q : i2.basis()) EXPECT_TRUE(vanishes_on(cone_quadric(q, e), big));
  }
  const SymQuadric<PrimeField> full(DenseMatrix<PrimeField>::identity(kField, 3));
  EXPECT_THROW(project_quadric(full, 1), qmod::DomainError);
}

TEST(Genus4, GenericRankFour) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) EXPECT_EQ(genus4_check(kField, seed), 4u);
  DenseMatrix<PrimeField> forced(kField, 4, 4);
  for (std::size_t i = 0; i < 3; ++i) forced(i, i) = kField.one();
  EXPECT_EQ(SymQuadric<PrimeField>(forced).rank(), 3u);
  EXPECT_THROW(genus4_check(PrimeField(11), 1), qmod::ConfigurationError);
}

TEST(Genus5, RandomNets) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto rep = genus5_net_check(kField, seed);
    EXPECT_TRUE(rep.pass()) << seed;
    EXPECT_EQ(rep.analysis.line_degree, 5);
    EXPECT_TRUE(rep.analysis.squarefree_on_line);
    EXPECT_EQ(rep.analysis.low_rank_points, 0u);
    EXPECT_EQ(rep.attempts.size(), 1u);
  }
}

TEST(Genus5, DependentNetSignalsResample) {
  auto rng = qmod::make_rng(8, 1);
  const auto a = random_symmetric(kField, 5, rng);
  const auto b = random_symmetric(kField, 5, rng);
  EXPECT_EQ(analyze_net({a, b, b}, rng).status, NetStatus::dependent);
}

TEST(Genus5, ConeNetHasLowRankPoint) {
  // Q1 = x0^2 + x1^2 + x2^2 has rank 3, so (1:0:0) is a rank-3 member of the net.
  auto rng = qmod::make_rng(8, 2);
  DenseMatrix<PrimeField> q1(kField, 5, 5);
  for (std::size_t i = 0; i < 3; ++i) q1(i, i) = kField.one();
  const auto rep = analyze_net({q1, random_symmetric(kField, 5, rng), random_symmetric(kField, 5, rng)}, rng);
  EXPECT_EQ(rep.status, NetStatus::ok);
  EXPECT_FALSE(rep.pass());
  EXPECT_GE(rep.low_rank_points, 1u);
}

TEST(GridInterpolation, RecoversPolynomial) {
  const auto f = [](const Fp& x, const Fp& y) { return x * x * y + y * y * y - x + Fp(7, x.modulus()); };
  const auto b = qmod::interpolate_grid(kField, 3, 3, f);
  EXPECT_EQ(b.at(2, 1), kField.one());
  EXPECT_EQ(b.at(0, 3), kField.one());
  EXPECT_EQ(b.at(1, 0), -kField.one());
  EXPECT_EQ(b.at(0, 0), kField.from_int(7));
  EXPECT_EQ(b(kField.from_int(100), kField.from_int(-3)), f(kField.from_int(100), kField.from_int(-3)));
}

}  // namespace
