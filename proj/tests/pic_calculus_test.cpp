#include <gtest/gtest.h>

#include <random>

#include "qmod/arith/random.hpp"
#include "qmod/bn_invariants.hpp"
#include "qmod/pic_calculus.hpp"
#include "qmod/pic_json.hpp"

namespace {

using qmod::BigInt;
using qmod::Rational;
using namespace qmod::pic;

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

DivisorClass random_symmetric_class(int g, int n, qmod::Rng& rng, bool with_bounds) {
  std::uniform_int_distribution<int> d(-20, 20);
  const auto rnd = [&] { return Rational(d(rng), 1 + (d(rng) + 20) % 5); };
  DivisorClass c(g, n);
  c.set_lambda(Coefficient::exact(rnd())).set_all_psi(Coefficient::exact(rnd()));
  c.set_b_irr(Coefficient::exact(rnd()));
  for (const auto& slot : boundary_slots(g, n)) {
    const bool bound = with_bounds && d(rng) > 0;
    c.set_b(slot.i, slot.s, bound ? Coefficient::at_least(rnd()) : Coefficient::exact(rnd()));
  }
  return c;
}

TEST(Coefficient, BoundArithmetic) {
  const auto e = Coefficient::exact(3);
  const auto a = Coefficient::at_least(2);
  EXPECT_EQ(e + e, Coefficient::exact(6));
  EXPECT_EQ(e + a, Coefficient::at_least(5));
  EXPECT_EQ(a + a, Coefficient::at_least(4));
  EXPECT_EQ(a.scaled(r(1, 2)), Coefficient::at_least(1));
  EXPECT_EQ(e.scaled(-1), Coefficient::exact(-3));
  EXPECT_THROW(a.scaled(-1), qmod::ConsistencyError);
}

TEST(DivisorClass, SlotsAreCanonical) {
  EXPECT_EQ(canonical_slot(15, 9, 0, 2), (BoundarySlot{0, 2}));
  EXPECT_EQ(canonical_slot(15, 9, 15, 7), (BoundarySlot{0, 2}));
  EXPECT_EQ(canonical_slot(4, 2, 2, 2), (BoundarySlot{2, 0}));
  EXPECT_THROW(canonical_slot(15, 9, 0, 1), qmod::DomainError);
  EXPECT_THROW(canonical_slot(15, 9, 15, 8), qmod::DomainError);
  for (const auto& s : boundary_slots(15, 9)) {
    EXPECT_LE(s.i, 15 - s.i);
    EXPECT_TRUE(is_boundary_divisor(15, 9, s.i, s.s));
  }
  // M_{1,2}: delta_{0:{1,2}} only
  EXPECT_EQ(boundary_slots(1, 2).size(), 1u);
}

TEST(DivisorClass, BoundsOnlyInBoundary) {
  DivisorClass c(3, 2);
  EXPECT_THROW(c.set_lambda(Coefficient::at_least(1)), qmod::DomainError);
  EXPECT_THROW(c.set_psi(1, Coefficient::at_least(1)), qmod::DomainError);
  EXPECT_NO_THROW(c.set_b_irr(Coefficient::at_least(1)));
  EXPECT_NO_THROW(c.set_b(0, 2, Coefficient::at_least(1)));
}

TEST(ChernPair, FifteenEight) {
  const auto cp = chern_pair(15, 8);
  EXPECT_EQ(cp.e, 7);
  EXPECT_EQ(cp.f, 26);
  EXPECT_EQ(cp.c1F.lambda().value, 13);
  for (const auto& p : cp.c1E.psi()) EXPECT_EQ(p.value, -1);
  for (const auto& p : cp.c1F.psi()) EXPECT_EQ(p.value, -5);
  EXPECT_EQ(cp.c1F.b_irr(), Coefficient::exact(1));
  for (const auto& [slot, c] : cp.c1F.boundary()) EXPECT_EQ(c, Coefficient::exact(1));
  EXPECT_THROW(chern_pair(5, 5), qmod::DomainError);
}

TEST(FrSigma, MatchesClosedFormsOverFamily) {
  const auto cases = qmod::bn::enumerate_quad_cases(40);
  ASSERT_FALSE(cases.empty());
  for (const auto& [g, n, k] : cases) {
    const auto c = fr_sigma_class(chern_pair(static_cast<int>(g), static_cast<int>(n)), k);
    const Rational alpha(qmod::bn::harris_tu_degree(g - n, k));
    EXPECT_EQ(c.lambda(), Coefficient::exact(alpha * Rational(7 * g - 9 * n + 6, g - n)));
    for (const auto& p : c.psi()) EXPECT_EQ(p, Coefficient::exact(alpha * Rational(g + n - 6, g - n)));
    EXPECT_EQ(c.b_irr(), Coefficient::exact(alpha));
  }
}

TEST(FrSigma, CalibrationFailureNamed) {
  try {
    fr_sigma_class(chern_pair(15, 8), 4);
    FAIL() << "expected DomainError";
  } catch (const qmod::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("calibration"), std::string::npos);
  }
}

TEST(FrDp, FifteenEight) {
  const auto d = fr_dp_class(chern_pair(15, 8));
  EXPECT_EQ(d.lambda(), Coefficient::exact(6 * 39));
  for (const auto& p : d.psi()) EXPECT_EQ(p, Coefficient::exact(6 * 17));
  EXPECT_EQ(d.b_irr(), Coefficient::exact(6 * 7));
  for (const auto& [slot, c] : d.boundary()) EXPECT_EQ(c, Coefficient::exact(6 * 7));
  EXPECT_THROW(fr_dp_class(chern_pair(11, 4)), qmod::DomainError);
}

TEST(QuadClass, ElevenFourFour) {
  const auto c = quad_class(11, 4, 4);
  const Rational alpha(qmod::bn::harris_tu_degree(7, 4));
  EXPECT_EQ(c.lambda().value / alpha, r(47, 7));
  EXPECT_EQ(c.psi(1).value / alpha, r(9, 7));
  EXPECT_EQ(c.b_irr(), Coefficient::exact(alpha));
  // k = 4: b_{0:s} exact, s(gs - 3s + n - 3)/(g - n)
  for (int s = 2; s <= 4; ++s) {
    EXPECT_EQ(c.b(0, s), Coefficient::exact(alpha * Rational(s * (8 * s + 1), 7)));
  }
  EXPECT_EQ(c.b(1, 3).kind, Kind::at_least);
  EXPECT_EQ(c.b(1, 3).value, alpha * tilde_b_quad(11, 4, 1, 3));
  EXPECT_EQ(c.b(3, 1), Coefficient::at_least(alpha));
  EXPECT_THROW(quad_class(15, 8, 4), qmod::DomainError);
}

TEST(QuadClass, AgreesWithFrSigmaAwayFromBoundary) {
  for (const auto& [g, n, k] : qmod::bn::enumerate_quad_cases(25)) {
    const auto q = quad_class(static_cast<int>(g), static_cast<int>(n), static_cast<int>(k));
    const auto s = fr_sigma_class(chern_pair(static_cast<int>(g), static_cast<int>(n)), k);
    EXPECT_EQ(q.lambda(), s.lambda());
    EXPECT_EQ(q.psi(), s.psi());
    EXPECT_EQ(q.b_irr(), s.b_irr());
  }
}

TEST(TildeB, ZeroRowIsRankFourFormula) {
  for (std::int64_t g = 2; g <= 40; ++g)
    for (std::int64_t n = 1; n < g; ++n)
      for (std::int64_t s = 0; s <= n; ++s) EXPECT_EQ(tilde_b_quad(g, n, 0, s), b0s_rank4(g, n, s));
}

TEST(TildeB, PencilBoundAtLeastSeven) {
  for (std::int64_t s = 1; s <= 8; ++s)
    for (std::int64_t i = 0; i < s; ++i) EXPECT_GE(tilde_b_dp(i, s), 7) << i << " " << s;
}

TEST(TildeB, PencilFormulaIsSevenTimesGeneral) {
  for (std::int64_t s = 0; s <= 8; ++s)
    for (std::int64_t i = 0; i <= 15; ++i) EXPECT_EQ(tilde_b_dp(i, s), 7 * tilde_b_quad(15, 8, i, s));
}

TEST(TildeB, GeneralBoundAtLeastOneOverFamily) {
  for (const auto& [g, n, k] : qmod::bn::enumerate_quad_cases(40))
    for (std::int64_t s = 1; s <= n; ++s)
      for (std::int64_t i = 0; i < s; ++i) {
        if (!is_boundary_divisor(static_cast<int>(g), static_cast<int>(n), static_cast<int>(i),
                                 static_cast<int>(s)))
          continue;
        EXPECT_GE(tilde_b_quad(g, n, i, s), 1) << g << " " << n << " " << i << " " << s;
      }
}

TEST(Pullback, BasicRules) {
  DivisorClass lam(4, 2);
  lam.set_lambda(Coefficient::exact(5));
  const auto pl = pullback_forgetful(lam);
  EXPECT_EQ(pl.n(), 3);
  EXPECT_EQ(pl.lambda, Coefficient::exact(5));

  DivisorClass psi1(4, 2);
  psi1.set_psi(1, Coefficient::exact(1));
  const auto pp = pullback_forgetful(psi1);
  EXPECT_EQ(pp.psi(1), Coefficient::exact(1));
  EXPECT_EQ(pp.psi(3), Coefficient::exact(0));
  // psi_1 - delta_{0:{1,3}}
  EXPECT_EQ(pp.b(0, 0b101), Coefficient::exact(1));
  EXPECT_EQ(pp.b(0, 0b110), Coefficient::exact(0));
  EXPECT_FALSE(pp.symmetrize().has_value());

  DivisorClass d(4, 2);
  d.set_b(1, 1, Coefficient::at_least(2));
  const auto pd = pullback_forgetting(ExpandedClass::expand(d), 1);
  // delta_{1:{a}} -> delta_{1:{a'}} + delta_{1:{a',1}} with old labels 1,2 -> 2,3
  EXPECT_EQ(pd.b(1, 0b010), Coefficient::at_least(2));
  EXPECT_EQ(pd.b(1, 0b011), Coefficient::at_least(2));
  EXPECT_EQ(pd.b(1, 0b001), Coefficient::exact(0));
}

TEST(Pullback, SymmetrizedSumIsSymmetric) {
  auto rng = qmod::make_rng(7, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const int g = 2 + trial % 4;
    const int n = 1 + trial % 4;
    const auto c = ExpandedClass::expand(random_symmetric_class(g, n, rng, trial % 2 == 1));
    ExpandedClass sum(g, n + 1);
    for (int j = 1; j <= n + 1; ++j) sum = sum + pullback_forgetting(c, j);
    EXPECT_TRUE(sum.symmetrize().has_value()) << g << " " << n;
  }
}

TEST(Pullback, Linear) {
  auto rng = qmod::make_rng(7, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const int g = 2 + trial % 3;
    const int n = 2 + trial % 3;
    const auto a = random_symmetric_class(g, n, rng, false);
    const auto b = random_symmetric_class(g, n, rng, false);
    const Rational x(trial - 7, 3);
    const Rational y(2 * trial + 1, 5);
    EXPECT_EQ(pullback_forgetful(a.scaled(x) + b.scaled(y)),
              pullback_forgetful(a).scaled(x) + pullback_forgetful(b).scaled(y));
  }
}

TEST(ZClass, Values) {
  const auto z = z_class_15_9();
  EXPECT_EQ(z.lambda(), Coefficient::exact(351));
  for (const auto& p : z.psi()) EXPECT_EQ(p, Coefficient::exact(136));
  EXPECT_EQ(z.b_irr(), Coefficient::exact(63));
  // delta_{0:{a,b}}: psi terms from the two maps forgetting a or b, plus seven boundary pullbacks
  EXPECT_EQ(z.b(0, 2), Coefficient::at_least(Rational(2 * 102 + 7 * 42, 6)));
  for (const auto& [slot, c] : z.boundary()) {
    EXPECT_EQ(c.kind, Kind::at_least);
    EXPECT_GE(c.value, 63);
    if (!(slot == BoundarySlot{0, 2})) {
      EXPECT_EQ(c.value, 63) << slot.i << " " << slot.s;
    }
  }
}

TEST(CanonicalAndBn, Values) {
  const auto k = canonical_class(15, 9);
  EXPECT_EQ(k.lambda().value, 13);
  for (const auto& p : k.psi()) EXPECT_EQ(p.value, 1);
  EXPECT_EQ(k.b(1, 0).value, 3);
  EXPECT_EQ(k.b(0, 5).value, 2);
  EXPECT_EQ(k.b(4, 3).value, 2);
  EXPECT_EQ(k.b_irr().value, 2);
  const auto bn = bn_class_15();
  EXPECT_EQ(bn.lambda().value, 54);
  EXPECT_EQ(bn.b_irr(), Coefficient::exact(8));
  for (const auto& p : bn.psi()) EXPECT_EQ(p.value, 0);
}

TEST(Certificate, PublishedMultipliers) {
  const auto rep = general_type_certificate(r(25, 297), r(2, 297), r(13, 66));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.lambda_residual, 0);
  for (const auto& p : rep.psi_residuals) EXPECT_EQ(p, 0);
  EXPECT_EQ(rep.e_irr, Coefficient::exact(0));
  bool saw_zero_two = false;
  for (const auto& s : rep.boundary) {
    if (s.slot == BoundarySlot{0, 2}) {
      saw_zero_two = true;
      EXPECT_FALSE(s.verified);
      ASSERT_TRUE(s.required_z_bound.has_value());
      EXPECT_EQ(*s.required_z_bound, 297);
    }
  }
  EXPECT_TRUE(saw_zero_two);
}

TEST(Certificate, ZeroMultipliersFail) {
  const auto rep = general_type_certificate(0, 0, 0);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.lambda_residual, 13);
  EXPECT_THROW(general_type_certificate(-1, 0, 0), qmod::DomainError);
}

TEST(Certificate, SolverMode) {
  const auto [x, y] = solve_certificate_multipliers(r(13, 66));
  EXPECT_EQ(x, r(25, 297));
  EXPECT_EQ(y, r(2, 297));
}

TEST(Json, RoundTrip) {
  auto rng = qmod::make_rng(11, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = random_symmetric_class(2 + trial % 5, trial % 5, rng, true);
    const auto j = to_json(c);
    EXPECT_EQ(divisor_class_from_json(nlohmann::json::parse(j.dump())), c);
  }
  const auto j = to_json(quad_class(11, 4, 4));
  EXPECT_EQ(j["b_irr"]["kind"], "exact");
  EXPECT_EQ(j["lambda"].get<std::string>().find('/') != std::string::npos, true);
}

}  // namespace
