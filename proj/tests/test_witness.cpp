#include <wellcentered/witness_examples.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace wellcentered;

namespace {

// Integers modulo a small prime, enough to instantiate MultiPoly.
template <int P>
struct ModP {
  int v = 0;
  ModP() = default;
  ModP(int x) : v(((x % P) + P) % P) {}
  friend ModP operator+(ModP a, ModP b) { return ModP(a.v + b.v); }
  friend ModP operator-(ModP a, ModP b) { return ModP(a.v - b.v); }
  friend ModP operator*(ModP a, ModP b) { return ModP(a.v * b.v); }
  friend bool operator==(ModP, ModP) = default;
};

RationalPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 2), coeff(-4, 4), terms(0, 4);
  RationalPoly p;
  for (int t = terms(rng); t > 0; --t) {
    const Monomial m{static_cast<unsigned>(deg(rng)), static_cast<unsigned>(deg(rng)), static_cast<unsigned>(deg(rng))};
    p += RationalPoly::term(mpq_class(coeff(rng), 1 + deg(rng)), m);
  }
  return p;
}

}  // namespace

TEST(PowerOnePlusSqrt2, Examples) {
  EXPECT_EQ(power_one_plus_sqrt2(1), (QuadraticNumber{1, 1}));
  EXPECT_EQ(power_one_plus_sqrt2(2), (QuadraticNumber{3, 2}));
  EXPECT_EQ(power_one_plus_sqrt2(3), (QuadraticNumber{7, 5}));
  EXPECT_THROW(power_one_plus_sqrt2(0), std::invalid_argument);
}

TEST(PowerOnePlusSqrt2, NeverRationalUpToFifty) {
  // Integer recurrence a' = a + 2b, b' = a + b, computed independently.
  mpz_class a = 1, b = 1;
  for (unsigned n = 1; n <= 50; ++n) {
    const auto q = power_one_plus_sqrt2(n);
    EXPECT_EQ(q.a, mpq_class(a)) << n;
    EXPECT_EQ(q.b, mpq_class(b)) << n;
    EXPECT_FALSE(q.is_rational()) << n;
    EXPECT_GT(q.b, 0);
    const mpz_class na = a + 2 * b, nb = a + b;
    a = na;
    b = nb;
  }
}

TEST(PowerOnePlusSqrt2, NormIsPlusMinusOne) {
  for (unsigned n = 1; n <= 50; ++n) {
    const auto q = power_one_plus_sqrt2(n);
    EXPECT_EQ(q.a * q.a - 2 * q.b * q.b, n % 2 ? -1 : 1);
  }
}

TEST(MultiPoly, RingAxioms) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p * RationalPoly::constant(1), p);
  }
}

TEST(MultiPoly, Printing) {
  using P = RationalPoly;
  EXPECT_EQ(to_string(P{}), "0");
  EXPECT_EQ(to_string(P::X() + P::Y() * P::Z()), "YZ + X");
  EXPECT_EQ(to_string(P::constant(mpq_class(4, 6)) * P::X() * P::X() - P::constant(3)), "-3 + 2/3*X^2");
}

TEST(ExsimpleFlatness, Verified) {
  const auto c = verify_exsimple_flatness();
  EXPECT_TRUE(c.verified) << c.detail;
}

TEST(ExsimpleFlatness, PerturbedIdentityFails) {
  using P = RationalPoly;
  const auto c = verify_exsimple_flatness(P::X() + P::constant(2) * P::Y() * P::Z());
  EXPECT_FALSE(c.verified);
  EXPECT_NE(c.detail.find("differs"), std::string::npos);
}

TEST(ExsimpleFlatness, HoldsOverFiniteFields) {
  using P2 = MultiPoly<ModP<2>>;
  using P7 = MultiPoly<ModP<7>>;
  EXPECT_TRUE(verify_flatness_identity(P2::X() + P2::Y() * P2::Z()).verified);
  EXPECT_TRUE(verify_flatness_identity(P7::X() + P7::Y() * P7::Z()).verified);
  // 2YZ is 0 in characteristic 2, so the perturbation only fails elsewhere.
  EXPECT_FALSE(verify_flatness_identity(P2::X()).verified);
  EXPECT_FALSE(verify_flatness_identity(P7::X() + P7::constant(2) * P7::Y() * P7::Z()).verified);
}

TEST(ExsimpleSeparation, GeneratorImages) {
  using P = RationalPoly;
  EXPECT_EQ(substitute_x0_y_inv_z(P::Y() * P::Z()), (LaurentZ{{0, 1}}));
  EXPECT_EQ(substitute_x0_y_inv_z(P::X() + P::Y() * P::Z()), (LaurentZ{{0, 1}}));
  EXPECT_EQ(substitute_x0_y_inv_z(P::Y()), (LaurentZ{{-1, 1}}));
  EXPECT_TRUE(substitute_x0_y_inv_z(P::X() * P::Z()).empty());
  EXPECT_EQ(substitute_x0_y_inv_z(P::Z()), (LaurentZ{{1, 1}}));
}

TEST(ExsimpleSeparation, Verified) {
  const auto c = verify_exsimple_Z_not_in_A();
  EXPECT_TRUE(c.verified) << c.detail;
  EXPECT_NE(c.detail.find("1/(X+YZ) -> 1"), std::string::npos) << c.detail;
  EXPECT_NE(c.detail.find("YZ -> 1"), std::string::npos) << c.detail;
}

TEST(ExsimpleSeparation, GeneratorsOfBFail) {
  const auto c = verify_exsimple_Z_not_in_A(exsimple_generators_of_B());
  EXPECT_FALSE(c.verified);
  EXPECT_NE(c.detail.find("Z maps outside"), std::string::npos) << c.detail;
}

TEST(ExsimpleSeparation, ImagesOfProductsStayInSpan) {
  // The substitution is multiplicative on polynomials, so products of the
  // polynomial generators of A also land in nonpositive powers.
  const auto gens = exsimple_generators_of_A();
  for (const auto& a : gens)
    for (const auto& b : gens) {
      if (!(a.denominator == RationalPoly::constant(1)) || !(b.denominator == RationalPoly::constant(1))) continue;
      const auto img = substitute_x0_y_inv_z(a.numerator * b.numerator);
      LaurentZ expected;
      for (const auto& [ea, ca] : substitute_x0_y_inv_z(a.numerator))
        for (const auto& [eb, cb] : substitute_x0_y_inv_z(b.numerator)) expected[ea + eb] += ca * cb;
      EXPECT_EQ(img, expected);
      if (!img.empty()) {
        EXPECT_LE(img.rbegin()->first, 0);
      }
    }
}
