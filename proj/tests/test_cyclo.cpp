#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "pcubed/cyclo.hpp"

namespace pcubed {
namespace {

// x^e mod Phi_{p^3}(x) by schoolbook long division, independent of the
// library's reduction.
std::vector<Rational> power_mod_cyclotomic(int p, long e) {
  const long p2 = static_cast<long>(p) * p, p3 = p2 * p, phi = p2 * (p - 1);
  e %= p3;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
  poly[e] = 1;
  std::vector<Rational> modulus(phi + 1);
  for (int k = 0; k < p; ++k) modulus[k * p2] = 1;
  for (long top = static_cast<long>(poly.size()) - 1; top >= phi; --top) {
    const Rational c = poly[top];
    if (c == 0) continue;
    for (long j = 0; j <= phi; ++j) poly[top - phi + j] -= c * modulus[j];
  }
  poly.resize(phi);
  return poly;
}

CycloNum random_element(int p, std::mt19937_64& rng) {
  const int phi = p * p * (p - 1);
  std::uniform_int_distribution<int> coeff(-4, 4), den(1, 3), pick(0, 3);
  std::vector<Rational> c(phi);
  for (auto& x : c) {
    if (pick(rng) != 0) continue;
    x = Rational(coeff(rng), den(rng));
    x.canonicalize();
  }
  return CycloNum::from_coefficients(p, c);
}

TEST(CycloNum, RootOfUnityMatchesLongDivision) {
  for (int p : {3, 5}) {
    for (long e = 0; e < static_cast<long>(p) * p * p; ++e) {
      EXPECT_EQ(CycloNum::root_of_unity(p, e).coefficients(), power_mod_cyclotomic(p, e)) << "p=" << p << " e=" << e;
    }
  }
}

TEST(CycloNum, Omega18) {
  const CycloNum w18 = CycloNum::root_of_unity(3, 18);
  EXPECT_EQ(w18, CycloNum(3, -1) - CycloNum::root_of_unity(3, 9));
  EXPECT_EQ(w18.to_string(), "-1 - w^9");
}

TEST(CycloNum, ExponentsReduceModP3) {
  EXPECT_TRUE(CycloNum::root_of_unity(3, 0).is_one());
  EXPECT_TRUE(CycloNum::root_of_unity(3, 27).is_one());
  EXPECT_EQ(CycloNum::root_of_unity(3, -1), CycloNum::root_of_unity(3, 26));
  EXPECT_EQ(CycloNum::root_of_unity(5, 130), CycloNum::root_of_unity(5, 5));
}

TEST(CycloNum, OmegaHasExactOrder) {
  for (int p : {3, 5, 7}) {
    const long p2 = static_cast<long>(p) * p;
    const CycloNum w = CycloNum::root_of_unity(p, 1);
    EXPECT_TRUE(w.pow(p2 * p).is_one());
    for (long m = 1; m < p; ++m) EXPECT_FALSE(w.pow(p2 * m).is_one());
  }
}

TEST(CycloNum, EpsilonSatisfiesPhiP) {
  for (int p : {3, 5, 7}) {
    CycloNum sum(p);
    for (int k = 0; k < p; ++k) sum += CycloNum::root_of_unity(p, static_cast<long>(k) * p * p);
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(CycloNum, MultiplyAddsExponents) {
  EXPECT_EQ(CycloNum::root_of_unity(3, 4) * CycloNum::root_of_unity(3, 5), CycloNum::root_of_unity(3, 9));
  EXPECT_EQ(CycloNum::root_of_unity(3, 20) * CycloNum::root_of_unity(3, 10), CycloNum::root_of_unity(3, 3));
}

TEST(CycloNum, RingAxioms) {
  std::mt19937_64 rng(7);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 60; ++trial) {
      const CycloNum a = random_element(p, rng), b = random_element(p, rng), c = random_element(p, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a + (-a)).is_zero());
      EXPECT_EQ(a - b, a + (-b));
      EXPECT_EQ(a * CycloNum(p, 1), a);
    }
  }
}

TEST(CycloNum, InverseOnRandomElements) {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 200) {
    const CycloNum a = random_element(3, rng);
    if (a.is_zero()) continue;
    const CycloNum b = a.inverse();
    EXPECT_TRUE((a * b).is_one());
    EXPECT_TRUE((b * a).is_one());
    ++checked;
  }
}

TEST(CycloNum, InverseSpecialCases) {
  EXPECT_EQ(CycloNum::root_of_unity(3, 5).inverse(), CycloNum::root_of_unity(3, 22));
  EXPECT_EQ(CycloNum(3, 2).inverse(), CycloNum(3, Rational(1, 2)));
  const CycloNum x = CycloNum(3, 1) + CycloNum::root_of_unity(3, 9);
  EXPECT_TRUE((x * x.inverse()).is_one());
  // 1 + eps = -eps^2, so its inverse is -eps
  EXPECT_EQ(x.inverse(), -CycloNum::root_of_unity(3, 9));
  const CycloNum y = CycloNum(5, 3) - CycloNum::root_of_unity(5, 7) + CycloNum(5, Rational(1, 2)) * CycloNum::root_of_unity(5, 99);
  EXPECT_TRUE((y * inv(y)).is_one());
}

TEST(CycloNum, Errors) {
  EXPECT_THROW(CycloNum::root_of_unity(2, 1), std::invalid_argument);
  EXPECT_THROW(CycloNum::root_of_unity(9, 1), std::invalid_argument);
  EXPECT_THROW(CycloNum(3).inverse(), std::domain_error);
  EXPECT_THROW(CycloNum::root_of_unity(3, 1) + CycloNum::root_of_unity(5, 1), std::invalid_argument);
  try {
    CycloNum::root_of_unity(4, 0);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported prime"), std::string::npos);
  }
}

TEST(CycloNum, CoefficientVectorHasFieldDegree) {
  EXPECT_EQ(CycloNum(3).coefficients().size(), 18u);
  EXPECT_EQ(CycloNum(5, 1).coefficients().size(), 100u);
  EXPECT_EQ(CycloNum(7, 1).coefficients().size(), 294u);
}

TEST(CycloNum, Strings) {
  EXPECT_EQ(CycloNum(3).to_string(), "0");
  EXPECT_EQ(CycloNum::root_of_unity(3, 0).to_compact_string(), "1");
  EXPECT_EQ(CycloNum::root_of_unity(3, 20).to_compact_string(), "w^20");
  EXPECT_EQ(CycloNum::root_of_unity(3, 20).root_of_unity_exponent(), 20);
  EXPECT_FALSE(CycloNum(3, 2).root_of_unity_exponent().has_value());
  EXPECT_EQ(CycloNum(3, 2).to_compact_string(), "2");
}

}  // namespace
}  // namespace pcubed
