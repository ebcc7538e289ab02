#include <random>

#include <gtest/gtest.h>

#include "trivdiag/nabla3.hpp"
#include "trivdiag/schur_q3.hpp"

using namespace trivdiag;
using namespace trivdiag::nabla3;

namespace {

using Poly2 = std::map<std::pair<int, int>, Integer>;

// s_{a,b}(x, y) = (xy)^b h_{a-b}(x, y).
Poly2 two_variable(const TwoRowElem& e) {
  Poly2 out;
  for (const auto& [key, c] : e.terms()) {
    const auto [a, b] = key;
    for (int i = 0; i <= a - b; ++i) out[{b + i, b + a - b - i}] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly2 multiply(const Poly2& u, const Poly2& v) {
  Poly2 out;
  for (const auto& [e1, c1] : u) {
    for (const auto& [e2, c2] : v) out[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TwoRowElem random_element(std::mt19937& rng) {
  TwoRowElem e;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    const int b = static_cast<int>(rng() % 4);
    const int a = b + static_cast<int>(rng() % 5);
    e += TwoRowElem::s(a, b, static_cast<long>(rng() % 7) - 3);
  }
  return e;
}

}  // namespace

TEST(TwoRow, ProductMatchesTwoVariablePolynomials) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = random_element(rng);
    const auto v = random_element(rng);
    EXPECT_EQ(two_variable(tworow_mul(u, v)), multiply(two_variable(u), two_variable(v)))
        << u.to_string() << " * " << v.to_string();
    EXPECT_EQ(tworow_mul(u, v), u * v);
    EXPECT_EQ(u * v, v * u);
  }
  EXPECT_EQ((TwoRowElem::s(1) * TwoRowElem::s(1)).to_string(), "s2 + s11");
  EXPECT_THROW(TwoRowElem::s(1, 2), std::invalid_argument);
}

TEST(TwoRow, ValuesAtOneOneOne) {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= a; ++b) {
      const Integer expected = s_ab_at_q111(a, b);
      EXPECT_EQ(expected, Integer((b + 1) * (a + 2) * (a - b + 1) / 2));
      const auto poly = symcore::schur_q3_poly(symcore::Partition::from_unsorted({a, b}));
      EXPECT_EQ(poly.evaluate(1, 1, 1), Rational(expected));
      EXPECT_EQ(TwoRowElem::s(a, b).to_qpoly3(), poly);
    }
  }
  EXPECT_EQ(TwoRowElem::s(10, 2).to_string(), "s{10,2}");
}

TEST(Nabla3, FirstPowerMatchesPrintedCharacteristic) {
  const auto h = h3(1);
  EXPECT_EQ(h.c3, TwoRowElem(1));
  EXPECT_EQ(h.c21, TwoRowElem::s(1) + TwoRowElem::s(2));
  EXPECT_EQ(h.c111, TwoRowElem::s(1, 1) + TwoRowElem::s(3));
  EXPECT_EQ(specialize_q111(h), (std::array<Integer, 3>{1, 9, 13}));
  EXPECT_EQ(specialize_q111(h3(2)), (std::array<Integer, 3>{13, 59, 58}));
}

TEST(Nabla3, CharacteristicPolynomialAndEigenvector) {
  for (const auto& residual : charpoly_residual()) EXPECT_TRUE(residual.is_zero());
  EXPECT_TRUE(eigen_check());
  EXPECT_TRUE(is_s11_eigenvector(eigenvector()));
  EXPECT_FALSE(is_s11_eigenvector(FrobVector3::S3()));
}

TEST(Nabla3, ClosedFormForManyPowers) {
  for (int r = 1; r <= 8; ++r) EXPECT_EQ(h3(r), h3_closed(r)) << r;
}

TEST(Nabla3, LinearityOfNabla) {
  const FrobVector3 v = FrobVector3::S3() + TwoRowElem::s(2) * FrobVector3::S111();
  EXPECT_EQ(nabla_apply(v), nabla_apply(FrobVector3::S3()) + TwoRowElem::s(2) * nabla_apply(FrobVector3::S111()));
}

TEST(Nabla3, PrintedTPolynomialDisagreesWithSummation) {
  EXPECT_EQ(t_at_q111_direct(3, 1), 13);
  EXPECT_EQ(t_at_q111_printed(3, 1), 9);
  for (int k = 0; k <= 4; ++k) {
    for (int n = 3 * k; n <= 3 * k + 6; ++n) {
      long sum = 0;
      for (int j = 0; j <= k; ++j) {
        const int a = n - 2 * j;
        if (a >= j) sum += (j + 1) * (a + 2) * (a - j + 1) / 2;
      }
      EXPECT_EQ(t_at_q111_direct(n, k), sum) << n << " " << k;
    }
  }
}
