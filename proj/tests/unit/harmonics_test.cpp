#include <random>

#include <gtest/gtest.h>

#include "trivdiag/harmonics.hpp"
#include "trivdiag/linalg.hpp"
#include "trivdiag/schur_q3.hpp"

using namespace trivdiag;
using namespace trivdiag::harmonics;
using symcore::Partition;

namespace {

std::vector<Exponent3> operator_degrees(int n) {
  std::vector<Exponent3> out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      for (int c = 0; a + b + c <= n; ++c) {
        if (a + b + c > 0) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

// Kernel dimension in one tri-degree from a dense rational system built by
// applying every P_alpha(dX) to every monomial.
std::size_t dense_kernel_dimension(int n, const TriDegree& d) {
  const auto monomials = monomials_of_degree(n, d);
  std::vector<std::vector<Rational>> rows;
  for (const auto& alpha : operator_degrees(n)) {
    std::map<Monomial, std::vector<Rational>> images;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      const auto image = p_alpha_apply(alpha, XPoly::monomial(n, monomials[j]));
      for (const auto& [m, c] : image.terms()) {
        auto& row = images[m];
        row.resize(monomials.size(), 0);
        row[j] += c;
      }
    }
    for (auto& [m, row] : images) rows.push_back(std::move(row));
  }
  return linalg::dense_nullspace(rows, monomials.size()).dimension();
}

bool is_harmonic(const XPoly& p, int n) {
  for (const auto& alpha : operator_degrees(n)) {
    if (!p_alpha_apply(alpha, p).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST(Harmonics, TwoColumnsGiveTheFourBasisPolynomials) {
  const auto space = kernel_space(2);
  EXPECT_EQ(space.total_dimension(), 4u);
  EXPECT_EQ(hilbert_series(space).to_string(), "1 + q1 + q2 + q3");
  const auto& x_part = space.components.at({1, 0, 0});
  ASSERT_EQ(x_part.basis.size(), 1u);
  // proportional to x2 - x1
  const auto& b = x_part.basis[0];
  EXPECT_EQ(b.terms().size(), 2u);
  const auto delta = vandermonde(2, VarSet::x);
  const auto& x2 = delta.terms().rbegin()->first;
  EXPECT_EQ(b * (delta.coeff(x2) / b.coeff(x2)), delta);
  const auto frob = graded_frobenius(space);
  EXPECT_EQ(symcore::schur_q3_string(symcore::schur_decompose_q3(frob.at(Partition{2}))), "1");
  EXPECT_EQ(symcore::schur_q3_string(symcore::schur_decompose_q3(frob.at(Partition{1, 1}))), "s1");
}

TEST(Harmonics, ThreeColumnsAgreeWithDenseElimination) {
  KernelOptions options;
  options.extra_degrees = 1;
  const auto space = kernel_space(3, options);
  EXPECT_EQ(space.total_dimension(), 32u);
  EXPECT_EQ(space.top_degree(), 3);
  for (const auto& [d, c] : space.components) {
    EXPECT_EQ(c.dimension, dense_kernel_dimension(3, d)) << d[0] << d[1] << d[2];
    EXPECT_EQ(c.basis.size(), c.dimension);
    for (const auto& p : c.basis) {
      EXPECT_TRUE(is_harmonic(p, 3));
      EXPECT_EQ(p.homogeneous_degree(), d);
    }
    if (!c.class_traces.empty()) {
      // identity class (1,1,1) is listed last
      EXPECT_EQ(c.class_traces.back(), Integer(static_cast<unsigned long>(c.dimension)));
    }
  }
}

TEST(Harmonics, ThreeColumnFrobeniusMatchesPrintedTable) {
  const auto frob = graded_frobenius(kernel_space(3));
  auto text = [&](const Partition& lambda) {
    return symcore::schur_q3_string(symcore::schur_decompose_q3(frob.at(lambda)));
  };
  EXPECT_EQ(text(Partition{3}), "1");
  EXPECT_EQ(text(Partition{2, 1}), "s1 + s2");
  EXPECT_EQ(text(Partition{1, 1, 1}), "s11 + s3");
}

TEST(Harmonics, FrobeniusNeedsTraces) {
  KernelOptions options;
  options.compute_traces = false;
  EXPECT_THROW(graded_frobenius(kernel_space(2, options)), std::logic_error);
}

TEST(Harmonics, JobsDoNotChangeTheResult) {
  KernelOptions one, three;
  three.jobs = 3;
  const auto a = kernel_space(3, one);
  const auto b = kernel_space(3, three);
  EXPECT_EQ(hilbert_series(a), hilbert_series(b));
  EXPECT_EQ(graded_frobenius(a), graded_frobenius(b));
}

TEST(Harmonics, ClosureOfTheVandermonde) {
  for (int n = 1; n <= 3; ++n) {
    const auto closure = closure_space(n);
    EXPECT_EQ(hilbert_series(closure), hilbert_series(kernel_space(n))) << n;
    for (const auto& [d, c] : closure.components) {
      for (const auto& p : c.basis) EXPECT_TRUE(is_harmonic(p, n));
    }
  }
}

TEST(Harmonics, HigherSpacesInTwoColumns) {
  for (int r = 1; r <= 3; ++r) {
    const auto h = higher_space(2, r, r + 1);
    EXPECT_EQ(h.space.total_dimension(), static_cast<std::size_t>((r + 1) * (r + 1)));
    EXPECT_TRUE(h.top_degree_certified);
    EXPECT_EQ(hilbert_series(h.space),
              symcore::schur_q3_poly(Partition::from_unsorted({r - 1})) + symcore::schur_q3_poly(Partition{r}));
  }
  const auto uncertified = higher_space(2, 2, 2);
  EXPECT_FALSE(uncertified.top_degree_certified);
  EXPECT_FALSE(uncertified.warning.empty());
}

TEST(Harmonics, AlternantGeneratorsAreAlternating) {
  const auto gens = alternant_generators(3, 3);
  EXPECT_FALSE(gens.empty());
  for (const auto& g : gens) {
    EXPECT_FALSE(g.is_zero());
    EXPECT_EQ(diagonal_action({1, 0, 2}, g), -g);
    EXPECT_EQ(diagonal_action({1, 2, 0}, g), g);
  }
}

TEST(Harmonics, CommutatorOnRandomPolynomials) {
  std::mt19937 rng(41);
  const VarSet sets[3] = {VarSet::x, VarSet::y, VarSet::z};
  for (int trial = 0; trial < 100; ++trial) {
    XPoly p(3);
    for (int t = 0; t < 3; ++t) {
      Monomial m{};
      for (int i = 0; i < 5; ++i) ++exponent(m, static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
      p.add_term(m, static_cast<long>(rng() % 5) + 1);
    }
    const int u = static_cast<int>(rng() % 3);
    const int v = (u + 1 + static_cast<int>(rng() % 2)) % 3;
    Exponent3 alpha{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
    if (alpha[static_cast<std::size_t>(u)] == 0) alpha[static_cast<std::size_t>(u)] = 1;
    EXPECT_TRUE(commutator_check(alpha, 1 + static_cast<int>(rng() % 3), sets[u], sets[v], p));
  }
  EXPECT_THROW(commutator_check({0, 1, 1}, 1, VarSet::x, VarSet::y, XPoly(3)), std::invalid_argument);
  EXPECT_THROW(commutator_check({1, 1, 1}, 1, VarSet::x, VarSet::x, XPoly(3)), std::invalid_argument);
}
