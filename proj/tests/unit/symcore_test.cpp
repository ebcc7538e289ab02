#include <functional>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "trivdiag/characters.hpp"
#include "trivdiag/schur_q3.hpp"
#include "trivdiag/symfunc.hpp"

using namespace trivdiag;
using namespace trivdiag::symcore;

namespace {

// Brute-force oracles --------------------------------------------------------

long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

// Standard tableaux by removing a corner cell in every possible way.
long count_syt(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[i];
    total += count_syt(smaller);
  }
  return total;
}

// Semistandard fillings of lambda with content mu, cell by cell.
long count_ssyt(const Partition& lambda, const Partition& mu) {
  std::vector<std::vector<int>> grid;
  for (int len : lambda.parts()) grid.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> left = mu.parts();
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid[i].size(); ++j) cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::function<long(std::size_t)> fill = [&](std::size_t k) -> long {
    if (k == cells.size()) return 1;
    const auto [i, j] = cells[k];
    long total = 0;
    for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (j > 0 && grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] > v) continue;
      if (i > 0 && grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] >= v) continue;
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      --left[static_cast<std::size_t>(v - 1)];
      total += fill(k + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    return total;
  };
  return fill(0);
}

// Coefficient of x^mu in p_lambda: ways to send each part to one variable.
long power_sum_oracle(const Partition& lambda, const Partition& mu) {
  std::vector<int> left = mu.parts();
  std::function<long(std::size_t)> place = [&](std::size_t k) -> long {
    if (k == lambda.parts().size()) return std::all_of(left.begin(), left.end(), [](int v) { return v == 0; });
    long total = 0;
    for (auto& slot : left) {
      if (slot >= lambda.parts()[k]) {
        slot -= lambda.parts()[k];
        total += place(k + 1);
        slot += lambda.parts()[k];
      }
    }
    return total;
  };
  return place(0);
}

// Coefficient of x^mu in e_lambda: 0-1 matrices with row sums lambda and
// column sums mu.
long elementary_oracle(const Partition& lambda, const Partition& mu) {
  std::vector<int> left = mu.parts();
  const int cols = static_cast<int>(left.size());
  std::function<long(std::size_t, int, int)> rows = [&](std::size_t row, int col, int need) -> long {
    if (row == lambda.parts().size()) return std::all_of(left.begin(), left.end(), [](int v) { return v == 0; });
    if (need == 0) return rows(row + 1, 0, row + 1 < lambda.parts().size() ? lambda.parts()[row + 1] : 0);
    if (col == cols) return 0;
    long total = rows(row, col + 1, need);
    if (left[static_cast<std::size_t>(col)] > 0) {
      --left[static_cast<std::size_t>(col)];
      total += rows(row, col + 1, need - 1);
      ++left[static_cast<std::size_t>(col)];
    }
    return total;
  };
  return rows(0, 0, lambda.parts().empty() ? 0 : lambda.parts()[0]);
}

}  // namespace

TEST(Rational, ParseAndDisplay) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(to_display_string(Rational(3)), "3");
  EXPECT_EQ(to_display_string(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, FactorialsAndBinomials) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(rising_factorial(Rational(3), 0), 1);
  EXPECT_EQ(rising_factorial(Rational(3), 4), 3 * 4 * 5 * 6);
  EXPECT_EQ(rising_factorial(Rational(-2), 3), 0);
  for (long n = 0; n <= 12; ++n) {
    for (long k = 1; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(Partition, EnumerationMatchesCountingRecurrence) {
  for (int n = 0; n <= 10; ++n) {
    const auto parts = partitions_of(n);
    EXPECT_EQ(static_cast<long>(parts.size()), count_partitions(n, n)) << n;
    EXPECT_TRUE(std::is_sorted(parts.rbegin(), parts.rend()));
  }
  EXPECT_EQ(partitions_of(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
}

TEST(Partition, BasicOperations) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_EQ(Partition::from_unsorted({0, 1, 3, 0, 2}), (Partition{3, 2, 1}));
  EXPECT_EQ((Partition{4, 2, 1}).conjugate(), (Partition{3, 2, 1, 1}));
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : partitions_of(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
  }
  EXPECT_TRUE(dominates(Partition{3, 1}, Partition{2, 2}));
  EXPECT_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
  EXPECT_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST(Partition, CentralizerOrdersSumToOne) {
  for (int n = 1; n <= 8; ++n) {
    Rational total = 0;
    for (const auto& mu : partitions_of(n)) total += Rational(1) / Rational(z_of(mu));
    EXPECT_EQ(total, 1) << n;
  }
  EXPECT_EQ(z_of(Partition{2, 2, 1}), 8);
}

TEST(Partition, HookLengthMatchesCornerRemoval) {
  for (int n = 1; n <= 9; ++n) {
    Integer square_sum = 0;
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(standard_tableaux_count(lambda), count_syt(lambda.parts())) << lambda.to_string();
      square_sum += standard_tableaux_count(lambda) * standard_tableaux_count(lambda);
    }
    EXPECT_EQ(square_sum, factorial(static_cast<unsigned long>(n)));
  }
}

TEST(Composition, DescentSetRoundTrip) {
  const Composition c{2, 1, 3};
  EXPECT_EQ(c.descent_set(), (std::vector<int>{2, 3}));
  EXPECT_EQ(Composition::from_descent_set(6, {2, 3}), c);
  EXPECT_EQ(multinomial(Composition{2, 2, 1}), 30);
  EXPECT_EQ(c.sorted(), (Partition{3, 2, 1}));
  EXPECT_THROW(Composition({2, 0}), std::invalid_argument);
}

TEST(SymFunc, KostkaMatchesTableauEnumeration) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto s = SymFuncQ::basis_element(Basis::schur, lambda);
      for (const auto& mu : partitions_of(n)) {
        const long expected = count_ssyt(lambda, mu);
        EXPECT_EQ(kostka_number(lambda, mu), expected);
        EXPECT_EQ(s.coeff(mu), expected) << lambda.to_string() << " " << mu.to_string();
      }
    }
  }
}

TEST(SymFunc, PowerSumAndElementaryMatchCounting) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto p = SymFuncQ::basis_element(Basis::powersum, lambda);
      const auto e = SymFuncQ::basis_element(Basis::elementary, lambda);
      for (const auto& mu : partitions_of(n)) {
        EXPECT_EQ(p.coeff(mu), power_sum_oracle(lambda, mu));
        EXPECT_EQ(e.coeff(mu), elementary_oracle(lambda, mu));
      }
    }
  }
}

TEST(SymFunc, BasisChangeRoundTrips) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int n = 1; n <= 6; ++n) {
    for (auto basis : {Basis::elementary, Basis::homogeneous, Basis::powersum, Basis::schur}) {
      std::map<Partition, Rational> coeffs;
      for (const auto& lambda : partitions_of(n)) {
        if (int c = coeff(rng)) coeffs[lambda] = Rational(c) / (1 + std::abs(coeff(rng)));
      }
      const auto f = SymFuncQ::from_basis(basis, n, coeffs);
      EXPECT_EQ(f.in_basis(basis), coeffs);
      EXPECT_EQ(SymFuncQ::from_basis(basis, n, f.in_basis(basis)), f);
    }
  }
}

TEST(SymFunc, OmegaExchangesHAndE) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(omega(SymFuncQ::basis_element(Basis::homogeneous, lambda)),
                SymFuncQ::basis_element(Basis::elementary, lambda));
      EXPECT_EQ(omega(SymFuncQ::basis_element(Basis::schur, lambda)),
                SymFuncQ::basis_element(Basis::schur, lambda.conjugate()));
    }
  }
}

TEST(SymFunc, DegreeMismatchThrows) {
  SymFuncQ a(2), b(3);
  EXPECT_THROW(a += b, std::invalid_argument);
  EXPECT_THROW(a.add_term(Partition{3}, 1), std::invalid_argument);
  EXPECT_THROW(SymFuncQ(-1), std::invalid_argument);
}

TEST(Characters, OrthogonalityAndSpecialValues) {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        Integer sum = 0;
        for (const auto& lambda : parts) sum += character_value(lambda, mu) * character_value(lambda, nu);
        EXPECT_EQ(sum, mu == nu ? z_of(mu) : Integer(0));
      }
    }
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    for (const auto& lambda : parts) {
      EXPECT_EQ(character_value(lambda, Partition(ones)), standard_tableaux_count(lambda));
      EXPECT_EQ(character_value(Partition{n}, lambda), 1);
      EXPECT_EQ(character_value(Partition(ones), lambda), (n - lambda.length()) % 2 ? -1 : 1);
    }
  }
  EXPECT_THROW(character_value(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST(Quasisymmetric, ExtremeFundamentals) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    EXPECT_EQ(*fundamental(Composition{n}).to_symmetric(), SymFuncQ::basis_element(Basis::homogeneous, Partition{n}));
    EXPECT_EQ(*fundamental(Composition(ones)).to_symmetric(), SymFuncQ::basis_element(Basis::elementary, Partition{n}));
  }
  EXPECT_FALSE(fundamental(Composition{1, 2}).is_symmetric());
  // Q_{12} + Q_{21} + Q_{3} + Q_{111} summed over descent classes gives h_1^3.
  symcore::QuasiSymFunc<Rational> sum(3, 3);
  sum.add_scaled(fundamental(Composition{3}), Rational(1));
  sum.add_scaled(fundamental(Composition{1, 2}), Rational(2));
  sum.add_scaled(fundamental(Composition{2, 1}), Rational(2));
  sum.add_scaled(fundamental(Composition{1, 1, 1}), Rational(1));
  EXPECT_EQ(*sum.to_symmetric(), SymFuncQ::basis_element(Basis::homogeneous, Partition{1, 1, 1}));
}

TEST(Plethysm, PointEvaluationAtConstantPowerSums) {
  // p_k -> x is the evaluation at x ones.
  for (int x = 1; x <= 6; ++x) {
    std::map<int, Rational> phi;
    for (int k = 1; k <= 6; ++k) phi[k] = x;
    for (int k = 1; k <= 6; ++k) {
      EXPECT_EQ(plethystic_point_eval(SymFuncQ::basis_element(Basis::elementary, Partition{k}), phi), binomial(x, k));
      EXPECT_EQ(plethystic_point_eval(SymFuncQ::basis_element(Basis::homogeneous, Partition{k}), phi),
                binomial(x + k - 1, k));
    }
  }
  EXPECT_THROW(plethystic_point_eval(SymFuncQ::basis_element(Basis::elementary, Partition{2}), std::map<int, Rational>{{1, 1}}),
               std::out_of_range);
}

TEST(SchurQ3, DecomposeRecomposeAndValues) {
  EXPECT_EQ(schur_q3_poly(Partition{2, 1}).evaluate(1, 1, 1), 8);
  EXPECT_TRUE(schur_q3(Partition{1, 1, 1, 1}).vanished);
  EXPECT_TRUE(schur_q3_poly(Partition{1, 1, 1, 1}).is_zero());
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<Partition, Integer> coeffs;
    for (int d = 0; d <= 5; ++d) {
      for (const auto& mu : partitions_of(d)) {
        if (mu.length() <= 3 && rng() % 3 == 0) coeffs[mu] = static_cast<long>(rng() % 4) + 1;
      }
    }
    EXPECT_EQ(schur_decompose_q3(schur_recompose_q3(coeffs)), coeffs);
  }
  EXPECT_THROW(schur_decompose_q3(QPoly3::variable(0)), std::invalid_argument);
  EXPECT_EQ(schur_q3_string({}), "0");
  EXPECT_EQ(schur_q3_string({{Partition{}, 1}, {Partition{1}, 2}}), "1 + 2*s1");
}

TEST(QPoly3, ArithmeticAndText) {
  const QPoly3 q1 = QPoly3::variable(0), q2 = QPoly3::variable(1), q3 = QPoly3::variable(2);
  EXPECT_EQ((QPoly3(1) + q1 + q2 + q3).to_string(), "1 + q1 + q2 + q3");
  const auto p = (q1 + q2) * (q1 - q2);
  EXPECT_EQ(p, q1 * q1 - q2 * q2);
  EXPECT_EQ(p.evaluate(3, 2, 7), 5);
  EXPECT_TRUE((q1 * q2 + q2 * q3 + q1 * q3).is_symmetric());
  EXPECT_FALSE(p.is_symmetric());
  EXPECT_EQ(p.permuted({1, 0, 2}), -p);
  EXPECT_EQ((q1 * q3).specialize(2, 5), q1 * Rational(5));
}
