#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "trivdiag/parking.hpp"

using namespace trivdiag;
using namespace trivdiag::parking;

namespace {

// Every sequence over [0, r(n-1)] whose sorted values stay under the line.
std::vector<std::vector<int>> brute_parking(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  const int top = r * (n - 1);
  while (true) {
    auto sorted = f;
    std::sort(sorted.begin(), sorted.end());
    bool ok = true;
    for (int k = 0; k < n; ++k) ok = ok && sorted[static_cast<std::size_t>(k)] <= r * k;
    if (ok) out.push_back(f);
    int k = n - 1;
    while (k >= 0 && f[static_cast<std::size_t>(k)] == top) f[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++f[static_cast<std::size_t>(k)];
  }
  return out;
}

// D-inversion triples counted directly from the two-row array, 1-based.
int dinv_oracle(const std::vector<int>& f, int r) {
  const int n = static_cast<int>(f.size());
  std::vector<std::pair<int, int>> cols;  // (b, a)
  for (int i = 0; i < n; ++i) cols.emplace_back(f[static_cast<std::size_t>(i)], i + 1);
  std::sort(cols.begin(), cols.end());
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int ci = r * i - cols[static_cast<std::size_t>(i - 1)].first;
      const int cj = r * j - cols[static_cast<std::size_t>(j - 1)].first;
      const int ai = cols[static_cast<std::size_t>(i - 1)].second;
      const int aj = cols[static_cast<std::size_t>(j - 1)].second;
      for (int d = 0; d < r; ++d) {
        const int x = ci - cj + d;
        if ((x == 0 && ai < aj) || (x >= 1 && x <= r - 1) || (x == r && ai > aj)) ++count;
      }
    }
  }
  return count;
}

std::string text(const std::vector<int>& f) {
  std::string s;
  for (int v : f) s += std::to_string(v);
  return s;
}

}  // namespace

TEST(Parking, RearrangementSortsByValueThenPosition) {
  const auto r = rearrange({2, 0, 2, 1});
  EXPECT_EQ(r.alpha, (std::vector<int>{2, 4, 1, 3}));
  EXPECT_EQ(r.beta, (std::vector<int>{0, 1, 2, 2}));
}

TEST(Parking, Predicate) {
  EXPECT_TRUE(is_parking({2, 0, 4}, 2));
  EXPECT_FALSE(is_parking({1, 1}, 1));
  EXPECT_FALSE(is_parking({0, 5, 0}, 2));
  EXPECT_THROW(ParkingFunction(1, {1, 1}), std::invalid_argument);
  EXPECT_THROW(ParkingFunction(1, {0, -1}), std::invalid_argument);
}

TEST(Parking, PrintedListOfFortyNine) {
  std::vector<std::string> got;
  for (const auto& f : all_parking(3, 2)) got.push_back(text(f.values()));
  const std::vector<std::string> printed = {
      "000", "001", "002", "003", "004", "010", "011", "012", "013", "014", "020", "021", "022",
      "023", "024", "030", "031", "032", "040", "041", "042", "100", "101", "102", "103", "104",
      "110", "120", "130", "140", "200", "201", "202", "203", "204", "210", "220", "230", "240",
      "300", "301", "302", "310", "320", "400", "401", "402", "410", "420"};
  EXPECT_EQ(got, printed);
}

TEST(Parking, EnumerationMatchesBruteForce) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<std::vector<int>> got;
      for (const auto& f : all_parking(n, r)) got.push_back(f.values());
      auto expected = brute_parking(n, r);
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(got, expected);
      long power = 1;
      for (int i = 0; i < n - 1; ++i) power *= r * n + 1;
      EXPECT_EQ(static_cast<long>(got.size()), power);
    }
  }
}

TEST(Parking, ShapeBlocksHaveMultinomialSize) {
  for (int r = 1; r <= 3; ++r) {
    for (const auto& beta : tamari::enumerate_paths(5, r)) {
      const auto block = pf_of_shape(beta);
      EXPECT_EQ(Integer(static_cast<unsigned long>(block.size())), symcore::multinomial(tamari::co_path(beta)));
      for (const auto& f : block) EXPECT_EQ(f.shape(), beta);
    }
  }
}

TEST(Parking, DinvMatchesTripleCount) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& f : brute_parking(n, r)) {
        EXPECT_EQ(dinv(f, r), dinv_oracle(f, r)) << text(f) << " r=" << r;
      }
    }
  }
}

TEST(Parking, DinvAtROneOnSmallExamples) {
  // 000 puts the cars on three diagonals, 012 puts them on one.
  EXPECT_EQ(dinv({0}, 1), 0);
  EXPECT_EQ(dinv({0, 0, 0}, 1), 0);
  EXPECT_EQ(dinv({0, 1, 2}, 1), 3);
  EXPECT_EQ(dinv({2, 1, 0}, 1), 0);
}

TEST(Parking, DescentCompositionTracksInverseDescents) {
  // alpha(f) = 2 4 1 3: car 1 is read after car 2, car 3 after car 4, so
  // the descents sit at 1 and 3.
  const ParkingFunction f(1, {2, 0, 2, 1});
  EXPECT_EQ(f.alpha(), (std::vector<int>{2, 4, 1, 3}));
  EXPECT_EQ(f.descent_composition(), (symcore::Composition{1, 2, 1}));
  EXPECT_EQ(descent_composition({2, 0, 2, 1}, 1), (symcore::Composition{1, 2, 1}));
  EXPECT_EQ(f.reading_word(ReadingOrder::rows), f.alpha());
}

TEST(Parking, DiagonalReadingIsAPermutationOfTheCars) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int r = 1 + static_cast<int>(rng() % 3);
    const auto all = brute_parking(n, r);
    const auto& values = all[rng() % all.size()];
    const ParkingFunction f(r, values);
    auto word = f.reading_word(ReadingOrder::diagonals);
    std::sort(word.begin(), word.end());
    std::vector<int> cars(static_cast<std::size_t>(n));
    std::iota(cars.begin(), cars.end(), 1);
    EXPECT_EQ(word, cars);
    EXPECT_EQ(f.reading_composition(ReadingOrder::diagonals).weight(), n);
    // relabelling positions keeps the shape
    auto shuffled = values;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(shape(shuffled, r), f.shape());
  }
}
