#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <unistd.h>

#include <gtest/gtest.h>

#include "trivdiag/tamari.hpp"

using namespace trivdiag;
using namespace trivdiag::tamari;

namespace {

std::vector<std::string> names(const std::vector<DyckPath>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(p.to_string());
  return out;
}

// Paths by brute force over all sequences with 0 <= a_i <= r(n-1).
std::vector<DyckPath> brute_paths(int n, int r) {
  std::vector<DyckPath> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  const int top = r * (n - 1);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (a[static_cast<std::size_t>(i)] > r * i || (i > 0 && a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i - 1)])) ok = false;
    }
    if (ok) out.emplace_back(r, a);
    int k = n - 1;
    while (k >= 0 && a[static_cast<std::size_t>(k)] == top) a[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++a[static_cast<std::size_t>(k)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Covers straight from the definition: at a rise a_{i-1} < a_i decrement the
// segment up to the first j with a_j - a_i >= r(j - i).
std::vector<std::vector<int>> cover_definition(const std::vector<int>& a, int r) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(a.size());
  for (int i = 1; i < n; ++i) {
    if (a[static_cast<std::size_t>(i - 1)] >= a[static_cast<std::size_t>(i)]) continue;
    int k = i;
    while (k + 1 < n && a[static_cast<std::size_t>(k + 1)] - a[static_cast<std::size_t>(i)] < r * (k + 1 - i)) ++k;
    auto b = a;
    for (int j = i; j <= k; ++j) --b[static_cast<std::size_t>(j)];
    out.push_back(b);
  }
  return out;
}

// Reachability and longest path computed by plain DFS over the cover map.
struct Oracle {
  std::map<std::vector<int>, std::vector<std::vector<int>>> up;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> memo;

  Oracle(int n, int r) {
    for (const auto& p : brute_paths(n, r)) up[p.a()] = cover_definition(p.a(), r);
  }
  // -1 when upper is not reachable from lower.
  int longest(const std::vector<int>& lower, const std::vector<int>& upper) {
    if (lower == upper) return 0;
    auto key = std::make_pair(lower, upper);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = -1;
    for (const auto& next : up[lower]) {
      const int d = longest(next, upper);
      if (d >= 0) best = std::max(best, d + 1);
    }
    return memo[key] = best;
  }
};

}  // namespace

TEST(DyckPath, Validation) {
  EXPECT_NO_THROW(DyckPath(2, {0, 0, 3, 6, 7}));
  EXPECT_THROW(DyckPath(1, {0, 2}), std::invalid_argument);
  EXPECT_THROW(DyckPath(1, {1}), std::invalid_argument);
  EXPECT_THROW(DyckPath(2, {0, 2, 1}), std::invalid_argument);
  EXPECT_THROW(DyckPath(0, {0}), std::invalid_argument);
  EXPECT_EQ(DyckPath::parse(2, "00367").a(), (std::vector<int>{0, 0, 3, 6, 7}));
  EXPECT_EQ(DyckPath::bottom(4, 1).to_string(), "0123");
  EXPECT_EQ(DyckPath::top(4, 1).to_string(), "0000");
}

TEST(DyckPath, EnumerationMatchesPrintedList) {
  EXPECT_EQ(names(enumerate_paths(3, 2)),
            (std::vector<std::string>{"000", "001", "002", "003", "004", "011", "012", "013", "014", "022", "023", "024"}));
}

TEST(DyckPath, EnumerationMatchesBruteForceAndFussCatalan) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 6; ++n) {
      const auto paths = enumerate_paths(n, r);
      EXPECT_EQ(paths, brute_paths(n, r));
      EXPECT_EQ(Integer(static_cast<unsigned long>(paths.size())), fuss_catalan(n, r));
    }
  }
  EXPECT_EQ(fuss_catalan(7, 1), 429);
  EXPECT_EQ(fuss_catalan(3, 2), 12);
}

TEST(DyckPath, Statistics) {
  EXPECT_EQ(co_path(DyckPath(1, {0, 0, 1, 1, 2})), (symcore::Composition{2, 2, 1}));
  EXPECT_EQ(area(DyckPath::bottom(5, 2)), 0);
  EXPECT_EQ(area(DyckPath::top(5, 2)), 20);
  EXPECT_EQ(primitive_end(DyckPath(1, {0, 1, 2, 3}), 1), 1);
  EXPECT_EQ(primitive_end(DyckPath(1, {0, 1, 1, 3}), 1), 2);
  EXPECT_THROW(primitive_end(DyckPath(1, {0}), 3), std::out_of_range);
}

TEST(DyckPath, UpCoversMatchDefinition) {
  std::vector<std::string> covers = names(up_covers(DyckPath(1, {0, 1, 2, 3})));
  std::sort(covers.begin(), covers.end());
  EXPECT_EQ(covers, (std::vector<std::string>{"0023", "0113", "0122"}));
  for (int r = 1; r <= 3; ++r) {
    for (const auto& p : enumerate_paths(5, r)) {
      std::set<std::vector<int>> got, expected;
      for (const auto& q : up_covers(p)) {
        got.insert(q.a());
        EXPECT_LT(q.sum(), p.sum());
      }
      for (const auto& q : cover_definition(p.a(), r)) expected.insert(q);
      EXPECT_EQ(got, expected) << p.to_string();
    }
  }
}

TEST(TamariPoset, FourOneMatchesKnownDiagram) {
  const auto poset = TamariPoset::build(4, 1);
  ASSERT_EQ(poset.size(), 14u);
  EXPECT_EQ(poset.element(poset.top()).to_string(), "0000");
  EXPECT_EQ(poset.element(poset.bottom()).to_string(), "0123");
  const std::set<std::string> labels = {"0000", "0111", "0001", "0011", "0112", "0002", "0012",
                                        "0022", "0003", "0113", "0013", "0023", "0123", "0122"};
  const auto all = names(poset.elements());
  EXPECT_EQ(std::set<std::string>(all.begin(), all.end()), labels);
  // The Hasse diagram of the classical Tamari lattice on 14 elements is the
  // 1-skeleton of the 3-dimensional associahedron: 3-regular, 21 edges.
  EXPECT_EQ(poset.cover_pairs().size(), 21u);
  for (std::size_t i = 0; i < poset.size(); ++i) EXPECT_EQ(poset.up_covers(i).size() + poset.down_covers(i).size(), 3u);
  std::size_t total = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) total += poset.interval_count(i);
  EXPECT_EQ(total, 68u);
}

TEST(TamariPoset, OrderAndChainsMatchDepthFirstOracle) {
  for (auto [n, r] : {std::pair{4, 1}, {5, 1}, {4, 2}, {3, 3}}) {
    const auto poset = TamariPoset::build(n, r);
    Oracle oracle(n, r);
    for (std::size_t i = 0; i < poset.size(); ++i) {
      for (std::size_t j = 0; j < poset.size(); ++j) {
        const int d = oracle.longest(poset.element(i).a(), poset.element(j).a());
        ASSERT_EQ(poset.leq(i, j), d >= 0) << poset.element(i).to_string() << " " << poset.element(j).to_string();
        if (d >= 0) {
          EXPECT_EQ(poset.longest_chain_length(i, j), d);
        } else {
          EXPECT_THROW(poset.longest_chain_length(i, j), NotComparable);
        }
      }
    }
  }
}

TEST(TamariPoset, IntervalPolynomials) {
  const auto poset = TamariPoset::build(3, 1);
  const auto top = poset.top();
  EXPECT_EQ(poset.interval_poly(top).to_string(), "1 + 2*q + q^2 + q^3");
  for (auto [n, r] : {std::pair{5, 1}, {4, 2}}) {
    const auto p = TamariPoset::build(n, r);
    const auto polys = p.all_interval_polys(2);
    for (std::size_t b = 0; b < p.size(); ++b) {
      EXPECT_EQ(polys[b], p.interval_poly(b));
      EXPECT_EQ(static_cast<std::size_t>(polys[b].at(1)), p.interval_count(b));
      // the longest chain from the bottom has length area(beta)
      EXPECT_EQ(p.longest_chain_length(p.bottom(), b), area(p.element(b)));
      EXPECT_EQ(static_cast<long>(polys[b].coeffs.size()) - 1, area(p.element(b)));
    }
  }
}

TEST(TamariPoset, InvariantsOnRandomSizes) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int r = 1 + static_cast<int>(rng() % 3);
    const auto p = TamariPoset::build(n, r);
    EXPECT_EQ(Integer(static_cast<unsigned long>(p.size())), fuss_catalan(n, r));
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_TRUE(p.leq(i, p.top()));
      EXPECT_TRUE(p.leq(p.bottom(), i));
      EXPECT_TRUE(p.leq(i, i));
      EXPECT_EQ(p.downset(i).size(), p.interval_count(i));
    }
  }
}

TEST(TamariCache, RoundTripAndCorruptFile) {
  const auto dir = std::filesystem::temp_directory_path() / ("trivdiag_cache_test_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  EXPECT_FALSE(load_cache(dir, 4, 2).has_value());
  const auto built = build_or_load(4, 2, dir);
  ASSERT_TRUE(std::filesystem::exists(cache_file(dir, 4, 2)));
  const auto loaded = load_cache(dir, 4, 2);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->cover_pairs(), built.cover_pairs());
  EXPECT_EQ(loaded->all_interval_polys(), built.all_interval_polys());
  std::ofstream(cache_file(dir, 4, 2)) << "{\"schema_version\": 1, \"n\": 4";
  EXPECT_FALSE(load_cache(dir, 4, 2).has_value());
  std::ofstream(cache_file(dir, 4, 2)) << R"({"schema_version": 1, "n": 4, "r": 2, "covers": [[0, 999]]})";
  EXPECT_FALSE(load_cache(dir, 4, 2).has_value());
  EXPECT_EQ(build_or_load(4, 2, dir).cover_pairs(), built.cover_pairs());
  std::filesystem::remove_all(dir);
}
