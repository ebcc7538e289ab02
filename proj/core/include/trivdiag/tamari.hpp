#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trivdiag/partition.hpp"
#include "trivdiag/qpoly3.hpp"
#include "trivdiag/rational.hpp"

namespace trivdiag::tamari {

/// r-Dyck path of height n given by its left-boundary sequence a_1..a_n:
/// weakly increasing with a_i <= r(i-1). Indices in this API are 0-based.
class DyckPath {
 public:
  DyckPath(int r, std::vector<int> a);  // throws std::invalid_argument

  /// Parses "00367" or "0,0,3,6,7".
  static DyckPath parse(int r, const std::string& text);
  static DyckPath top(int n, int r);     // 0...0
  static DyckPath bottom(int n, int r);  // a_i = r(i-1)

  int r() const { return r_; }
  int n() const { return static_cast<int>(a_.size()); }
  const std::vector<int>& a() const { return a_; }
  int operator[](std::size_t i) const { return a_[i]; }
  long sum() const;

  /// Digit string when every entry is <= 9, comma-separated otherwise.
  std::string to_string() const;

  auto operator<=>(const DyckPath& other) const = default;

 private:
  int r_;
  std::vector<int> a_;
};

/// All r-Dyck paths of height n in lexicographic order.
std::vector<DyckPath> enumerate_paths(int n, int r);

/// (1/(rn+1)) binom((r+1)n, n).
Integer fuss_catalan(int n, int r);

/// Run lengths of equal consecutive entries.
symcore::Composition co_path(const DyckPath& path);

/// r binom(n,2) - sum a_i.
long area(const DyckPath& path);

/// End k >= i of the primitive subsequence starting at i (0-based).
int primitive_end(const DyckPath& path, int i);

/// Paths covering `path` in the r-Tamari order.
std::vector<DyckPath> up_covers(const DyckPath& path);

/// Polynomial in one variable with non-negative integer coefficients.
struct IntervalPoly {
  std::vector<std::int64_t> coeffs;  // coeffs[d] = #{alpha : d(alpha, beta) = d}

  std::int64_t at(std::int64_t q) const;
  /// The polynomial in q1, q2 or q3 (index 0, 1, 2).
  QPoly3 in_variable(int index) const;
  std::string to_string() const;
  bool operator==(const IntervalPoly& other) const = default;
};

class NotComparable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cover DAG of the r-Tamari order on D_n^(r) with precomputed downsets.
class TamariPoset {
 public:
  static TamariPoset build(int n, int r);
  /// Rebuilds from cover pairs (lower, upper) indexing enumerate_paths(n, r).
  static TamariPoset from_covers(int n, int r, const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<DyckPath>& elements() const { return elements_; }
  const DyckPath& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const DyckPath& path) const;

  const std::vector<std::size_t>& up_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& down_covers(std::size_t i) const { return down_[i]; }
  /// All (lower, upper) cover pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  bool leq(std::size_t lower, std::size_t upper) const;
  std::vector<std::size_t> downset(std::size_t upper) const;

  /// Maximum number of covers on a chain from lower up to upper.
  int longest_chain_length(std::size_t lower, std::size_t upper) const;

  /// i_beta(1): number of alpha <= beta.
  std::size_t interval_count(std::size_t beta) const;
  /// i_beta(q) = sum_{alpha <= beta} q^{d(alpha, beta)}.
  IntervalPoly interval_poly(std::size_t beta) const;
  std::vector<IntervalPoly> all_interval_polys(unsigned jobs = 1) const;

 private:
  TamariPoset() = default;
  void finish();

  int n_ = 0;
  int r_ = 0;
  std::vector<DyckPath> elements_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::uint64_t>> downsets_;
  std::vector<std::size_t> by_sum_;  // ascending sum of entries
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

/// Cache files hold {"schema_version":1,"n":..,"r":..,"covers":[[i,j],...]}.
std::filesystem::path cache_file(const std::filesystem::path& dir, int n, int r);
void save_cache(const TamariPoset& poset, const std::filesystem::path& dir);
std::optional<TamariPoset> load_cache(const std::filesystem::path& dir, int n, int r);
/// Loads from `dir` when possible, otherwise builds and writes the cache.
TamariPoset build_or_load(int n, int r, const std::optional<std::filesystem::path>& dir);

}  // namespace trivdiag::tamari
