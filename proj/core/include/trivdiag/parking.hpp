#pragma once

#include <vector>

#include "trivdiag/partition.hpp"
#include "trivdiag/tamari.hpp"

namespace trivdiag::parking {

/// Lex-increasing rearrangement of the two-row array (1..n ; f_1..f_n),
/// sorted by value then position. alpha holds 1-based positions.
struct Rearrangement {
  std::vector<int> alpha;
  std::vector<int> beta;
};

Rearrangement rearrange(const std::vector<int>& f);

/// Sorted values satisfy b_k <= r(k-1).
bool is_parking(const std::vector<int>& f, int r);

/// How cars are read off when turning a parking function into a word.
enum class ReadingOrder {
  rows,       // alpha(f) as is
  diagonals,  // by decreasing c_i = r i - b_i, top row first on ties
};

class ParkingFunction {
 public:
  ParkingFunction(int r, std::vector<int> f);  // throws std::invalid_argument

  int r() const { return r_; }
  int n() const { return static_cast<int>(f_.size()); }
  const std::vector<int>& values() const { return f_; }
  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<int>& beta() const { return beta_; }
  /// c_i = r i - b_i with i 1-based; stored 0-based.
  const std::vector<int>& diagonal_offsets() const { return c_; }

  tamari::DyckPath shape() const { return tamari::DyckPath(r_, beta_); }
  int dinv() const;
  std::vector<int> reading_word(ReadingOrder order) const;
  /// Composition of the inverse descent set of the reading word:
  /// i is a descent when car i+1 is read before car i.
  symcore::Composition reading_composition(ReadingOrder order) const;
  symcore::Composition descent_composition() const { return reading_composition(ReadingOrder::rows); }

  auto operator<=>(const ParkingFunction& other) const = default;

 private:
  int r_;
  std::vector<int> f_;
  std::vector<int> alpha_;
  std::vector<int> beta_;
  std::vector<int> c_;
};

tamari::DyckPath shape(const std::vector<int>& f, int r);
symcore::Composition descent_composition(const std::vector<int>& f, int r);
int dinv(const std::vector<int>& f, int r);

/// All parking functions of shape beta, lexicographically sorted.
std::vector<ParkingFunction> pf_of_shape(const tamari::DyckPath& beta);
/// All r-parking functions of length n, lexicographically sorted.
std::vector<ParkingFunction> all_parking(int n, int r);

}  // namespace trivdiag::parking
