#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "trivdiag/rational.hpp"

namespace trivdiag::symcore {

/// Integer partition: weakly decreasing positive parts.
///
/// Ordering is lexicographic on the parts, so the reverse-lexicographic
/// listing used throughout (e.g. (3), (2,1), (1,1,1)) is descending order.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts the parts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to `part`.
  int multiplicity(int part) const;
  Partition conjugate() const;
  std::string to_string() const;

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Sequence of positive parts (order matters).
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  /// Composition of `n` whose partial sums are the given positions in [1, n).
  static Composition from_descent_set(int n, const std::vector<int>& positions);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// Partial sums strictly below the weight.
  std::vector<int> descent_set() const;
  Partition sorted() const { return Partition::from_unsorted(parts_); }
  std::string to_string() const;

  auto operator<=>(const Composition& other) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in reverse-lexicographic order; n = 0 yields { () }.
std::vector<Partition> partitions_of(int n);

/// prod_i i^{d_i} d_i! with d_i the multiplicity of part i.
Integer z_of(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda (hook length formula).
Integer standard_tableaux_count(const Partition& lambda);

/// n! / (c_1! ... c_k!).
Integer multinomial(const Composition& c);

/// Dominance order: lambda >= mu iff every partial sum of lambda dominates.
bool dominates(const Partition& lambda, const Partition& mu);

}  // namespace trivdiag::symcore
