#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "trivdiag/rational.hpp"

namespace trivdiag::linalg {

/// Integer matrix with a few small entries per row.
struct IntSparseMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
};

/// Kernel basis normalized on the free columns: basis[i] is 1 at
/// free_columns[i] and 0 at every other free column.
struct Nullspace {
  std::size_t cols = 0;
  std::vector<std::size_t> free_columns;
  std::vector<std::vector<Rational>> basis;

  std::size_t dimension() const { return basis.size(); }
  std::size_t rank() const { return cols - basis.size(); }
};

/// Exact fraction-free elimination over the integers followed by rational
/// back-substitution.
Nullspace nullspace_fraction_free(const IntSparseMatrix& m);

/// Reduced row echelon form modulo 62-bit primes picks the free columns; the
/// kernel vectors are rebuilt by Chinese remaindering and rational
/// reconstruction, then checked exactly against every row. Falls back to
/// nullspace_fraction_free if no prime certifies.
Nullspace nullspace_modular(const IntSparseMatrix& m);

/// Exact check that m * v == 0.
bool annihilates(const IntSparseMatrix& m, const std::vector<Rational>& v);

/// Kernel of a dense rational matrix (same normalization as Nullspace).
Nullspace dense_nullspace(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

/// Rational p/q with |p|, q <= sqrt(modulus / 2) congruent to `residue`, if any.
bool rational_reconstruct(const Integer& residue, const Integer& modulus, Rational& out);

/// Incremental row echelon form for sparse rational vectors keyed by Key.
/// Each stored row has leading (smallest) key coefficient 1 and no entry at
/// any other row's leading key.
template <class Key>
class SparseEchelon {
 public:
  using Vector = std::map<Key, Rational>;

  /// Reduces v against the stored rows; the remainder has no pivot keys.
  Vector reduce(Vector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto pivot = pivots_.find(it->first);
      if (pivot == pivots_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const Rational factor = it->second;
      for (const auto& [k, c] : rows_[pivot->second]) {
        auto [slot, inserted] = v.try_emplace(k, -factor * c);
        if (!inserted) {
          slot->second -= factor * c;
          if (slot->second == 0) v.erase(slot);
        }
      }
      it = v.upper_bound(key);
    }
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  /// Returns true when v was independent of the stored rows.
  bool insert(const Vector& v) {
    Vector rest = reduce(v);
    if (rest.empty()) return false;
    const Key lead = rest.begin()->first;
    const Rational inv = 1 / rest.begin()->second;
    for (auto& [k, c] : rest) c *= inv;
    // Keep other rows free of the new pivot key.
    for (auto& row : rows_) {
      auto hit = row.find(lead);
      if (hit == row.end()) continue;
      const Rational factor = hit->second;
      for (const auto& [k, c] : rest) {
        auto [slot, inserted] = row.try_emplace(k, -factor * c);
        if (!inserted) {
          slot->second -= factor * c;
          if (slot->second == 0) row.erase(slot);
        }
      }
    }
    pivots_.emplace(lead, rows_.size());
    rows_.push_back(std::move(rest));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  std::vector<Vector> rows_;
  std::map<Key, std::size_t> pivots_;
};

}  // namespace trivdiag::linalg
