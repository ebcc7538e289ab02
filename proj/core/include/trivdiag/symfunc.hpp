#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trivdiag/partition.hpp"
#include "trivdiag/qpoly3.hpp"
#include "trivdiag/rational.hpp"

namespace trivdiag::symcore {

enum class Basis { monomial, elementary, homogeneous, powersum, schur };

std::string_view basis_tag(Basis basis);  // "m", "e", "h", "p", "s"
Basis parse_basis(std::string_view tag);

inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const QPoly3& c) { return c.is_zero(); }

/// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka_number(const Partition& lambda, const Partition& mu);

/// Transition data between one basis and the monomial basis in a fixed degree.
/// Rows and columns follow partitions_of(degree).
struct BasisTable {
  std::vector<Partition> partitions;
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<Rational>> to_monomial;    // row lambda: b_lambda in m
  std::vector<std::vector<Rational>> from_monomial;  // row mu: m_mu in b
};

/// Degrees up to kMaxTableDegree are computed once and shared read-only.
inline constexpr int kMaxTableDegree = 8;
const BasisTable& basis_table(Basis basis, int degree);

/// Monomial-basis symmetric function, homogeneous of a fixed degree, over a
/// coefficient ring C (Rational or QPoly3).
template <class C>
class SymFunc {
 public:
  explicit SymFunc(int degree = 0) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  int degree() const { return degree_; }
  const std::map<Partition, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Partition& lambda, const C& value) {
    if (lambda.weight() != degree_) throw std::invalid_argument("partition weight differs from degree");
    if (is_zero_coeff(value)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, value);
    if (!inserted) {
      it->second += value;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  SymFunc& operator+=(const SymFunc& other) {
    check_degree(other);
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& other) {
    check_degree(other);
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, C(0) - c);
    return *this;
  }
  template <class S>
  SymFunc& scale(const S& factor) {
    SymFunc out(degree_);
    for (const auto& [lambda, c] : terms_) out.add_term(lambda, c * factor);
    return *this = std::move(out);
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  bool operator==(const SymFunc& other) const = default;

  /// b_lambda expressed in the monomial basis, times `coeff`.
  static SymFunc basis_element(Basis basis, const Partition& lambda, const C& coeff = C(1)) {
    SymFunc out(lambda.weight());
    const auto& table = basis_table(basis, lambda.weight());
    const auto& row = table.to_monomial[table.index.at(lambda)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) out.add_term(table.partitions[j], coeff * row[j]);
    }
    return out;
  }

  static SymFunc from_basis(Basis basis, int degree, const std::map<Partition, C>& coeffs) {
    SymFunc out(degree);
    for (const auto& [lambda, c] : coeffs) out += basis_element(basis, lambda, c);
    return out;
  }

  /// Coefficients in another basis (exact inverse of the transition matrix).
  std::map<Partition, C> in_basis(Basis basis) const {
    std::map<Partition, C> out;
    if (basis == Basis::monomial) return terms_;
    const auto& table = basis_table(basis, degree_);
    for (const auto& [mu, c] : terms_) {
      const auto& row = table.from_monomial[table.index.at(mu)];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        C term = c * row[j];
        auto [it, inserted] = out.try_emplace(table.partitions[j], term);
        if (!inserted) it->second += term;
      }
    }
    std::erase_if(out, [](const auto& kv) { return is_zero_coeff(kv.second); });
    return out;
  }

 private:
  void check_degree(const SymFunc& other) const {
    if (other.degree_ != degree_) throw std::invalid_argument("degree mismatch");
  }
  int degree_;
  std::map<Partition, C> terms_;
};

using SymFuncQ = SymFunc<Rational>;
using SymFuncQ3 = SymFunc<QPoly3>;

/// Monomial expansion of e_lambda, h_lambda, p_lambda or s_lambda by direct
/// expansion in |lambda| indeterminates (Schur via tableau counting).
SymFuncQ basis_to_monomial(Basis basis, const Partition& lambda);

/// omega(h_lambda) = e_lambda; p_k -> (-1)^{k-1} p_k.
template <class C>
SymFunc<C> omega(const SymFunc<C>& f) {
  auto p = f.in_basis(Basis::powersum);
  for (auto& [lambda, c] : p) {
    if ((f.degree() - lambda.length()) % 2 != 0) c = C(0) - c;
  }
  return SymFunc<C>::from_basis(Basis::powersum, f.degree(), p);
}

/// Quasisymmetric polynomial in a fixed number of indeterminates, stored over
/// weak compositions (exponent vectors).
template <class C>
class QuasiSymFunc {
 public:
  QuasiSymFunc(int degree, int num_vars) : degree_(degree), num_vars_(num_vars) {}

  int degree() const { return degree_; }
  int num_vars() const { return num_vars_; }
  const std::map<std::vector<int>, C>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponent, const C& value) {
    if (is_zero_coeff(value)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, value);
    if (!inserted) {
      it->second += value;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  template <class S>
  void add_scaled(const QuasiSymFunc<S>& other, const C& factor) {
    for (const auto& [e, c] : other.terms()) add_term(e, factor * c);
  }

  /// Symmetric iff every coefficient depends only on the sorted exponents.
  bool is_symmetric() const {
    std::map<std::vector<int>, C> by_shape;
    std::map<std::vector<int>, std::size_t> counts;
    for (const auto& [e, c] : terms_) {
      auto key = e;
      std::sort(key.begin(), key.end(), std::greater<>());
      auto [it, inserted] = by_shape.try_emplace(key, c);
      if (!inserted && !(it->second == c)) return false;
      ++counts[key];
    }
    for (const auto& [key, count] : counts) {
      if (count != distinct_permutations(key)) return false;
    }
    return true;
  }

  /// Monomial-basis form when symmetric; requires num_vars >= degree.
  std::optional<SymFunc<C>> to_symmetric() const {
    if (num_vars_ < degree_ || !is_symmetric()) return std::nullopt;
    SymFunc<C> out(degree_);
    for (const auto& [e, c] : terms_) {
      if (std::is_sorted(e.begin(), e.end(), std::greater<>())) {
        out.add_term(Partition::from_unsorted(e), c);
      }
    }
    return out;
  }

 private:
  static std::size_t distinct_permutations(std::vector<int> key) {
    std::sort(key.begin(), key.end());
    std::size_t count = 0;
    do {
      ++count;
    } while (std::next_permutation(key.begin(), key.end()));
    return count;
  }

  int degree_;
  int num_vars_;
  std::map<std::vector<int>, C> terms_;
};

/// Fundamental quasisymmetric polynomial Q_c in `num_vars` indeterminates
/// (defaults to |c|).
QuasiSymFunc<Rational> fundamental(const Composition& c, int num_vars = 0);

/// Expands f in power sums and substitutes p_k -> phi(k).
template <class R>
R plethystic_point_eval(const SymFuncQ& f, const std::map<int, R>& phi) {
  R total(0);
  for (const auto& [lambda, c] : f.in_basis(Basis::powersum)) {
    R term(c);
    for (int k : lambda.parts()) {
      auto it = phi.find(k);
      if (it == phi.end()) {
        throw std::out_of_range("plethystic substitution missing p_" + std::to_string(k));
      }
      term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace trivdiag::symcore
