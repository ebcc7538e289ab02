#pragma once

#include <array>
#include <map>
#include <string>

#include "trivdiag/rational.hpp"

namespace trivdiag {

/// Exponent triple (d1, d2, d3) of q1^d1 q2^d2 q3^d3.
using Exponent3 = std::array<int, 3>;

/// Exact polynomial in q1, q2, q3 with rational coefficients.
class QPoly3 {
 public:
  QPoly3() = default;
  QPoly3(long constant);  // NOLINT: integers promote into the ring
  QPoly3(const Rational& constant);  // NOLINT

  static QPoly3 monomial(const Exponent3& exponent, const Rational& coeff = 1);
  static QPoly3 variable(int index);  // 0, 1, 2 -> q1, q2, q3

  const std::map<Exponent3, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponent3& exponent) const;

  QPoly3& operator+=(const QPoly3& other);
  QPoly3& operator-=(const QPoly3& other);
  QPoly3& operator*=(const QPoly3& other);
  QPoly3& operator*=(const Rational& scalar);
  QPoly3 operator-() const;

  friend QPoly3 operator+(QPoly3 a, const QPoly3& b) { return a += b; }
  friend QPoly3 operator-(QPoly3 a, const QPoly3& b) { return a -= b; }
  friend QPoly3 operator*(QPoly3 a, const QPoly3& b) { return a *= b; }
  friend QPoly3 operator*(QPoly3 a, const Rational& s) { return a *= s; }
  friend QPoly3 operator*(const Rational& s, QPoly3 a) { return a *= s; }
  bool operator==(const QPoly3& other) const = default;

  Rational evaluate(const Rational& q1, const Rational& q2, const Rational& q3) const;

  /// Substitutes a constant for one variable (its exponent becomes 0).
  QPoly3 specialize(int index, const Rational& value) const;

  /// Permutes variables: the exponent in slot i moves to slot perm[i].
  QPoly3 permuted(const std::array<int, 3>& perm) const;
  bool is_symmetric() const;

  /// Terms of total degree `degree` only.
  QPoly3 homogeneous_part(int degree) const;
  int max_total_degree() const;

  /// Graded-lex text, e.g. "1 + q1 + q2 + q3" or "2*q1^2*q3 - 1/2".
  std::string to_string() const;

 private:
  void add_term(const Exponent3& exponent, const Rational& coeff);
  std::map<Exponent3, Rational> terms_;
};

}  // namespace trivdiag
