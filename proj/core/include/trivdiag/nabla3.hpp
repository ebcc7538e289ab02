#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "trivdiag/qpoly3.hpp"
#include "trivdiag/rational.hpp"

namespace trivdiag::nabla3 {

/// Element of the ring spanned by two-row Schur functions s_{a,b} (a >= b >= 0),
/// where products drop every term with three or more rows.
class TwoRowElem {
 public:
  using Key = std::pair<int, int>;

  TwoRowElem() = default;
  TwoRowElem(long constant);  // NOLINT: constant times s_0
  static TwoRowElem s(int a, int b = 0, const Integer& coeff = 1);

  const std::map<Key, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int a, int b = 0) const;

  TwoRowElem& operator+=(const TwoRowElem& other);
  TwoRowElem& operator-=(const TwoRowElem& other);
  TwoRowElem operator-() const;
  friend TwoRowElem operator+(TwoRowElem x, const TwoRowElem& y) { return x += y; }
  friend TwoRowElem operator-(TwoRowElem x, const TwoRowElem& y) { return x -= y; }
  friend TwoRowElem operator*(const TwoRowElem& x, const TwoRowElem& y);
  bool operator==(const TwoRowElem& other) const = default;

  /// Value at q1 = q2 = q3 = 1.
  Integer at_q111() const;
  QPoly3 to_qpoly3() const;
  /// e.g. "s1 + s2", "-s21", "1 + s3"; parts above 9 are written s{10,2}.
  std::string to_string() const;

 private:
  void add(const Key& key, const Integer& c);
  std::map<Key, Integer> terms_;
};

/// Two-row truncated product of Schur functions (Pieri in two variables).
TwoRowElem tworow_mul(const TwoRowElem& u, const TwoRowElem& v);

/// s_{a,b}(1,1,1) = (b+1)(a+2)(a-b+1)/2.
Integer s_ab_at_q111(int a, int b);

/// Coefficients of S_3(w), S_21(w), S_111(w).
struct FrobVector3 {
  TwoRowElem c3;
  TwoRowElem c21;
  TwoRowElem c111;

  FrobVector3& operator+=(const FrobVector3& other);
  FrobVector3& operator-=(const FrobVector3& other);
  friend FrobVector3 operator+(FrobVector3 x, const FrobVector3& y) { return x += y; }
  friend FrobVector3 operator-(FrobVector3 x, const FrobVector3& y) { return x -= y; }
  friend FrobVector3 operator*(const TwoRowElem& s, const FrobVector3& v);
  bool operator==(const FrobVector3& other) const = default;
  bool is_zero() const { return c3.is_zero() && c21.is_zero() && c111.is_zero(); }

  static FrobVector3 S3() { return {1, {}, {}}; }
  static FrobVector3 S21() { return {{}, 1, {}}; }
  static FrobVector3 S111() { return {{}, {}, 1}; }
};

/// The n = 3 nabla operator on the basis S_3, S_21, S_111. Each basis vector
/// is sent to the corresponding row of the printed matrix.
FrobVector3 nabla_apply(const FrobVector3& v);

/// nabla^r applied to S_111.
FrobVector3 h3(int r);

/// sum_{j=0}^{k} s_{m-2j, j}, skipping j with m - 2j < j.
TwoRowElem t_poly(int m, int k);

/// Closed form T_{3(r-1),r-1} S_3 + (T_{3r-2,r-1} + T_{3r-1,r-1}) S_21 + T_{3r,r} S_111.
FrobVector3 h3_closed(int r);

/// nabla^3 - (s3 - s21 + s11) nabla^2 + (s41 + s33 - s32) nabla - s44 applied
/// to S_3, S_21 and S_111.
std::array<FrobVector3, 3> charpoly_residual();

/// nabla(v) == s11 * v for v = S_3 + s1 S_21 + s11 S_111.
bool eigen_check();
/// Same relation for an arbitrary vector.
bool is_s11_eigenvector(const FrobVector3& v);
FrobVector3 eigenvector();

std::array<Integer, 3> specialize_q111(const FrobVector3& v);
std::array<QPoly3, 3> to_qpoly3(const FrobVector3& v);

/// T_{nk}(1,1,1) by summing s_{n-2j,j}(1,1,1).
Integer t_at_q111_direct(int n, int k);
/// The closed polynomial (k+1)(k+2)(k^2 - (13+10n)k + 3(n+1)(n+2))/12.
Rational t_at_q111_printed(int n, int k);

}  // namespace trivdiag::nabla3
