#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trivdiag/qpoly3.hpp"
#include "trivdiag/rational.hpp"

namespace trivdiag::harmonics {

/// Columns supported by the packed exponent matrices.
inline constexpr int kMaxCols = 6;

/// Exponent matrix A: entry (set, column) at index set * kMaxCols + column,
/// sets 0, 1, 2 standing for x, y, z.
using Monomial = std::array<std::uint8_t, 3 * kMaxCols>;
using TriDegree = Exponent3;

enum class VarSet : int { x = 0, y = 1, z = 2 };

inline int exponent(const Monomial& m, int set, int col) { return m[static_cast<std::size_t>(set * kMaxCols + col)]; }
inline std::uint8_t& exponent(Monomial& m, int set, int col) { return m[static_cast<std::size_t>(set * kMaxCols + col)]; }
TriDegree tdeg(const Monomial& m);
/// A! = product of factorials of all entries.
Integer monomial_factorial(const Monomial& m);

/// Sparse exact polynomial in x_1..x_n, y_1..y_n, z_1..z_n.
class XPoly {
 public:
  explicit XPoly(int n = 1);
  static XPoly constant(int n, const Rational& c);
  static XPoly variable(int n, VarSet set, int col);  // col is 0-based
  static XPoly monomial(int n, const Monomial& m, const Rational& c = 1);

  int n() const { return n_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  XPoly& operator+=(const XPoly& other);
  XPoly& operator-=(const XPoly& other);
  XPoly& operator*=(const XPoly& other);
  XPoly& operator*=(const Rational& s);
  XPoly operator-() const;
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(XPoly a, const XPoly& b) { return a *= b; }
  friend XPoly operator*(XPoly a, const Rational& s) { return a *= s; }
  friend XPoly operator*(const Rational& s, XPoly a) { return a *= s; }
  bool operator==(const XPoly& other) const = default;

  /// Tri-degree when all terms share one, otherwise nullopt-like (-1,-1,-1).
  TriDegree homogeneous_degree() const;
  int total_degree() const;
  /// e.g. "x2 - x1", "x1*y2 - x2*y1", "2*x1^2".
  std::string to_string() const;

 private:
  int n_;
  std::map<Monomial, Rational> terms_;
};

/// k-th partial derivative in (set, col).
XPoly differentiate(const XPoly& p, VarSet set, int col, int k = 1);
/// P_alpha(dX) = sum_j dx_j^a dy_j^b dz_j^c.
XPoly p_alpha_apply(const Exponent3& alpha, const XPoly& p);
/// P_alpha(X) = sum_j x_j^a y_j^b z_j^c as a polynomial.
XPoly polarized_power_sum(int n, const Exponent3& alpha);
/// E_uv^(k) = sum_i u_i dv_i^k; throws std::invalid_argument when u == v.
XPoly e_op_apply(VarSet u, VarSet v, int k, const XPoly& p);
/// sum over common monomials of p_A g_A A!.
Rational scalar_product(const XPoly& p, const XPoly& g);
/// f(dX) applied to g.
XPoly apply_operator(const XPoly& f, const XPoly& g);
Rational constant_term(const XPoly& p);

/// det(u_i^j), 1 <= i <= n, 0 <= j < n.
XPoly vandermonde(int n, VarSet set);
/// Diagonal action: column j is sent to column perm[j] in all three sets.
XPoly diagonal_action(const std::vector<int>& perm, const XPoly& p);
Monomial permute_columns(const std::vector<int>& perm, const Monomial& m);
/// sum_sigma sign(sigma) sigma . X^A.
XPoly antisymmetrize(int n, const Monomial& a);

/// All permutations of 0..n-1 in lexicographic order with their signs.
std::vector<std::pair<std::vector<int>, int>> permutations_with_sign(int n);
/// A permutation of 0..n-1 whose cycle type is the given partition.
std::vector<int> permutation_of_cycle_type(const std::vector<int>& cycle_type);

/// Monomials of tri-degree d in n columns, sorted.
std::vector<Monomial> monomials_of_degree(int n, const TriDegree& d);
/// All tri-degrees with total degree exactly `total`, lexicographically decreasing.
std::vector<TriDegree> tridegrees_of_total(int total);

}  // namespace trivdiag::harmonics
