#pragma once

#include <vector>

#include "trivdiag/rational.hpp"

namespace trivdiag::series {

/// Truncated power series in t: coefficients of t^0 .. t^order.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order + 1), 0) {}
  PowerSeries(int order, std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& scalar);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  bool operator==(const PowerSeries& other) const = default;

  PowerSeries derivative() const;  // order drops by one
  PowerSeries truncated(int order) const;
  PowerSeries pow(unsigned exponent) const;

 private:
  std::vector<Rational> coeffs_;
};

/// exp(g) for g with zero constant term.
PowerSeries exp(const PowerSeries& g);

/// Index of the first differing coefficient, or -1.
int first_difference(const PowerSeries& a, const PowerSeries& b);

}  // namespace trivdiag::series
