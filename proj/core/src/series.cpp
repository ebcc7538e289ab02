#include "trivdiag/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace trivdiag::series {

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(order + 1), 0);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  const auto n = std::min(coeffs_.size(), other.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  const auto n = std::min(coeffs_.size(), other.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

PowerSeries PowerSeries::derivative() const {
  PowerSeries out(std::max(order() - 1, 0));
  for (int i = 1; i <= order(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * i;
  }
  return out;
}

PowerSeries PowerSeries::truncated(int order) const {
  return PowerSeries(order, std::vector<Rational>(coeffs_.begin(),
                                                  coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                                        order + 1, static_cast<std::ptrdiff_t>(coeffs_.size()))));
}

PowerSeries PowerSeries::pow(unsigned exponent) const {
  PowerSeries out(order());
  out[0] = 1;
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

PowerSeries exp(const PowerSeries& g) {
  if (g[0] != 0) throw std::invalid_argument("exp needs a zero constant term");
  // F' = G' F  =>  n f_n = sum_{k=1}^{n} k g_k f_{n-k}.
  PowerSeries f(g.order());
  f[0] = 1;
  for (int n = 1; n <= g.order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      acc += g[static_cast<std::size_t>(k)] * k * f[static_cast<std::size_t>(n - k)];
    }
    f[static_cast<std::size_t>(n)] = acc / n;
  }
  return f;
}

int first_difference(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int i = 0; i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) return i;
  }
  return -1;
}

}  // namespace trivdiag::series
