#include "trivdiag/nabla3.hpp"

#include <algorithm>
#include <stdexcept>

#include "trivdiag/partition.hpp"
#include "trivdiag/schur_q3.hpp"

namespace trivdiag::nabla3 {

TwoRowElem::TwoRowElem(long constant) { add({0, 0}, constant); }

TwoRowElem TwoRowElem::s(int a, int b, const Integer& coeff) {
  if (b < 0 || a < b) throw std::invalid_argument("two-row partition needs a >= b >= 0");
  TwoRowElem out;
  out.add({a, b}, coeff);
  return out;
}

Integer TwoRowElem::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Integer(0) : it->second;
}

void TwoRowElem::add(const Key& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TwoRowElem& TwoRowElem::operator+=(const TwoRowElem& other) {
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

TwoRowElem& TwoRowElem::operator-=(const TwoRowElem& other) {
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

TwoRowElem TwoRowElem::operator-() const {
  TwoRowElem out;
  out -= *this;
  return out;
}

TwoRowElem operator*(const TwoRowElem& x, const TwoRowElem& y) {
  // In two variables s_{a,b} = (x1 x2)^b h_{a-b} and h_u h_v = sum_j s_{u+v-j, j}.
  TwoRowElem out;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      const int u = kx.first - kx.second;
      const int v = ky.first - ky.second;
      const int shift = kx.second + ky.second;
      const Integer c = cx * cy;
      for (int j = 0; j <= std::min(u, v); ++j) out.add({u + v - j + shift, j + shift}, c);
    }
  }
  return out;
}

TwoRowElem tworow_mul(const TwoRowElem& u, const TwoRowElem& v) { return u * v; }

Integer s_ab_at_q111(int a, int b) {
  return Integer(b + 1) * (a + 2) * (a - b + 1) / 2;
}

Integer TwoRowElem::at_q111() const {
  Integer total = 0;
  for (const auto& [key, c] : terms_) total += c * s_ab_at_q111(key.first, key.second);
  return total;
}

QPoly3 TwoRowElem::to_qpoly3() const {
  QPoly3 out;
  for (const auto& [key, c] : terms_) {
    out += symcore::schur_q3_poly(symcore::Partition::from_unsorted({key.first, key.second})) * Rational(c);
  }
  return out;
}

std::string TwoRowElem::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Integer>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second;
    const int dy = y.first.first + y.first.second;
    return dx != dy ? dx < dy : x.first > y.first;
  });
  std::string out;
  for (const auto& [key, c] : ordered) {
    const auto [a, b] = key;
    std::string name;
    if (a == 0) {
      name = "1";
    } else if (a <= 9) {
      name = "s" + std::to_string(a) + (b > 0 ? std::to_string(b) : "");
    } else {
      name = "s{" + std::to_string(a) + (b > 0 ? "," + std::to_string(b) : "") + "}";
    }
    const Integer mag = abs(c);
    std::string term = mag == 1 ? name : (a == 0 ? mag.get_str() : mag.get_str() + "*" + name);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

FrobVector3& FrobVector3::operator+=(const FrobVector3& other) {
  c3 += other.c3;
  c21 += other.c21;
  c111 += other.c111;
  return *this;
}

FrobVector3& FrobVector3::operator-=(const FrobVector3& other) {
  c3 -= other.c3;
  c21 -= other.c21;
  c111 -= other.c111;
  return *this;
}

FrobVector3 operator*(const TwoRowElem& s, const FrobVector3& v) { return {s * v.c3, s * v.c21, s * v.c111}; }

namespace {

using T = TwoRowElem;

const FrobVector3& image_of_S3() {
  static const FrobVector3 v{{}, T::s(2, 2), T::s(3, 2)};
  return v;
}
const FrobVector3& image_of_S21() {
  static const FrobVector3 v{{}, -T::s(2, 1), -T::s(3, 1)};
  return v;
}
const FrobVector3& image_of_S111() {
  static const FrobVector3 v{1, T::s(1) + T::s(2), T::s(1, 1) + T::s(3)};
  return v;
}

}  // namespace

FrobVector3 nabla_apply(const FrobVector3& v) {
  return v.c3 * image_of_S3() + v.c21 * image_of_S21() + v.c111 * image_of_S111();
}

FrobVector3 h3(int r) {
  if (r < 0) throw std::invalid_argument("h3 needs r >= 0");
  FrobVector3 v = FrobVector3::S111();
  for (int i = 0; i < r; ++i) v = nabla_apply(v);
  return v;
}

TwoRowElem t_poly(int m, int k) {
  TwoRowElem out;
  for (int j = 0; j <= k; ++j) {
    if (m - 2 * j >= j) out += T::s(m - 2 * j, j);
  }
  return out;
}

FrobVector3 h3_closed(int r) {
  if (r < 1) throw std::invalid_argument("h3_closed needs r >= 1");
  return {t_poly(3 * (r - 1), r - 1), t_poly(3 * r - 2, r - 1) + t_poly(3 * r - 1, r - 1), t_poly(3 * r, r)};
}

std::array<FrobVector3, 3> charpoly_residual() {
  const T c2 = T::s(3) - T::s(2, 1) + T::s(1, 1);
  const T c1 = T::s(4, 1) + T::s(3, 3) - T::s(3, 2);
  const T c0 = T::s(4, 4);
  std::array<FrobVector3, 3> out;
  const std::array<FrobVector3, 3> basis{FrobVector3::S3(), FrobVector3::S21(), FrobVector3::S111()};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto v1 = nabla_apply(basis[i]);
    const auto v2 = nabla_apply(v1);
    const auto v3 = nabla_apply(v2);
    out[i] = v3 - c2 * v2 + c1 * v1 - c0 * basis[i];
  }
  return out;
}

FrobVector3 eigenvector() { return {1, T::s(1), T::s(1, 1)}; }

bool is_s11_eigenvector(const FrobVector3& v) { return nabla_apply(v) == T::s(1, 1) * v; }

bool eigen_check() { return is_s11_eigenvector(eigenvector()); }

std::array<Integer, 3> specialize_q111(const FrobVector3& v) {
  return {v.c3.at_q111(), v.c21.at_q111(), v.c111.at_q111()};
}

std::array<QPoly3, 3> to_qpoly3(const FrobVector3& v) {
  return {v.c3.to_qpoly3(), v.c21.to_qpoly3(), v.c111.to_qpoly3()};
}

Integer t_at_q111_direct(int n, int k) { return t_poly(n, k).at_q111(); }

Rational t_at_q111_printed(int n, int k) {
  const Rational kk(k);
  const Rational nn(n);
  return (kk + 1) * (kk + 2) * (kk * kk - (13 + 10 * nn) * kk + 3 * (nn + 1) * (nn + 2)) / 12;
}

}  // namespace trivdiag::nabla3
