#include "trivdiag/qpoly3.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace trivdiag {

QPoly3::QPoly3(long constant) : QPoly3(Rational(constant)) {}

QPoly3::QPoly3(const Rational& constant) {
  if (constant != 0) terms_[{0, 0, 0}] = constant;
}

QPoly3 QPoly3::monomial(const Exponent3& exponent, const Rational& coeff) {
  QPoly3 out;
  out.add_term(exponent, coeff);
  return out;
}

QPoly3 QPoly3::variable(int index) {
  if (index < 0 || index > 2) throw std::out_of_range("q-variable index");
  Exponent3 e{0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(e);
}

Rational QPoly3::coeff(const Exponent3& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QPoly3::add_term(const Exponent3& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly3& QPoly3::operator+=(const QPoly3& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QPoly3& QPoly3::operator-=(const QPoly3& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QPoly3& QPoly3::operator*=(const QPoly3& other) {
  QPoly3 out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    }
  }
  *this = std::move(out);
  return *this;
}

QPoly3& QPoly3::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

QPoly3 QPoly3::operator-() const {
  QPoly3 out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Rational QPoly3::evaluate(const Rational& q1, const Rational& q2, const Rational& q3) const {
  auto power = [](const Rational& base, int exp) {
    Rational out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
  };
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c * power(q1, e[0]) * power(q2, e[1]) * power(q3, e[2]);
  }
  return sum;
}

QPoly3 QPoly3::specialize(int index, const Rational& value) const {
  QPoly3 out;
  const auto slot = static_cast<std::size_t>(index);
  for (const auto& [e, c] : terms_) {
    Rational factor = 1;
    for (int i = 0; i < e[slot]; ++i) factor *= value;
    Exponent3 reduced = e;
    reduced[slot] = 0;
    out.add_term(reduced, c * factor);
  }
  return out;
}

QPoly3 QPoly3::permuted(const std::array<int, 3>& perm) const {
  QPoly3 out;
  for (const auto& [e, c] : terms_) {
    Exponent3 moved{};
    for (std::size_t i = 0; i < 3; ++i) moved[static_cast<std::size_t>(perm[i])] = e[i];
    out.add_term(moved, c);
  }
  return out;
}

bool QPoly3::is_symmetric() const {
  return permuted({1, 0, 2}) == *this && permuted({1, 2, 0}) == *this;
}

QPoly3 QPoly3::homogeneous_part(int degree) const {
  QPoly3 out;
  for (const auto& [e, c] : terms_) {
    if (e[0] + e[1] + e[2] == degree) out.terms_.emplace(e, c);
  }
  return out;
}

int QPoly3::max_total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e[0] + e[1] + e[2]);
  return best;
}

std::string QPoly3::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent3, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2];
    const int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "q" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace trivdiag
