#include "trivdiag/schur_q3.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "trivdiag/symfunc.hpp"

namespace trivdiag::symcore {

SchurQ3 schur_q3(const Partition& mu) {
  SchurQ3 out;
  if (mu.length() > 3) {
    out.vanished = true;
    return out;
  }
  const int n = mu.weight();
  for (int d1 = 0; d1 <= n; ++d1) {
    for (int d2 = 0; d1 + d2 <= n; ++d2) {
      const int d3 = n - d1 - d2;
      const Integer k = kostka_number(mu, Partition::from_unsorted({d1, d2, d3}));
      if (k != 0) out.value += QPoly3::monomial({d1, d2, d3}, Rational(k));
    }
  }
  return out;
}

QPoly3 schur_q3_poly(const Partition& mu) { return schur_q3(mu).value; }

std::map<Partition, Integer> schur_decompose_q3(const QPoly3& p) {
  if (!p.is_symmetric()) throw std::invalid_argument("schur_decompose_q3: input is not symmetric");
  std::map<Partition, Integer> out;
  QPoly3 rest = p;
  while (!rest.is_zero()) {
    // The largest exponent triple in lex order is weakly decreasing for a
    // symmetric polynomial, hence a partition with <= 3 parts.
    const auto& [lead, c] = *rest.terms().rbegin();
    if (!is_integer(c)) throw std::domain_error("schur_decompose_q3: non-integer coefficient");
    const Partition mu = Partition::from_unsorted({lead[0], lead[1], lead[2]});
    const Integer coeff = c.get_num();
    out[mu] += coeff;
    rest -= schur_q3_poly(mu) * Rational(coeff);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

QPoly3 schur_recompose_q3(const std::map<Partition, Integer>& coeffs) {
  QPoly3 out;
  for (const auto& [mu, c] : coeffs) out += schur_q3_poly(mu) * Rational(c);
  return out;
}

std::string schur_q3_string(const std::map<Partition, Integer>& coeffs) {
  if (coeffs.empty()) return "0";
  std::vector<std::pair<Partition, Integer>> ordered(coeffs.begin(), coeffs.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.weight() != b.first.weight()) return a.first.weight() < b.first.weight();
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [mu, c] : ordered) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string name;
    if (mu.empty()) {
      name = "1";
    } else {
      name = "s";
      for (int part : mu.parts()) {
        if (part >= 10 || mu.parts().front() >= 10) {
          name += (name.size() > 1 ? "," : "") + std::to_string(part);
        } else {
          name += std::to_string(part);
        }
      }
    }
    if (mu.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += name;
    } else {
      out += magnitude.get_str() + "*" + name;
    }
  }
  return out;
}

}  // namespace trivdiag::symcore
