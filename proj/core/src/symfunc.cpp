#include "trivdiag/symfunc.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>

namespace trivdiag::symcore {

namespace {

using Exponents = std::vector<std::uint8_t>;
using Poly = std::map<Exponents, Rational>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// e_k, h_k or p_k in `vars` indeterminates.
Poly one_part(Basis basis, int k, int vars) {
  Poly out;
  const auto nv = static_cast<std::size_t>(vars);
  if (basis == Basis::powersum) {
    for (std::size_t i = 0; i < nv; ++i) {
      Exponents e(nv, 0);
      e[i] = static_cast<std::uint8_t>(k);
      out[e] = 1;
    }
    return out;
  }
  // Weakly (h) or strictly (e) increasing index sequences of length k.
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(idx.size()) == k) {
      Exponents e(nv, 0);
      for (auto i : idx) ++e[i];
      out[e] += 1;
      return;
    }
    for (std::size_t i = start; i < nv; ++i) {
      idx.push_back(i);
      rec(basis == Basis::elementary ? i + 1 : i);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("singular transition matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

BasisTable make_table(Basis basis, int degree) {
  BasisTable table;
  table.partitions = partitions_of(degree);
  for (std::size_t i = 0; i < table.partitions.size(); ++i) table.index[table.partitions[i]] = i;
  const std::size_t n = table.partitions.size();
  table.to_monomial.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto expansion = basis_to_monomial(basis, table.partitions[i]);
    for (const auto& [mu, c] : expansion.terms()) table.to_monomial[i][table.index.at(mu)] = c;
  }
  // f = sum_mu f_mu m_mu = sum_lambda x_lambda b_lambda  =>  f_vec = x_vec * T,
  // so x_vec = f_vec * T^{-1}: row mu of T^{-1} is m_mu in basis b.
  table.from_monomial = invert(table.to_monomial);
  return table;
}

}  // namespace

std::string_view basis_tag(Basis basis) {
  switch (basis) {
    case Basis::monomial: return "m";
    case Basis::elementary: return "e";
    case Basis::homogeneous: return "h";
    case Basis::powersum: return "p";
    case Basis::schur: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view tag) {
  if (tag == "m") return Basis::monomial;
  if (tag == "e") return Basis::elementary;
  if (tag == "h") return Basis::homogeneous;
  if (tag == "p") return Basis::powersum;
  if (tag == "s") return Basis::schur;
  throw std::invalid_argument("unknown basis tag: " + std::string(tag));
}

Integer kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  std::map<std::pair<std::vector<int>, int>, Integer> memo;
  // Strip the largest entry (content mu[k-1]) as a horizontal strip.
  std::function<Integer(const std::vector<int>&, int)> count = [&](const std::vector<int>& shape,
                                                                   int k) -> Integer {
    if (k == 0) {
      for (int p : shape) {
        if (p != 0) return 0;
      }
      return 1;
    }
    auto key = std::make_pair(shape, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int strip = mu[static_cast<std::size_t>(k - 1)];
    Integer total = 0;
    std::vector<int> inner(shape.size());
    std::function<void(std::size_t, int)> choose = [&](std::size_t row, int removed) {
      if (row == shape.size()) {
        if (removed == strip) total += count(inner, k - 1);
        return;
      }
      const int lower = row + 1 < shape.size() ? shape[row + 1] : 0;
      for (int v = shape[row]; v >= lower; --v) {
        const int take = shape[row] - v;
        if (removed + take > strip) break;
        inner[row] = v;
        choose(row + 1, removed + take);
      }
    };
    choose(0, 0);
    memo.emplace(key, total);
    return total;
  };
  return count(lambda.parts(), mu.length());
}

SymFuncQ basis_to_monomial(Basis basis, const Partition& lambda) {
  const int degree = lambda.weight();
  SymFuncQ out(degree);
  if (basis == Basis::monomial) {
    out.add_term(lambda, 1);
    return out;
  }
  if (basis == Basis::schur) {
    for (const auto& mu : partitions_of(degree)) {
      if (!dominates(lambda, mu)) continue;
      out.add_term(mu, Rational(kostka_number(lambda, mu)));
    }
    return out;
  }
  const int vars = std::max(degree, 1);
  Poly product{{Exponents(static_cast<std::size_t>(vars), 0), Rational(1)}};
  for (int k : lambda.parts()) product = multiply(product, one_part(basis, k, vars));
  for (const auto& [e, c] : product) {
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) {
      std::vector<int> parts(e.begin(), e.end());
      out.add_term(Partition::from_unsorted(parts), c);
    }
  }
  return out;
}

const BasisTable& basis_table(Basis basis, int degree) {
  if (degree < 0 || degree > kMaxTableDegree) {
    throw std::out_of_range("basis tables cover degrees 0.." + std::to_string(kMaxTableDegree));
  }
  constexpr std::size_t kBases = 5;
  constexpr std::size_t kDegrees = kMaxTableDegree + 1;
  static std::array<std::once_flag, kBases * kDegrees> flags;
  static std::array<BasisTable, kBases * kDegrees> tables;
  const std::size_t slot = static_cast<std::size_t>(basis) * kDegrees + static_cast<std::size_t>(degree);
  std::call_once(flags[slot], [&] { tables[slot] = make_table(basis, degree); });
  return tables[slot];
}

QuasiSymFunc<Rational> fundamental(const Composition& c, int num_vars) {
  const int n = c.weight();
  if (n < 1) throw std::invalid_argument("fundamental of an empty composition");
  if (num_vars <= 0) num_vars = n;
  QuasiSymFunc<Rational> out(n, num_vars);
  const auto descents = c.descent_set();
  std::vector<bool> strict(static_cast<std::size_t>(n), false);
  for (int s : descents) strict[static_cast<std::size_t>(s)] = true;
  std::vector<int> exponent(static_cast<std::size_t>(num_vars), 0);
  // Words i_1 <= ... <= i_n with i_s < i_{s+1} at descent positions s.
  std::function<void(int, int)> rec = [&](int pos, int minimum) {
    if (pos == n) {
      out.add_term(exponent, 1);
      return;
    }
    const int lo = (pos > 0 && strict[static_cast<std::size_t>(pos)]) ? minimum + 1 : minimum;
    for (int v = lo; v < num_vars; ++v) {
      ++exponent[static_cast<std::size_t>(v)];
      rec(pos + 1, v);
      --exponent[static_cast<std::size_t>(v)];
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace trivdiag::symcore
