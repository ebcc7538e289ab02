#include "trivdiag/xpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace trivdiag::harmonics {

namespace {

void check_columns(int n) {
  if (n < 1 || n > kMaxCols) throw std::invalid_argument("number of columns must be in [1, " + std::to_string(kMaxCols) + "]");
}

int check_col(int n, int col) {
  if (col < 0 || col >= n) throw std::out_of_range("column index out of range");
  return col;
}

// m!/(m-k)!
Integer falling(int m, int k) {
  Integer out = 1;
  for (int i = 0; i < k; ++i) out *= m - i;
  return out;
}

}  // namespace

TriDegree tdeg(const Monomial& m) {
  TriDegree d{0, 0, 0};
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j < kMaxCols; ++j) d[static_cast<std::size_t>(s)] += exponent(m, s, j);
  }
  return d;
}

Integer monomial_factorial(const Monomial& m) {
  Integer out = 1;
  for (auto e : m) out *= factorial(e);
  return out;
}

XPoly::XPoly(int n) : n_(n) { check_columns(n); }

XPoly XPoly::constant(int n, const Rational& c) { return monomial(n, Monomial{}, c); }

XPoly XPoly::variable(int n, VarSet set, int col) {
  Monomial m{};
  exponent(m, static_cast<int>(set), check_col(n, col)) = 1;
  return monomial(n, m);
}

XPoly XPoly::monomial(int n, const Monomial& m, const Rational& c) {
  XPoly p(n);
  p.add_term(m, c);
  return p;
}

Rational XPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void XPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

XPoly& XPoly::operator+=(const XPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

XPoly& XPoly::operator*=(const XPoly& other) {
  XPoly out(std::max(n_, other.n_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const int e = ma[i] + mb[i];
        if (e > 255) throw std::overflow_error("exponent overflow");
        m[i] = static_cast<std::uint8_t>(e);
      }
      out.add_term(m, ca * cb);
    }
  }
  return *this = std::move(out);
}

XPoly& XPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly out = *this;
  out *= Rational(-1);
  return out;
}

TriDegree XPoly::homogeneous_degree() const {
  if (terms_.empty()) return {-1, -1, -1};
  const auto d = tdeg(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (tdeg(m) != d) return {-1, -1, -1};
  }
  return d;
}

int XPoly::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    const auto d = tdeg(m);
    best = std::max(best, d[0] + d[1] + d[2]);
  }
  return best;
}

std::string XPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto da = tdeg(a.first);
    const auto db = tdeg(b.first);
    return da[0] + da[1] + da[2] < db[0] + db[1] + db[2];
  });
  static const char names[3] = {'x', 'y', 'z'};
  std::string out;
  for (const auto& [m, c] : ordered) {
    std::string mono;
    for (int s = 0; s < 3; ++s) {
      for (int j = 0; j < kMaxCols; ++j) {
        const int e = exponent(m, s, j);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[s] + std::to_string(j + 1);
        if (e > 1) mono += "^" + std::to_string(e);
      }
    }
    const Rational mag = abs(c);
    std::string term;
    if (mono.empty()) {
      term = to_display_string(mag);
    } else {
      term = mag == 1 ? mono : to_display_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

XPoly differentiate(const XPoly& p, VarSet set, int col, int k) {
  if (k < 0) throw std::invalid_argument("derivative order must be non-negative");
  check_col(p.n(), col);
  XPoly out(p.n());
  for (const auto& [m, c] : p.terms()) {
    const int e = exponent(m, static_cast<int>(set), col);
    if (e < k) continue;
    Monomial d = m;
    exponent(d, static_cast<int>(set), col) = static_cast<std::uint8_t>(e - k);
    out.add_term(d, c * falling(e, k));
  }
  return out;
}

XPoly p_alpha_apply(const Exponent3& alpha, const XPoly& p) {
  XPoly out(p.n());
  for (int j = 0; j < p.n(); ++j) {
    for (const auto& [m, c] : p.terms()) {
      Monomial d = m;
      Integer factor = 1;
      bool zero = false;
      for (int s = 0; s < 3; ++s) {
        const int e = exponent(m, s, j);
        const int a = alpha[static_cast<std::size_t>(s)];
        if (e < a) {
          zero = true;
          break;
        }
        factor *= falling(e, a);
        exponent(d, s, j) = static_cast<std::uint8_t>(e - a);
      }
      if (!zero) out.add_term(d, c * factor);
    }
  }
  return out;
}

XPoly polarized_power_sum(int n, const Exponent3& alpha) {
  XPoly out(n);
  for (int j = 0; j < n; ++j) {
    Monomial m{};
    for (int s = 0; s < 3; ++s) exponent(m, s, j) = static_cast<std::uint8_t>(alpha[static_cast<std::size_t>(s)]);
    out.add_term(m, 1);
  }
  return out;
}

XPoly e_op_apply(VarSet u, VarSet v, int k, const XPoly& p) {
  if (u == v) throw std::invalid_argument("polarization operator needs distinct variable sets");
  if (k < 1) throw std::invalid_argument("polarization order must be >= 1");
  XPoly out(p.n());
  for (int i = 0; i < p.n(); ++i) {
    out += XPoly::variable(p.n(), u, i) * differentiate(p, v, i, k);
  }
  return out;
}

Rational scalar_product(const XPoly& p, const XPoly& g) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    auto it = g.terms().find(m);
    if (it != g.terms().end()) total += c * it->second * Rational(monomial_factorial(m));
  }
  return total;
}

XPoly apply_operator(const XPoly& f, const XPoly& g) {
  XPoly out(std::max(f.n(), g.n()));
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      Monomial d;
      Integer factor = 1;
      bool zero = false;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (mg[i] < mf[i]) {
          zero = true;
          break;
        }
        factor *= falling(mg[i], mf[i]);
        d[i] = static_cast<std::uint8_t>(mg[i] - mf[i]);
      }
      if (!zero) out.add_term(d, cf * cg * factor);
    }
  }
  return out;
}

Rational constant_term(const XPoly& p) { return p.coeff(Monomial{}); }

std::vector<std::pair<std::vector<int>, int>> permutations_with_sign(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    out.emplace_back(perm, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> permutation_of_cycle_type(const std::vector<int>& cycle_type) {
  const int n = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  int start = 0;
  for (int len : cycle_type) {
    for (int i = 0; i < len; ++i) perm[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  return perm;
}

Monomial permute_columns(const std::vector<int>& perm, const Monomial& m) {
  Monomial out{};
  for (int s = 0; s < 3; ++s) {
    for (std::size_t j = 0; j < perm.size(); ++j) exponent(out, s, perm[j]) = static_cast<std::uint8_t>(exponent(m, s, static_cast<int>(j)));
  }
  return out;
}

XPoly diagonal_action(const std::vector<int>& perm, const XPoly& p) {
  if (static_cast<int>(perm.size()) != p.n()) throw std::invalid_argument("permutation size differs from column count");
  XPoly out(p.n());
  for (const auto& [m, c] : p.terms()) out.add_term(permute_columns(perm, m), c);
  return out;
}

XPoly vandermonde(int n, VarSet set) {
  check_columns(n);
  XPoly out(n);
  // det(u_i^j) = sum_sigma sign(sigma) prod_i u_i^{sigma(i)}
  for (const auto& [perm, sign] : permutations_with_sign(n)) {
    Monomial m{};
    for (int i = 0; i < n; ++i) exponent(m, static_cast<int>(set), i) = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(i)]);
    out.add_term(m, sign);
  }
  return out;
}

XPoly antisymmetrize(int n, const Monomial& a) {
  check_columns(n);
  XPoly out(n);
  for (const auto& [perm, sign] : permutations_with_sign(n)) out.add_term(permute_columns(perm, a), sign);
  return out;
}

std::vector<TriDegree> tridegrees_of_total(int total) {
  std::vector<TriDegree> out;
  for (int a = total; a >= 0; --a) {
    for (int b = total - a; b >= 0; --b) out.push_back({a, b, total - a - b});
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, const TriDegree& d) {
  check_columns(n);
  std::vector<Monomial> out;
  Monomial m{};
  std::function<void(int, int, int)> rec = [&](int set, int col, int left) {
    if (set == 3) {
      out.push_back(m);
      return;
    }
    if (col == n - 1) {
      exponent(m, set, col) = static_cast<std::uint8_t>(left);
      const int next = set + 1;
      rec(next, 0, next < 3 ? d[static_cast<std::size_t>(next)] : 0);
      exponent(m, set, col) = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exponent(m, set, col) = static_cast<std::uint8_t>(e);
      rec(set, col + 1, left - e);
    }
    exponent(m, set, col) = 0;
  };
  rec(0, 0, d[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trivdiag::harmonics
