#include "trivdiag/linalg.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace trivdiag::linalg {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::array<std::uint64_t, 8> kPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL, 4611686018427387761ULL,
    4611686018427387751ULL, 4611686018427387737ULL, 4611686018427387733ULL, 4611686018427387709ULL,
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t out = 1;
  while (e) {
    if (e & 1) out = mul_mod(out, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return out;
}

std::uint64_t to_mod(std::int64_t v, std::uint64_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

// Reduced row echelon form modulo p, built one sparse row at a time.
struct ModularRref {
  std::size_t cols;
  std::uint64_t p;
  std::vector<long> pivot_row;  // per column, -1 when free
  std::vector<std::size_t> pivot_col;
  std::vector<std::vector<std::uint64_t>> rows;

  ModularRref(std::size_t n, std::uint64_t prime) : cols(n), p(prime), pivot_row(n, -1) {}

  void insert(const std::vector<std::pair<std::uint32_t, std::int64_t>>& entries) {
    std::vector<std::uint64_t> v(cols, 0);
    for (const auto& [c, e] : entries) v[c] = (v[c] + to_mod(e, p)) % p;
    for (const auto& [c, e] : entries) {
      const long r = pivot_row[c];
      if (r < 0 || v[c] == 0) continue;
      const std::uint64_t f = p - v[c];
      const auto& row = rows[static_cast<std::size_t>(r)];
      for (std::size_t j = 0; j < cols; ++j) {
        if (row[j]) v[j] = (v[j] + mul_mod(f, row[j], p)) % p;
      }
    }
    std::size_t lead = 0;
    while (lead < cols && v[lead] == 0) ++lead;
    if (lead == cols) return;
    const std::uint64_t inv = pow_mod(v[lead], p - 2, p);
    for (auto& x : v) {
      if (x) x = mul_mod(x, inv, p);
    }
    for (auto& row : rows) {
      if (row[lead] == 0) continue;
      const std::uint64_t f = p - row[lead];
      for (std::size_t j = 0; j < cols; ++j) {
        if (v[j]) row[j] = (row[j] + mul_mod(f, v[j], p)) % p;
      }
    }
    pivot_row[lead] = static_cast<long>(rows.size());
    pivot_col.push_back(lead);
    rows.push_back(std::move(v));
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_row[c] < 0) out.push_back(c);
    }
    return out;
  }
};

using SparseIntRow = std::vector<std::pair<std::uint32_t, Integer>>;

void remove_content(SparseIntRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1 && g != 0) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

bool rational_reconstruct(const Integer& residue, const Integer& modulus, Rational& out) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
  Integer r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

bool annihilates(const IntSparseMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols) throw std::invalid_argument("vector length differs from column count");
  Integer lcm = 1;
  for (const auto& x : v) {
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) w[i] = v[i].get_num() * (lcm / v[i].get_den());
  }
  Integer acc;
  for (const auto& row : m.rows) {
    acc = 0;
    for (const auto& [c, e] : row) {
      if (w[c] != 0) acc += w[c] * e;
    }
    if (acc != 0) return false;
  }
  return true;
}

Nullspace nullspace_fraction_free(const IntSparseMatrix& m) {
  std::vector<SparseIntRow> echelon;
  std::map<std::uint32_t, std::size_t> pivot_of;
  for (const auto& input : m.rows) {
    std::map<std::uint32_t, Integer> merged;
    for (const auto& [c, e] : input) merged[c] += e;
    SparseIntRow v;
    for (auto& [c, e] : merged) {
      if (e != 0) v.emplace_back(c, std::move(e));
    }
    while (!v.empty()) {
      auto hit = pivot_of.find(v.front().first);
      if (hit == pivot_of.end()) {
        remove_content(v);
        pivot_of.emplace(v.front().first, echelon.size());
        echelon.push_back(std::move(v));
        break;
      }
      const auto& pivot = echelon[hit->second];
      const Integer a = pivot.front().second;
      const Integer b = v.front().second;
      SparseIntRow next;
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < v.size() && v[i].first < pivot[j].first)) {
          next.emplace_back(v[i].first, a * v[i].second);
          ++i;
        } else if (i == v.size() || pivot[j].first < v[i].first) {
          next.emplace_back(pivot[j].first, -b * pivot[j].second);
          ++j;
        } else {
          Integer val = a * v[i].second - b * pivot[j].second;
          if (val != 0) next.emplace_back(v[i].first, std::move(val));
          ++i;
          ++j;
        }
      }
      v = std::move(next);
      if (!v.empty()) remove_content(v);
    }
  }
  // Back-substitution from the last pivot column down.
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> reduced;
  for (auto it = pivot_of.rbegin(); it != pivot_of.rend(); ++it) {
    const auto& row = echelon[it->second];
    std::map<std::uint32_t, Rational> q;
    const Rational lead(row.front().second);
    for (const auto& [c, v] : row) q[c] = Rational(v) / lead;
    for (const auto& [c, v] : row) {
      if (c == it->first) continue;
      auto other = reduced.find(c);
      if (other == reduced.end()) continue;
      const Rational factor = q[c];
      if (factor == 0) continue;
      for (const auto& [k, x] : other->second) q[k] -= factor * x;
    }
    std::erase_if(q, [](const auto& kv) { return kv.second == 0; });
    reduced.emplace(it->first, std::move(q));
  }
  Nullspace out;
  out.cols = m.cols;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (!pivot_of.count(static_cast<std::uint32_t>(c))) out.free_columns.push_back(c);
  }
  for (std::size_t f : out.free_columns) {
    std::vector<Rational> v(m.cols);
    v[f] = 1;
    for (const auto& [pc, row] : reduced) {
      auto hit = row.find(static_cast<std::uint32_t>(f));
      if (hit != row.end()) v[pc] = -hit->second;
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

Nullspace nullspace_modular(const IntSparseMatrix& m) {
  std::optional<ModularRref> reference;
  std::vector<std::vector<Integer>> residues;  // [kernel vector][pivot index]
  Integer modulus = 1;
  for (std::uint64_t p : kPrimes) {
    ModularRref rref(m.cols, p);
    for (const auto& row : m.rows) rref.insert(row);
    if (reference && rref.rows.size() != reference->rows.size()) {
      if (rref.rows.size() < reference->rows.size()) continue;  // p divides a minor: skip it
      reference.reset();
    }
    if (reference && rref.pivot_col != reference->pivot_col) continue;
    const auto free = rref.free_columns();
    if (!reference) {
      reference = rref;
      residues.assign(free.size(), std::vector<Integer>(rref.rows.size(), 0));
      modulus = 1;
    }
    // Combine residues of -row[f] by CRT.
    const Integer pz(std::to_string(p));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < free.size(); ++i) {
      for (std::size_t r = 0; r < rref.rows.size(); ++r) {
        const std::uint64_t x = rref.rows[r][free[i]];
        const Integer target(std::to_string(x == 0 ? 0 : p - x));
        Integer& acc = residues[i][r];
        Integer delta = (target - acc % pz) % pz;
        if (delta < 0) delta += pz;
        acc += modulus * ((delta * inv) % pz);
      }
    }
    modulus *= pz;
    Nullspace out;
    out.cols = m.cols;
    out.free_columns = free;
    bool ok = true;
    for (std::size_t i = 0; i < free.size() && ok; ++i) {
      std::vector<Rational> v(m.cols);
      v[free[i]] = 1;
      for (std::size_t r = 0; r < rref.rows.size() && ok; ++r) {
        if (residues[i][r] == 0) continue;
        Rational value;
        ok = rational_reconstruct(residues[i][r], modulus, value);
        v[rref.pivot_col[r]] = value;
      }
      if (ok) ok = annihilates(m, v);
      if (ok) out.basis.push_back(std::move(v));
    }
    // Kernel dimension over Q is at most the dimension modulo p, so a full
    // set of exact kernel vectors is a basis.
    if (ok) return out;
  }
  return nullspace_fraction_free(m);
}

Nullspace dense_nullspace(const std::vector<std::vector<Rational>>& input, std::size_t cols) {
  auto rows = input;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const Rational inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (rows[rank][j] != 0) rows[r][j] -= f * rows[rank][j];
      }
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  Nullspace out;
  out.cols = cols;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(c);
  }
  for (std::size_t f : out.free_columns) {
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -rows[r][f];
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace trivdiag::linalg
