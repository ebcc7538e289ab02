#include "trivdiag/harmonics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "trivdiag/characters.hpp"
#include "trivdiag/linalg.hpp"
#include "trivdiag/parallel.hpp"

namespace trivdiag::harmonics {

namespace {

using Echelon = linalg::SparseEchelon<Monomial>;

int binom2(int n) { return n * (n - 1) / 2; }

std::int64_t falling(int m, int k) {
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) out *= m - i;
  return out;
}

std::size_t index_of(const std::vector<Monomial>& sorted, const Monomial& m) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
  if (it == sorted.end() || *it != m) throw std::logic_error("monomial outside its degree");
  return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<Exponent3> operator_degrees(int n) {
  std::vector<Exponent3> out;
  for (int total = 1; total <= n; ++total) {
    for (const auto& a : tridegrees_of_total(total)) out.push_back(a);
  }
  return out;
}

bool fits(const Exponent3& alpha, const TriDegree& d) {
  return alpha[0] <= d[0] && alpha[1] <= d[1] && alpha[2] <= d[2];
}

TriDegree degree_minus(const TriDegree& d, const Exponent3& a) { return {d[0] - a[0], d[1] - a[1], d[2] - a[2]}; }

Echelon::Vector as_vector(const XPoly& p) { return Echelon::Vector(p.terms().begin(), p.terms().end()); }

XPoly as_poly(int n, const Echelon::Vector& v) {
  XPoly p(n);
  for (const auto& [m, c] : v) p.add_term(m, c);
  return p;
}

std::vector<XPoly> echelon_polys(int n, const Echelon& e) {
  std::vector<XPoly> out;
  for (const auto& row : e.rows()) out.push_back(as_poly(n, row));
  return out;
}

std::vector<TriDegree> degrees_up_to(int max_total) {
  std::vector<TriDegree> out;
  for (int total = 0; total <= max_total; ++total) {
    for (const auto& d : tridegrees_of_total(total)) out.push_back(d);
  }
  return out;
}

}  // namespace

std::size_t GradedSpace::total_dimension() const {
  std::size_t total = 0;
  for (const auto& [d, c] : components) total += c.dimension;
  return total;
}

int GradedSpace::top_degree() const {
  int top = -1;
  for (const auto& [d, c] : components) {
    if (c.dimension > 0) top = std::max(top, d[0] + d[1] + d[2]);
  }
  return top;
}

Component kernel_component(int n, const TriDegree& d, bool keep_basis, bool compute_traces) {
  const auto monos = monomials_of_degree(n, d);
  linalg::IntSparseMatrix system;
  system.cols = monos.size();
  for (const auto& alpha : operator_degrees(n)) {
    if (!fits(alpha, d)) continue;
    for (const auto& target : monomials_of_degree(n, degree_minus(d, alpha))) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> row;
      for (int j = 0; j < n; ++j) {
        Monomial source = target;
        std::int64_t c = 1;
        for (int s = 0; s < 3; ++s) {
          const int e = exponent(target, s, j) + alpha[static_cast<std::size_t>(s)];
          exponent(source, s, j) = static_cast<std::uint8_t>(e);
          c *= falling(e, alpha[static_cast<std::size_t>(s)]);
        }
        row.emplace_back(static_cast<std::uint32_t>(index_of(monos, source)), c);
      }
      std::sort(row.begin(), row.end());
      system.rows.push_back(std::move(row));
    }
  }
  const auto kernel = linalg::nullspace_modular(system);

  Component out;
  out.degree = d;
  out.dimension = kernel.dimension();
  if (keep_basis) {
    for (const auto& v : kernel.basis) {
      XPoly p(n);
      for (std::size_t i = 0; i < v.size(); ++i) p.add_term(monos[i], v[i]);
      out.basis.push_back(std::move(p));
    }
  }
  if (compute_traces) {
    // Coordinates on the free columns identify the kernel with Q^free.
    for (const auto& mu : symcore::partitions_of(n)) {
      const auto sigma = permutation_of_cycle_type(mu.parts());
      Rational trace = 0;
      for (std::size_t i = 0; i < kernel.free_columns.size(); ++i) {
        const auto moved = permute_columns(sigma, monos[kernel.free_columns[i]]);
        trace += kernel.basis[i][index_of(monos, moved)];
      }
      if (!is_integer(trace)) throw std::logic_error("non-integer trace on a kernel component");
      out.class_traces.push_back(trace.get_num());
    }
  }
  return out;
}

GradedSpace kernel_space(int n, const KernelOptions& options) {
  const auto degrees = degrees_up_to(binom2(n) + options.extra_degrees);
  std::vector<Component> parts(degrees.size());
  parallel_for(degrees.size(), options.jobs, [&](std::size_t i) {
    parts[i] = kernel_component(n, degrees[i], options.keep_basis, options.compute_traces);
  });
  GradedSpace space;
  space.n = n;
  for (auto& c : parts) space.components.emplace(c.degree, std::move(c));
  return space;
}

QPoly3 hilbert_series(const GradedSpace& space) {
  QPoly3 out;
  for (const auto& [d, c] : space.components) {
    if (c.dimension) out += QPoly3::monomial(d, Rational(static_cast<long>(c.dimension)));
  }
  return out;
}

std::map<symcore::Partition, QPoly3> graded_frobenius(const GradedSpace& space) {
  const auto classes = symcore::partitions_of(space.n);
  std::map<symcore::Partition, QPoly3> out;
  for (const auto& lambda : classes) out[lambda] = QPoly3();
  for (const auto& [d, c] : space.components) {
    if (c.dimension == 0) continue;
    if (c.class_traces.size() != classes.size()) throw std::logic_error("component lacks class traces");
    for (const auto& lambda : classes) {
      Rational m = 0;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        m += Rational(symcore::character_value(lambda, classes[k]) * c.class_traces[k]) /
             Rational(symcore::z_of(classes[k]));
      }
      if (!is_integer(m) || m < 0) {
        throw std::logic_error("multiplicity of " + lambda.to_string() + " is " + to_display_string(m));
      }
      if (m != 0) out[lambda] += QPoly3::monomial(d, m);
    }
  }
  return out;
}

GradedSpace closure_space(int n) {
  std::map<TriDegree, Echelon> spaces;
  std::deque<XPoly> queue;
  auto offer = [&](const XPoly& p) {
    if (p.is_zero()) return;
    if (spaces[p.homogeneous_degree()].insert(as_vector(p))) queue.push_back(p);
  };
  offer(vandermonde(n, VarSet::x));
  const VarSet sets[3] = {VarSet::x, VarSet::y, VarSet::z};
  while (!queue.empty()) {
    const XPoly p = std::move(queue.front());
    queue.pop_front();
    const auto d = p.homogeneous_degree();
    for (auto s : sets) {
      for (int j = 0; j < n; ++j) offer(differentiate(p, s, j));
    }
    for (auto u : sets) {
      for (auto v : sets) {
        if (u == v) continue;
        for (int k = 1; k <= d[static_cast<std::size_t>(v)]; ++k) offer(e_op_apply(u, v, k, p));
      }
    }
  }
  GradedSpace space;
  space.n = n;
  for (const auto& [d, e] : spaces) {
    Component c;
    c.degree = d;
    c.dimension = e.rank();
    c.basis = echelon_polys(n, e);
    space.components.emplace(d, std::move(c));
  }
  return space;
}

std::vector<XPoly> alternant_generators(int n, int max_total) {
  // Candidate columns: exponent triples of total degree <= max_total.
  std::vector<Exponent3> columns;
  for (int t = 0; t <= max_total; ++t) {
    for (const auto& c : tridegrees_of_total(t)) columns.push_back(c);
  }
  std::sort(columns.begin(), columns.end(), std::greater<>());
  std::vector<XPoly> out;
  std::vector<Exponent3> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int used) {
    if (static_cast<int>(chosen.size()) == n) {
      if (used == 0) return;
      Monomial a{};
      for (int j = 0; j < n; ++j) {
        for (int s = 0; s < 3; ++s) exponent(a, s, j) = static_cast<std::uint8_t>(chosen[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]);
      }
      out.push_back(antisymmetrize(n, a));
      return;
    }
    for (std::size_t i = from; i < columns.size(); ++i) {
      const int t = columns[i][0] + columns[i][1] + columns[i][2];
      if (used + t > max_total) continue;
      chosen.push_back(columns[i]);
      rec(i + 1, used + t);
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

HigherSpace higher_space(int n, int r, int cutoff) {
  if (r < 1) throw std::invalid_argument("higher_space needs r >= 1");
  if (cutoff < 0) throw std::invalid_argument("negative degree cutoff");
  const auto degrees = degrees_up_to(cutoff);

  // power[d] spans (A^j)_d, starting from A^0 = all polynomials.
  std::map<TriDegree, std::vector<XPoly>> power;
  for (const auto& d : degrees) {
    for (const auto& m : monomials_of_degree(n, d)) power[d].push_back(XPoly::monomial(n, m));
  }
  if (r > 1) {
    std::map<TriDegree, std::vector<XPoly>> generators;
    for (auto& g : alternant_generators(n, cutoff)) {
      if (!g.is_zero()) generators[g.homogeneous_degree()].push_back(std::move(g));
    }
    for (int j = 1; j < r; ++j) {
      std::map<TriDegree, std::vector<XPoly>> next;
      for (const auto& d : degrees) {
        Echelon span;
        for (const auto& [e, gens] : generators) {
          if (!fits(e, d)) continue;
          const auto below = power.find(degree_minus(d, e));
          if (below == power.end()) continue;
          for (const auto& g : gens) {
            for (const auto& u : below->second) span.insert(as_vector(g * u));
          }
        }
        next[d] = echelon_polys(n, span);
      }
      power = std::move(next);
    }
  }

  HigherSpace out;
  out.r = r;
  out.cutoff = cutoff;
  out.space.n = n;
  const std::vector<int> swap01 = [&] {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = j;
    if (n >= 2) std::swap(p[0], p[1]);
    return p;
  }();
  for (const auto& d : degrees) {
    const auto& span = power[d];
    Echelon ideal_part;
    for (const auto& alpha : operator_degrees(n)) {
      if (!fits(alpha, d)) continue;
      const auto below = power.find(degree_minus(d, alpha));
      if (below == power.end()) continue;
      const XPoly p = polarized_power_sum(n, alpha);
      for (const auto& u : below->second) ideal_part.insert(as_vector(p * u));
    }
    std::vector<std::vector<Rational>> gram;
    for (const auto& w : ideal_part.rows()) {
      const XPoly wp = as_poly(n, w);
      std::vector<Rational> row;
      for (const auto& u : span) row.push_back(scalar_product(wp, u));
      gram.push_back(std::move(row));
    }
    const auto kernel = linalg::dense_nullspace(gram, span.size());
    Component c;
    c.degree = d;
    c.dimension = kernel.dimension();
    for (const auto& v : kernel.basis) {
      XPoly b(n);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) b += span[i] * v[i];
      }
      c.basis.push_back(std::move(b));
    }
    if (n >= 2) {
      Echelon plus, minus_part;
      for (const auto& b : c.basis) {
        const XPoly t = diagonal_action(swap01, b);
        plus.insert(as_vector(b + t));
        minus_part.insert(as_vector(b - t));
      }
      // For n = 2 the transposition generates the whole group.
      if (n == 2) {
        out.invariant_dim += plus.rank();
        out.alternant_dim += minus_part.rank();
      }
    }
    out.space.components.emplace(d, std::move(c));
  }
  if (n == 1) out.invariant_dim = out.space.total_dimension();
  const bool odd = r % 2 == 1;
  out.twisted_invariant_dim = odd ? out.invariant_dim : out.alternant_dim;
  out.twisted_alternant_dim = odd ? out.alternant_dim : out.invariant_dim;

  const int top = r * binom2(n);
  if (cutoff <= top) {
    out.warning = "cutoff " + std::to_string(cutoff) + " does not exceed r*binom(n,2) = " + std::to_string(top) +
                  "; vanishing above the top degree is not certified";
  } else {
    out.top_degree_certified = out.space.top_degree() <= top;
    if (!out.top_degree_certified) out.warning = "nonzero component above r*binom(n,2)";
  }
  return out;
}

bool commutator_check(const Exponent3& alpha, int k, VarSet u, VarSet v, const XPoly& p) {
  if (u == v) throw std::invalid_argument("polarization operator needs distinct variable sets");
  const int ui = static_cast<int>(u);
  const int vi = static_cast<int>(v);
  if (alpha[static_cast<std::size_t>(ui)] < 1) throw std::invalid_argument("alpha has no component to decrement");
  Exponent3 beta = alpha;
  beta[static_cast<std::size_t>(ui)] -= 1;
  beta[static_cast<std::size_t>(vi)] += k;
  const XPoly lhs = p_alpha_apply(alpha, e_op_apply(u, v, k, p)) - e_op_apply(u, v, k, p_alpha_apply(alpha, p));
  const XPoly rhs = p_alpha_apply(beta, p) * Rational(alpha[static_cast<std::size_t>(ui)]);
  return lhs == rhs;
}

}  // namespace trivdiag::harmonics
