#pragma once

#include <map>
#include <string>
#include <vector>

#include "trivdiag/partition.hpp"
#include "trivdiag/qpoly3.hpp"
#include "trivdiag/xpoly.hpp"

namespace trivdiag::harmonics {

struct Component {
  TriDegree degree{0, 0, 0};
  std::size_t dimension = 0;
  /// Basis polynomials (may be left empty to save memory).
  std::vector<XPoly> basis;
  /// Trace of one permutation per cycle type, aligned with partitions_of(n);
  /// empty when not computed.
  std::vector<Integer> class_traces;
};

struct GradedSpace {
  int n = 0;
  /// Every computed tri-degree, including zero components.
  std::map<TriDegree, Component> components;

  std::size_t total_dimension() const;
  /// Largest total degree with a nonzero component, -1 if none.
  int top_degree() const;
};

struct KernelOptions {
  /// Also compute degrees binom(n,2)+1 .. binom(n,2)+extra_degrees.
  int extra_degrees = 0;
  unsigned jobs = 1;
  bool keep_basis = true;
  bool compute_traces = true;
};

/// Nullspace, within tri-degree d, of all P_alpha(dX) with 1 <= |alpha| <= n.
Component kernel_component(int n, const TriDegree& d, bool keep_basis = true, bool compute_traces = true);
GradedSpace kernel_space(int n, const KernelOptions& options = {});

/// sum_d dim(S_d) q^d.
QPoly3 hilbert_series(const GradedSpace& space);

/// Coefficient of S_lambda(w) for every lambda of n. Needs class traces;
/// throws std::logic_error if a multiplicity is not a non-negative integer.
std::map<symcore::Partition, QPoly3> graded_frobenius(const GradedSpace& space);

/// Smallest tri-graded space containing Delta_n(x) and closed under every
/// partial derivative and every E_uv^(k).
GradedSpace closure_space(int n);

struct HigherSpace {
  GradedSpace space;
  int r = 1;
  int cutoff = 0;
  /// Dimensions of S_n-invariants and alternants of the computed space.
  std::size_t invariant_dim = 0;
  std::size_t alternant_dim = 0;
  /// Same split after twisting by sign^(r-1), which is how the invariant
  /// and alternating parts of the r-th space are labelled.
  std::size_t twisted_invariant_dim = 0;
  std::size_t twisted_alternant_dim = 0;
  /// Degrees above r binom(n,2) were computed and found to vanish.
  bool top_degree_certified = false;
  std::string warning;
};

/// (A^{r-1})_d intersected with the orthogonal complement of (A^{r-1} I)_d
/// for every |d| <= cutoff, where A is the ideal generated by alternants and
/// I the ideal generated by the P_alpha(X). r = 1 uses A^0 = all polynomials.
HigherSpace higher_space(int n, int r, int cutoff);

/// Alternant generators R(X^A) over matrices with distinct columns in
/// decreasing lexicographic order and total degree in [1, max_total].
std::vector<XPoly> alternant_generators(int n, int max_total);

/// [P_alpha(dX), E_uv^(k)] p == alpha_u P_beta(dX) p with
/// beta = alpha + k e_v - e_u. Throws std::invalid_argument if alpha_u == 0
/// or u == v.
bool commutator_check(const Exponent3& alpha, int k, VarSet u, VarSet v, const XPoly& p);

}  // namespace trivdiag::harmonics
