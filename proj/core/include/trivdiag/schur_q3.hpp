#pragma once

#include <map>

#include "trivdiag/partition.hpp"
#include "trivdiag/qpoly3.hpp"

namespace trivdiag::symcore {

struct SchurQ3 {
  QPoly3 value;
  /// Set when mu has more than three parts; value is then zero.
  bool vanished = false;
};

/// s_mu(q1, q2, q3) by 3-letter tableau enumeration.
SchurQ3 schur_q3(const Partition& mu);

/// Convenience: s_mu(q) as a polynomial, zero when mu has more than 3 parts.
QPoly3 schur_q3_poly(const Partition& mu);

/// c_mu with p = sum_mu c_mu s_mu(q). Works degree by degree by stripping the
/// dominance-maximal monomial. Throws std::invalid_argument for non-symmetric
/// input and std::domain_error if a coefficient is not an integer.
std::map<Partition, Integer> schur_decompose_q3(const QPoly3& p);

/// Inverse of schur_decompose_q3.
QPoly3 schur_recompose_q3(const std::map<Partition, Integer>& coeffs);

/// Text such as "1 + 2*s1 + s11" in degree order.
std::string schur_q3_string(const std::map<Partition, Integer>& coeffs);

}  // namespace trivdiag::symcore
