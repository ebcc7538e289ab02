#pragma once

#include "trivdiag/partition.hpp"

namespace trivdiag::symcore {

/// Irreducible character chi^lambda on the class of cycle type mu
/// (Murnaghan-Nakayama rule). Throws on weight mismatch.
Integer character_value(const Partition& lambda, const Partition& mu);

}  // namespace trivdiag::symcore
