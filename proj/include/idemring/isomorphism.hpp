#pragma once

#include <optional>
#include <vector>

#include "idemring/semiring.hpp"

namespace idemring {

/// Searches for a bijection phi with phi(a+b) = phi(a)+phi(b) and
/// phi(ab) = phi(a)phi(b). Returns phi as a vector indexed by the elements of
/// `s`, or nullopt. Backtracking, pruned by per-element invariants; meant for
/// small semirings.
[[nodiscard]] std::optional<std::vector<Elem>> find_isomorphism(
    const FiniteSemiring& s, const FiniteSemiring& t);

[[nodiscard]] inline bool is_isomorphic(const FiniteSemiring& s,
                                        const FiniteSemiring& t) {
  return find_isomorphism(s, t).has_value();
}

/// Relabels `s` along the permutation `perm` (element a becomes perm[a]).
[[nodiscard]] FiniteSemiring permute(const FiniteSemiring& s,
                                     const std::vector<Elem>& perm);

}  // namespace idemring
