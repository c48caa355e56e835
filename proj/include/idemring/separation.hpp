#pragma once

#include <optional>
#include <utility>

#include "idemring/semiring.hpp"

namespace idemring {

/// Multipliers with c a d != 0 = c b d. An empty side stands for the
/// formal unity of S^1.
struct Separator {
  std::optional<Elem> c;
  std::optional<Elem> d;
};

/// First separator for (a, b) in lexicographic order, trying the cases
/// (1,1), (c,1), (1,d), (c,d) in that order. With `allow_unity` false only
/// the last case is tried.
[[nodiscard]] std::optional<Separator> find_separator(const FiniteSemiring& s,
                                                      Elem zero, Elem a, Elem b,
                                                      bool allow_unity);

/// First pair (a, b) with a not below b that has no separator.
[[nodiscard]] std::optional<std::pair<Elem, Elem>> first_unseparated(
    const FiniteSemiring& s, const NaturalOrder& order, Elem zero,
    bool allow_unity);

}  // namespace idemring
