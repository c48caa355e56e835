#pragma once

#include <cstddef>

#include "idemring/semiring.hpp"

namespace idemring {

/// The two-element lattice {0,1} with join and meet.
[[nodiscard]] FiniteSemiring gen_l2();

/// Subsets of {1..atoms} under union and intersection; 1 <= atoms <= 4.
[[nodiscard]] FiniteSemiring gen_boolean(int atoms);

/// The Lukasiewicz chain {0..u}: a+b = max(a,b), ab = max(a+b-u, 0).
[[nodiscard]] FiniteSemiring gen_lukasiewicz(int u);

/// Componentwise operations on pairs; labels "(a,b)".
[[nodiscard]] FiniteSemiring direct_product(const FiniteSemiring& s,
                                            const FiniteSemiring& t);

/// S plus a new element that is the unity and the greatest element.
/// Requires S almost integral.
[[nodiscard]] FiniteSemiring adjoin_unity(const FiniteSemiring& s);

/// The subsemiring {uau : uau <= u}, with u as unity and greatest element.
/// Requires S additively idempotent and uu = u.
[[nodiscard]] FiniteSemiring corner(const FiniteSemiring& s, Elem u);

/// S plus a new element e sitting just above zero, with ex = xe = 0.
///
/// Requires: S almost integral with a zero; for every a not below b some
/// c, d in S^1 with cad != 0 = cbd; every minimal element of S \ {0}
/// multiplicatively idempotent. Each failure raises ConditionError naming the
/// unmet condition.
[[nodiscard]] FiniteSemiring adjoin_least(const FiniteSemiring& s);

}  // namespace idemring
