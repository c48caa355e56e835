#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace idemring {

/// ((alpha, beta), k) in H = G x Z, where G is the group of rational
/// matrices [[alpha, beta], [0, 1]] with alpha > 0. H is totally ordered
/// lexicographically by alpha, then beta, then k.
struct LexGroupElement {
  mpq_class alpha{1};
  mpq_class beta{0};
  std::int64_t k = 0;

  /// Throws ConditionError unless alpha > 0. Rationals are canonicalized.
  LexGroupElement(mpq_class alpha, mpq_class beta, std::int64_t k);
  LexGroupElement() = default;

  /// "((4/3,2/3),0)"
  [[nodiscard]] std::string str() const;

  friend bool operator==(const LexGroupElement& x, const LexGroupElement& y) {
    return x.alpha == y.alpha && x.beta == y.beta && x.k == y.k;
  }
};

[[nodiscard]] LexGroupElement lex_unit();  // o = (E, 0)
[[nodiscard]] LexGroupElement lex_mul(const LexGroupElement& x,
                                      const LexGroupElement& y);
[[nodiscard]] LexGroupElement lex_inv(const LexGroupElement& x);
[[nodiscard]] std::strong_ordering lex_cmp(const LexGroupElement& x,
                                           const LexGroupElement& y);
[[nodiscard]] LexGroupElement lex_join(const LexGroupElement& x,
                                       const LexGroupElement& y);
[[nodiscard]] LexGroupElement lex_meet(const LexGroupElement& x,
                                       const LexGroupElement& y);

/// (a * u^-1 * b) v o on the interval [o, u]. Throws ConditionError when
/// u <= o or an operand lies outside [o, u].
[[nodiscard]] LexGroupElement mv_product(const LexGroupElement& a,
                                         const LexGroupElement& b,
                                         const LexGroupElement& u);

/// Grid points of [o, u]: alpha, beta in {+-p/q : 1 <= p, q <= q_max} plus
/// beta = 0, k in [-k_max, k_max]. Sorted ascending, duplicates removed.
[[nodiscard]] std::vector<LexGroupElement> sample_interval(
    const LexGroupElement& u, int q_max = 4, int k_max = 2);

}  // namespace idemring
