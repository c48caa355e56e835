#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "idemring/io.hpp"
#include "idemring/semiring.hpp"

namespace idemring {

enum class ConditionId {
  left_right_separation,   // a != b: some c with ca != cb, some d with ad != bd
  translation_separation,  // a != b, any e: ca+fe != cb+fe and ad+eg != bd+eg
  downward_directed,
  si_criterion,            // zero, least non-zero, separation over S^1
  si_criterion_strict,     // same with c, d from S
  two_element,
  top_not_absorbing,
  si_properties,
  two_sided_separation,    // a != b: some c, d with cad != cbd
};

[[nodiscard]] std::string_view to_string(ConditionId id) noexcept;

/// Outcome of one condition. The witness names elements by label: the first
/// failing assignment, or on success whatever the check found useful.
struct ConditionVerdict {
  ConditionId condition;
  bool holds = false;
  Json witness;
};

[[nodiscard]] Json verdict_to_json(const ConditionVerdict& v);

[[nodiscard]] ConditionVerdict check_left_right_separation(
    const FiniteSemiring& s);

/// Requires additive idempotency (ConditionError otherwise).
[[nodiscard]] ConditionVerdict check_translation_separation(
    const FiniteSemiring& s);

/// Requires additive idempotency.
[[nodiscard]] ConditionVerdict check_downward_directed(const FiniteSemiring& s);

/// Requires S almost integral. Separation uses the four cases of S^1.
[[nodiscard]] ConditionVerdict check_si_criterion(const FiniteSemiring& s);

/// Requires S almost integral. Multipliers range over S only.
[[nodiscard]] ConditionVerdict check_si_criterion_strict(
    const FiniteSemiring& s);

/// Requires |S| = 2 and additive idempotency. Holds iff S is the
/// two-element lattice; otherwise the witness names the obstruction:
/// "bi_absorbing", "single_product", "left_products_equal" (ax = bx for all
/// x) or "right_products_equal".
[[nodiscard]] ConditionVerdict check_two_element(const FiniteSemiring& s);

/// Requires a greatest element. Holds iff it is neither left nor right
/// multiplicatively absorbing.
[[nodiscard]] ConditionVerdict check_top_not_absorbing(const FiniteSemiring& s);

/// Requires S almost integral, subdirectly irreducible, |S| >= 3. Checks
/// e^2 = 0 for the least non-zero e; when S is commutative also that ae != 0
/// forces a to be greatest, and with a unity that 1 is join-irreducible.
[[nodiscard]] ConditionVerdict check_si_properties(const FiniteSemiring& s);

[[nodiscard]] ConditionVerdict check_two_sided_separation(
    const FiniteSemiring& s);

struct Multipliers {
  Elem c, d;
};

/// For a Lukasiewicz chain {0..u} and a > b: c = u - b, d = u, checked to
/// satisfy cad != 0 = cbd. ConditionError when a <= b or the check fails.
[[nodiscard]] Multipliers mv_basic_witness(const FiniteSemiring& chain, Elem a,
                                           Elem b);

struct TropicalWitness {
  mpq_class c, f;
};

/// In (Q, max, +): c = a and f = k f' for the least positive integer k with
/// k f' <= min(c+a-e, c+b-e), so max(c+a, f+e) != max(c+b, f+e).
/// ConditionError unless a != b and f' < 0.
[[nodiscard]] TropicalWitness tropical_witness(const mpq_class& a,
                                               const mpq_class& b,
                                               const mpq_class& e,
                                               const mpq_class& fprime);

/// Is S isomorphic to a subsemiring R of End_0(L) with X(L) inside R, for
/// some lattice L with 2 <= |L| <= min(|S|, 5)?
[[nodiscard]] bool end0_representable(const FiniteSemiring& s);

/// Chain lengths u_1 <= u_2 <= ... with S isomorphic to the product of the
/// Lukasiewicz chains, or nullopt.
[[nodiscard]] std::optional<std::vector<int>> lukasiewicz_factors(
    const FiniteSemiring& s);

/// One known equivalence or implication evaluated on an instance.
struct Agreement {
  std::string id;
  bool asserted = true;  // false: recorded only, outside the proven range
  bool holds = true;
  Json detail;
};

struct CrossCheckReport {
  FiniteSemiring semiring;
  std::size_t n;
  bool simple = false, si = false;
  bool matrix_simple = false, matrix_si = false;
  std::optional<Partition> monolith;
  std::vector<ConditionVerdict> verdicts;
  std::vector<Agreement> agreements;

  [[nodiscard]] std::vector<std::string> discrepancies() const;
};

/// Brute-force verdicts for S and M_n(S) checked against every applicable
/// characterization. Throws DegenerateError for |S| = 1 and SizeError when
/// M_n(S) exceeds `threshold`.
[[nodiscard]] CrossCheckReport crosscheck(
    const FiniteSemiring& s, std::size_t n,
    std::size_t threshold = MatrixSemiring::default_threshold);

/// Report JSON; a discrepancy carries the semiring as a counterexample.
[[nodiscard]] Json report_to_json(const CrossCheckReport& r);

/// Pulls the monolith of M_n(S) back to S and compares it with the monolith
/// of S. Reports only; nothing is asserted.
[[nodiscard]] Json probe_hat_monolith(
    const FiniteSemiring& s, std::size_t n,
    std::size_t threshold = MatrixSemiring::default_threshold);

/// Every additively idempotent semiring with at most max_size elements, up to
/// isomorphism, ordered by size. max_size is 1..4.
[[nodiscard]] std::vector<FiniteSemiring> enumerate_small(std::size_t max_size);

/// Addition tables of the semilattices on k elements (1..4), one per
/// isomorphism class.
[[nodiscard]] std::vector<OpTable> semilattices(std::size_t k);

}  // namespace idemring
