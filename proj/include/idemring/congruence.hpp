#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "idemring/matrix.hpp"
#include "idemring/partition.hpp"
#include "idemring/semiring.hpp"

namespace idemring {

/// Which constants c drive the closure x -> x+c, cx, xc.
///
/// `generators` uses a generating set of (S,+) and one of (S,.), which gives
/// the same closure because every translation by c factors through
/// translations by generators. `all_elements` uses every c.
enum class TranslationBasis { generators, all_elements };

/// Least-congruence computations on one semiring.
class CongruenceEngine {
 public:
  explicit CongruenceEngine(
      const FiniteSemiring& s,
      TranslationBasis basis = TranslationBasis::generators);

  [[nodiscard]] const FiniteSemiring& semiring() const noexcept { return s_; }

  /// Least congruence containing (a, b).
  [[nodiscard]] Partition principal(Elem a, Elem b) const;

  /// Least congruence containing every listed pair.
  [[nodiscard]] Partition generated(
      std::span<const std::pair<Elem, Elem>> pairs) const;

  [[nodiscard]] std::span<const Elem> additive_basis() const noexcept {
    return add_basis_;
  }
  [[nodiscard]] std::span<const Elem> multiplicative_basis() const noexcept {
    return mul_basis_;
  }

 private:
  Partition close(UnionFind& uf, std::vector<std::pair<Elem, Elem>> work) const;

  const FiniteSemiring& s_;
  std::vector<Elem> add_basis_;
  std::vector<Elem> mul_basis_;
};

/// Greedy generating set of the semigroup given by `table`, in index order.
[[nodiscard]] std::vector<Elem> semigroup_generators(const OpTable& table);

[[nodiscard]] Partition principal_congruence(const FiniteSemiring& s, Elem a,
                                             Elem b);

enum class TranslationKind { add, left_mul, right_mul };

[[nodiscard]] std::string_view to_string(TranslationKind kind) noexcept;

/// A related pair (a, b) and a translation that separates it.
struct CongruenceViolation {
  Elem a, b;
  TranslationKind kind;
  Elem c;
};

[[nodiscard]] std::optional<CongruenceViolation> find_congruence_violation(
    const FiniteSemiring& s, const Partition& p);

[[nodiscard]] inline bool is_congruence(const FiniteSemiring& s,
                                        const Partition& p) {
  return !find_congruence_violation(s, p).has_value();
}

/// A set of pairs whose principal congruences are cofinal downwards: every
/// principal congruence of a pair a != b contains the principal congruence
/// of some listed pair. For additively idempotent S these are the covering
/// pairs of the natural order; otherwise all pairs a < b.
[[nodiscard]] std::vector<std::pair<Elem, Elem>> decisive_pairs(
    const FiniteSemiring& s);

/// Throws DegenerateError for |S| = 1.
[[nodiscard]] bool is_congruence_simple(const FiniteSemiring& s);

struct Monolith {
  Partition partition;
  std::optional<std::pair<Elem, Elem>> generating_pair;
};

/// Intersection of all non-identity principal congruences, or nullopt when
/// that intersection is the identity. Throws DegenerateError for |S| = 1.
[[nodiscard]] std::optional<Monolith> monolith(const FiniteSemiring& s);

[[nodiscard]] inline bool is_subdirectly_irreducible(const FiniteSemiring& s) {
  return monolith(s).has_value();
}

/// (lambda, rho): a ~ b when ax = bx for all x, resp. xa = xb for all x.
[[nodiscard]] std::pair<Partition, Partition> lambda_rho(
    const FiniteSemiring& s);

/// Pulls a congruence on materialized M_n(S) back to S along a -> const(a).
/// Throws InputError if `rho` is not a congruence of M_n(S).
[[nodiscard]] Partition hat_congruence(const MatrixSemiring& m,
                                       const Partition& rho);

/// Entrywise lift of a congruence on S to the materialized M_n(S).
/// Throws InputError if `rho` is not a congruence of S.
[[nodiscard]] Partition tilde_congruence(const MatrixSemiring& m,
                                         const Partition& rho);

}  // namespace idemring
