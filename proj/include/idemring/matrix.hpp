#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idemring/semiring.hpp"

namespace idemring {

/// An n x n matrix over a base semiring: row-major base-element indices.
using Matrix = std::vector<Elem>;

enum class MatrixMode { materialized, lazy };

/// M_n(S) with the usual entrywise sum and row-by-column product.
///
/// In materialized mode the whole semiring is built as a FiniteSemiring whose
/// element index is the mixed-radix value of the row-major entry vector, with
/// entry (0,0) as the most significant digit. Lazy mode only computes on
/// explicit matrices.
class MatrixSemiring {
 public:
  static constexpr std::size_t default_threshold = 4096;

  /// Throws InputError for n == 0 and SizeError when materialization would
  /// exceed `threshold` elements.
  MatrixSemiring(FiniteSemiring base, std::size_t n, MatrixMode mode,
                 std::size_t threshold = default_threshold);

  [[nodiscard]] const FiniteSemiring& base() const noexcept { return base_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] MatrixMode mode() const noexcept { return mode_; }

  /// |S|^(n^2), or nullopt when it does not fit in 64 bits.
  [[nodiscard]] std::optional<std::size_t> element_count() const noexcept {
    return count_;
  }

  [[nodiscard]] Matrix add(const Matrix& x, const Matrix& y) const;
  [[nodiscard]] Matrix mul(const Matrix& x, const Matrix& y) const;
  [[nodiscard]] Matrix constant(Elem a) const;
  /// The common entry of a constant matrix.
  [[nodiscard]] std::optional<Elem> constant_value(const Matrix& x) const;

  /// Mixed-radix index; requires element_count() to exist.
  [[nodiscard]] Elem encode(const Matrix& x) const;
  [[nodiscard]] Matrix decode(Elem index) const;

  /// "[[a,b],[c,d]]" using base labels.
  [[nodiscard]] std::string label(const Matrix& x) const;

  /// The materialized semiring; throws ConditionError in lazy mode.
  [[nodiscard]] const FiniteSemiring& semiring() const;

  void check_shape(const Matrix& x) const;

 private:
  void materialize();

  FiniteSemiring base_;
  std::size_t n_;
  MatrixMode mode_;
  std::optional<std::size_t> count_;
  std::optional<FiniteSemiring> materialized_;
};

[[nodiscard]] MatrixSemiring matrix_semiring(
    const FiniteSemiring& s, std::size_t n,
    MatrixMode mode = MatrixMode::materialized,
    std::size_t threshold = MatrixSemiring::default_threshold);

/// The all-a matrix.
[[nodiscard]] Matrix const_embed(const FiniteSemiring& s, std::size_t n,
                                 Elem a);

enum class StepKind { add, left_multiply, right_multiply };

[[nodiscard]] std::string_view to_string(StepKind kind) noexcept;

struct WitnessStep {
  StepKind kind;
  Matrix operand;  // E in (A+E, B+E), (EA, EB) or (AE, BE)
};

/// Translations carrying a pair (A, B) to a pair of distinct constant
/// matrices. Every intermediate pair lies in each congruence containing
/// (A, B).
struct WitnessChain {
  std::vector<WitnessStep> steps;

  [[nodiscard]] std::pair<Matrix, Matrix> replay(const MatrixSemiring& m,
                                                 Matrix a, Matrix b) const;
};

struct ConstantPair {
  Elem first;
  Elem second;
  WitnessChain chain;
};

/// Moves a pair of distinct matrices to a pair of distinct constant matrices
/// using one additive step, one left multiplication and one right
/// multiplication (or no steps if both inputs are already constant).
///
/// Requires an additively idempotent base. Throws InputError when A == B and
/// ConditionError naming (a, b, e) when no separating witnesses exist.
[[nodiscard]] ConstantPair extract_constant_pair(const FiniteSemiring& s,
                                                 std::size_t n,
                                                 const Matrix& a,
                                                 const Matrix& b);

}  // namespace idemring
