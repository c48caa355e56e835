#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idemring {

/// Index of an element inside a finite semiring.
using Elem = std::uint32_t;

/// Dense k x k operation table, row-major.
class OpTable {
 public:
  OpTable() = default;

  /// Takes ownership of `cells` (size k*k). Entries are validated to lie in
  /// [0, k); throws InputError otherwise.
  OpTable(std::size_t k, std::vector<Elem> cells);

  /// Builds a table from nested rows as parsed from a file; `what` names the
  /// table in error messages ("add", "mul").
  static OpTable from_rows(std::span<const std::vector<long long>> rows,
                           std::string_view what);

  [[nodiscard]] std::size_t size() const noexcept { return k_; }

  [[nodiscard]] Elem operator()(Elem a, Elem b) const noexcept {
    return cells_[static_cast<std::size_t>(a) * k_ + b];
  }

  [[nodiscard]] std::span<const Elem> row(Elem a) const noexcept {
    return {cells_.data() + static_cast<std::size_t>(a) * k_, k_};
  }

  [[nodiscard]] std::span<const Elem> cells() const noexcept { return cells_; }

  [[nodiscard]] std::vector<std::vector<long long>> rows() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<Elem> cells_;
};

/// A finite semiring given by its addition and multiplication tables.
///
/// Elements are identified by index 0..k-1; labels only matter for printing
/// and parsing. The constructor checks shapes and label uniqueness but not
/// the semiring axioms; use verify_axioms for that.
class FiniteSemiring {
 public:
  FiniteSemiring(std::string name, std::vector<std::string> labels,
                 OpTable add, OpTable mul);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  [[nodiscard]] const std::string& label(Elem a) const { return labels_.at(a); }
  [[nodiscard]] std::optional<Elem> index_of(std::string_view label) const;

  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept { return add_(a, b); }
  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept { return mul_(a, b); }
  [[nodiscard]] const OpTable& add_table() const noexcept { return add_; }
  [[nodiscard]] const OpTable& mul_table() const noexcept { return mul_; }

  /// Same tables and labels; the name is ignored.
  friend bool operator==(const FiniteSemiring& s, const FiniteSemiring& t) {
    return s.labels_ == t.labels_ && s.add_ == t.add_ && s.mul_ == t.mul_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  OpTable add_;
  OpTable mul_;
};

enum class Axiom {
  add_associative,
  add_commutative,
  mul_associative,
  left_distributive,   // a(b+c) = ab+ac
  right_distributive,  // (a+b)c = ac+bc
};

[[nodiscard]] std::string_view to_string(Axiom axiom) noexcept;

struct AxiomFailure {
  Axiom axiom;
  Elem a = 0, b = 0, c = 0;  // c unused for commutativity
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;  // first failing triple per axiom
  [[nodiscard]] bool pass() const noexcept { return failures.empty(); }
};

/// Exhaustive O(k^3) check of the five semiring axiom families.
[[nodiscard]] AxiomReport verify_axioms(const FiniteSemiring& s);

/// Same check on raw parsed tables. Malformed tables raise InputError, which
/// is distinct from a failing report.
[[nodiscard]] AxiomReport verify_axioms(
    std::span<const std::vector<long long>> add,
    std::span<const std::vector<long long>> mul);

struct ElementFlags {
  bool is_zero = false;
  bool is_unity = false;
  bool is_bi_absorbing = false;
  bool is_left_mult_absorbing = false;   // wS = {w}
  bool is_right_mult_absorbing = false;  // Sw = {w}
  bool is_minimal = false;               // natural order; false if not idempotent
  bool is_greatest = false;
};

struct ElementProfile {
  std::vector<ElementFlags> flags;
  std::optional<Elem> zero;
  std::optional<Elem> unity;
  std::optional<Elem> bi_absorbing;
  std::optional<Elem> greatest;
};

[[nodiscard]] ElementProfile element_profile(const FiniteSemiring& s);

/// The order a <= b iff a + b = b of an additively idempotent semiring.
class NaturalOrder {
 public:
  explicit NaturalOrder(const FiniteSemiring& s);

  [[nodiscard]] bool leq(Elem a, Elem b) const noexcept {
    return leq_[static_cast<std::size_t>(a) * k_ + b] != 0;
  }
  [[nodiscard]] bool less(Elem a, Elem b) const noexcept {
    return a != b && leq(a, b);
  }
  [[nodiscard]] std::size_t size() const noexcept { return k_; }

  /// Pairs (a, b) with a < b and nothing strictly between them.
  [[nodiscard]] std::vector<std::pair<Elem, Elem>> covers() const;
  [[nodiscard]] std::vector<Elem> minimal_elements() const;
  [[nodiscard]] std::optional<Elem> least() const;
  [[nodiscard]] std::optional<Elem> greatest() const;

 private:
  std::size_t k_;
  std::vector<std::uint8_t> leq_;
};

/// Throws ConditionError naming the element if a + a != a for some a.
[[nodiscard]] NaturalOrder natural_order(const FiniteSemiring& s);

[[nodiscard]] bool is_additively_idempotent(const FiniteSemiring& s);
[[nodiscard]] std::optional<Elem> first_non_idempotent(const FiniteSemiring& s);

struct ClassFlags {
  bool additively_idempotent = false;
  bool commutative = false;  // multiplication
  bool almost_integral = false;
  bool integral = false;
  bool downward_directed = false;
  std::size_t ss_size = 0;  // |{ab : a, b in S}|
};

[[nodiscard]] ClassFlags classify(const FiniteSemiring& s);

/// Number of distinct products ab.
[[nodiscard]] std::size_t product_set_size(const FiniteSemiring& s);

}  // namespace idemring
