#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idemring/semiring.hpp"

namespace idemring {

/// A finite lattice given by its order, with joins and meets precomputed.
class FiniteLattice {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  [[nodiscard]] const std::string& label(Elem a) const { return labels_.at(a); }
  [[nodiscard]] bool leq(Elem a, Elem b) const noexcept {
    return leq_[static_cast<std::size_t>(a) * size() + b] != 0;
  }
  [[nodiscard]] Elem join(Elem a, Elem b) const noexcept { return join_(a, b); }
  [[nodiscard]] Elem meet(Elem a, Elem b) const noexcept { return meet_(a, b); }
  [[nodiscard]] Elem bottom() const noexcept { return bottom_; }
  [[nodiscard]] Elem top() const noexcept { return top_; }

  /// The lattice as the semiring (join, meet).
  [[nodiscard]] FiniteSemiring as_semiring(std::string name) const;

 private:
  friend FiniteLattice lattice_from_order(
      std::vector<std::string> labels,
      const std::vector<std::vector<bool>>& leq);

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  OpTable join_;
  OpTable meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Builds a lattice from an order relation. Throws InputError when the
/// relation is not a partial order or some pair lacks a least upper or
/// greatest lower bound; the message names the offending pair.
[[nodiscard]] FiniteLattice lattice_from_order(
    std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

/// The chain 0 < 1 < ... < m-1 with labels "0".."m-1".
[[nodiscard]] FiniteLattice chain_lattice(std::size_t m);

/// All lattices with exactly m elements, up to isomorphism (m <= 5).
[[nodiscard]] std::vector<FiniteLattice> lattices_of_size(std::size_t m);

/// A bottom-preserving join endomorphism, as the image of each element.
struct JoinEndomorphism {
  std::vector<Elem> image;

  friend auto operator<=>(const JoinEndomorphism&,
                          const JoinEndomorphism&) = default;
};

/// Every member of End_0(L), in lexicographic order of image vectors.
/// Throws SizeError when |L| > 6.
[[nodiscard]] std::vector<JoinEndomorphism> join_endomorphisms(
    const FiniteLattice& l);

/// End_0(L) under pointwise join and composition (fg)(x) = f(g(x)).
/// Element i is join_endomorphisms(l)[i]; labels read "(f(x0),f(x1),...)".
[[nodiscard]] FiniteSemiring gen_end0(const FiniteLattice& l);

/// Indices into gen_end0(l) of the maps with at most two image values.
[[nodiscard]] std::vector<Elem> gen_xl(const FiniteLattice& l);

}  // namespace idemring
