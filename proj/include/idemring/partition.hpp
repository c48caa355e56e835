#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "idemring/semiring.hpp"

namespace idemring {

/// Disjoint-set forest over 0..k-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t k);

  Elem find(Elem x) noexcept;

  /// Merges the classes of x and y; false if they were already merged.
  bool unite(Elem x, Elem y) noexcept;

  [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
  [[nodiscard]] std::size_t classes() const noexcept { return classes_; }

 private:
  std::vector<Elem> parent_;
  std::vector<Elem> rank_;
  std::size_t classes_;
};

/// An equivalence relation on 0..k-1, stored as a canonical block labeling:
/// block ids are numbered in order of their least member, so two partitions
/// are equal exactly when their labelings are.
class Partition {
 public:
  Partition() = default;

  [[nodiscard]] static Partition identity(std::size_t k);
  [[nodiscard]] static Partition full(std::size_t k);
  [[nodiscard]] static Partition from_union_find(UnionFind& uf);
  /// Relabels an arbitrary class labeling into canonical form.
  [[nodiscard]] static Partition from_labels(std::span<const Elem> labels);
  /// Blocks must cover 0..k-1 exactly once; throws InputError otherwise.
  [[nodiscard]] static Partition from_blocks(
      std::size_t k, const std::vector<std::vector<Elem>>& blocks);

  [[nodiscard]] std::size_t size() const noexcept { return block_.size(); }
  [[nodiscard]] std::size_t block_count() const noexcept { return blocks_; }
  [[nodiscard]] Elem block_of(Elem a) const noexcept { return block_[a]; }
  [[nodiscard]] bool related(Elem a, Elem b) const noexcept {
    return block_[a] == block_[b];
  }
  [[nodiscard]] bool is_identity() const noexcept {
    return blocks_ == block_.size();
  }
  [[nodiscard]] bool is_full() const noexcept { return blocks_ <= 1; }

  /// Blocks as sorted member lists, ordered by least member.
  [[nodiscard]] std::vector<std::vector<Elem>> blocks() const;
  /// Least member of each block, indexed by block id.
  [[nodiscard]] std::vector<Elem> representatives() const;
  /// Lexicographically first pair a < b with a, b related.
  [[nodiscard]] std::optional<std::pair<Elem, Elem>> first_nontrivial_pair()
      const;

  /// this is contained in other (as sets of pairs).
  [[nodiscard]] bool refines(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<Elem> block, std::size_t count)
      : block_(std::move(block)), blocks_(count) {}

  std::vector<Elem> block_;
  std::size_t blocks_ = 0;
};

/// Intersection of two partitions of the same set.
[[nodiscard]] Partition meet(const Partition& p, const Partition& q);

}  // namespace idemring
