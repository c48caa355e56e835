#include "idemring/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "idemring/errors.hpp"

namespace idemring {

UnionFind::UnionFind(std::size_t k) : parent_(k), rank_(k, 0), classes_(k) {
  std::iota(parent_.begin(), parent_.end(), Elem{0});
}

Elem UnionFind::find(Elem x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Elem x, Elem y) noexcept {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  --classes_;
  return true;
}

Partition Partition::identity(std::size_t k) {
  std::vector<Elem> block(k);
  std::iota(block.begin(), block.end(), Elem{0});
  return Partition(std::move(block), k);
}

Partition Partition::full(std::size_t k) {
  return Partition(std::vector<Elem>(k, 0), k == 0 ? 0 : 1);
}

Partition Partition::from_labels(std::span<const Elem> labels) {
  constexpr Elem unseen = static_cast<Elem>(-1);
  Elem max_label = 0;
  for (const Elem l : labels) max_label = std::max(max_label, l);
  std::vector<Elem> renumber(labels.empty() ? 0 : max_label + 1, unseen);
  std::vector<Elem> block(labels.size());
  Elem next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Elem& id = renumber[labels[i]];
    if (id == unseen) id = next++;
    block[i] = id;
  }
  return Partition(std::move(block), next);
}

Partition Partition::from_union_find(UnionFind& uf) {
  std::vector<Elem> roots(uf.size());
  for (Elem i = 0; i < uf.size(); ++i) roots[i] = uf.find(i);
  return from_labels(roots);
}

Partition Partition::from_blocks(std::size_t k,
                                 const std::vector<std::vector<Elem>>& blocks) {
  constexpr Elem unseen = static_cast<Elem>(-1);
  std::vector<Elem> labels(k, unseen);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("partition has an empty block");
    for (const Elem a : blocks[b]) {
      if (a >= k) {
        throw InputError("partition mentions element " + std::to_string(a) +
                         " outside 0.." + std::to_string(k - 1));
      }
      if (labels[a] != unseen) {
        throw InputError("element " + std::to_string(a) +
                         " appears in two partition blocks");
      }
      labels[a] = static_cast<Elem>(b);
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (labels[a] == unseen) {
      throw InputError("element " + std::to_string(a) +
                       " is missing from the partition");
    }
  }
  return from_labels(labels);
}

std::vector<std::vector<Elem>> Partition::blocks() const {
  std::vector<std::vector<Elem>> out(blocks_);
  for (Elem a = 0; a < block_.size(); ++a) out[block_[a]].push_back(a);
  return out;
}

std::vector<Elem> Partition::representatives() const {
  std::vector<Elem> reps(blocks_);
  // canonical numbering: the first time a block id is seen is its least member
  Elem next = 0;
  for (Elem a = 0; a < block_.size(); ++a) {
    if (block_[a] == next) reps[next++] = a;
  }
  return reps;
}

std::optional<std::pair<Elem, Elem>> Partition::first_nontrivial_pair() const {
  const auto reps = representatives();
  std::optional<std::pair<Elem, Elem>> best;
  for (Elem a = 0; a < block_.size(); ++a) {
    const Elem r = reps[block_[a]];
    if (r != a && (!best || r < best->first)) {
      best = std::pair{r, a};
    }
  }
  return best;
}

bool Partition::refines(const Partition& other) const {
  if (other.size() != size()) return false;
  std::vector<Elem> image(blocks_, static_cast<Elem>(-1));
  for (Elem a = 0; a < block_.size(); ++a) {
    Elem& target = image[block_[a]];
    if (target == static_cast<Elem>(-1)) {
      target = other.block_[a];
    } else if (target != other.block_[a]) {
      return false;
    }
  }
  return true;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw InputError("cannot intersect partitions of different sets");
  }
  std::map<std::pair<Elem, Elem>, Elem> ids;
  std::vector<Elem> labels(p.size());
  for (Elem a = 0; a < p.size(); ++a) {
    const auto key = std::pair{p.block_of(a), q.block_of(a)};
    const auto [it, inserted] =
        ids.try_emplace(key, static_cast<Elem>(ids.size()));
    labels[a] = it->second;
  }
  return Partition::from_labels(labels);
}

}  // namespace idemring
