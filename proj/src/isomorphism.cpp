#include "idemring/isomorphism.hpp"

#include <array>
#include <cstdint>

#include "idemring/errors.hpp"

namespace idemring {
namespace {

// Isomorphism-invariant fingerprint of one element.
using Signature = std::array<std::uint32_t, 9>;

std::vector<Signature> signatures(const FiniteSemiring& s) {
  const auto profile = element_profile(s);
  const auto k = static_cast<Elem>(s.size());
  std::vector<Signature> out(k);
  for (Elem a = 0; a < k; ++a) {
    const auto& f = profile.flags[a];
    std::uint32_t flags = (f.is_zero ? 1u : 0u) | (f.is_unity ? 2u : 0u) |
                          (f.is_bi_absorbing ? 4u : 0u) |
                          (f.is_left_mult_absorbing ? 8u : 0u) |
                          (f.is_right_mult_absorbing ? 16u : 0u) |
                          (f.is_minimal ? 32u : 0u) |
                          (f.is_greatest ? 64u : 0u) |
                          (s.add(a, a) == a ? 128u : 0u) |
                          (s.mul(a, a) == a ? 256u : 0u);
    std::uint32_t sum_fixed = 0, sum_absorbed = 0, left_fixed = 0,
                  right_fixed = 0, left_hit = 0, right_hit = 0, as_sum = 0,
                  as_product = 0;
    for (Elem b = 0; b < k; ++b) {
      sum_fixed += s.add(a, b) == a;
      sum_absorbed += s.add(a, b) == b;
      left_fixed += s.mul(a, b) == a;
      right_fixed += s.mul(b, a) == a;
      left_hit += s.mul(a, b) == b;
      right_hit += s.mul(b, a) == b;
      for (Elem c = 0; c < k; ++c) {
        as_sum += s.add(b, c) == a;
        as_product += s.mul(b, c) == a;
      }
    }
    out[a] = {flags,     sum_fixed, sum_absorbed, left_fixed, right_fixed,
              left_hit,  right_hit, as_sum,       as_product};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteSemiring& s, const FiniteSemiring& t)
      : s_(s),
        t_(t),
        k_(static_cast<Elem>(s.size())),
        sig_s_(signatures(s)),
        sig_t_(signatures(t)),
        map_(k_, unassigned),
        inverse_(k_, unassigned) {}

  std::optional<std::vector<Elem>> run() {
    if (assign(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Elem unassigned = static_cast<Elem>(-1);

  // Every fully determined equation among assigned elements must match.
  bool consistent(Elem a) const {
    for (Elem b = 0; b <= a; ++b) {
      for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (!image_matches(s_.add(x, y), t_.add(map_[x], map_[y]))) {
          return false;
        }
        if (!image_matches(s_.mul(x, y), t_.mul(map_[x], map_[y]))) {
          return false;
        }
      }
    }
    return true;
  }

  bool image_matches(Elem source, Elem target) const {
    if (map_[source] != unassigned) return map_[source] == target;
    return inverse_[target] == unassigned;
  }

  bool assign(Elem a) {
    if (a == k_) return true;
    for (Elem image = 0; image < k_; ++image) {
      if (inverse_[image] != unassigned || sig_s_[a] != sig_t_[image]) {
        continue;
      }
      map_[a] = image;
      inverse_[image] = a;
      if (consistent(a) && assign(a + 1)) return true;
      map_[a] = unassigned;
      inverse_[image] = unassigned;
    }
    return false;
  }

  const FiniteSemiring& s_;
  const FiniteSemiring& t_;
  Elem k_;
  std::vector<Signature> sig_s_, sig_t_;
  std::vector<Elem> map_, inverse_;
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteSemiring& s,
                                                  const FiniteSemiring& t) {
  if (s.size() != t.size()) return std::nullopt;
  return IsoSearch(s, t).run();
}

FiniteSemiring permute(const FiniteSemiring& s, const std::vector<Elem>& perm) {
  const std::size_t k = s.size();
  if (perm.size() != k) throw InputError("permutation has the wrong length");
  std::vector<std::string> labels(k);
  std::vector<Elem> add(k * k), mul(k * k);
  for (Elem a = 0; a < k; ++a) {
    labels[perm[a]] = s.label(a);
    for (Elem b = 0; b < k; ++b) {
      add[perm[a] * k + perm[b]] = perm[s.add(a, b)];
      mul[perm[a] * k + perm[b]] = perm[s.mul(a, b)];
    }
  }
  return FiniteSemiring(s.name(), std::move(labels), OpTable(k, std::move(add)),
                        OpTable(k, std::move(mul)));
}

}  // namespace idemring
