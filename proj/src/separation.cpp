#include "idemring/separation.hpp"

namespace idemring {

std::optional<Separator> find_separator(const FiniteSemiring& s, Elem zero,
                                        Elem a, Elem b, bool allow_unity) {
  const auto k = static_cast<Elem>(s.size());
  if (allow_unity) {
    if (a != zero && b == zero) return Separator{};
    for (Elem c = 0; c < k; ++c) {
      if (s.mul(c, a) != zero && s.mul(c, b) == zero) return Separator{c, {}};
    }
    for (Elem d = 0; d < k; ++d) {
      if (s.mul(a, d) != zero && s.mul(b, d) == zero) return Separator{{}, d};
    }
  }
  for (Elem c = 0; c < k; ++c) {
    const Elem ca = s.mul(c, a), cb = s.mul(c, b);
    for (Elem d = 0; d < k; ++d) {
      if (s.mul(ca, d) != zero && s.mul(cb, d) == zero) return Separator{c, d};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> first_unseparated(
    const FiniteSemiring& s, const NaturalOrder& order, Elem zero,
    bool allow_unity) {
  const auto k = static_cast<Elem>(s.size());
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = 0; b < k; ++b) {
      if (order.leq(a, b)) continue;
      if (!find_separator(s, zero, a, b, allow_unity)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace idemring
