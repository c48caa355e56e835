#include "idemring/constructions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "idemring/errors.hpp"
#include "idemring/separation.hpp"

namespace idemring {
namespace {

template <class Add, class Mul>
FiniteSemiring tabulate(std::string name, std::vector<std::string> labels,
                        Add add, Mul mul) {
  const std::size_t k = labels.size();
  std::vector<Elem> a(k * k), m(k * k);
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      a[x * k + y] = add(x, y);
      m[x * k + y] = mul(x, y);
    }
  }
  return FiniteSemiring(std::move(name), std::move(labels),
                        OpTable(k, std::move(a)), OpTable(k, std::move(m)));
}

// `base` if unused among the labels, else base', base'', ...
std::string fresh_label(const FiniteSemiring& s, std::string base) {
  while (s.index_of(base)) base += "'";
  return base;
}

void require_almost_integral(const FiniteSemiring& s, const char* op) {
  if (!classify(s).almost_integral) {
    throw ConditionError(std::string(op) + ": " + s.name() +
                         " is not almost integral");
  }
}

}  // namespace

FiniteSemiring gen_l2() {
  return tabulate(
      "L2", {"0", "1"}, [](Elem a, Elem b) { return a | b; },
      [](Elem a, Elem b) { return a & b; });
}

FiniteSemiring gen_boolean(int atoms) {
  if (atoms < 1 || atoms > 4) {
    throw InputError("boolean algebra needs 1..4 atoms, got " +
                     std::to_string(atoms));
  }
  std::vector<std::string> labels;
  for (unsigned mask = 0; mask < (1u << atoms); ++mask) {
    std::string s = "{";
    for (int i = 0; i < atoms; ++i) {
      if (!(mask >> i & 1)) continue;
      if (s.size() > 1) s += ",";
      s += std::to_string(i + 1);
    }
    labels.push_back(s + "}");
  }
  return tabulate(
      "B" + std::to_string(atoms), std::move(labels),
      [](Elem a, Elem b) { return a | b; },
      [](Elem a, Elem b) { return a & b; });
}

FiniteSemiring gen_lukasiewicz(int u) {
  if (u < 1) {
    throw InputError("Lukasiewicz chain needs u >= 1, got " +
                     std::to_string(u));
  }
  std::vector<std::string> labels;
  for (int i = 0; i <= u; ++i) labels.push_back(std::to_string(i));
  const auto top = static_cast<Elem>(u);
  return tabulate(
      "Luk" + std::to_string(u), std::move(labels),
      [](Elem a, Elem b) { return std::max(a, b); },
      [top](Elem a, Elem b) { return a + b > top ? a + b - top : Elem{0}; });
}

FiniteSemiring direct_product(const FiniteSemiring& s,
                              const FiniteSemiring& t) {
  const auto m = static_cast<Elem>(t.size());
  std::vector<std::string> labels;
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < m; ++b) {
      labels.push_back("(" + s.label(a) + "," + t.label(b) + ")");
    }
  }
  return tabulate(
      s.name() + "x" + t.name(), std::move(labels),
      [&](Elem x, Elem y) {
        return s.add(x / m, y / m) * m + t.add(x % m, y % m);
      },
      [&](Elem x, Elem y) {
        return s.mul(x / m, y / m) * m + t.mul(x % m, y % m);
      });
}

FiniteSemiring adjoin_unity(const FiniteSemiring& s) {
  require_almost_integral(s, "adjoin-unity");
  const auto u = static_cast<Elem>(s.size());
  auto labels = s.labels();
  labels.push_back(fresh_label(s, "1"));
  return tabulate(
      s.name() + "+1", std::move(labels),
      [&](Elem a, Elem b) { return a == u || b == u ? u : s.add(a, b); },
      [&](Elem a, Elem b) {
        if (a == u) return b;
        if (b == u) return a;
        return s.mul(a, b);
      });
}

FiniteSemiring corner(const FiniteSemiring& s, Elem u) {
  if (u >= s.size()) throw InputError("corner: element index out of range");
  const auto order = natural_order(s);
  if (s.mul(u, u) != u) {
    throw ConditionError("corner: " + s.label(u) +
                         " is not multiplicatively idempotent");
  }
  std::vector<Elem> members;
  for (Elem a = 0; a < s.size(); ++a) {
    const Elem x = s.mul(s.mul(u, a), u);
    if (order.leq(x, u)) members.push_back(x);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<Elem> position(s.size(), static_cast<Elem>(s.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    position[members[i]] = static_cast<Elem>(i);
    labels.push_back(s.label(members[i]));
  }
  auto inside = [&](Elem x) {
    if (position[x] == s.size()) {
      throw ConditionError("corner: " + s.label(x) + " escapes the corner at " +
                           s.label(u));
    }
    return position[x];
  };
  return tabulate(
      s.name() + "[" + s.label(u) + "]", std::move(labels),
      [&](Elem a, Elem b) { return inside(s.add(members[a], members[b])); },
      [&](Elem a, Elem b) { return inside(s.mul(members[a], members[b])); });
}

FiniteSemiring adjoin_least(const FiniteSemiring& s) {
  require_almost_integral(s, "adjoin-least");
  const auto profile = element_profile(s);
  if (!profile.zero) {
    throw ConditionError("adjoin-least: " + s.name() + " has no zero");
  }
  const Elem zero = *profile.zero;
  const auto order = natural_order(s);
  if (const auto bad = first_unseparated(s, order, zero, true)) {
    throw ConditionError("adjoin-least: no c, d in S^1 with cad != 0 = cbd for "
                         "a = " + s.label(bad->first) +
                         ", b = " + s.label(bad->second));
  }
  for (Elem a = 0; a < s.size(); ++a) {
    if (a == zero) continue;
    bool minimal = true;
    for (Elem x = 0; x < s.size() && minimal; ++x) {
      minimal = !(x != zero && order.less(x, a));
    }
    if (minimal && s.mul(a, a) != a) {
      throw ConditionError("adjoin-least: minimal non-zero element " +
                           s.label(a) + " is not idempotent");
    }
  }

  const auto e = static_cast<Elem>(s.size());
  auto labels = s.labels();
  labels.push_back(fresh_label(s, "e"));
  return tabulate(
      s.name() + "+e", std::move(labels),
      [&](Elem a, Elem b) {
        if (a == e && b == e) return e;
        if (a == e) return b == zero ? e : b;
        if (b == e) return a == zero ? e : a;
        return s.add(a, b);
      },
      [&](Elem a, Elem b) { return a == e || b == e ? zero : s.mul(a, b); });
}

}  // namespace idemring
