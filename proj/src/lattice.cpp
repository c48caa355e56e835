#include "idemring/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "idemring/errors.hpp"

namespace idemring {
namespace {

constexpr std::size_t max_end0_lattice = 6;

std::string pair_name(const std::vector<std::string>& labels, Elem a, Elem b) {
  return "(" + labels[a] + ", " + labels[b] + ")";
}

// Least upper bound (upper = true) or greatest lower bound of a and b.
std::optional<Elem> bound(const std::vector<std::uint8_t>& leq, std::size_t k,
                          Elem a, Elem b, bool upper) {
  auto le = [&](Elem x, Elem y) { return leq[x * k + y] != 0; };
  std::vector<Elem> candidates;
  for (Elem x = 0; x < k; ++x) {
    if (upper ? (le(a, x) && le(b, x)) : (le(x, a) && le(x, b))) {
      candidates.push_back(x);
    }
  }
  for (const Elem x : candidates) {
    const bool extremal = std::all_of(
        candidates.begin(), candidates.end(),
        [&](Elem y) { return upper ? le(x, y) : le(y, x); });
    if (extremal) return x;
  }
  return std::nullopt;
}

}  // namespace

FiniteLattice lattice_from_order(std::vector<std::string> labels,
                                 const std::vector<std::vector<bool>>& leq) {
  const std::size_t k = labels.size();
  if (k == 0) throw InputError("lattice has no elements");
  if (leq.size() != k) {
    throw InputError("leq has " + std::to_string(leq.size()) +
                     " rows, expected " + std::to_string(k));
  }
  std::vector<std::uint8_t> order(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (leq[i].size() != k) {
      throw InputError("leq row " + std::to_string(i) + " has " +
                       std::to_string(leq[i].size()) + " entries, expected " +
                       std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) order[i * k + j] = leq[i][j] ? 1 : 0;
  }
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != k) throw InputError("lattice labels are not distinct");

  auto le = [&](Elem x, Elem y) { return order[x * k + y] != 0; };
  for (Elem a = 0; a < k; ++a) {
    if (!le(a, a)) {
      throw InputError("leq is not reflexive at " + labels[a]);
    }
    for (Elem b = 0; b < k; ++b) {
      if (a != b && le(a, b) && le(b, a)) {
        throw InputError("leq is not antisymmetric on " +
                         pair_name(labels, a, b));
      }
      for (Elem c = 0; c < k; ++c) {
        if (le(a, b) && le(b, c) && !le(a, c)) {
          throw InputError("leq is not transitive: " + labels[a] +
                           " <= " + labels[b] + " <= " + labels[c]);
        }
      }
    }
  }

  std::vector<Elem> joins(k * k), meets(k * k);
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = 0; b < k; ++b) {
      const auto j = bound(order, k, a, b, true);
      if (!j) {
        throw InputError("not a lattice: " + pair_name(labels, a, b) +
                         " has no least upper bound");
      }
      const auto m = bound(order, k, a, b, false);
      if (!m) {
        throw InputError("not a lattice: " + pair_name(labels, a, b) +
                         " has no greatest lower bound");
      }
      joins[a * k + b] = *j;
      meets[a * k + b] = *m;
    }
  }

  FiniteLattice l;
  l.labels_ = std::move(labels);
  l.leq_ = std::move(order);
  l.join_ = OpTable(k, std::move(joins));
  l.meet_ = OpTable(k, std::move(meets));
  Elem bottom = 0, top = 0;
  for (Elem a = 0; a < k; ++a) {
    bottom = l.meet_(bottom, a);
    top = l.join_(top, a);
  }
  l.bottom_ = bottom;
  l.top_ = top;
  return l;
}

FiniteSemiring FiniteLattice::as_semiring(std::string name) const {
  return FiniteSemiring(std::move(name), labels_, join_, meet_);
}

FiniteLattice chain_lattice(std::size_t m) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = i <= j;
  }
  return lattice_from_order(std::move(labels), leq);
}

std::vector<FiniteLattice> lattices_of_size(std::size_t m) {
  if (m == 0 || m > 5) {
    throw SizeError("lattice enumeration supports 1..5 elements, got " +
                    std::to_string(m));
  }
  // Enumerate orders extending 0 <= everything <= m-1 with the strict part
  // contained in i < j (every finite order has such a labeling), then
  // deduplicate by isomorphism.
  std::vector<std::pair<Elem, Elem>> free_pairs;
  for (Elem i = 1; i + 1 < m; ++i) {
    for (Elem j = i + 1; j + 1 < m; ++j) free_pairs.emplace_back(i, j);
  }
  std::vector<FiniteLattice> found;
  std::set<std::vector<std::uint8_t>> canonical_forms;
  std::vector<Elem> perm(m);
  for (std::size_t mask = 0; mask < (std::size_t{1} << free_pairs.size());
       ++mask) {
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (Elem i = 0; i < m; ++i) {
      leq[i][i] = true;
      leq[0][i] = true;
      leq[i][m - 1] = true;
    }
    for (std::size_t p = 0; p < free_pairs.size(); ++p) {
      if (mask >> p & 1) leq[free_pairs[p].first][free_pairs[p].second] = true;
    }
    std::vector<std::string> labels;
    for (Elem i = 0; i < m; ++i) labels.push_back(std::to_string(i));
    FiniteLattice l;
    try {
      l = lattice_from_order(std::move(labels), leq);
    } catch (const InputError&) {
      continue;  // not transitive or not a lattice
    }
    std::vector<std::uint8_t> best;
    std::iota(perm.begin(), perm.end(), Elem{0});
    do {
      std::vector<std::uint8_t> form(m * m);
      for (Elem i = 0; i < m; ++i) {
        for (Elem j = 0; j < m; ++j) form[perm[i] * m + perm[j]] = l.leq(i, j);
      }
      if (best.empty() || form < best) best = std::move(form);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (canonical_forms.insert(best).second) found.push_back(std::move(l));
  }
  return found;
}

std::vector<JoinEndomorphism> join_endomorphisms(const FiniteLattice& l) {
  const std::size_t k = l.size();
  if (k > max_end0_lattice) {
    throw SizeError("End_0(L) enumeration supports lattices of at most " +
                    std::to_string(max_end0_lattice) + " elements, got " +
                    std::to_string(k));
  }
  std::vector<JoinEndomorphism> out;
  std::vector<Elem> image(k, 0);
  const auto bottom = l.bottom();
  while (true) {
    bool ok = image[bottom] == bottom;
    for (Elem x = 0; x < k && ok; ++x) {
      for (Elem y = 0; y < k && ok; ++y) {
        ok = image[l.join(x, y)] == l.join(image[x], image[y]);
      }
    }
    if (ok) out.push_back({image});
    // next map in lexicographic order, first coordinate most significant
    std::size_t pos = k;
    while (pos > 0 && image[pos - 1] + 1 == k) image[--pos] = 0;
    if (pos == 0) break;
    ++image[pos - 1];
  }
  return out;
}

FiniteSemiring gen_end0(const FiniteLattice& l) {
  const auto maps = join_endomorphisms(l);
  const std::size_t m = maps.size();
  std::vector<std::string> labels;
  for (const auto& f : maps) {
    std::string s = "(";
    for (std::size_t x = 0; x < f.image.size(); ++x) {
      if (x != 0) s += ",";
      s += l.label(f.image[x]);
    }
    labels.push_back(s + ")");
  }
  auto index_of = [&](const JoinEndomorphism& f) {
    const auto it = std::lower_bound(maps.begin(), maps.end(), f);
    return static_cast<Elem>(it - maps.begin());
  };
  std::vector<Elem> add(m * m), mul(m * m);
  JoinEndomorphism h{std::vector<Elem>(l.size())};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (Elem x = 0; x < l.size(); ++x) {
        h.image[x] = l.join(maps[i].image[x], maps[j].image[x]);
      }
      add[i * m + j] = index_of(h);
      for (Elem x = 0; x < l.size(); ++x) {
        h.image[x] = maps[i].image[maps[j].image[x]];
      }
      mul[i * m + j] = index_of(h);
    }
  }
  return FiniteSemiring("End0", std::move(labels), OpTable(m, std::move(add)),
                        OpTable(m, std::move(mul)));
}

std::vector<Elem> gen_xl(const FiniteLattice& l) {
  const auto maps = join_endomorphisms(l);
  std::vector<Elem> out;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::set<Elem> values(maps[i].image.begin(), maps[i].image.end());
    if (values.size() <= 2) out.push_back(static_cast<Elem>(i));
  }
  return out;
}

}  // namespace idemring
