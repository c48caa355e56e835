#include "idemring/congruence.hpp"

#include <map>
#include <string>

#include "idemring/errors.hpp"

namespace idemring {

std::vector<Elem> semigroup_generators(const OpTable& table) {
  const auto k = static_cast<Elem>(table.size());
  std::vector<std::uint8_t> reached(k, 0);
  std::vector<Elem> members;
  std::vector<Elem> gens;
  auto reach = [&](Elem z) {
    if (!reached[z]) {
      reached[z] = 1;
      members.push_back(z);
    }
  };
  for (Elem x = 0; x < k; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    // New products all have the form u x w with u an old product (or empty)
    // and w a word in the generators.
    const std::size_t old = members.size();
    reach(x);
    for (std::size_t i = 0; i < old; ++i) reach(table(members[i], x));
    for (std::size_t i = old; i < members.size(); ++i) {
      for (const Elem g : gens) reach(table(members[i], g));
    }
  }
  return gens;
}

CongruenceEngine::CongruenceEngine(const FiniteSemiring& s,
                                   TranslationBasis basis)
    : s_(s) {
  if (basis == TranslationBasis::generators) {
    add_basis_ = semigroup_generators(s.add_table());
    mul_basis_ = semigroup_generators(s.mul_table());
  } else {
    for (Elem c = 0; c < s.size(); ++c) add_basis_.push_back(c);
    mul_basis_ = add_basis_;
  }
}

Partition CongruenceEngine::close(
    UnionFind& uf, std::vector<std::pair<Elem, Elem>> work) const {
  std::size_t head = 0;
  while (head < work.size() && uf.classes() > 1) {
    const auto [x, y] = work[head++];
    for (const Elem c : add_basis_) {
      const Elem u = s_.add(x, c), v = s_.add(y, c);
      if (uf.unite(u, v)) work.emplace_back(u, v);
    }
    for (const Elem c : mul_basis_) {
      const Elem u = s_.mul(c, x), v = s_.mul(c, y);
      if (uf.unite(u, v)) work.emplace_back(u, v);
      const Elem p = s_.mul(x, c), q = s_.mul(y, c);
      if (uf.unite(p, q)) work.emplace_back(p, q);
    }
  }
  return Partition::from_union_find(uf);
}

Partition CongruenceEngine::principal(Elem a, Elem b) const {
  const std::pair<Elem, Elem> seed{a, b};
  return generated({&seed, 1});
}

Partition CongruenceEngine::generated(
    std::span<const std::pair<Elem, Elem>> pairs) const {
  UnionFind uf(s_.size());
  std::vector<std::pair<Elem, Elem>> work;
  for (const auto& [a, b] : pairs) {
    if (a >= s_.size() || b >= s_.size()) {
      throw InputError("pair mentions an element outside " + s_.name());
    }
    if (uf.unite(a, b)) work.emplace_back(a, b);
  }
  return close(uf, std::move(work));
}

Partition principal_congruence(const FiniteSemiring& s, Elem a, Elem b) {
  return CongruenceEngine(s).principal(a, b);
}

std::string_view to_string(TranslationKind kind) noexcept {
  switch (kind) {
    case TranslationKind::add: return "add";
    case TranslationKind::left_mul: return "left_mul";
    case TranslationKind::right_mul: return "right_mul";
  }
  return "unknown";
}

std::optional<CongruenceViolation> find_congruence_violation(
    const FiniteSemiring& s, const Partition& p) {
  if (p.size() != s.size()) {
    throw InputError("partition covers " + std::to_string(p.size()) +
                     " elements but " + s.name() + " has " +
                     std::to_string(s.size()));
  }
  // Pairs (rep, a) generate the relation, so checking them suffices.
  const auto reps = p.representatives();
  const auto k = static_cast<Elem>(s.size());
  for (Elem a = 0; a < k; ++a) {
    const Elem r = reps[p.block_of(a)];
    if (r == a) continue;
    for (Elem c = 0; c < k; ++c) {
      if (!p.related(s.add(r, c), s.add(a, c))) {
        return CongruenceViolation{r, a, TranslationKind::add, c};
      }
      if (!p.related(s.mul(c, r), s.mul(c, a))) {
        return CongruenceViolation{r, a, TranslationKind::left_mul, c};
      }
      if (!p.related(s.mul(r, c), s.mul(a, c))) {
        return CongruenceViolation{r, a, TranslationKind::right_mul, c};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Elem, Elem>> decisive_pairs(const FiniteSemiring& s) {
  if (is_additively_idempotent(s)) return NaturalOrder(s).covers();
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = a + 1; b < s.size(); ++b) out.emplace_back(a, b);
  }
  return out;
}

namespace {

void require_nontrivial(const FiniteSemiring& s, std::string_view what) {
  if (s.size() < 2) {
    throw DegenerateError(std::string(what) +
                          " is undefined for the one-element semiring '" +
                          s.name() + "'");
  }
}

}  // namespace

bool is_congruence_simple(const FiniteSemiring& s) {
  require_nontrivial(s, "congruence-simplicity");
  const CongruenceEngine engine(s);
  for (const auto& [a, b] : decisive_pairs(s)) {
    if (!engine.principal(a, b).is_full()) return false;
  }
  return true;
}

std::optional<Monolith> monolith(const FiniteSemiring& s) {
  require_nontrivial(s, "the monolith");
  const CongruenceEngine engine(s);
  auto running = Partition::full(s.size());
  for (const auto& [a, b] : decisive_pairs(s)) {
    running = meet(running, engine.principal(a, b));
    if (running.is_identity()) return std::nullopt;
  }
  auto pair = running.first_nontrivial_pair();
  return Monolith{std::move(running), pair};
}

std::pair<Partition, Partition> lambda_rho(const FiniteSemiring& s) {
  const auto k = static_cast<Elem>(s.size());
  std::map<std::vector<Elem>, Elem> left_ids, right_ids;
  std::vector<Elem> left(k), right(k);
  std::vector<Elem> column(k);
  for (Elem a = 0; a < k; ++a) {
    const auto row = s.mul_table().row(a);
    left[a] = left_ids
                  .try_emplace(std::vector<Elem>(row.begin(), row.end()),
                               static_cast<Elem>(left_ids.size()))
                  .first->second;
    for (Elem x = 0; x < k; ++x) column[x] = s.mul(x, a);
    right[a] = right_ids.try_emplace(column, static_cast<Elem>(right_ids.size()))
                   .first->second;
  }
  return {Partition::from_labels(left), Partition::from_labels(right)};
}

Partition hat_congruence(const MatrixSemiring& m, const Partition& rho) {
  const auto& big = m.semiring();
  if (rho.size() != big.size() || !is_congruence(big, rho)) {
    throw InputError("relation is not a congruence on " + big.name());
  }
  const auto& s = m.base();
  std::vector<Elem> labels(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    labels[x] = rho.block_of(m.encode(m.constant(x)));
  }
  return Partition::from_labels(labels);
}

Partition tilde_congruence(const MatrixSemiring& m, const Partition& rho) {
  const auto& s = m.base();
  if (rho.size() != s.size() || !is_congruence(s, rho)) {
    throw InputError("relation is not a congruence on " + s.name());
  }
  const auto& big = m.semiring();
  const std::size_t radix = rho.block_count();
  std::vector<Elem> labels(big.size());
  for (Elem i = 0; i < big.size(); ++i) {
    std::size_t label = 0;
    for (const Elem entry : m.decode(i)) {
      label = label * radix + rho.block_of(entry);
    }
    labels[i] = static_cast<Elem>(label);
  }
  return Partition::from_labels(labels);
}

}  // namespace idemring
