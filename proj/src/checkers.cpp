#include "idemring/checkers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "idemring/congruence.hpp"
#include "idemring/constructions.hpp"
#include "idemring/errors.hpp"
#include "idemring/isomorphism.hpp"
#include "idemring/lattice.hpp"
#include "idemring/separation.hpp"

namespace idemring {

std::string_view to_string(ConditionId id) noexcept {
  switch (id) {
    case ConditionId::left_right_separation: return "left_right_separation";
    case ConditionId::translation_separation: return "translation_separation";
    case ConditionId::downward_directed: return "downward_directed";
    case ConditionId::si_criterion: return "si_criterion";
    case ConditionId::si_criterion_strict: return "si_criterion_strict";
    case ConditionId::two_element: return "two_element";
    case ConditionId::top_not_absorbing: return "top_not_absorbing";
    case ConditionId::si_properties: return "si_properties";
    case ConditionId::two_sided_separation: return "two_sided_separation";
  }
  return "unknown";
}

Json verdict_to_json(const ConditionVerdict& v) {
  Json j;
  j["condition_id"] = to_string(v.condition);
  j["holds"] = v.holds;
  j["witness"] = v.witness.is_null() ? Json::object() : v.witness;
  return j;
}

namespace {

void require_idempotent(const FiniteSemiring& s, std::string_view what) {
  if (const auto a = first_non_idempotent(s)) {
    throw ConditionError(std::string(what) + " needs additive idempotency; " +
                         s.label(*a) + " + " + s.label(*a) + " != " +
                         s.label(*a));
  }
}

void require_almost_integral(const FiniteSemiring& s, std::string_view what) {
  if (!classify(s).almost_integral) {
    throw ConditionError(std::string(what) + " needs an almost integral "
                         "semiring; " + s.name() + " is not");
  }
}

std::optional<Elem> least_nonzero(const FiniteSemiring& s,
                                  const NaturalOrder& order, Elem zero) {
  for (Elem e = 0; e < s.size(); ++e) {
    if (e == zero) continue;
    bool least = true;
    for (Elem x = 0; x < s.size() && least; ++x) {
      least = x == zero || order.leq(e, x);
    }
    if (least) return e;
  }
  return std::nullopt;
}

bool is_absorbing(const FiniteSemiring& s, Elem w) {
  for (Elem a = 0; a < s.size(); ++a) {
    if (s.mul(a, w) != w || s.mul(w, a) != w) return false;
  }
  return true;
}

std::optional<Elem> absorbing_element(const FiniteSemiring& s) {
  for (Elem w = 0; w < s.size(); ++w) {
    if (is_absorbing(s, w)) return w;
  }
  return std::nullopt;
}

ConditionVerdict si_criterion(const FiniteSemiring& s, bool allow_unity) {
  const auto id = allow_unity ? ConditionId::si_criterion
                              : ConditionId::si_criterion_strict;
  require_almost_integral(s, to_string(id));
  ConditionVerdict v{id, false, Json::object()};
  const auto zero = element_profile(s).zero;
  if (!zero) {
    v.witness["missing"] = "zero";
    return v;
  }
  const NaturalOrder order(s);
  const auto e = least_nonzero(s, order, *zero);
  if (!e) {
    v.witness["missing"] = "least_nonzero";
    Json minimal = Json::array();
    for (Elem a = 0; a < s.size(); ++a) {
      if (a == *zero) continue;
      bool is_min = true;
      for (Elem x = 0; x < s.size() && is_min; ++x) {
        is_min = x == *zero || !order.less(x, a);
      }
      if (is_min) minimal.push_back(s.label(a));
    }
    v.witness["minimal_nonzero"] = std::move(minimal);
    return v;
  }
  if (const auto bad = first_unseparated(s, order, *zero, allow_unity)) {
    v.witness["unseparated"] = {{"a", s.label(bad->first)},
                                {"b", s.label(bad->second)}};
    return v;
  }
  v.holds = true;
  v.witness["zero"] = s.label(*zero);
  v.witness["least_nonzero"] = s.label(*e);
  return v;
}

}  // namespace

ConditionVerdict check_left_right_separation(const FiniteSemiring& s) {
  ConditionVerdict v{ConditionId::left_right_separation, true, Json::object()};
  const auto k = static_cast<Elem>(s.size());
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = a + 1; b < k; ++b) {
      bool left = false, right = false;
      for (Elem c = 0; c < k && !left; ++c) left = s.mul(c, a) != s.mul(c, b);
      for (Elem d = 0; d < k && !right; ++d) right = s.mul(a, d) != s.mul(b, d);
      if (!left || !right) {
        v.holds = false;
        v.witness = {{"a", s.label(a)},
                     {"b", s.label(b)},
                     {"side", left ? "right" : "left"}};
        return v;
      }
    }
  }
  return v;
}

ConditionVerdict check_translation_separation(const FiniteSemiring& s) {
  require_idempotent(s, "translation_separation");
  ConditionVerdict v{ConditionId::translation_separation, true,
                     Json::object()};
  const auto k = static_cast<Elem>(s.size());
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = 0; b < k; ++b) {
      if (a == b) continue;
      for (Elem e = 0; e < k; ++e) {
        bool left = false, right = false;
        for (Elem c = 0; c < k && !left; ++c) {
          for (Elem f = 0; f < k && !left; ++f) {
            const Elem fe = s.mul(f, e);
            left = s.add(s.mul(c, a), fe) != s.add(s.mul(c, b), fe);
          }
        }
        for (Elem d = 0; d < k && !right; ++d) {
          for (Elem g = 0; g < k && !right; ++g) {
            const Elem eg = s.mul(e, g);
            right = s.add(s.mul(a, d), eg) != s.add(s.mul(b, d), eg);
          }
        }
        if (!left || !right) {
          v.holds = false;
          v.witness = {{"a", s.label(a)},
                       {"b", s.label(b)},
                       {"e", s.label(e)},
                       {"side", left ? "right" : "left"}};
          return v;
        }
      }
    }
  }
  return v;
}

ConditionVerdict check_downward_directed(const FiniteSemiring& s) {
  require_idempotent(s, "downward_directed");
  const NaturalOrder order(s);
  ConditionVerdict v{ConditionId::downward_directed, true, Json::object()};
  const auto k = static_cast<Elem>(s.size());
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = a + 1; b < k; ++b) {
      bool bounded = false;
      for (Elem c = 0; c < k && !bounded; ++c) {
        bounded = order.leq(c, a) && order.leq(c, b);
      }
      if (!bounded) {
        v.holds = false;
        v.witness = {{"a", s.label(a)}, {"b", s.label(b)}};
        return v;
      }
    }
  }
  return v;
}

ConditionVerdict check_si_criterion(const FiniteSemiring& s) {
  return si_criterion(s, true);
}

ConditionVerdict check_si_criterion_strict(const FiniteSemiring& s) {
  return si_criterion(s, false);
}

ConditionVerdict check_two_element(const FiniteSemiring& s) {
  if (s.size() != 2) {
    throw ConditionError("two_element needs exactly 2 elements, " + s.name() +
                         " has " + std::to_string(s.size()));
  }
  require_idempotent(s, "two_element");
  ConditionVerdict v{ConditionId::two_element, false, Json::object()};
  const auto order = NaturalOrder(s);
  const Elem a = order.leq(0, 1) ? 0 : 1;  // a < b
  const Elem b = 1 - a;
  if (const auto w = element_profile(s).bi_absorbing) {
    v.witness = {{"violation", "bi_absorbing"}, {"element", s.label(*w)}};
  } else if (s.mul(b, b) != b) {
    v.witness = {{"violation", "single_product"}, {"product", s.label(a)}};
  } else if (s.mul(a, b) == b && s.mul(b, a) == a) {
    v.witness = {{"violation", "left_products_equal"}};
  } else if (s.mul(a, b) == a && s.mul(b, a) == b) {
    v.witness = {{"violation", "right_products_equal"}};
  } else {
    v.holds = true;
    v.witness = {{"bottom", s.label(a)}, {"top", s.label(b)}};
  }
  return v;
}

ConditionVerdict check_top_not_absorbing(const FiniteSemiring& s) {
  require_idempotent(s, "top_not_absorbing");
  const auto top = NaturalOrder(s).greatest();
  if (!top) {
    throw ConditionError("top_not_absorbing: " + s.name() +
                         " has no greatest element");
  }
  const auto flags = element_profile(s).flags[*top];
  ConditionVerdict v{ConditionId::top_not_absorbing, true, Json::object()};
  v.witness["greatest"] = s.label(*top);
  if (flags.is_left_mult_absorbing || flags.is_right_mult_absorbing) {
    v.holds = false;
    v.witness["absorbing"] = flags.is_left_mult_absorbing
                                 ? (flags.is_right_mult_absorbing ? "both"
                                                                  : "left")
                                 : "right";
  }
  return v;
}

ConditionVerdict check_si_properties(const FiniteSemiring& s) {
  require_almost_integral(s, "si_properties");
  if (s.size() < 3) {
    throw ConditionError("si_properties needs at least 3 elements");
  }
  if (!is_subdirectly_irreducible(s)) {
    throw ConditionError("si_properties: " + s.name() +
                         " is not subdirectly irreducible");
  }
  const auto profile = element_profile(s);
  const NaturalOrder order(s);
  const Elem zero = *profile.zero;
  const Elem e = *least_nonzero(s, order, zero);
  ConditionVerdict v{ConditionId::si_properties, false, Json::object()};
  v.witness["least_nonzero"] = s.label(e);
  Json checked = Json::array();

  if (s.mul(e, e) != zero) {
    v.witness["failed"] = "least_square_zero";
    return v;
  }
  checked.push_back("least_square_zero");
  if (classify(s).commutative) {
    const auto top = order.greatest();
    for (Elem a = 0; a < s.size(); ++a) {
      if (s.mul(a, e) != zero && a != top) {
        v.witness["failed"] = "nonannihilator_is_greatest";
        v.witness["a"] = s.label(a);
        return v;
      }
    }
    checked.push_back("nonannihilator_is_greatest");
    if (profile.unity) {
      const Elem one = *profile.unity;
      for (Elem x = 0; x < s.size(); ++x) {
        for (Elem y = 0; y < s.size(); ++y) {
          if (s.add(x, y) == one && x != one && y != one) {
            v.witness["failed"] = "unity_join_irreducible";
            v.witness["x"] = s.label(x);
            v.witness["y"] = s.label(y);
            return v;
          }
        }
      }
      checked.push_back("unity_join_irreducible");
    }
  }
  v.holds = true;
  v.witness["checked"] = std::move(checked);
  return v;
}

ConditionVerdict check_two_sided_separation(const FiniteSemiring& s) {
  ConditionVerdict v{ConditionId::two_sided_separation, true, Json::object()};
  const auto k = static_cast<Elem>(s.size());
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = a + 1; b < k; ++b) {
      bool separated = false;
      for (Elem c = 0; c < k && !separated; ++c) {
        const Elem ca = s.mul(c, a), cb = s.mul(c, b);
        for (Elem d = 0; d < k && !separated; ++d) {
          separated = s.mul(ca, d) != s.mul(cb, d);
        }
      }
      if (!separated) {
        v.holds = false;
        v.witness = {{"a", s.label(a)}, {"b", s.label(b)}};
        return v;
      }
    }
  }
  return v;
}

Multipliers mv_basic_witness(const FiniteSemiring& chain, Elem a, Elem b) {
  const auto u = static_cast<Elem>(chain.size() - 1);
  if (a > u || b > u) throw InputError("mv_basic_witness: index out of range");
  if (a <= b) {
    throw ConditionError("mv_basic_witness needs a > b, got a = " +
                         chain.label(a) + ", b = " + chain.label(b));
  }
  const Multipliers m{u - b, u};
  const Elem zero = 0;
  if (chain.mul(chain.mul(m.c, a), m.d) == zero ||
      chain.mul(chain.mul(m.c, b), m.d) != zero) {
    throw ConditionError("mv_basic_witness: c = " + chain.label(m.c) +
                         ", d = " + chain.label(m.d) +
                         " do not separate; is this a Lukasiewicz chain?");
  }
  return m;
}

TropicalWitness tropical_witness(const mpq_class& a, const mpq_class& b,
                                 const mpq_class& e, const mpq_class& fprime) {
  if (a == b) throw ConditionError("tropical_witness needs a != b");
  if (sgn(fprime) >= 0) {
    throw ConditionError("tropical_witness needs f' < 0, got " +
                         fprime.get_str());
  }
  const mpq_class c = a;
  const mpq_class bound = std::min<mpq_class>(c + a - e, c + b - e);
  // k f' <= bound  <=>  k >= bound / f'  (f' < 0)
  const mpq_class ratio = bound / fprime;
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  if (k < 1) k = 1;
  TropicalWitness w{c, mpq_class(k) * fprime};
  const auto lhs = std::max<mpq_class>(c + a, w.f + e);
  const auto rhs = std::max<mpq_class>(c + b, w.f + e);
  if (lhs == rhs) throw ConditionError("tropical_witness: internal failure");
  return w;
}

namespace {

// Subsemiring of `t` on the sorted index set `members`, if closed.
std::optional<FiniteSemiring> subsemiring(const FiniteSemiring& t,
                                          const std::vector<Elem>& members) {
  std::vector<Elem> position(t.size(), static_cast<Elem>(t.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    position[members[i]] = static_cast<Elem>(i);
  }
  const std::size_t m = members.size();
  std::vector<Elem> add(m * m), mul(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(t.label(members[i]));
    for (std::size_t j = 0; j < m; ++j) {
      const Elem x = position[t.add(members[i], members[j])];
      const Elem y = position[t.mul(members[i], members[j])];
      if (x == t.size() || y == t.size()) return std::nullopt;
      add[i * m + j] = x;
      mul[i * m + j] = y;
    }
  }
  return FiniteSemiring(t.name() + "/sub", std::move(labels),
                        OpTable(m, std::move(add)), OpTable(m, std::move(mul)));
}

}  // namespace

bool end0_representable(const FiniteSemiring& s) {
  // X(L) holds the |L| maps x -> (x == 0 ? 0 : b), so |L| <= |S|.
  const std::size_t max_lattice = std::min<std::size_t>(s.size(), 5);
  for (std::size_t m = 2; m <= max_lattice; ++m) {
    for (const auto& l : lattices_of_size(m)) {
      const auto end0 = gen_end0(l);
      const auto xl = gen_xl(l);
      if (xl.size() > s.size() || end0.size() < s.size()) continue;
      std::vector<Elem> rest;
      for (Elem f = 0; f < end0.size(); ++f) {
        if (!std::binary_search(xl.begin(), xl.end(), f)) rest.push_back(f);
      }
      const std::size_t extra = s.size() - xl.size();
      std::vector<bool> pick(rest.size(), false);
      std::fill(pick.begin(), pick.begin() + extra, true);
      do {
        std::vector<Elem> members = xl;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (pick[i]) members.push_back(rest[i]);
        }
        std::sort(members.begin(), members.end());
        const auto r = subsemiring(end0, members);
        if (r && is_isomorphic(s, *r)) return true;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return false;
}

std::optional<std::vector<int>> lukasiewicz_factors(const FiniteSemiring& s) {
  // Factorizations of |S| into chain sizes u+1 >= 2, non-decreasing.
  std::vector<std::vector<int>> shapes;
  std::vector<int> current;
  auto split = [&](auto&& self, std::size_t rest, int least) -> void {
    if (rest == 1) {
      if (!current.empty()) shapes.push_back(current);
      return;
    }
    for (int size = least; static_cast<std::size_t>(size) <= rest; ++size) {
      if (rest % static_cast<std::size_t>(size) != 0) continue;
      current.push_back(size - 1);
      self(self, rest / static_cast<std::size_t>(size), size);
      current.pop_back();
    }
  };
  split(split, s.size(), 2);
  for (const auto& shape : shapes) {
    auto product = gen_lukasiewicz(shape.front());
    for (std::size_t i = 1; i < shape.size(); ++i) {
      product = direct_product(product, gen_lukasiewicz(shape[i]));
    }
    if (is_isomorphic(s, product)) return shape;
  }
  return std::nullopt;
}

std::vector<std::string> CrossCheckReport::discrepancies() const {
  std::vector<std::string> out;
  for (const auto& a : agreements) {
    if (a.asserted && !a.holds) out.push_back(a.id);
  }
  return out;
}

namespace {

Json sides(bool lhs, bool rhs) { return {{"lhs", lhs}, {"rhs", rhs}}; }

}  // namespace

CrossCheckReport crosscheck(const FiniteSemiring& s, std::size_t n,
                            std::size_t threshold) {
  if (n < 2) throw InputError("crosscheck needs n >= 2, got " +
                              std::to_string(n));
  if (s.size() < 2) {
    throw DegenerateError("crosscheck is undefined for the one-element "
                          "semiring '" + s.name() + "'");
  }
  const auto m = matrix_semiring(s, n, MatrixMode::materialized, threshold);

  CrossCheckReport r{s, n, false, false, false, false, std::nullopt, {}, {}};
  const auto mono = monolith(s);
  r.si = mono.has_value();
  r.simple = r.si && mono->partition.is_full();
  if (mono) r.monolith = mono->partition;
  const auto big_mono = monolith(m.semiring());
  r.matrix_si = big_mono.has_value();
  r.matrix_simple = r.matrix_si && big_mono->partition.is_full();

  const auto flags = classify(s);
  const auto profile = element_profile(s);
  const bool idem = flags.additively_idempotent;
  const bool no_bi = !profile.bi_absorbing;
  const bool ss2 = flags.ss_size >= 2;
  auto add = [&](std::string id, bool holds, Json detail,
                 bool asserted = true) {
    r.agreements.push_back({std::move(id), asserted, holds, std::move(detail)});
  };
  auto verdict = [&](ConditionVerdict v) {
    const bool holds = v.holds;
    r.verdicts.push_back(std::move(v));
    return holds;
  };

  const bool lr_sep = verdict(check_left_right_separation(s));

  {
    const bool rhs = r.simple && no_bi && ss2;
    add("matrix_simple_necessary", !r.matrix_simple || rhs,
        sides(r.matrix_simple, rhs));
  }
  add("matrix_simple_separation", !r.matrix_simple || lr_sep,
      sides(r.matrix_simple, lr_sep));
  {
    const bool rhs = r.si && no_bi && ss2;
    add("matrix_si_necessary", !r.matrix_si || rhs, sides(r.matrix_si, rhs));
  }
  if (r.simple && ss2) {
    bool mul_idem = true;
    for (Elem a = 0; a < s.size(); ++a) mul_idem &= s.mul(a, a) == a;
    const bool small_case =
        s.size() == 2 && mul_idem && idem && !absorbing_element(s);
    add("simple_separation_dichotomy", small_case || lr_sep,
        sides(small_case, lr_sep));
  }
  if (const auto w = absorbing_element(s)) {
    const bool rhs = r.simple && no_bi && ss2;
    Json detail = sides(r.matrix_simple, rhs);
    bool holds = r.matrix_simple == rhs;
    if (r.matrix_simple) {
      holds = holds && profile.zero == w;
      detail["absorbing_is_zero"] = profile.zero == w;
    }
    add("absorbing_matrix_simplicity", holds, std::move(detail));
  }

  if (idem) {
    const bool p71 = verdict(check_translation_separation(s));
    const bool directed = verdict(check_downward_directed(s));
    const auto top = NaturalOrder(s).greatest();

    add("matrix_simple_translation_separation", !r.matrix_simple || p71,
        sides(r.matrix_simple, p71));
    if (top) {
      const bool top_ok = verdict(check_top_not_absorbing(s));
      add("matrix_simple_top_not_absorbing", !r.matrix_simple || top_ok,
          sides(r.matrix_simple, top_ok));
    }
    {
      const bool rhs = r.simple && p71;
      add("directed_matrix_simplicity", r.matrix_simple == rhs,
          sides(r.matrix_simple, rhs), directed);
    }
    if (p71) {
      add("separating_matrix_si", r.matrix_si == r.si,
          sides(r.matrix_si, r.si));
    }
    if (profile.zero && profile.unity) {
      add("zero_unity_matrix_si", r.matrix_si == r.si,
          sides(r.matrix_si, r.si));
    }
    const bool is_l2 = is_isomorphic(s, gen_l2());
    if (flags.commutative) {
      // Finite subsemirings of R(max,+) meeting both signs do not exist, so
      // the classification leaves only L2.
      const bool mid = r.simple && flags.ss_size != 1 && no_bi;
      Json detail = sides(r.matrix_simple, mid);
      detail["isomorphic_to_l2"] = is_l2;
      add("commutative_matrix_simplicity",
          r.matrix_simple == mid && mid == is_l2, std::move(detail));
    }
    if (s.size() == 2) {
      const bool lattice = verdict(check_two_element(s));
      add("two_element_matrix_simplicity", !r.matrix_simple || lattice,
          sides(r.matrix_simple, lattice));
    }
    {
      const bool representable = end0_representable(s);
      add("endomorphism_matrix_simplicity", r.matrix_simple == representable,
          sides(r.matrix_simple, representable));
    }

    if (flags.almost_integral) {
      const bool crit = verdict(check_si_criterion(s));
      const bool strict = verdict(check_si_criterion_strict(s));
      const bool two_sided = verdict(check_two_sided_separation(s));
      {
        const bool mid = r.simple && ss2;
        Json detail = sides(r.matrix_simple, mid);
        detail["isomorphic_to_l2"] = is_l2;
        const bool size_ok = !r.simple || s.size() == 2;
        detail["simple_has_two_elements"] = size_ok;
        add("almost_integral_matrix_simplicity",
            r.matrix_simple == mid && mid == is_l2 && size_ok,
            std::move(detail));
      }
      {
        const bool mid = r.si && two_sided;
        Json detail = sides(r.matrix_si, mid);
        detail["strict_criterion"] = strict;
        add("almost_integral_matrix_si", r.matrix_si == mid && mid == strict,
            std::move(detail));
      }
      {
        Json detail = sides(r.si, crit);
        bool holds = r.si == crit;
        if (r.si) {
          // The monolith pairs 0 with the least non-zero element only.
          const Elem zero = *profile.zero;
          const auto e = least_nonzero(s, NaturalOrder(s), zero);
          bool form = e.has_value() &&
                      mono->partition.block_count() == s.size() - 1 &&
                      mono->partition.related(zero, *e);
          detail["monolith_form"] = form;
          holds = holds && form;
        }
        add("almost_integral_si", holds, std::move(detail));
      }
      if (!profile.unity) {
        const bool extended = is_subdirectly_irreducible(adjoin_unity(s));
        add("unity_extension_si", r.si == extended, sides(r.si, extended));
      }
      if (r.si && s.size() >= 3) {
        const bool ok = verdict(check_si_properties(s));
        add("si_properties", ok, sides(true, ok));
      }
    }

    if (lukasiewicz_factors(s)) {
      const NaturalOrder order(s);
      const bool has_e =
          profile.zero && least_nonzero(s, order, *profile.zero).has_value();
      add("mv_matrix_si", r.matrix_si == has_e, sides(r.matrix_si, has_e));
      add("mv_matrix_simple", r.matrix_simple == (s.size() == 2),
          sides(r.matrix_simple, s.size() == 2));
      bool total = true;
      for (Elem a = 0; a < s.size(); ++a) {
        for (Elem b = 0; b < s.size(); ++b) {
          total &= order.leq(a, b) || order.leq(b, a);
        }
      }
      add("mv_si_total", !r.si || total, sides(r.si, total));
    }
  }
  return r;
}

Json report_to_json(const CrossCheckReport& r) {
  Json j;
  j["semiring"] = r.semiring.name();
  j["size"] = r.semiring.size();
  j["n"] = r.n;
  j["simple"] = r.simple;
  j["si"] = r.si;
  j["monolith"] = r.monolith ? partition_to_json(r.semiring, *r.monolith)
                             : Json(nullptr);
  j["matrix_simple"] = r.matrix_simple;
  j["matrix_si"] = r.matrix_si;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  j["verdicts"] = std::move(verdicts);
  Json agreements = Json::array();
  for (const auto& a : r.agreements) {
    Json x;
    x["id"] = a.id;
    x["asserted"] = a.asserted;
    x["holds"] = a.holds;
    x["detail"] = a.detail;
    agreements.push_back(std::move(x));
  }
  j["agreements"] = std::move(agreements);
  const auto bad = r.discrepancies();
  j["discrepancies"] = bad;
  if (!bad.empty()) j["counterexample"] = semiring_to_json(r.semiring);
  return j;
}

Json probe_hat_monolith(const FiniteSemiring& s, std::size_t n,
                        std::size_t threshold) {
  const auto m = matrix_semiring(s, n, MatrixMode::materialized, threshold);
  const auto small = monolith(s);
  const auto big = monolith(m.semiring());
  Json j;
  j["semiring"] = s.name();
  j["n"] = n;
  j["monolith"] = small ? partition_to_json(s, small->partition) : Json(nullptr);
  j["matrix_si"] = big.has_value();
  if (!big) {
    j["hat_of_matrix_monolith"] = nullptr;
    j["equal"] = nullptr;
    return j;
  }
  const auto hat = hat_congruence(m, big->partition);
  j["hat_of_matrix_monolith"] = partition_to_json(s, hat);
  j["equal"] = small ? Json(small->partition == hat) : Json(nullptr);
  return j;
}

namespace {

std::vector<std::vector<Elem>> permutations(std::size_t k) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> p(k);
  std::iota(p.begin(), p.end(), Elem{0});
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// The table with element x renamed to perm[x].
std::vector<Elem> relabel(std::span<const Elem> cells, std::size_t k,
                          const std::vector<Elem>& perm) {
  std::vector<Elem> out(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      out[perm[x] * k + perm[y]] = perm[cells[x * k + y]];
    }
  }
  return out;
}

// Fills a multiplication table cell by cell in row-major order, pruning on
// every associativity and distributivity instance whose cells are known.
class MulSearch {
 public:
  MulSearch(const OpTable& add, std::vector<std::vector<Elem>> automorphisms)
      : add_(add), k_(add.size()), cells_(k_ * k_), autos_(std::move(automorphisms)) {}

  std::vector<std::vector<Elem>> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  bool known(std::size_t x, std::size_t y, std::size_t filled) const {
    return x * k_ + y < filled;
  }

  // All instances decidable with the first `filled` cells hold.
  bool consistent(std::size_t filled) const {
    auto m = [&](std::size_t x, std::size_t y) { return cells_[x * k_ + y]; };
    for (std::size_t x = 0; x < k_; ++x) {
      for (std::size_t y = 0; y < k_; ++y) {
        if (known(x, y, filled)) {
          const std::size_t xy = m(x, y);
          for (std::size_t z = 0; z < k_; ++z) {
            if (known(xy, z, filled) && known(y, z, filled)) {
              const std::size_t yz = m(y, z);
              if (known(x, yz, filled) && m(xy, z) != m(x, yz)) return false;
            }
          }
        }
        for (std::size_t z = 0; z < k_; ++z) {
          const std::size_t yz = add_(static_cast<Elem>(y), static_cast<Elem>(z));
          if (known(x, yz, filled) && known(x, y, filled) &&
              known(x, z, filled) &&
              m(x, yz) != add_(m(x, y), m(x, z))) {
            return false;
          }
          if (known(yz, x, filled) && known(y, x, filled) &&
              known(z, x, filled) &&
              m(yz, x) != add_(m(y, x), m(z, x))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void fill(std::size_t filled) {
    if (filled == cells_.size()) {
      std::vector<Elem> best = cells_;
      for (const auto& p : autos_) best = std::min(best, relabel(cells_, k_, p));
      if (seen_.insert(best).second) found_.push_back(cells_);
      return;
    }
    for (Elem v = 0; v < k_; ++v) {
      cells_[filled] = v;
      if (consistent(filled + 1)) fill(filled + 1);
    }
  }

  const OpTable& add_;
  std::size_t k_;
  std::vector<Elem> cells_;
  std::vector<std::vector<Elem>> autos_;
  std::set<std::vector<Elem>> seen_;
  std::vector<std::vector<Elem>> found_;
};

}  // namespace

std::vector<OpTable> semilattices(std::size_t k) {
  if (k < 1 || k > 4) {
    throw SizeError("semilattice enumeration supports 1..4 elements, got " +
                    std::to_string(k));
  }
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) free.emplace_back(i, j);
  }
  const auto perms = permutations(k);
  std::set<std::vector<Elem>> seen;
  std::vector<OpTable> out;
  std::vector<Elem> cells(k * k);
  std::vector<Elem> digits(free.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) cells[i * k + i] = static_cast<Elem>(i);
    for (std::size_t p = 0; p < free.size(); ++p) {
      const auto [i, j] = free[p];
      cells[i * k + j] = cells[j * k + i] = digits[p];
    }
    bool assoc = true;
    for (std::size_t x = 0; x < k && assoc; ++x) {
      for (std::size_t y = 0; y < k && assoc; ++y) {
        for (std::size_t z = 0; z < k && assoc; ++z) {
          assoc = cells[cells[x * k + y] * k + z] ==
                  cells[x * k + cells[y * k + z]];
        }
      }
    }
    if (assoc) {
      std::vector<Elem> best = cells;
      for (const auto& p : perms) best = std::min(best, relabel(cells, k, p));
      if (seen.insert(best).second) out.emplace_back(k, cells);
    }
    std::size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] + 1 == k) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

std::vector<FiniteSemiring> enumerate_small(std::size_t max_size) {
  if (max_size < 1 || max_size > 4) {
    throw SizeError("enumeration supports sizes 1..4, got " +
                    std::to_string(max_size));
  }
  std::vector<FiniteSemiring> out;
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    const auto perms = permutations(k);
    std::size_t count = 0;
    for (const auto& add : semilattices(k)) {
      std::vector<std::vector<Elem>> autos;
      for (const auto& p : perms) {
        if (relabel(add.cells(), k, p) ==
            std::vector<Elem>(add.cells().begin(), add.cells().end())) {
          autos.push_back(p);
        }
      }
      for (auto& mul : MulSearch(add, std::move(autos)).run()) {
        out.emplace_back("S" + std::to_string(k) + "." + std::to_string(++count),
                         labels, add, OpTable(k, std::move(mul)));
      }
    }
  }
  return out;
}

}  // namespace idemring
