// Invariants swept over every small semiring and over random relabelings.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "idemring/checkers.hpp"
#include "idemring/congruence.hpp"
#include "idemring/constructions.hpp"
#include "idemring/io.hpp"
#include "idemring/isomorphism.hpp"

using namespace idemring;

namespace {

const std::vector<FiniteSemiring>& corpus() {
  static const auto all = [] {
    auto v = enumerate_small(3);
    v.push_back(gen_boolean(2));
    v.push_back(gen_lukasiewicz(4));
    v.push_back(adjoin_least(gen_boolean(2)));
    v.push_back(adjoin_unity(adjoin_least(gen_boolean(2))));
    v.push_back(gen_end0(chain_lattice(3)));
    return v;
  }();
  return all;
}

std::vector<Elem> shuffled(std::size_t k, std::mt19937& rng) {
  std::vector<Elem> p(k);
  std::iota(p.begin(), p.end(), Elem{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("natural order is a partial order with joins") {
  for (const auto& s : corpus()) {
    const auto o = natural_order(s);
    const auto k = static_cast<Elem>(s.size());
    for (Elem a = 0; a < k; ++a) {
      CHECK(o.leq(a, a));
      for (Elem b = 0; b < k; ++b) {
        if (a != b) CHECK_FALSE((o.leq(a, b) && o.leq(b, a)));
        const Elem j = s.add(a, b);
        CHECK(o.leq(a, j));
        CHECK(o.leq(b, j));
        for (Elem c = 0; c < k; ++c) {
          if (o.leq(a, b) && o.leq(b, c)) CHECK(o.leq(a, c));
          if (o.leq(a, c) && o.leq(b, c)) CHECK(o.leq(j, c));
        }
      }
    }
  }
}

TEST_CASE("almost integral structure") {
  for (const auto& s : corpus()) {
    const auto c = classify(s);
    if (!c.almost_integral) continue;
    const auto o = natural_order(s);
    const auto p = element_profile(s);
    if (const auto w = o.least()) CHECK(p.zero == w);
    if (p.unity) CHECK(p.greatest == p.unity);
    CHECK(c.integral == p.unity.has_value());
  }
}

TEST_CASE("principal congruences are congruences, monotone, and contain "
          "the monolith") {
  for (const auto& s : corpus()) {
    CAPTURE(s.name());
    const auto k = static_cast<Elem>(s.size());
    if (k < 2) continue;
    const CongruenceEngine engine(s);
    std::vector<Partition> all;
    for (Elem a = 0; a < k; ++a)
      for (Elem b = a + 1; b < k; ++b) {
        const auto p = engine.principal(a, b);
        CHECK(is_congruence(s, p));
        CHECK(p.related(a, b));
        all.push_back(p);
      }
    for (Elem a = 0; a < k; ++a)
      for (Elem b = a + 1; b < k; ++b) {
        const auto p = engine.principal(a, b);
        for (Elem x = 0; x < k; ++x)
          for (Elem y = x + 1; y < k; ++y)
            if (p.related(x, y)) CHECK(engine.principal(x, y).refines(p));
      }
    const auto m = monolith(s);
    if (is_congruence_simple(s)) CHECK(m.has_value());
    if (m)
      for (const auto& p : all) CHECK(m->partition.refines(p));
    const auto c = classify(s);
    if (m && c.almost_integral) {
      const auto blocks = m->partition.blocks();
      std::size_t big = 0;
      for (const auto& b : blocks)
        if (b.size() > 1) {
          ++big;
          CHECK(b.size() == 2);
          CHECK(element_profile(s).flags[b[0]].is_zero +
                    element_profile(s).flags[b[1]].is_zero ==
                1);
        }
      CHECK(big == 1);
    }
  }
}

TEST_CASE("lambda and rho are congruences; commutative means equal") {
  for (const auto& s : corpus()) {
    const auto [l, r] = lambda_rho(s);
    CHECK(is_congruence(s, l));
    CHECK(is_congruence(s, r));
    if (classify(s).commutative) CHECK(l == r);
  }
}

TEST_CASE("verdicts survive relabeling") {
  std::mt19937 rng(20240601);
  for (const auto& s : corpus()) {
    if (s.size() < 2) continue;
    const auto t = permute(s, shuffled(s.size(), rng));
    CAPTURE(s.name());
    CHECK(verify_axioms(t).pass());
    CHECK(is_isomorphic(s, t));
    CHECK(is_congruence_simple(s) == is_congruence_simple(t));
    CHECK(is_subdirectly_irreducible(s) == is_subdirectly_irreducible(t));
    const auto cs = classify(s), ct = classify(t);
    CHECK(cs.almost_integral == ct.almost_integral);
    CHECK(cs.downward_directed == ct.downward_directed);
    CHECK(cs.ss_size == ct.ss_size);
    CHECK(check_left_right_separation(s).holds ==
          check_left_right_separation(t).holds);
    CHECK(check_translation_separation(s).holds ==
          check_translation_separation(t).holds);
    if (cs.almost_integral)
      CHECK(check_si_criterion(s).holds == check_si_criterion(t).holds);
  }
}

TEST_CASE("serialization round trip") {
  for (const auto& s : corpus()) {
    const auto text = dump(semiring_to_json(s));
    const auto back = semiring_from_json(Json::parse(text), "<round trip>");
    CHECK(back == s);
    CHECK(back.name() == s.name());
    CHECK(dump(semiring_to_json(back)) == text);
  }
}

TEST_CASE("tilde then hat contains the original congruence") {
  for (const auto& s : corpus()) {
    if (s.size() < 2 || s.size() > 4) continue;
    const auto m = matrix_semiring(s, 2);
    for (Elem b = 1; b < s.size(); ++b) {
      const auto rho = principal_congruence(s, 0, b);
      CHECK(rho.refines(hat_congruence(m, tilde_congruence(m, rho))));
    }
  }
}

}  // TEST_SUITE
