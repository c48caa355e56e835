#include <vector>

#include "doctest.h"
#include "idemring/constructions.hpp"
#include "idemring/errors.hpp"
#include "idemring/isomorphism.hpp"
#include "idemring/semiring.hpp"

using namespace idemring;

namespace {

FiniteSemiring two_element(std::vector<Elem> mul) {
  return FiniteSemiring("T", {"0", "1"}, OpTable(2, {0, 1, 1, 1}),
                        OpTable(2, std::move(mul)));
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("axioms hold for the generated families") {
  CHECK(verify_axioms(gen_l2()).pass());
  CHECK(verify_axioms(gen_lukasiewicz(2)).pass());
  CHECK(verify_axioms(gen_boolean(3)).pass());
}

TEST_CASE("a broken distributivity instance is reported with its triple") {
  // mul = xnor on {0,1} with add = or: 0(0+1) = 0 but 00+01 = 1
  const auto s = two_element({1, 0, 0, 1});
  const auto r = verify_axioms(s);
  REQUIRE_FALSE(r.pass());
  bool found = false;
  for (const auto& f : r.failures) {
    if (f.axiom != Axiom::left_distributive) continue;
    found = true;
    CHECK(s.mul(f.a, s.add(f.b, f.c)) !=
          s.add(s.mul(f.a, f.b), s.mul(f.a, f.c)));
  }
  CHECK(found);
}

TEST_CASE("malformed tables are input errors, not failed reports") {
  const std::vector<std::vector<long long>> ragged{{0, 1}, {1}};
  const std::vector<std::vector<long long>> square{{0, 1}, {1, 1}};
  const std::vector<std::vector<long long>> out_of_range{{0, 2}, {1, 1}};
  CHECK_THROWS_AS((void)verify_axioms(ragged, square), InputError);
  CHECK_THROWS_AS((void)verify_axioms(square, out_of_range), InputError);
  CHECK_THROWS_AS(FiniteSemiring("dup", {"a", "a"}, OpTable(2, {0, 1, 1, 1}),
                                 OpTable(2, {0, 0, 0, 1})),
                  InputError);
}

TEST_CASE("element profiles") {
  SUBCASE("L2") {
    const auto p = element_profile(gen_l2());
    CHECK(p.zero == Elem{0});
    CHECK(p.unity == Elem{1});
    CHECK(p.greatest == Elem{1});
  }
  SUBCASE("Luk3 has no bi-absorbing element") {
    const auto p = element_profile(gen_lukasiewicz(2));
    CHECK(p.zero == Elem{0});
    CHECK(p.unity == Elem{2});
    CHECK(p.greatest == Elem{2});
    CHECK_FALSE(p.bi_absorbing.has_value());
  }
  SUBCASE("one element is everything") {
    const FiniteSemiring one("1", {"x"}, OpTable(1, {0}), OpTable(1, {0}));
    const auto p = element_profile(one);
    CHECK(p.zero == Elem{0});
    CHECK(p.unity == Elem{0});
    CHECK(p.bi_absorbing == Elem{0});
  }
}

TEST_CASE("natural order") {
  const auto luk = natural_order(gen_lukasiewicz(2));
  CHECK(luk.less(0, 1));
  CHECK(luk.less(1, 2));
  CHECK(luk.covers() == std::vector<std::pair<Elem, Elem>>{{0, 1}, {1, 2}});

  // diamond: {} < {1},{2} < {1,2}, atoms incomparable
  const auto b2 = natural_order(gen_boolean(2));
  CHECK_FALSE(b2.leq(1, 2));
  CHECK_FALSE(b2.leq(2, 1));
  CHECK(b2.covers().size() == 4);
  CHECK(b2.least() == Elem{0});
  CHECK(b2.greatest() == Elem{3});

  const FiniteSemiring z2("Z2", {"0", "1"}, OpTable(2, {0, 1, 1, 0}),
                          OpTable(2, {0, 0, 0, 1}));
  CHECK_THROWS_AS((void)natural_order(z2), ConditionError);
}

TEST_CASE("classification flags") {
  const auto l2 = classify(gen_l2());
  CHECK(l2.additively_idempotent);
  CHECK(l2.commutative);
  CHECK(l2.integral);
  CHECK(l2.downward_directed);
  CHECK(l2.ss_size == 2);

  const auto luk = classify(gen_lukasiewicz(2));
  CHECK(luk.integral);
  CHECK(luk.commutative);
  CHECK(luk.ss_size == 3);

  const auto ext = classify(adjoin_least(gen_boolean(2)));
  CHECK(ext.almost_integral);
  // e * top = 0, so the top of B2 is no longer a unity
  CHECK_FALSE(ext.integral);
  CHECK_FALSE(element_profile(adjoin_least(gen_boolean(2))).unity.has_value());

  // {a, b, a+b} with a, b incomparable and no lower bound
  const FiniteSemiring vee("V", {"a", "b", "t"},
                           OpTable(3, {0, 2, 2, 2, 1, 2, 2, 2, 2}),
                           OpTable(3, {2, 2, 2, 2, 2, 2, 2, 2, 2}));
  REQUIRE(verify_axioms(vee).pass());
  CHECK_FALSE(classify(vee).downward_directed);
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(gen_l2(), gen_lukasiewicz(1)));
  CHECK_FALSE(is_isomorphic(gen_l2(), two_element({0, 0, 0, 0})));
  const auto b2 = gen_boolean(2);
  const auto phi = find_isomorphism(b2, b2);
  REQUIRE(phi.has_value());
  CHECK(*phi == std::vector<Elem>{0, 1, 2, 3});
  // the atoms swap
  const auto swapped = permute(b2, {0, 2, 1, 3});
  CHECK(is_isomorphic(b2, swapped));
}

}  // TEST_SUITE
