#include <utility>
#include <vector>

#include "doctest.h"
#include "idemring/checkers.hpp"
#include "idemring/congruence.hpp"
#include "idemring/constructions.hpp"
#include "idemring/errors.hpp"
#include "idemring/matrix.hpp"
#include "oracles.hpp"

using namespace idemring;

namespace {

bool same(const Partition& p, const oracle::Relation& r) {
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      if (p.related(a, b) != r[a][b]) return false;
  return true;
}

Partition blocks(std::size_t k, std::vector<std::vector<Elem>> b) {
  return Partition::from_blocks(k, b);
}

}  // namespace

TEST_SUITE("congruence") {

TEST_CASE("principal congruences on small examples") {
  const auto luk = gen_lukasiewicz(2);  // 0 < e=1 < u=2
  CHECK(principal_congruence(luk, 1, 1).is_identity());
  CHECK(principal_congruence(gen_l2(), 0, 1).is_full());
  const auto p = principal_congruence(luk, 0, 1);
  CHECK(p == blocks(3, {{0, 1}, {2}}));
  CHECK(same(p, oracle::principal(luk, 0, 1)));
}

TEST_CASE("congruence membership test") {
  const auto luk = gen_lukasiewicz(2);
  CHECK(is_congruence(luk, Partition::identity(3)));
  CHECK(is_congruence(luk, blocks(3, {{0, 1}, {2}})));
  const auto v = find_congruence_violation(luk, blocks(3, {{0, 2}, {1}}));
  REQUIRE(v.has_value());
  // the translation must actually split the related pair
  const auto image = [&](Elem x) {
    switch (v->kind) {
      case TranslationKind::add: return luk.add(x, v->c);
      case TranslationKind::left_mul: return luk.mul(v->c, x);
      case TranslationKind::right_mul: return luk.mul(x, v->c);
    }
    return x;
  };
  const auto p = blocks(3, {{0, 2}, {1}});
  CHECK(p.related(v->a, v->b));
  CHECK_FALSE(p.related(image(v->a), image(v->b)));
}

TEST_CASE("simplicity and subdirect irreducibility") {
  CHECK(is_congruence_simple(gen_l2()));
  CHECK_FALSE(is_congruence_simple(gen_lukasiewicz(2)));
  CHECK(is_congruence_simple(matrix_semiring(gen_l2(), 2).semiring()));

  const auto m = monolith(gen_lukasiewicz(2));
  REQUIRE(m.has_value());
  CHECK(m->partition == blocks(3, {{0, 1}, {2}}));
  REQUIRE(m->generating_pair.has_value());
  CHECK(principal_congruence(gen_lukasiewicz(2), m->generating_pair->first,
                             m->generating_pair->second) == m->partition);

  CHECK(monolith(gen_l2())->partition.is_full());
  CHECK_FALSE(monolith(gen_boolean(2)).has_value());
  CHECK(is_subdirectly_irreducible(adjoin_least(gen_boolean(2))));

  const FiniteSemiring one("1", {"x"}, OpTable(1, {0}), OpTable(1, {0}));
  CHECK_THROWS_AS((void)is_congruence_simple(one), DegenerateError);
  CHECK_THROWS_AS((void)monolith(one), DegenerateError);
}

TEST_CASE("lambda and rho") {
  const auto [l, r] = lambda_rho(gen_l2());
  CHECK(l.is_identity());
  CHECK(r.is_identity());

  const auto s = adjoin_least(gen_boolean(2));
  const Elem e = *s.index_of("e");
  const auto [ls, rs] = lambda_rho(s);
  CHECK(ls.related(0, e));
  CHECK(ls.block_count() == 4);
  CHECK(is_congruence(s, ls));
  CHECK(is_congruence(s, rs));
  CHECK(ls == rs);  // commutative
}

TEST_CASE("hat and tilde") {
  const auto luk = gen_lukasiewicz(2);
  const auto m = matrix_semiring(luk, 2);
  const std::size_t big = m.semiring().size();

  CHECK(hat_congruence(m, Partition::identity(big)).is_identity());
  CHECK(hat_congruence(m, Partition::full(big)).is_full());
  const auto mono = monolith(m.semiring());
  REQUIRE(mono.has_value());
  CHECK(hat_congruence(m, mono->partition).related(0, 1));

  const auto sigma = blocks(3, {{0, 1}, {2}});
  const auto lifted = tilde_congruence(m, sigma);
  CHECK_FALSE(lifted.is_identity());
  CHECK(is_congruence(m.semiring(), lifted));
  CHECK(tilde_congruence(m, Partition::identity(3)).is_identity());
  CHECK(tilde_congruence(m, Partition::full(3)).is_full());
  CHECK(sigma.refines(hat_congruence(m, lifted)));

  CHECK_THROWS_AS((void)tilde_congruence(m, blocks(3, {{0, 2}, {1}})),
                  InputError);
}

TEST_CASE("engine agrees with the relation-closure oracle") {
  for (const auto& s : enumerate_small(3)) {
    if (s.size() < 2) continue;
    const CongruenceEngine generators(s);
    const CongruenceEngine everything(s, TranslationBasis::all_elements);
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = a + 1; b < s.size(); ++b) {
        const auto p = generators.principal(a, b);
        CHECK(same(p, oracle::principal(s, a, b)));
        CHECK(p == everything.principal(a, b));
      }
    CHECK(is_congruence_simple(s) == oracle::simple(s));
    CHECK(is_subdirectly_irreducible(s) == oracle::subdirectly_irreducible(s));
    if (const auto m = monolith(s))
      CHECK(same(m->partition, oracle::monolith_candidate(s)));
  }
}

TEST_CASE("engine agrees with the oracle on M2(L2)") {
  const auto m = matrix_semiring(gen_l2(), 2);
  const auto& s = m.semiring();
  for (Elem b = 1; b < s.size(); ++b)
    CHECK(same(principal_congruence(s, 0, b), oracle::principal(s, 0, b)));
}

}  // TEST_SUITE
