#include <vector>

#include "doctest.h"
#include "idemring/congruence.hpp"
#include "idemring/constructions.hpp"
#include "idemring/errors.hpp"
#include "idemring/isomorphism.hpp"
#include "idemring/matrix.hpp"

using namespace idemring;

TEST_SUITE("matrix") {

TEST_CASE("sizes and materialization bound") {
  CHECK(matrix_semiring(gen_l2(), 2).semiring().size() == 16);
  CHECK(matrix_semiring(gen_lukasiewicz(2), 2).semiring().size() == 81);
  CHECK(is_isomorphic(matrix_semiring(gen_lukasiewicz(2), 1).semiring(),
                      gen_lukasiewicz(2)));
  CHECK_THROWS_AS((void)matrix_semiring(gen_boolean(2), 3), SizeError);
  CHECK_NOTHROW((void)matrix_semiring(gen_boolean(2), 3, MatrixMode::lazy));
  CHECK_THROWS_AS((void)matrix_semiring(gen_l2(), 0), InputError);
  CHECK(matrix_semiring(gen_l2(), 3, MatrixMode::materialized, 512)
            .semiring()
            .size() == 512);
}

TEST_CASE("materialized tables are entrywise operations") {
  const auto m = matrix_semiring(gen_lukasiewicz(2), 2);
  const auto& s = m.semiring();
  CHECK(verify_axioms(s).pass());
  CHECK(is_additively_idempotent(s));
  for (Elem x = 0; x < s.size(); x += 7)
    for (Elem y = 0; y < s.size(); y += 5) {
      CHECK(m.decode(s.add(x, y)) == m.add(m.decode(x), m.decode(y)));
      CHECK(m.decode(s.mul(x, y)) == m.mul(m.decode(x), m.decode(y)));
    }
  for (Elem x = 0; x < s.size(); ++x) CHECK(m.encode(m.decode(x)) == x);
}

TEST_CASE("constant embedding") {
  const auto l2 = matrix_semiring(gen_l2(), 2, MatrixMode::lazy);
  const auto one = const_embed(gen_l2(), 2, 1);
  CHECK(l2.mul(one, one) == one);

  const auto luk = gen_lukasiewicz(2);
  const auto m = matrix_semiring(luk, 2, MatrixMode::lazy);
  const auto e = const_embed(luk, 2, 1);
  CHECK(m.mul(e, e) == const_embed(luk, 2, 0));
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      CHECK(m.add(m.constant(a), m.constant(b)) == m.constant(luk.add(a, b)));
      CHECK(m.mul(m.constant(a), m.constant(b)) == m.constant(luk.mul(a, b)));
    }

  const auto zero = m.constant(0);
  for (const Matrix& x : {m.constant(2), Matrix{0, 1, 2, 1}}) {
    CHECK(m.mul(zero, x) == zero);
    CHECK(m.add(zero, x) == x);
  }
  CHECK(m.constant_value(Matrix{1, 1, 1, 1}) == Elem{1});
  CHECK_FALSE(m.constant_value(Matrix{1, 1, 1, 0}).has_value());
  CHECK(m.label(Matrix{0, 1, 2, 1}) == "[[0,1],[2,1]]");
}

TEST_CASE("constant pair extraction") {
  SUBCASE("L2 from a single differing entry") {
    const auto l2 = gen_l2();
    const auto m = matrix_semiring(l2, 2);
    const Matrix a{0, 0, 0, 0}, b{1, 0, 0, 0};
    const auto got = extract_constant_pair(l2, 2, a, b);
    CHECK(got.first != got.second);
    CHECK(got.chain.steps.size() == 3);
    const auto [x, y] = got.chain.replay(m, a, b);
    CHECK(x == m.constant(got.first));
    CHECK(y == m.constant(got.second));
    const auto p = principal_congruence(m.semiring(), m.encode(a), m.encode(b));
    CHECK(p.related(m.encode(x), m.encode(y)));
  }
  SUBCASE("already constant") {
    const auto luk = gen_lukasiewicz(2);
    const auto got = extract_constant_pair(
        luk, 2, const_embed(luk, 2, 0), const_embed(luk, 2, 1));
    CHECK(got.chain.steps.empty());
    CHECK(got.first == 0);
    CHECK(got.second == 1);
  }
  SUBCASE("equal inputs are rejected") {
    const Matrix a{0, 1, 1, 0};
    CHECK_THROWS_AS((void)extract_constant_pair(gen_l2(), 2, a, a), InputError);
  }
  SUBCASE("every pair over Luk3 lands in its principal congruence") {
    const auto luk = gen_lukasiewicz(2);
    const auto m = matrix_semiring(luk, 2);
    const CongruenceEngine engine(m.semiring());
    for (Elem i = 0; i < 81; i += 4)
      for (Elem j = i + 1; j < 81; j += 3) {
        const auto got =
            extract_constant_pair(luk, 2, m.decode(i), m.decode(j));
        const auto p = engine.principal(i, j);
        CHECK(p.related(m.encode(m.constant(got.first)),
                        m.encode(m.constant(got.second))));
      }
  }
}

}  // TEST_SUITE
