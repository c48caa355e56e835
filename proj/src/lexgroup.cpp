#include "idemring/lexgroup.hpp"

#include <algorithm>
#include <set>

#include "idemring/errors.hpp"

namespace idemring {

LexGroupElement::LexGroupElement(mpq_class a, mpq_class b, std::int64_t kk)
    : alpha(std::move(a)), beta(std::move(b)), k(kk) {
  alpha.canonicalize();
  beta.canonicalize();
  if (sgn(alpha) <= 0) {
    throw ConditionError("lex group element needs alpha > 0, got " +
                         alpha.get_str());
  }
}

std::string LexGroupElement::str() const {
  return "((" + alpha.get_str() + "," + beta.get_str() + ")," +
         std::to_string(k) + ")";
}

LexGroupElement lex_unit() { return {}; }

LexGroupElement lex_mul(const LexGroupElement& x, const LexGroupElement& y) {
  return {x.alpha * y.alpha, x.alpha * y.beta + x.beta, x.k + y.k};
}

LexGroupElement lex_inv(const LexGroupElement& x) {
  return {1 / x.alpha, -x.beta / x.alpha, -x.k};
}

std::strong_ordering lex_cmp(const LexGroupElement& x,
                             const LexGroupElement& y) {
  if (const int c = cmp(x.alpha, y.alpha); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (const int c = cmp(x.beta, y.beta); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return x.k <=> y.k;
}

LexGroupElement lex_join(const LexGroupElement& x, const LexGroupElement& y) {
  return lex_cmp(x, y) < 0 ? y : x;
}

LexGroupElement lex_meet(const LexGroupElement& x, const LexGroupElement& y) {
  return lex_cmp(x, y) < 0 ? x : y;
}

LexGroupElement mv_product(const LexGroupElement& a, const LexGroupElement& b,
                           const LexGroupElement& u) {
  const auto o = lex_unit();
  if (lex_cmp(u, o) <= 0) {
    throw ConditionError("interval top " + u.str() + " is not above o");
  }
  for (const auto* x : {&a, &b}) {
    if (lex_cmp(*x, o) < 0 || lex_cmp(*x, u) > 0) {
      throw ConditionError(x->str() + " lies outside [o, " + u.str() + "]");
    }
  }
  return lex_join(lex_mul(lex_mul(a, lex_inv(u)), b), o);
}

std::vector<LexGroupElement> sample_interval(const LexGroupElement& u,
                                             int q_max, int k_max) {
  std::set<mpq_class> fractions{mpq_class(0)};
  for (int p = 1; p <= q_max; ++p) {
    for (int q = 1; q <= q_max; ++q) {
      mpq_class f(p, q);
      f.canonicalize();
      fractions.insert(f);
      fractions.insert(-f);
    }
  }
  const auto o = lex_unit();
  std::vector<LexGroupElement> out;
  for (const auto& alpha : fractions) {
    if (sgn(alpha) <= 0) continue;
    for (const auto& beta : fractions) {
      for (int k = -k_max; k <= k_max; ++k) {
        LexGroupElement x(alpha, beta, k);
        if (lex_cmp(x, o) >= 0 && lex_cmp(x, u) <= 0) out.push_back(x);
      }
    }
  }
  out.push_back(u);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return lex_cmp(x, y) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace idemring
