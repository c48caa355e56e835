#include "idemring/matrix.hpp"

#include <limits>
#include <string>

#include "idemring/errors.hpp"

namespace idemring {
namespace {

std::optional<std::size_t> checked_power(std::size_t base, std::size_t exp) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base) {
      return std::nullopt;
    }
    result *= base;
  }
  return result;
}

std::string describe(const FiniteSemiring& s, Elem a, Elem b, Elem e) {
  return "(a,b,e) = (" + s.label(a) + "," + s.label(b) + "," + s.label(e) +
         ")";
}

}  // namespace

MatrixSemiring::MatrixSemiring(FiniteSemiring base, std::size_t n,
                               MatrixMode mode, std::size_t threshold)
    : base_(std::move(base)),
      n_(n),
      mode_(mode),
      count_(checked_power(base_.size(), n * n)) {
  if (n_ == 0) throw InputError("matrix dimension must be at least 1");
  if (mode_ == MatrixMode::materialized) {
    if (!count_ || *count_ > threshold) {
      throw SizeError("M_" + std::to_string(n_) + "(" + base_.name() +
                      ") has " + std::to_string(base_.size()) + "^" +
                      std::to_string(n_ * n_) +
                      " elements, above the materialization bound of " +
                      std::to_string(threshold));
    }
    materialize();
  }
}

void MatrixSemiring::check_shape(const Matrix& x) const {
  if (x.size() != n_ * n_) {
    throw InputError("matrix has " + std::to_string(x.size()) +
                     " entries, expected " + std::to_string(n_ * n_));
  }
  for (const Elem v : x) {
    if (v >= base_.size()) {
      throw InputError("matrix entry " + std::to_string(v) +
                       " is not an element of " + base_.name());
    }
  }
}

Matrix MatrixSemiring::add(const Matrix& x, const Matrix& y) const {
  Matrix out(n_ * n_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = base_.add(x[i], y[i]);
  return out;
}

Matrix MatrixSemiring::mul(const Matrix& x, const Matrix& y) const {
  Matrix out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      Elem acc = base_.mul(x[i * n_], y[j]);
      for (std::size_t k = 1; k < n_; ++k) {
        acc = base_.add(acc, base_.mul(x[i * n_ + k], y[k * n_ + j]));
      }
      out[i * n_ + j] = acc;
    }
  }
  return out;
}

Matrix MatrixSemiring::constant(Elem a) const { return Matrix(n_ * n_, a); }

std::optional<Elem> MatrixSemiring::constant_value(const Matrix& x) const {
  for (const Elem v : x) {
    if (v != x.front()) return std::nullopt;
  }
  return x.front();
}

Elem MatrixSemiring::encode(const Matrix& x) const {
  if (!count_ || *count_ > std::numeric_limits<Elem>::max()) {
    throw SizeError("M_" + std::to_string(n_) + "(" + base_.name() +
                    ") is too large to index");
  }
  const std::size_t k = base_.size();
  std::size_t index = 0;
  for (const Elem v : x) index = index * k + v;
  return static_cast<Elem>(index);
}

Matrix MatrixSemiring::decode(Elem index) const {
  const std::size_t k = base_.size();
  Matrix out(n_ * n_);
  std::size_t rest = index;
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(rest % k);
    rest /= k;
  }
  return out;
}

std::string MatrixSemiring::label(const Matrix& x) const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i == 0 ? "[" : ",[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != 0) out += ",";
      out += base_.label(x[i * n_ + j]);
    }
    out += "]";
  }
  return out + "]";
}

const FiniteSemiring& MatrixSemiring::semiring() const {
  if (!materialized_) {
    throw ConditionError("M_" + std::to_string(n_) + "(" + base_.name() +
                         ") is lazy; congruence analysis needs it materialized");
  }
  return *materialized_;
}

void MatrixSemiring::materialize() {
  const std::size_t k = *count_;
  std::vector<Matrix> all(k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    all[i] = decode(static_cast<Elem>(i));
    labels[i] = label(all[i]);
  }
  std::vector<Elem> add_cells(k * k), mul_cells(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      add_cells[i * k + j] = encode(add(all[i], all[j]));
      mul_cells[i * k + j] = encode(mul(all[i], all[j]));
    }
  }
  materialized_.emplace("M" + std::to_string(n_) + "(" + base_.name() + ")",
                        std::move(labels), OpTable(k, std::move(add_cells)),
                        OpTable(k, std::move(mul_cells)));
}

MatrixSemiring matrix_semiring(const FiniteSemiring& s, std::size_t n,
                               MatrixMode mode, std::size_t threshold) {
  return MatrixSemiring(s, n, mode, threshold);
}

Matrix const_embed(const FiniteSemiring& s, std::size_t n, Elem a) {
  if (a >= s.size()) {
    throw InputError("element " + std::to_string(a) + " is not in " + s.name());
  }
  return Matrix(n * n, a);
}

std::string_view to_string(StepKind kind) noexcept {
  switch (kind) {
    case StepKind::add: return "add";
    case StepKind::left_multiply: return "left";
    case StepKind::right_multiply: return "right";
  }
  return "unknown";
}

std::pair<Matrix, Matrix> WitnessChain::replay(const MatrixSemiring& m,
                                               Matrix a, Matrix b) const {
  for (const auto& step : steps) {
    switch (step.kind) {
      case StepKind::add:
        a = m.add(a, step.operand);
        b = m.add(b, step.operand);
        break;
      case StepKind::left_multiply:
        a = m.mul(step.operand, a);
        b = m.mul(step.operand, b);
        break;
      case StepKind::right_multiply:
        a = m.mul(a, step.operand);
        b = m.mul(b, step.operand);
        break;
    }
  }
  return {std::move(a), std::move(b)};
}

ConstantPair extract_constant_pair(const FiniteSemiring& s, std::size_t n,
                                   const Matrix& a, const Matrix& b) {
  (void)natural_order(s);  // rejects non-idempotent bases
  const MatrixSemiring m(s, n, MatrixMode::lazy);
  m.check_shape(a);
  m.check_shape(b);
  if (a == b) {
    throw InputError("extract_constant_pair needs two distinct matrices");
  }
  const auto ca = m.constant_value(a);
  const auto cb = m.constant_value(b);
  if (ca && cb) return {*ca, *cb, {}};

  const auto k = static_cast<Elem>(s.size());
  std::size_t pivot = 0;
  while (a[pivot] == b[pivot]) ++pivot;
  const std::size_t pivot_row = pivot / n;
  const std::size_t pivot_col = pivot % n;

  WitnessChain chain;

  // Isolate the pivot entry: every other entry becomes the same absorbing
  // value, while the pivot entries stay distinct.
  std::optional<Elem> absorbing;
  for (Elem x = 0; x < k && !absorbing; ++x) {
    bool ok = true;
    for (std::size_t q = 0; q < a.size() && ok; ++q) {
      if (q == pivot) continue;
      ok = s.add(a[q], x) == x && s.add(b[q], x) == x;
    }
    if (ok) absorbing = x;
  }
  std::optional<Elem> separator;
  for (Elem x = 0; x < k && !separator; ++x) {
    if (s.add(a[pivot], x) != s.add(b[pivot], x)) separator = x;
  }
  if (!absorbing || !separator) {
    throw ConditionError("no isolating summand for the entries " +
                         s.label(a[pivot]) + " and " + s.label(b[pivot]));
  }
  Matrix isolate(n * n, *absorbing);
  isolate[pivot] = *separator;
  chain.steps.push_back({StepKind::add, isolate});
  auto [a1, b1] = WitnessChain{{chain.steps.back()}}.replay(m, a, b);

  // Spread the pivot into a whole column by multiplying from the left.
  {
    const Elem x = a1[pivot], y = b1[pivot], e = *absorbing;
    std::optional<std::pair<Elem, Elem>> cf;
    for (Elem c = 0; c < k && !cf; ++c) {
      for (Elem f = 0; f < k && !cf; ++f) {
        const Elem fe = s.mul(f, e);
        if (s.add(s.mul(c, x), fe) != s.add(s.mul(c, y), fe)) cf = {c, f};
      }
    }
    if (!cf) {
      throw ConditionError("no c, f with ca+fe != cb+fe for " +
                           describe(s, x, y, e));
    }
    Matrix left(n * n, cf->second);
    for (std::size_t i = 0; i < n; ++i) left[i * n + pivot_row] = cf->first;
    chain.steps.push_back({StepKind::left_multiply, std::move(left)});
  }
  auto [a2, b2] = WitnessChain{{chain.steps.back()}}.replay(m, a1, b1);

  // Collapse the column into a constant by multiplying from the right.
  {
    const Elem x = a2[pivot_col], y = b2[pivot_col];
    const Elem e = n > 1 ? a2[pivot_col == 0 ? 1 : 0] : a2[0];
    std::optional<std::pair<Elem, Elem>> dg;
    for (Elem d = 0; d < k && !dg; ++d) {
      for (Elem g = 0; g < k && !dg; ++g) {
        const Elem eg = s.mul(e, g);
        if (s.add(s.mul(x, d), eg) != s.add(s.mul(y, d), eg)) dg = {d, g};
      }
    }
    if (!dg) {
      throw ConditionError("no d, g with ad+eg != bd+eg for " +
                           describe(s, x, y, e));
    }
    Matrix right(n * n, dg->second);
    for (std::size_t j = 0; j < n; ++j) right[pivot_col * n + j] = dg->first;
    chain.steps.push_back({StepKind::right_multiply, std::move(right)});
  }
  auto [a3, b3] = WitnessChain{{chain.steps.back()}}.replay(m, a2, b2);

  const auto first = m.constant_value(a3);
  const auto second = m.constant_value(b3);
  if (!first || !second || *first == *second) {
    throw ConditionError("constant-pair extraction did not reach two distinct "
                         "constant matrices");
  }
  return {*first, *second, std::move(chain)};
}

}  // namespace idemring
