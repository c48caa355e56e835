#include "idemring/semiring.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "idemring/errors.hpp"

namespace idemring {

OpTable::OpTable(std::size_t k, std::vector<Elem> cells)
    : k_(k), cells_(std::move(cells)) {
  if (cells_.size() != k_ * k_) {
    throw InputError("operation table has " + std::to_string(cells_.size()) +
                     " cells, expected " + std::to_string(k_ * k_));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] >= k_) {
      throw InputError("operation table entry [" + std::to_string(i / k_) +
                       "][" + std::to_string(i % k_) + "] = " +
                       std::to_string(cells_[i]) + " is out of range");
    }
  }
}

OpTable OpTable::from_rows(std::span<const std::vector<long long>> rows,
                           std::string_view what) {
  const std::size_t k = rows.size();
  if (k == 0) {
    throw InputError(std::string(what) + " table is empty");
  }
  std::vector<Elem> cells;
  cells.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) {
      throw InputError(std::string(what) + " table row " + std::to_string(i) +
                       " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const long long v = rows[i][j];
      if (v < 0 || static_cast<unsigned long long>(v) >= k) {
        throw InputError(std::string(what) + "[" + std::to_string(i) + "][" +
                         std::to_string(j) + "] = " + std::to_string(v) +
                         " is not an element index in 0.." +
                         std::to_string(k - 1));
      }
      cells.push_back(static_cast<Elem>(v));
    }
  }
  return OpTable(k, std::move(cells));
}

std::vector<std::vector<long long>> OpTable::rows() const {
  std::vector<std::vector<long long>> out(k_, std::vector<long long>(k_));
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) out[i][j] = cells_[i * k_ + j];
  }
  return out;
}

FiniteSemiring::FiniteSemiring(std::string name,
                               std::vector<std::string> labels, OpTable add,
                               OpTable mul)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      add_(std::move(add)),
      mul_(std::move(mul)) {
  if (labels_.empty()) throw InputError("semiring has no elements");
  if (add_.size() != labels_.size() || mul_.size() != labels_.size()) {
    throw InputError("semiring '" + name_ + "' has " +
                     std::to_string(labels_.size()) +
                     " elements but tables of dimension " +
                     std::to_string(add_.size()) + " (add) and " +
                     std::to_string(mul_.size()) + " (mul)");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw InputError("semiring '" + name_ + "' has duplicate label '" + l +
                       "'");
    }
  }
}

std::optional<Elem> FiniteSemiring::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::add_associative: return "add_associative";
    case Axiom::add_commutative: return "add_commutative";
    case Axiom::mul_associative: return "mul_associative";
    case Axiom::left_distributive: return "left_distributive";
    case Axiom::right_distributive: return "right_distributive";
  }
  return "unknown";
}

AxiomReport verify_axioms(const FiniteSemiring& s) {
  const auto k = static_cast<Elem>(s.size());
  AxiomReport report;

  [&] {
    for (Elem a = 0; a < k; ++a) {
      for (Elem b = a + 1; b < k; ++b) {
        if (s.add(a, b) != s.add(b, a)) {
          report.failures.push_back({Axiom::add_commutative, a, b, 0});
          return;
        }
      }
    }
  }();

  bool add_assoc = true, mul_assoc = true, left = true, right = true;
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = 0; b < k; ++b) {
      const Elem ab_sum = s.add(a, b);
      const Elem ab_prod = s.mul(a, b);
      for (Elem c = 0; c < k; ++c) {
        if (add_assoc && s.add(ab_sum, c) != s.add(a, s.add(b, c))) {
          add_assoc = false;
          report.failures.push_back({Axiom::add_associative, a, b, c});
        }
        if (mul_assoc && s.mul(ab_prod, c) != s.mul(a, s.mul(b, c))) {
          mul_assoc = false;
          report.failures.push_back({Axiom::mul_associative, a, b, c});
        }
        if (left &&
            s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) {
          left = false;
          report.failures.push_back({Axiom::left_distributive, a, b, c});
        }
        if (right && s.mul(ab_sum, c) != s.add(s.mul(a, c), s.mul(b, c))) {
          right = false;
          report.failures.push_back({Axiom::right_distributive, a, b, c});
        }
      }
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const AxiomFailure& x, const AxiomFailure& y) {
                     return x.axiom < y.axiom;
                   });
  return report;
}

AxiomReport verify_axioms(std::span<const std::vector<long long>> add,
                          std::span<const std::vector<long long>> mul) {
  auto add_table = OpTable::from_rows(add, "add");
  auto mul_table = OpTable::from_rows(mul, "mul");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < add_table.size(); ++i) {
    labels.push_back(std::to_string(i));
  }
  return verify_axioms(FiniteSemiring("candidate", std::move(labels),
                                      std::move(add_table),
                                      std::move(mul_table)));
}

std::optional<Elem> first_non_idempotent(const FiniteSemiring& s) {
  for (Elem a = 0; a < s.size(); ++a) {
    if (s.add(a, a) != a) return a;
  }
  return std::nullopt;
}

bool is_additively_idempotent(const FiniteSemiring& s) {
  return !first_non_idempotent(s).has_value();
}

NaturalOrder::NaturalOrder(const FiniteSemiring& s)
    : k_(s.size()), leq_(k_ * k_, 0) {
  for (Elem a = 0; a < k_; ++a) {
    for (Elem b = 0; b < k_; ++b) {
      leq_[a * k_ + b] = s.add(a, b) == b ? 1 : 0;
    }
  }
}

std::vector<std::pair<Elem, Elem>> NaturalOrder::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const auto k = static_cast<Elem>(k_);
  std::vector<Elem> below;
  for (Elem b = 0; b < k; ++b) {
    below.clear();
    for (Elem a = 0; a < k; ++a) {
      if (less(a, b)) below.push_back(a);
    }
    // lower covers of b are the maximal elements of the strict down-set
    for (const Elem a : below) {
      const bool cover = std::none_of(below.begin(), below.end(),
                                      [&](Elem c) { return less(a, c); });
      if (cover) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> NaturalOrder::minimal_elements() const {
  std::vector<Elem> out;
  const auto k = static_cast<Elem>(k_);
  for (Elem a = 0; a < k; ++a) {
    bool minimal = true;
    for (Elem b = 0; b < k && minimal; ++b) {
      if (less(b, a)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::optional<Elem> NaturalOrder::least() const {
  const auto k = static_cast<Elem>(k_);
  for (Elem a = 0; a < k; ++a) {
    bool all = true;
    for (Elem b = 0; b < k && all; ++b) all = leq(a, b);
    if (all) return a;
  }
  return std::nullopt;
}

std::optional<Elem> NaturalOrder::greatest() const {
  const auto k = static_cast<Elem>(k_);
  for (Elem a = 0; a < k; ++a) {
    bool all = true;
    for (Elem b = 0; b < k && all; ++b) all = leq(b, a);
    if (all) return a;
  }
  return std::nullopt;
}

NaturalOrder natural_order(const FiniteSemiring& s) {
  if (const auto bad = first_non_idempotent(s)) {
    throw ConditionError("semiring '" + s.name() +
                         "' is not additively idempotent: " + s.label(*bad) +
                         " + " + s.label(*bad) + " = " +
                         s.label(s.add(*bad, *bad)));
  }
  return NaturalOrder(s);
}

ElementProfile element_profile(const FiniteSemiring& s) {
  const auto k = static_cast<Elem>(s.size());
  ElementProfile p;
  p.flags.resize(k);
  const bool idempotent = is_additively_idempotent(s);
  std::optional<NaturalOrder> order;
  if (idempotent) order.emplace(s);

  for (Elem w = 0; w < k; ++w) {
    auto& f = p.flags[w];
    bool left = true, right = true, unity = true, add_neutral = true,
         add_absorbing = true;
    for (Elem a = 0; a < k; ++a) {
      left = left && s.mul(w, a) == w;
      right = right && s.mul(a, w) == w;
      unity = unity && s.mul(a, w) == a && s.mul(w, a) == a;
      add_neutral = add_neutral && s.add(a, w) == a;
      add_absorbing = add_absorbing && s.add(a, w) == w;
    }
    f.is_left_mult_absorbing = left;
    f.is_right_mult_absorbing = right;
    f.is_unity = unity;
    f.is_zero = left && right && add_neutral;
    f.is_bi_absorbing = left && right && add_absorbing;
    if (order) {
      bool minimal = true, greatest = true;
      for (Elem a = 0; a < k; ++a) {
        if (order->less(a, w)) minimal = false;
        if (!order->leq(a, w)) greatest = false;
      }
      f.is_minimal = minimal;
      f.is_greatest = greatest;
    }
    if (f.is_zero && !p.zero) p.zero = w;
    if (f.is_unity && !p.unity) p.unity = w;
    if (f.is_bi_absorbing && !p.bi_absorbing) p.bi_absorbing = w;
    if (f.is_greatest && !p.greatest) p.greatest = w;
  }
  return p;
}

std::size_t product_set_size(const FiniteSemiring& s) {
  const auto cells = s.mul_table().cells();
  return std::set<Elem>(cells.begin(), cells.end()).size();
}

ClassFlags classify(const FiniteSemiring& s) {
  const auto k = static_cast<Elem>(s.size());
  ClassFlags c;
  c.additively_idempotent = is_additively_idempotent(s);
  c.ss_size = product_set_size(s);

  c.commutative = true;
  for (Elem a = 0; a < k && c.commutative; ++a) {
    for (Elem b = a + 1; b < k && c.commutative; ++b) {
      c.commutative = s.mul(a, b) == s.mul(b, a);
    }
  }

  if (c.additively_idempotent) {
    const NaturalOrder order(s);
    c.almost_integral = true;
    for (Elem a = 0; a < k && c.almost_integral; ++a) {
      for (Elem b = 0; b < k && c.almost_integral; ++b) {
        c.almost_integral =
            order.leq(s.mul(a, b), a) && order.leq(s.mul(b, a), a);
      }
    }
    c.integral = c.almost_integral && element_profile(s).unity.has_value();

    // A least element bounds every pair; only search without one.
    c.downward_directed = true;
    const bool bounded = order.least().has_value();
    for (Elem a = 0; !bounded && a < k && c.downward_directed; ++a) {
      for (Elem b = a + 1; b < k && c.downward_directed; ++b) {
        bool found = false;
        for (Elem x = 0; x < k && !found; ++x) {
          found = order.leq(x, a) && order.leq(x, b);
        }
        c.downward_directed = found;
      }
    }
  }
  return c;
}

}  // namespace idemring
