#include "idemring/io.hpp"

#include <fstream>
#include <sstream>

#include "idemring/errors.hpp"

namespace idemring {
namespace {

std::string where(std::string_view source, std::string_view field) {
  return std::string(source) + ": field '" + std::string(field) + "'";
}

const Json& require(const Json& j, std::string_view source,
                    const char* field) {
  if (!j.is_object()) {
    throw InputError(std::string(source) + ": top level must be an object");
  }
  const auto it = j.find(field);
  if (it == j.end()) {
    throw InputError(std::string(source) + ": missing field '" + field + "'");
  }
  return *it;
}

std::vector<std::string> labels_from(const Json& j, std::string_view source) {
  const auto& elements = require(j, source, "elements");
  if (!elements.is_array() || elements.empty()) {
    throw InputError(where(source, "elements") +
                     " must be a non-empty array of strings");
  }
  std::vector<std::string> out;
  for (const auto& e : elements) {
    if (!e.is_string()) {
      throw InputError(where(source, "elements") + " contains a non-string");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::vector<long long>> table_from(const Json& j,
                                               std::string_view source,
                                               const char* field) {
  const auto& t = require(j, source, field);
  if (!t.is_array()) {
    throw InputError(where(source, field) + " must be an array of rows");
  }
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_array()) {
      throw InputError(where(source, field) + " row " + std::to_string(i) +
                       " is not an array");
    }
    auto& row = rows.emplace_back();
    for (const auto& v : t[i]) {
      if (!v.is_number_integer()) {
        throw InputError(where(source, field) + " row " + std::to_string(i) +
                         " has a non-integer entry");
      }
      row.push_back(v.get<long long>());
    }
  }
  return rows;
}

}  // namespace

Json semiring_to_json(const FiniteSemiring& s) {
  Json j;
  j["name"] = s.name();
  j["elements"] = s.labels();
  j["add"] = s.add_table().rows();
  j["mul"] = s.mul_table().rows();
  return j;
}

FiniteSemiring semiring_from_json(const Json& j, std::string_view source) {
  std::string name = "S";
  if (j.is_object() && j.contains("name")) {
    if (!j["name"].is_string()) {
      throw InputError(where(source, "name") + " must be a string");
    }
    name = j["name"].get<std::string>();
  }
  auto labels = labels_from(j, source);
  const auto add = table_from(j, source, "add");
  const auto mul = table_from(j, source, "mul");
  for (const auto* t : {&add, &mul}) {
    if (t->size() != labels.size()) {
      throw InputError(where(source, t == &add ? "add" : "mul") + " has " +
                       std::to_string(t->size()) + " rows for " +
                       std::to_string(labels.size()) + " elements");
    }
  }
  try {
    return FiniteSemiring(std::move(name), std::move(labels),
                          OpTable::from_rows(add, "add"),
                          OpTable::from_rows(mul, "mul"));
  } catch (const InputError& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

FiniteLattice lattice_from_json(const Json& j, std::string_view source) {
  auto labels = labels_from(j, source);
  const auto& leq = require(j, source, "leq");
  if (!leq.is_array()) {
    throw InputError(where(source, "leq") + " must be a boolean matrix");
  }
  std::vector<std::vector<bool>> order;
  for (const auto& row : leq) {
    if (!row.is_array()) {
      throw InputError(where(source, "leq") + " has a row that is not an array");
    }
    auto& r = order.emplace_back();
    for (const auto& v : row) {
      if (!v.is_boolean()) {
        throw InputError(where(source, "leq") + " has a non-boolean entry");
      }
      r.push_back(v.get<bool>());
    }
  }
  try {
    return lattice_from_order(std::move(labels), order);
  } catch (const InputError& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": invalid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw InputError(path.string() + ": cannot write file");
}

FiniteSemiring load_semiring(const std::filesystem::path& path) {
  return semiring_from_json(read_json_file(path), path.string());
}

FiniteLattice load_lattice(const std::filesystem::path& path) {
  return lattice_from_json(read_json_file(path), path.string());
}

Json partition_to_json(const FiniteSemiring& s, const Partition& p) {
  Json out = Json::array();
  for (const auto& block : p.blocks()) {
    Json b = Json::array();
    for (const Elem a : block) b.push_back(s.label(a));
    out.push_back(std::move(b));
  }
  return out;
}

Json matrix_to_json(const MatrixSemiring& m, const Matrix& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.n(); ++j) {
      row.push_back(m.base().label(x[i * m.n() + j]));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const MatrixSemiring& m, const Json& j) {
  const std::size_t n = m.n();
  if (!j.is_array() || j.size() != n) {
    throw InputError("matrix literal must have " + std::to_string(n) +
                     " rows");
  }
  Matrix x;
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) {
      throw InputError("matrix row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (const auto& v : j[i]) {
      if (!v.is_string()) {
        throw InputError("matrix row " + std::to_string(i) +
                         " has a non-string entry");
      }
      const auto a = m.base().index_of(v.get<std::string>());
      if (!a) {
        throw InputError("matrix entry '" + v.get<std::string>() +
                         "' is not an element of " + m.base().name());
      }
      x.push_back(*a);
    }
  }
  return x;
}

Json axiom_report_to_json(const FiniteSemiring& s, const AxiomReport& r) {
  Json j;
  j["pass"] = r.pass();
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json w;
    w["axiom"] = to_string(f.axiom);
    w["a"] = s.label(f.a);
    w["b"] = s.label(f.b);
    if (f.axiom != Axiom::add_commutative) w["c"] = s.label(f.c);
    failures.push_back(std::move(w));
  }
  j["failures"] = std::move(failures);
  return j;
}

Json violation_to_json(const FiniteSemiring& s, const CongruenceViolation& v) {
  Json j;
  j["a"] = s.label(v.a);
  j["b"] = s.label(v.b);
  j["translation"] = to_string(v.kind);
  j["c"] = s.label(v.c);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace idemring
