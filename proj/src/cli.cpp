#include "idemring/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "idemring/checkers.hpp"
#include "idemring/congruence.hpp"
#include "idemring/constructions.hpp"
#include "idemring/errors.hpp"
#include "idemring/io.hpp"
#include "idemring/lattice.hpp"
#include "idemring/matrix.hpp"

namespace idemring {
namespace {

struct Options {
  std::string format = "text";
  std::string output;
  std::size_t threshold = MatrixSemiring::default_threshold;
  std::size_t matrix = 0;  // 0: analyze S itself
  std::size_t n = 2;
  std::size_t max_size = 3;
  std::string file;
  std::string spec;
  std::vector<std::string> transforms;
  std::vector<std::string> conditions;
  std::string left, right;  // matrix literals
  std::string experiment;
};

Json label_or_null(const FiniteSemiring& s, std::optional<Elem> a) {
  if (!a) return Json(nullptr);
  return Json(s.label(*a));
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_text(v, os, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (const auto& item : v) {
        os << pad << "  -\n";
        render_text(item, os, indent + 4);
      }
    } else {
      os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>()
                                                       : v.dump())
         << "\n";
    }
  }
}

std::string render(const Json& j, const Options& o) {
  if (o.format == "json") return dump(j);
  std::ostringstream os;
  render_text(j, os, 0);
  return os.str();
}

Json analysis(const FiniteSemiring& s) {
  Json j;
  j["semiring"] = s.name();
  j["size"] = s.size();
  const auto flags = classify(s);
  j["classes"] = {{"additively_idempotent", flags.additively_idempotent},
                  {"commutative", flags.commutative},
                  {"almost_integral", flags.almost_integral},
                  {"integral", flags.integral},
                  {"downward_directed", flags.downward_directed},
                  {"ss_size", flags.ss_size}};
  const auto p = element_profile(s);
  j["elements"] = {{"zero", label_or_null(s, p.zero)},
                   {"unity", label_or_null(s, p.unity)},
                   {"bi_absorbing", label_or_null(s, p.bi_absorbing)},
                   {"greatest", label_or_null(s, p.greatest)}};
  const auto mono = monolith(s);
  j["simple"] = mono && mono->partition.is_full();
  j["si"] = mono.has_value();
  if (mono) {
    j["monolith"] = partition_to_json(s, mono->partition);
    const auto [a, b] = *mono->generating_pair;
    j["monolith_generator"] = {s.label(a), s.label(b)};
  } else {
    j["monolith"] = nullptr;
  }
  const auto [lambda, rho] = lambda_rho(s);
  j["lambda"] = partition_to_json(s, lambda);
  j["rho"] = partition_to_json(s, rho);
  return j;
}

FiniteSemiring require_axioms(FiniteSemiring s, const std::string& source) {
  const auto report = verify_axioms(s);
  if (!report.pass()) {
    const auto& f = report.failures.front();
    std::string msg = source + ": not a semiring: " +
                      std::string(to_string(f.axiom)) + " fails at (" +
                      s.label(f.a) + ", " + s.label(f.b);
    if (f.axiom != Axiom::add_commutative) msg += ", " + s.label(f.c);
    throw InputError(msg + ")");
  }
  return s;
}

FiniteSemiring apply_transform(const FiniteSemiring& s, const std::string& t) {
  if (t == "adjoin-unity") return adjoin_unity(s);
  if (t == "adjoin-least") return adjoin_least(s);
  if (t.rfind("corner:", 0) == 0) {
    const auto label = t.substr(7);
    const auto u = s.index_of(label);
    if (!u) {
      throw InputError("corner: '" + label + "' is not an element of " +
                       s.name());
    }
    return corner(s, *u);
  }
  throw InputError("unknown transformation '" + t +
                   "' (expected adjoin-unity, adjoin-least, corner:<label>)");
}

int parse_count(const std::string& spec, const std::string& digits) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(digits, &used);
    if (used == digits.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("generator '" + spec + "' needs an integer parameter");
}

FiniteSemiring generate(const std::string& spec) {
  if (spec == "l2") return gen_l2();
  const auto colon = spec.find(':');
  const auto head = spec.substr(0, colon);
  const auto arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "bool") return gen_boolean(parse_count(spec, arg));
  if (head == "luk") return gen_lukasiewicz(parse_count(spec, arg));
  if (head == "end0") return gen_end0(load_lattice(arg));
  throw InputError("unknown generator '" + spec +
                   "' (expected l2, bool:K, luk:U, end0:<lattice-file>)");
}

Json check_all(const FiniteSemiring& s, const std::vector<std::string>& which) {
  using Check = ConditionVerdict (*)(const FiniteSemiring&);
  const std::vector<std::pair<std::string, Check>> table = {
      {"left_right_separation", check_left_right_separation},
      {"translation_separation", check_translation_separation},
      {"downward_directed", check_downward_directed},
      {"si_criterion", check_si_criterion},
      {"si_criterion_strict", check_si_criterion_strict},
      {"two_element", check_two_element},
      {"top_not_absorbing", check_top_not_absorbing},
      {"si_properties", check_si_properties},
      {"two_sided_separation", check_two_sided_separation},
  };
  for (const auto& w : which) {
    const bool known = std::any_of(table.begin(), table.end(),
                                   [&](const auto& e) { return e.first == w; });
    if (!known) throw InputError("unknown condition '" + w + "'");
  }
  Json verdicts = Json::array();
  Json skipped = Json::array();
  for (const auto& [id, check] : table) {
    const bool requested =
        which.empty() || std::find(which.begin(), which.end(), id) != which.end();
    if (!requested) continue;
    try {
      verdicts.push_back(verdict_to_json(check(s)));
    } catch (const ConditionError& e) {
      if (!which.empty()) throw;  // explicitly asked for: report the failure
      skipped.push_back({{"condition_id", id}, {"reason", e.what()}});
    }
  }
  Json j;
  j["semiring"] = s.name();
  j["verdicts"] = std::move(verdicts);
  if (which.empty()) j["not_applicable"] = std::move(skipped);
  return j;
}

Json matrix_report(const FiniteSemiring& s, const Options& o) {
  Json j;
  j["semiring"] = s.name();
  j["n"] = o.n;
  if (o.left.empty() != o.right.empty()) {
    throw InputError("matrix: give both --a and --b or neither");
  }
  if (o.left.empty()) {
    const auto m = matrix_semiring(s, o.n, MatrixMode::materialized,
                                   o.threshold);
    const auto& big = m.semiring();
    j["elements"] = big.size();
    const auto mono = monolith(big);
    j["simple"] = mono && mono->partition.is_full();
    j["si"] = mono.has_value();
    if (mono) {
      j["monolith_blocks"] = mono->partition.block_count();
      const auto [a, b] = *mono->generating_pair;
      j["monolith_generator"] = {big.label(a), big.label(b)};
    }
    return j;
  }
  const MatrixSemiring lazy(s, o.n, MatrixMode::lazy);
  auto parse = [&](const std::string& text, const char* flag) {
    try {
      return matrix_from_json(lazy, Json::parse(text));
    } catch (const nlohmann::json::parse_error&) {
      throw InputError(std::string(flag) + ": matrix literal is not JSON");
    } catch (const InputError& e) {
      throw InputError(std::string(flag) + ": " + e.what());
    }
  };
  const auto a = parse(o.left, "--a");
  const auto b = parse(o.right, "--b");
  const auto pair = extract_constant_pair(s, o.n, a, b);
  j["constants"] = {s.label(pair.first), s.label(pair.second)};
  Json steps = Json::array();
  for (const auto& step : pair.chain.steps) {
    steps.push_back({{"kind", to_string(step.kind)},
                     {"operand", matrix_to_json(lazy, step.operand)}});
  }
  j["chain"] = std::move(steps);
  const auto [x, y] = pair.chain.replay(lazy, a, b);
  j["replayed"] = {matrix_to_json(lazy, x), matrix_to_json(lazy, y)};
  const auto count = lazy.element_count();
  if (count && *count <= o.threshold) {
    const auto m = matrix_semiring(s, o.n, MatrixMode::materialized,
                                   o.threshold);
    const auto theta = principal_congruence(m.semiring(), m.encode(a),
                                            m.encode(b));
    j["in_principal_congruence"] =
        theta.related(m.encode(m.constant(pair.first)),
                      m.encode(m.constant(pair.second)));
  } else {
    j["in_principal_congruence"] = nullptr;
  }
  return j;
}

int emit(const Json& j, const Options& o, std::ostream& out) {
  const auto text = render(j, o);
  if (o.output.empty()) {
    out << text;
  } else {
    write_text_file(o.output, text);
  }
  return exit_ok;
}

// A semiring written to a file is always in the loadable file format.
int emit_semiring(const FiniteSemiring& s, const Options& o,
                  std::ostream& out) {
  if (!o.output.empty()) {
    write_text_file(o.output, dump(semiring_to_json(s)));
    return exit_ok;
  }
  return emit(semiring_to_json(s), o, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Workbench for finite additively idempotent semirings"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", o.output, "Write the report to a file");
    sub->add_option("--threshold", o.threshold,
                    "Largest matrix semiring to materialize");
  };

  auto* verify = app.add_subcommand("verify", "Check the semiring axioms");
  verify->add_option("file", o.file)->required();
  common(verify);

  auto* analyze = app.add_subcommand(
      "analyze", "Classes, special elements, simplicity, monolith");
  analyze->add_option("file", o.file)->required();
  analyze->add_option("--matrix", o.matrix, "Analyze M_N(S) instead");
  common(analyze);

  auto* gen = app.add_subcommand("gen", "Generate a semiring");
  gen->add_option("spec", o.spec, "l2, bool:K, luk:U or end0:<lattice-file>")
      ->required();
  gen->add_option("--apply", o.transforms,
                  "adjoin-unity, adjoin-least or corner:<label>; repeatable");
  common(gen);

  auto* transform = app.add_subcommand("transform", "Transform a semiring");
  transform->add_option("file", o.file)->required();
  transform->add_option("transforms", o.transforms)->required();
  common(transform);

  auto* matrix = app.add_subcommand(
      "matrix", "Analyze M_n(S) or extract a constant pair");
  matrix->add_option("file", o.file)->required();
  matrix->add_option("--n", o.n)->check(CLI::PositiveNumber);
  matrix->add_option("--a", o.left, "Matrix literal, rows of labels");
  matrix->add_option("--b", o.right, "Matrix literal, rows of labels");
  common(matrix);

  auto* check = app.add_subcommand("check", "Evaluate conditions");
  check->add_option("file", o.file)->required();
  check->add_option("--condition", o.conditions, "Condition id; repeatable");
  common(check);

  auto* cross = app.add_subcommand(
      "crosscheck", "Compare brute force against the characterizations");
  cross->add_option("file", o.file, "Single semiring (default: enumerate)");
  cross->add_option("--max-size", o.max_size)->check(CLI::Range(2, 4));
  cross->add_option("--n", o.n)->check(CLI::Range(2, 8));
  common(cross);

  auto* experiment = app.add_subcommand("experiment", "Report-only probes");
  experiment->add_option("name", o.experiment)
      ->required()
      ->check(CLI::IsMember({"hat-monolith"}));
  experiment->add_option("file", o.file)->required();
  experiment->add_option("--n", o.n)->check(CLI::Range(2, 8));
  common(experiment);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*verify) {
      const auto s = load_semiring(o.file);
      const auto report = verify_axioms(s);
      Json j;
      j["semiring"] = s.name();
      j["axioms"] = axiom_report_to_json(s, report);
      emit(j, o, out);
      if (!report.pass()) {
        err << o.file << ": not a semiring\n";
        return exit_input;
      }
      return exit_ok;
    }
    if (*analyze) {
      const auto s = require_axioms(load_semiring(o.file), o.file);
      if (o.matrix == 0) return emit(analysis(s), o, out);
      const auto m =
          matrix_semiring(s, o.matrix, MatrixMode::materialized, o.threshold);
      return emit(analysis(m.semiring()), o, out);
    }
    if (*gen) {
      auto s = generate(o.spec);
      for (const auto& t : o.transforms) s = apply_transform(s, t);
      return emit_semiring(s, o, out);
    }
    if (*transform) {
      auto s = require_axioms(load_semiring(o.file), o.file);
      for (const auto& t : o.transforms) s = apply_transform(s, t);
      return emit_semiring(s, o, out);
    }
    if (*matrix) {
      const auto s = require_axioms(load_semiring(o.file), o.file);
      return emit(matrix_report(s, o), o, out);
    }
    if (*check) {
      const auto s = require_axioms(load_semiring(o.file), o.file);
      return emit(check_all(s, o.conditions), o, out);
    }
    if (*cross) {
      std::vector<FiniteSemiring> corpus;
      if (!o.file.empty()) {
        corpus.push_back(require_axioms(load_semiring(o.file), o.file));
      } else {
        for (auto& s : enumerate_small(o.max_size)) {
          if (s.size() >= 2) corpus.push_back(std::move(s));
        }
      }
      Json reports = Json::array();
      std::vector<std::string> failed;
      for (const auto& s : corpus) {
        const auto r = crosscheck(s, o.n, o.threshold);
        if (!r.discrepancies().empty()) failed.push_back(s.name());
        reports.push_back(report_to_json(r));
      }
      Json j;
      j["n"] = o.n;
      j["semirings"] = corpus.size();
      j["discrepancies"] = failed;
      j["reports"] = std::move(reports);
      emit(j, o, out);
      if (!failed.empty()) {
        err << "crosscheck: discrepancies in " << failed.size()
            << " semiring(s), first " << failed.front() << "\n";
        return exit_discrepancy;
      }
      return exit_ok;
    }
    if (*experiment) {
      const auto s = require_axioms(load_semiring(o.file), o.file);
      return emit(probe_hat_monolith(s, o.n, o.threshold), o, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

}  // namespace idemring
