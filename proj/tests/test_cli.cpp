#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "idemring/cli.hpp"
#include "idemring/constructions.hpp"
#include "idemring/errors.hpp"
#include "idemring/io.hpp"

using namespace idemring;

namespace {

const std::filesystem::path data_dir = IDEMRING_DATA_DIR;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::vector<std::string> owned{"idemring"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (data_dir / name).string(); }

std::filesystem::path scratch(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / "idemring-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze reports the monolith of Luk3") {
  const auto r = invoke({"analyze", data("luk3.json"), "--format", "json"});
  REQUIRE(r.code == exit_ok);
  const auto j = Json::parse(r.out);
  CHECK(j["simple"] == false);
  CHECK(j["si"] == true);
  CHECK(j["monolith"] == Json::parse(R"([["0","e"],["u"]])"));
  CHECK(j["elements"]["zero"] == "0");
  CHECK(j["elements"]["unity"] == "u");
}

TEST_CASE("analyze of a matrix semiring") {
  const auto r = invoke(
      {"analyze", data("luk3.json"), "--matrix", "2", "--format", "json"});
  REQUIRE(r.code == exit_ok);
  const auto j = Json::parse(r.out);
  CHECK(j["size"] == 81);
  CHECK(j["si"] == true);
  CHECK(j["simple"] == false);
}

TEST_CASE("verify") {
  CHECK(invoke({"verify", data("luk3.json")}).code == exit_ok);
  const auto bad = invoke({"verify", data("broken.json"), "--format", "json"});
  CHECK(bad.code == exit_input);
  const auto j = Json::parse(bad.out);
  CHECK(j["axioms"]["pass"] == false);
  CHECK(j["axioms"]["failures"][0]["axiom"] == "left_distributive");
  CHECK(bad.err.find("broken.json") != std::string::npos);
}

TEST_CASE("input errors exit 2 and name the culprit") {
  const auto missing = invoke({"analyze", data("no-such-file.json")});
  CHECK(missing.code == exit_input);
  CHECK(missing.err.find("no-such-file.json") != std::string::npos);

  const auto path = scratch("ragged.json");
  std::ofstream(path) << R"({"name":"r","elements":["a","b"],)"
                      << R"("add":[[0,1],[1]],"mul":[[0,0],[0,1]]})";
  const auto ragged = invoke({"verify", path.string()});
  CHECK(ragged.code == exit_input);
  CHECK(ragged.err.find("add") != std::string::npos);

  CHECK(invoke({"gen", "bool:9"}).code == exit_input);
  CHECK(invoke({"gen", "nonsense"}).code == exit_input);
  const auto big = invoke(
      {"matrix", data("luk3.json"), "--n", "3", "--threshold", "100"});
  CHECK(big.code == exit_input);
  CHECK(big.err.find("100") != std::string::npos);
  // semiring commands refuse tables that fail the axioms
  CHECK(invoke({"analyze", data("broken.json")}).code == exit_input);
  CHECK(invoke({"transform", data("luk3.json"), "adjoin-least"}).code ==
        exit_input);
}

TEST_CASE("gen then analyze round trips through a file") {
  const auto path = scratch("b2e.json");
  const auto gen = invoke({"gen", "bool:2", "--apply", "adjoin-least", "-o",
                           path.string()});
  REQUIRE(gen.code == exit_ok);
  const auto back = load_semiring(path);
  CHECK(back == adjoin_least(gen_boolean(2)));
  const auto a = invoke({"analyze", path.string(), "--format", "json"});
  REQUIRE(a.code == exit_ok);
  CHECK(Json::parse(a.out)["si"] == true);
}

TEST_CASE("gen from a lattice file") {
  const auto r = invoke({"gen", "end0:" + data("chain3.json"), "--format",
                         "json"});
  REQUIRE(r.code == exit_ok);
  CHECK(Json::parse(r.out)["elements"].size() == 6);
}

TEST_CASE("check emits one verdict per condition") {
  const auto r = invoke({"check", data("luk3.json"), "--condition",
                         "si_criterion", "--condition", "two_sided_separation",
                         "--format", "json"});
  REQUIRE(r.code == exit_ok);
  const auto j = Json::parse(r.out);
  REQUIRE(j["verdicts"].size() == 2);
  CHECK(j["verdicts"][0]["condition_id"] == "si_criterion");
  CHECK(j["verdicts"][0]["holds"] == true);
  CHECK(invoke({"check", data("luk3.json"), "--condition", "bogus"}).code ==
        exit_input);
}

TEST_CASE("matrix extraction") {
  const auto r = invoke({"matrix", data("luk3.json"), "--n", "2", "--a",
                         R"([["0","0"],["0","0"]])", "--b",
                         R"([["e","0"],["0","0"]])", "--format", "json"});
  REQUIRE(r.code == exit_ok);
  CHECK(r.out.find("chain") != std::string::npos);
}

TEST_CASE("crosscheck sweep exits 0 with every agreement holding") {
  const auto r =
      invoke({"crosscheck", "--max-size", "2", "--n", "2", "--format", "json"});
  REQUIRE(r.code == exit_ok);
  CHECK(r.out.find("counterexample") == std::string::npos);
}

TEST_CASE("experiment reports without asserting") {
  const auto r = invoke({"experiment", "hat-monolith", data("luk3.json"),
                         "--n", "2", "--format", "json"});
  REQUIRE(r.code == exit_ok);
  CHECK(Json::parse(r.out)["equal"] == true);
}

TEST_CASE("json output is byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", data("luk3.json"), "--format", "json"},
           {"check", data("luk3.json"), "--format", "json"},
           {"crosscheck", "--max-size", "2", "--format", "json"}}) {
    const auto first = invoke(args);
    const auto second = invoke(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

}  // TEST_SUITE

TEST_SUITE("io") {

TEST_CASE("parser rejects malformed semirings by field") {
  auto expect = [](const char* text, const char* field) {
    try {
      (void)semiring_from_json(Json::parse(text), "<t>");
      FAIL("accepted " << text);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };
  expect(R"({"elements":["a"],"add":[[0]]})", "mul");
  expect(R"({"elements":["a","b"],"add":[[0,1],[1,1]],"mul":[[0,0],[0,2]]})",
         "mul");
  expect(R"({"elements":"ab","add":[[0]],"mul":[[0]]})", "elements");
}

TEST_CASE("partitions and matrices serialize by label") {
  const auto luk = gen_lukasiewicz(2);
  CHECK(partition_to_json(luk, Partition::from_blocks(3, {{0, 1}, {2}})) ==
        Json::parse(R"([["0","1"],["2"]])"));
  const auto m = matrix_semiring(luk, 2, MatrixMode::lazy);
  const Matrix x{0, 1, 2, 1};
  CHECK(matrix_from_json(m, matrix_to_json(m, x)) == x);
  CHECK_THROWS_AS((void)matrix_from_json(m, Json::parse(R"([["0","9"],["0","0"]])")),
                  InputError);
}

}  // TEST_SUITE
