#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "idemring/congruence.hpp"
#include "idemring/lattice.hpp"
#include "idemring/matrix.hpp"
#include "idemring/partition.hpp"
#include "idemring/semiring.hpp"

namespace idemring {

/// Insertion-ordered JSON keeps every report byte-stable.
using Json = nlohmann::ordered_json;

/// {"name", "elements", "add", "mul"} with 0-based index tables.
[[nodiscard]] Json semiring_to_json(const FiniteSemiring& s);

/// Parses the semiring file format. `source` prefixes error messages (file
/// name or "<input>"). Throws InputError naming the field at fault.
[[nodiscard]] FiniteSemiring semiring_from_json(const Json& j,
                                                std::string_view source);

/// {"elements", "leq"} with leq a boolean matrix.
[[nodiscard]] FiniteLattice lattice_from_json(const Json& j,
                                              std::string_view source);

/// Reads and parses a file, raising InputError on I/O or syntax errors.
[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

[[nodiscard]] FiniteSemiring load_semiring(const std::filesystem::path& path);
[[nodiscard]] FiniteLattice load_lattice(const std::filesystem::path& path);

/// Blocks of labels, each sorted by index, ordered by least member.
[[nodiscard]] Json partition_to_json(const FiniteSemiring& s,
                                     const Partition& p);

/// n rows of n labels.
[[nodiscard]] Json matrix_to_json(const MatrixSemiring& m, const Matrix& x);
[[nodiscard]] Matrix matrix_from_json(const MatrixSemiring& m, const Json& j);

[[nodiscard]] Json axiom_report_to_json(const FiniteSemiring& s,
                                        const AxiomReport& r);

[[nodiscard]] Json violation_to_json(const FiniteSemiring& s,
                                     const CongruenceViolation& v);

/// Two-space indented dump with a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

}  // namespace idemring
