#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "koszul/matrix.hpp"
#include "koszul/ring.hpp"

namespace koszul::cli {

inline constexpr const char* kReportVersion = "koszul-report/1";

struct RingSpec {
  std::string kind;  // polynomial | exterior | quotient
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::optional<int> degreeBound;
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct ModuleSpec {
  std::vector<int> rowDegrees;
  std::optional<std::vector<int>> colDegrees;
  std::vector<std::vector<std::string>> matrix;  // matrix[row][col]
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct JobSpec {
  std::uint32_t characteristic = 32003;
  RingSpec ring;
  std::optional<ModuleSpec> module;
  std::string command;
  std::optional<int> maxH;
  std::optional<int> maxDeg;
  std::string method = "direct";  // direct | bgg | both
  std::string format = "json";    // json | table
  bool forceBounds = false;
  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Parses and validates a job document. Throws InputError.
JobSpec parseJob(const std::string& text);
JobSpec jobFromJson(const nlohmann::json& j);
nlohmann::json jobToJson(const JobSpec& spec);
std::string serializeJob(const JobSpec& spec);
/// Semantic checks: command, method, format, bounds, ring and module entries.
void validateJob(const JobSpec& spec);

/// Parses one ring element. Grammar: terms separated by + or -, a term is
/// [coeff][*]var[^exp](*var[^exp])* or a bare coefficient. Throws InputError
/// with the character position on syntax errors, unknown variables and
/// inhomogeneous input.
RingElem parseElement(const std::string& text, const RingPtr& ring);

RingPtr buildRing(const JobSpec& spec);
/// Rows = generators; columns whose degree is neither declared nor implied
/// by a nonzero entry are dropped (they are zero relations).
HomogeneousMatrix buildPresentation(const JobSpec& spec, const RingPtr& ring);

struct Report {
  std::string command;
  nlohmann::json result;
  int truncationH = -1;  // -1: not applicable
  int truncationD = -1;
  bool certified = true;
  std::string table;  // human-readable rendering of the result
};

/// Dispatches the command. Throws InputError / BoundError / InvariantError.
Report runJob(const JobSpec& spec);

/// FNV-1a 64-bit hash of the canonical job serialization, as 16 hex digits.
std::string inputsHash(const JobSpec& spec);

/// {command, inputs_hash, result, truncation{H, D, certified}, version},
/// keys sorted.
std::string reportJson(const JobSpec& spec, const Report& report);
std::string render(const JobSpec& spec, const Report& report);

/// Exit code for an exception: 1 input, 2 bound, 3 invariant or unexpected.
int exitCodeFor(const std::exception& e);

}  // namespace koszul::cli
