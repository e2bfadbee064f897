#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fquot/problem.hpp"

namespace fquot::cli {

enum class Mode { Invariant, ListFixedPoints, OraclePn, OracleGrassmannian, OracleClassical };
enum class Format { Text, Json };

std::string to_string(Mode mode);
/// Throws std::invalid_argument for an unknown name.
Mode parse_mode(const std::string& name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;

struct RunConfig {
  std::size_t n = 0;
  std::vector<std::size_t> s;
  std::vector<std::size_t> d;
  std::vector<Insertion> insertions;
  std::int64_t seed = 0;
  std::size_t samples = 2;
  std::size_t workers = 1;
  Format format = Format::Text;
  bool allow_beta_overflow = false;
  Mode mode = Mode::Invariant;
};

/// Parses "alpha:beta" items with optional repetition "xN", e.g. "1:1x8".
/// Throws std::invalid_argument on malformed input.
std::vector<Insertion> parse_insertions(const std::string& spec);

struct Outcome {
  ProblemSpec problem;
  Mode mode = Mode::Invariant;
  std::string invariant;  // exact integer, decimal
  std::uint64_t fixed_points = 0;
  std::size_t samples = 0;
  std::int64_t seed = 0;
  bool outside_proven_regime = false;
};

/// Runs the invariant or an oracle. Throws ValidationError / EngineError.
Outcome evaluate(const RunConfig& config);

/// Result record, keys in schema order.
nlohmann::ordered_json to_json(const Outcome& outcome);

/// Accepts the result schema ({"flag": {"n", "s"}, "degree", "insertions"})
/// plus optional "seed", "samples", "mode", "allow_beta_overflow".
/// Missing seed/samples/mode fall back to `defaults`.
RunConfig config_from_json(const nlohmann::json& record, const RunConfig& defaults);

/// One output line per input line; malformed or failing lines produce
/// {"line": k, "error": kind, "message": ...}. Empty lines are skipped.
void run_batch(std::istream& in, std::ostream& out, const RunConfig& defaults);

/// Full program: exit 0 on success, 2 on validation errors, 3 on internal
/// assertion failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fquot::cli
