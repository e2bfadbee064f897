#pragma once

// Bott localization on the flag Quot scheme. Each fixed point contributes
//
//   prod_k sigma(alpha_k, beta_k) * prod(tang2) / prod(tang1)
//
// where tang1 lists the torus characters of T(prod_i Quot_i) and tang2 those
// of prod_i Hom(S_i, Q_{i+1}); their quotient is the Euler class of T fQuot.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fquot/exact.hpp"
#include "fquot/fixed_points.hpp"
#include "fquot/problem.hpp"

namespace fquot {

struct TangentData {
  std::vector<Character> tang1;
  std::vector<Character> tang2;
};

/// Character lists (tang1)/(tang2) at fp, with multiplicity.
TangentData tangent_characters(const FixedPoint& fp, const FlagShape& shape);

/// e_beta of the dual fiber characters -(a_{alpha,j} hbar + lambda_j), j ∈ J_alpha,
/// of S_alpha at 0. beta = 0 gives 1; beta > s_alpha gives 0.
Rational sigma(const FixedPoint& fp, std::size_t alpha, std::size_t beta,
               const WeightSample& w);

/// Some tang1 character vanished at the sample; the caller resamples.
class ZeroDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class EngineErrorKind { SampleDisagreement, NonIntegerResult, ResampleExhausted };

std::string to_string(EngineErrorKind kind);

class EngineError : public std::runtime_error {
 public:
  EngineError(EngineErrorKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}
  EngineErrorKind kind() const { return kind_; }

 private:
  EngineErrorKind kind_;
};

/// One term of the localization sum. Throws ZeroDenominator.
Rational contribution(const FixedPoint& fp, const ProblemSpec& problem, const WeightSample& w);

struct LocalizationSum {
  Rational total;
  std::uint64_t fixed_points = 0;
};

/// Sum of contribution() over every fixed point at one sample, split over
/// `workers` threads pulling chains from a shared stream.
/// Throws ZeroDenominator if w is not admissible.
LocalizationSum localization_sum(const ProblemSpec& problem, const WeightSample& w,
                                 std::size_t workers = 1);

struct SampleOptions {
  std::int64_t seed = 0;
  std::size_t samples = 2;
  std::size_t max_resamples = 32;
  std::uint64_t magnitude = kDefaultSampleMagnitude;
};

struct SampledValue {
  Rational value;
  std::size_t samples_used = 0;
  std::uint64_t attempts = 0;
};

/// Evaluates `at` on options.samples admissible samples of `n` weights
/// (attempt = 0, 1, 2, ...; ZeroDenominator skips to the next attempt) and
/// requires every value to agree and be an integer.
/// Throws EngineError on disagreement, non-integrality or exhausted retries.
SampledValue evaluate_across_samples(std::size_t n, const SampleOptions& options,
                                     const std::function<Rational(const WeightSample&)>& at);

struct InvariantResult {
  Rational value;
  bool is_integer = false;
  std::uint64_t fixed_point_count = 0;
  std::size_t dimension = 0;
  std::size_t samples_used = 0;
  std::int64_t seed = 0;
  bool outside_proven_regime = false;
};

/// The Gromov invariant of a validated problem. The value does not depend on
/// `workers`.
InvariantResult invariant(const ProblemSpec& problem, std::int64_t seed = 0,
                          std::size_t num_samples = 2, std::size_t workers = 1);
InvariantResult invariant(const ProblemSpec& problem, const SampleOptions& options,
                          std::size_t workers);

}  // namespace fquot
