#pragma once

// Exact rational arithmetic, integer linear forms in (hbar, lambda_1..lambda_n)
// and the seeded weight samples at which those forms are evaluated.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fquot {

/// Arbitrary-precision rational; GMP keeps it in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& q);
std::string to_string(const Rational& q);

struct LambdaTerm {
  std::size_t index;  // 1-based
  std::int64_t coeff;

  friend bool operator==(const LambdaTerm&, const LambdaTerm&) = default;
};

/// Integer linear form hbar_coeff * hbar + sum_j coeff_j * lambda_j.
/// Lambda terms are kept sorted by index with no zero coefficients.
class Character {
 public:
  Character() = default;
  explicit Character(std::int64_t hbar_coeff,
                     std::vector<LambdaTerm> lambda_terms = {});

  /// The form hbar_coeff * hbar + lambda_plus - lambda_minus (plus != minus).
  static Character weight_difference(std::int64_t hbar_coeff,
                                     std::size_t plus, std::size_t minus);

  std::int64_t hbar_coeff() const { return hbar_; }
  std::span<const LambdaTerm> lambda_terms() const { return lambda_; }
  std::int64_t lambda_coeff(std::size_t index) const;
  bool is_zero() const { return hbar_ == 0 && lambda_.empty(); }

  Character operator+(const Character& other) const;
  Character operator-() const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  void normalize();

  std::int64_t hbar_ = 0;
  std::vector<LambdaTerm> lambda_;
};

std::string to_string(const Character& ch);

/// An assignment of exact values to hbar and lambda_1..lambda_n.
class WeightSample {
 public:
  /// Throws std::invalid_argument unless hbar != 0 and lambda is
  /// nonempty and pairwise distinct.
  WeightSample(Rational hbar, std::vector<Rational> lambda);

  const Rational& hbar() const { return hbar_; }
  /// 1-based access.
  const Rational& lambda(std::size_t index) const;
  std::span<const Rational> lambdas() const { return lambda_; }
  std::size_t size() const { return lambda_.size(); }

  /// Same hbar, lambda'_j = lambda_{perm[j-1]} (perm is a 1-based
  /// permutation of 1..n).
  WeightSample permuted(std::span<const std::size_t> perm) const;
  /// (t * hbar, t * lambda) for nonzero t.
  WeightSample scaled(const Rational& t) const;

 private:
  Rational hbar_;
  std::vector<Rational> lambda_;
};

/// ch evaluated at w. Throws std::out_of_range for a lambda index outside 1..n.
Rational eval_character(const Character& ch, const WeightSample& w);

/// Fast path for the forms the tangent lists are made of:
/// hbar_coeff * hbar + lambda_plus - lambda_minus (indices 1-based).
Rational eval_weight_difference(std::int64_t hbar_coeff, std::size_t plus,
                                std::size_t minus, const WeightSample& w);

/// k-th elementary symmetric function of values; e_0 = 1.
/// Throws std::invalid_argument if k > values.size().
Rational elementary_symmetric(std::span<const Rational> values, std::size_t k);

inline constexpr std::uint64_t kDefaultSampleMagnitude = std::uint64_t{1} << 31;

/// Deterministic function of (n, seed, attempt): nonzero integer hbar and n
/// pairwise-distinct integer lambdas with |value| <= magnitude.
WeightSample sample_weights(std::size_t n, std::int64_t seed,
                            std::uint64_t attempt,
                            std::uint64_t magnitude = kDefaultSampleMagnitude);

}  // namespace fquot
