#pragma once

// Independent checks for the localization engine:
//  - the projective-space residue sum,
//  - the classical (degree zero) localization integral on a flag manifold,
//  - small quantum Schubert calculus on Grassmannians (column Pieri rule plus
//    rim-hook reduction), exact over the integers.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fquot/exact.hpp"
#include "fquot/problem.hpp"

namespace fquot::oracle {

/// Sum over i = 0..n, k = 0..d of (lambda_i + k hbar)^N over the product of
/// (lambda_i + k hbar) - (lambda_j + q hbar) for (j, q) != (i, k), where
/// N = (n+1)d + n. This is the sum of residues of x^N / prod (x - lambda_j - q hbar),
/// hence identically 1. `w` carries n + 1 lambdas. Throws ZeroDenominator.
Rational pn_localization_sum(std::size_t n, std::size_t d, const WeightSample& w);

/// Degree-zero integral of prod_k c_{beta_k}(S_{alpha_k}^*) over the flag
/// manifold by localization at coordinate flags:
///   sum_chains prod_k e_{beta_k}(-lambda_j : j ∈ J_{alpha_k})
///            / prod_{i, j ∈ J_i, m ∈ J_{i+1} \ J_i} (lambda_m - lambda_j).
/// Throws ValidationError(DimensionMismatch) unless sum beta = dim Fl, and
/// ZeroDenominator.
Rational classical_flag_integral(const FlagShape& shape, std::span<const Insertion> insertions,
                                 const WeightSample& w);

/// Number of terms classical_flag_integral sums (one per coordinate flag).
std::uint64_t classical_term_count(const FlagShape& shape);

struct Partition {
  std::vector<std::size_t> parts;  // weakly decreasing, positive

  Partition() = default;
  /// Drops trailing zeros; throws std::invalid_argument if not weakly decreasing.
  explicit Partition(std::vector<std::size_t> parts);

  std::size_t rows() const { return parts.size(); }
  std::size_t width() const { return parts.empty() ? 0 : parts.front(); }
  std::size_t size() const;

  static Partition rectangle(std::size_t rows, std::size_t width);
  static Partition column(std::size_t height);

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

/// Finitely supported polynomial in q with integer coefficients.
class QPolynomial {
 public:
  void add(std::size_t exponent, const BigInt& coeff);
  BigInt coeff(std::size_t exponent) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::size_t, BigInt>& terms() const { return terms_; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  std::map<std::size_t, BigInt> terms_;
};

/// Element of QH*(Gr(k, n)): Schubert class -> polynomial in q.
using QuantumClass = std::map<Partition, QPolynomial>;

/// Classical product s_lambda * e_beta in k variables: every mu with mu / lambda
/// a vertical strip of beta boxes and at most k rows.
std::vector<Partition> column_pieri(const Partition& lambda, std::size_t beta, std::size_t k);

struct RimHookReduction {
  std::size_t q_power = 0;
  int sign = 1;
  Partition core;
};

/// Reduces a partition with at most k rows into the k x (n-k) box by removing
/// n-rim hooks; each removal contributes q * (-1)^(k - rows of the hook).
/// Returns nullopt when the class vanishes in QH*(Gr(k, n)).
std::optional<RimHookReduction> rim_hook_reduce(const Partition& lambda, std::size_t n,
                                                std::size_t k);

/// cls * sigma_{(1^beta)} in QH*(Gr(k, n)).
QuantumClass quantum_multiply(const QuantumClass& cls, std::size_t beta, std::size_t n,
                              std::size_t k);

/// Coefficient of q^d on the point class (the k x (n-k) rectangle) in the
/// iterated quantum product of sigma_{(1^beta)} over `betas`. Requires
/// sum beta = k(n-k) + n d, else throws ValidationError(DimensionMismatch).
BigInt grassmannian_quantum_integral(std::size_t n, std::size_t k, std::size_t d,
                                     std::span<const std::size_t> betas);

}  // namespace fquot::oracle
