#pragma once

// Problem statement: which partial flag variety, which multidegree and which
// special Schubert classes c_beta(S_alpha^*) are inserted.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fquot {

/// F(s_1,...,s_l; n): nested subspaces of dimensions s_1 < ... < s_l in C^n.
class FlagShape {
 public:
  /// Throws ValidationError(ShapeInvalid) unless 0 < s_1 < ... < s_l < n.
  FlagShape(std::size_t n, std::vector<std::size_t> steps);

  std::size_t n() const { return n_; }
  std::size_t length() const { return steps_.size(); }
  const std::vector<std::size_t>& steps() const { return steps_; }

  /// s_i with s_0 = 0 and s_{l+1} = n; i in 0..l+1.
  std::size_t s(std::size_t i) const;
  /// Quotient rank r_i = n - s_i; r_0 = n, r_{l+1} = 0.
  std::size_t r(std::size_t i) const { return n_ - s(i); }

  /// Dimension of the flag manifold, sum_i s_i (s_{i+1} - s_i).
  std::size_t flag_dimension() const;

  friend bool operator==(const FlagShape&, const FlagShape&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> steps_;
};

using DegreeVector = std::vector<std::size_t>;

struct Insertion {
  std::size_t alpha;  // flag step, 1..l
  std::size_t beta;   // Chern degree, >= 1

  friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

struct ProblemSpec {
  FlagShape shape;
  DegreeVector degrees;
  std::vector<Insertion> insertions;
  bool allow_beta_overflow = false;
  std::size_t dimension = 0;

  /// True when some beta violates the bound beta < s_{alpha+1} - s_{alpha-1}
  /// (only possible with allow_beta_overflow).
  bool outside_proven_regime() const;
};

enum class ValidationErrorKind { ShapeInvalid, DimensionMismatch, BetaOutOfRange };

std::string to_string(ValidationErrorKind kind);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationErrorKind kind, const std::string& what)
      : std::invalid_argument(to_string(kind) + ": " + what), kind_(kind) {}
  ValidationErrorKind kind() const { return kind_; }

 private:
  ValidationErrorKind kind_;
};

/// dim fQuot_d(F) = sum_i r_i (r_{i-1} - r_i) + sum_i d_i (s_{i+1} - s_{i-1}).
/// Throws ValidationError(ShapeInvalid) if degrees.size() != l.
std::size_t dim_fquot(const FlagShape& shape, const DegreeVector& degrees);

ProblemSpec validate_problem(const FlagShape& shape, const DegreeVector& degrees,
                             std::vector<Insertion> insertions,
                             bool allow_beta_overflow = false);

/// Convenience overload that also validates the shape itself.
ProblemSpec validate_problem(std::size_t n, const std::vector<std::size_t>& steps,
                             const DegreeVector& degrees, std::vector<Insertion> insertions,
                             bool allow_beta_overflow = false);

/// "F(1,2; 3) d=(1,0) [1:1x3, 2:1x2]"
std::string describe(const ProblemSpec& problem);

}  // namespace fquot
