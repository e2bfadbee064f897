#include "fquot/problem.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fquot {

std::string to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::ShapeInvalid: return "ShapeInvalid";
    case ValidationErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ValidationErrorKind::BetaOutOfRange: return "BetaOutOfRange";
  }
  return "ValidationError";
}

FlagShape::FlagShape(std::size_t n, std::vector<std::size_t> steps)
    : n_(n), steps_(std::move(steps)) {
  if (steps_.empty()) {
    throw ValidationError(ValidationErrorKind::ShapeInvalid, "flag needs at least one step");
  }
  std::size_t prev = 0;
  for (auto si : steps_) {
    if (si <= prev || si >= n_) {
      throw ValidationError(ValidationErrorKind::ShapeInvalid,
                            "steps must satisfy 0 < s_1 < ... < s_l < n = " +
                                std::to_string(n_));
    }
    prev = si;
  }
}

std::size_t FlagShape::s(std::size_t i) const {
  if (i == 0) return 0;
  if (i == steps_.size() + 1) return n_;
  if (i > steps_.size() + 1) throw std::out_of_range("flag step index out of range");
  return steps_[i - 1];
}

std::size_t FlagShape::flag_dimension() const {
  std::size_t dim = 0;
  for (std::size_t i = 1; i <= length(); ++i) dim += s(i) * (s(i + 1) - s(i));
  return dim;
}

bool ProblemSpec::outside_proven_regime() const {
  return std::any_of(insertions.begin(), insertions.end(), [&](const Insertion& ins) {
    return ins.beta >= shape.s(ins.alpha + 1) - shape.s(ins.alpha - 1);
  });
}

std::size_t dim_fquot(const FlagShape& shape, const DegreeVector& degrees) {
  const auto l = shape.length();
  if (degrees.size() != l) {
    throw ValidationError(ValidationErrorKind::ShapeInvalid,
                          "degree vector has " + std::to_string(degrees.size()) +
                              " entries, flag has " + std::to_string(l) + " steps");
  }
  std::size_t dim = 0;
  for (std::size_t i = 1; i <= l; ++i) {
    dim += shape.r(i) * (shape.r(i - 1) - shape.r(i));
    dim += degrees[i - 1] * (shape.s(i + 1) - shape.s(i - 1));
  }
  return dim;
}

ProblemSpec validate_problem(const FlagShape& shape, const DegreeVector& degrees,
                             std::vector<Insertion> insertions, bool allow_beta_overflow) {
  const auto dim = dim_fquot(shape, degrees);
  const auto l = shape.length();
  for (const auto& ins : insertions) {
    if (ins.alpha < 1 || ins.alpha > l) {
      throw ValidationError(ValidationErrorKind::ShapeInvalid,
                            "insertion alpha=" + std::to_string(ins.alpha) +
                                " outside 1.." + std::to_string(l));
    }
    if (ins.beta < 1 || ins.beta > shape.s(ins.alpha)) {
      throw ValidationError(ValidationErrorKind::BetaOutOfRange,
                            "insertion " + std::to_string(ins.alpha) + ":" +
                                std::to_string(ins.beta) + " needs 1 <= beta <= s_alpha = " +
                                std::to_string(shape.s(ins.alpha)));
    }
    const auto bound = shape.s(ins.alpha + 1) - shape.s(ins.alpha - 1);
    if (!allow_beta_overflow && ins.beta >= bound) {
      throw ValidationError(ValidationErrorKind::BetaOutOfRange,
                            "insertion " + std::to_string(ins.alpha) + ":" +
                                std::to_string(ins.beta) +
                                " needs beta < s_{alpha+1} - s_{alpha-1} = " +
                                std::to_string(bound));
    }
  }
  const auto total = std::accumulate(insertions.begin(), insertions.end(), std::size_t{0},
                                     [](std::size_t acc, const Insertion& ins) {
                                       return acc + ins.beta;
                                     });
  if (total != dim) {
    throw ValidationError(ValidationErrorKind::DimensionMismatch,
                          "insertion degrees sum to " + std::to_string(total) +
                              " but dim fQuot = " + std::to_string(dim));
  }
  std::sort(insertions.begin(), insertions.end());
  return ProblemSpec{shape, degrees, std::move(insertions), allow_beta_overflow, dim};
}

ProblemSpec validate_problem(std::size_t n, const std::vector<std::size_t>& steps,
                             const DegreeVector& degrees, std::vector<Insertion> insertions,
                             bool allow_beta_overflow) {
  return validate_problem(FlagShape(n, steps), degrees, std::move(insertions),
                          allow_beta_overflow);
}

std::string describe(const ProblemSpec& problem) {
  std::ostringstream out;
  out << "F(";
  for (std::size_t i = 0; i < problem.shape.length(); ++i) {
    out << (i ? "," : "") << problem.shape.steps()[i];
  }
  out << "; " << problem.shape.n() << ") d=(";
  for (std::size_t i = 0; i < problem.degrees.size(); ++i) {
    out << (i ? "," : "") << problem.degrees[i];
  }
  out << ") [";
  // insertions are sorted, so runs of equal entries are adjacent
  bool first = true;
  for (auto it = problem.insertions.begin(); it != problem.insertions.end();) {
    auto end = std::find_if(it, problem.insertions.end(),
                            [&](const Insertion& x) { return x != *it; });
    out << (first ? "" : ", ") << it->alpha << ":" << it->beta;
    if (end - it > 1) out << "x" << (end - it);
    first = false;
    it = end;
  }
  out << "]";
  return out.str();
}

}  // namespace fquot
