#pragma once

// Torus fixed points of the flag Quot scheme: a nested chain of coordinate
// subsets J_1 ⊆ ... ⊆ J_l of {1..n} with |J_i| = s_i, decorated by
// nonnegative integers a_{i,j}, b_{i,j} (j ∈ J_i) such that
//   a_{i,j} >= a_{i+1,j},  b_{i,j} >= b_{i+1,j},  sum_{j ∈ J_i} (a_{i,j} + b_{i,j}) = d_i.
// The summand at level i, index j is x^{a_{i,j}} y^{b_{i,j}} O(-d_{i,j}) e_j.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fquot/problem.hpp"

namespace fquot {

class SubsetChain {
 public:
  SubsetChain() = default;
  /// levels[i-1] = J_i, each sorted ascending with 1-based labels.
  SubsetChain(std::size_t n, std::vector<std::vector<std::size_t>> levels);

  std::size_t n() const { return n_; }
  std::size_t length() const { return levels_.size(); }
  /// J_i for i in 1..l.
  const std::vector<std::size_t>& level(std::size_t i) const { return levels_[i - 1]; }
  /// Membership j ∈ J_i; i in 1..l+1 (J_{l+1} = {1..n}).
  bool contains(std::size_t i, std::size_t j) const;

  /// True iff the chain is nested with |J_i| = s_i.
  bool valid_for(const FlagShape& shape) const;

  friend bool operator==(const SubsetChain&, const SubsetChain&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> levels_;
  // first_level_[j-1] = smallest i with j ∈ J_i, or l+1
  std::vector<std::size_t> first_level_;
};

class FixedPoint {
 public:
  FixedPoint(SubsetChain chain, std::size_t n);

  const SubsetChain& chain() const { return chain_; }
  std::size_t a(std::size_t i, std::size_t j) const { return a_[index(i, j)]; }
  std::size_t b(std::size_t i, std::size_t j) const { return b_[index(i, j)]; }
  std::size_t d(std::size_t i, std::size_t j) const { return a(i, j) + b(i, j); }
  void set(std::size_t i, std::size_t j, std::size_t a, std::size_t b);

  /// Checks every invariant (chain shape, zero entries off J_i,
  /// monotonicity in i, row sums d_i).
  bool valid_for(const FlagShape& shape, const DegreeVector& degrees) const;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return (i - 1) * n_ + (j - 1); }

  SubsetChain chain_;
  std::size_t n_;
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
};

std::string to_string(const FixedPoint& fp);

/// Lazy stream over all subset chains of a shape, each exactly once, in
/// lexicographic order of the "first level containing j" labelling.
class ChainEnumerator {
 public:
  explicit ChainEnumerator(const FlagShape& shape);

  std::optional<SubsetChain> next();

 private:
  SubsetChain build() const;

  std::size_t n_;
  std::size_t l_;
  std::vector<std::size_t> labels_;
  bool done_ = false;
};

/// Number of chains, n! / (s_1! (s_2 - s_1)! ... (n - s_l)!).
std::uint64_t count_chains(const FlagShape& shape);

/// Visitor over every (a, b) decoration of `chain`. The visitor returns
/// false to stop early; the function returns false iff it was stopped.
/// Levels are filled from l down to 1 so that the lower bounds
/// a_{i,j} >= a_{i+1,j}, b_{i,j} >= b_{i+1,j} prune early.
using FixedPointVisitor = std::function<bool(const FixedPoint&)>;
bool enumerate_weight_matrices(const FlagShape& shape, const DegreeVector& degrees,
                               const SubsetChain& chain, const FixedPointVisitor& visit);

/// All fixed points in stream order (chain-major). Test and CLI convenience.
bool enumerate_fixed_points(const FlagShape& shape, const DegreeVector& degrees,
                            const FixedPointVisitor& visit);

/// Total fixed-point count. The decoration count depends only on the
/// shape, so this is count_chains times the count for a single chain.
std::uint64_t count_fixed_points(const FlagShape& shape, const DegreeVector& degrees);

}  // namespace fquot
