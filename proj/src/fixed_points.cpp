#include "fquot/fixed_points.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fquot {

SubsetChain::SubsetChain(std::size_t n, std::vector<std::vector<std::size_t>> levels)
    : n_(n), levels_(std::move(levels)), first_level_(n, levels_.size() + 1) {
  for (std::size_t i = levels_.size(); i >= 1; --i) {
    for (auto j : levels_[i - 1]) {
      if (j == 0 || j > n_) throw std::out_of_range("chain label outside 1..n");
      first_level_[j - 1] = i;
    }
  }
}

bool SubsetChain::contains(std::size_t i, std::size_t j) const {
  return j >= 1 && j <= n_ && first_level_[j - 1] <= i;
}

bool SubsetChain::valid_for(const FlagShape& shape) const {
  if (n_ != shape.n() || levels_.size() != shape.length()) return false;
  for (std::size_t i = 1; i <= length(); ++i) {
    const auto& J = level(i);
    if (J.size() != shape.s(i) || !std::is_sorted(J.begin(), J.end())) return false;
    if (std::adjacent_find(J.begin(), J.end()) != J.end()) return false;
    if (i > 1 && !std::includes(J.begin(), J.end(), level(i - 1).begin(), level(i - 1).end())) {
      return false;
    }
  }
  return true;
}

FixedPoint::FixedPoint(SubsetChain chain, std::size_t n)
    : chain_(std::move(chain)), n_(n), a_(chain_.length() * n, 0), b_(chain_.length() * n, 0) {}

void FixedPoint::set(std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
  a_[index(i, j)] = a;
  b_[index(i, j)] = b;
}

bool FixedPoint::valid_for(const FlagShape& shape, const DegreeVector& degrees) const {
  if (!chain_.valid_for(shape) || degrees.size() != shape.length()) return false;
  const auto l = shape.length();
  for (std::size_t i = 1; i <= l; ++i) {
    std::size_t row = 0;
    for (std::size_t j = 1; j <= n_; ++j) {
      if (!chain_.contains(i, j)) {
        if (a(i, j) != 0 || b(i, j) != 0) return false;
        continue;
      }
      row += d(i, j);
      if (i < l && (a(i, j) < a(i + 1, j) || b(i, j) < b(i + 1, j))) return false;
    }
    if (row != degrees[i - 1]) return false;
  }
  return true;
}

std::string to_string(const FixedPoint& fp) {
  std::ostringstream out;
  const auto& chain = fp.chain();
  for (std::size_t i = 1; i <= chain.length(); ++i) {
    out << (i > 1 ? " ⊆ " : "") << "{";
    bool first = true;
    for (auto j : chain.level(i)) {
      out << (first ? "" : ", ") << j << ":(" << fp.a(i, j) << "," << fp.b(i, j) << ")";
      first = false;
    }
    out << "}";
  }
  return out.str();
}

ChainEnumerator::ChainEnumerator(const FlagShape& shape)
    : n_(shape.n()), l_(shape.length()) {
  labels_.reserve(n_);
  for (std::size_t i = 1; i <= l_ + 1; ++i) {
    labels_.insert(labels_.end(), shape.s(i) - shape.s(i - 1), i);
  }
}

SubsetChain ChainEnumerator::build() const {
  std::vector<std::vector<std::size_t>> levels(l_);
  for (std::size_t j = 1; j <= n_; ++j) {
    for (auto i = labels_[j - 1]; i <= l_; ++i) levels[i - 1].push_back(j);
  }
  return SubsetChain(n_, std::move(levels));
}

std::optional<SubsetChain> ChainEnumerator::next() {
  if (done_) return std::nullopt;
  auto chain = build();
  done_ = !std::next_permutation(labels_.begin(), labels_.end());
  return chain;
}

std::uint64_t count_chains(const FlagShape& shape) {
  // product of binomials C(s_{i+1}, s_i), built up exactly
  std::uint64_t total = 1;
  for (std::size_t i = 1; i <= shape.length(); ++i) {
    const auto top = shape.s(i + 1);
    const auto k = shape.s(i);
    std::uint64_t c = 1;
    for (std::size_t t = 1; t <= k; ++t) c = c * (top - k + t) / t;
    total *= c;
  }
  return total;
}

namespace {

class MatrixWalker {
 public:
  MatrixWalker(const FlagShape& shape, const DegreeVector& degrees, const SubsetChain& chain,
               const FixedPointVisitor& visit)
      : degrees_(degrees), chain_(chain), visit_(visit), current_(chain, shape.n()) {}

  bool run() { return level(chain_.length()); }

 private:
  // Fill level i, then recurse to i - 1.
  bool level(std::size_t i) {
    if (i == 0) return visit_(current_);
    const auto& J = chain_.level(i);
    const bool top = i == chain_.length();
    std::size_t floor_sum = 0;
    for (auto j : J) {
      if (!top) floor_sum += current_.d(i + 1, j);
    }
    if (floor_sum > degrees_[i - 1]) return true;
    // Distribute the remaining degree over 2|J| slots: (a-extra, b-extra) per j.
    std::vector<std::size_t> extra(2 * J.size(), 0);
    return distribute(i, J, extra, 0, degrees_[i - 1] - floor_sum);
  }

  bool distribute(std::size_t i, const std::vector<std::size_t>& J,
                  std::vector<std::size_t>& extra, std::size_t slot, std::size_t remaining) {
    if (slot + 1 == extra.size()) {
      extra[slot] = remaining;
      const bool top = i == chain_.length();
      for (std::size_t k = 0; k < J.size(); ++k) {
        const auto j = J[k];
        const auto a0 = top ? 0 : current_.a(i + 1, j);
        const auto b0 = top ? 0 : current_.b(i + 1, j);
        current_.set(i, j, a0 + extra[2 * k], b0 + extra[2 * k + 1]);
      }
      return level(i - 1);
    }
    for (std::size_t v = remaining + 1; v-- > 0;) {
      extra[slot] = v;
      if (!distribute(i, J, extra, slot + 1, remaining - v)) return false;
    }
    return true;
  }

  const DegreeVector& degrees_;
  const SubsetChain& chain_;
  const FixedPointVisitor& visit_;
  FixedPoint current_;
};

}  // namespace

bool enumerate_weight_matrices(const FlagShape& shape, const DegreeVector& degrees,
                               const SubsetChain& chain, const FixedPointVisitor& visit) {
  if (degrees.size() != shape.length()) {
    throw ValidationError(ValidationErrorKind::ShapeInvalid, "degree vector length mismatch");
  }
  MatrixWalker walker(shape, degrees, chain, visit);
  return walker.run();
}

bool enumerate_fixed_points(const FlagShape& shape, const DegreeVector& degrees,
                            const FixedPointVisitor& visit) {
  ChainEnumerator chains(shape);
  while (auto chain = chains.next()) {
    if (!enumerate_weight_matrices(shape, degrees, *chain, visit)) return false;
  }
  return true;
}

std::uint64_t count_fixed_points(const FlagShape& shape, const DegreeVector& degrees) {
  ChainEnumerator chains(shape);
  std::uint64_t per_chain = 0;
  enumerate_weight_matrices(shape, degrees, *chains.next(), [&](const FixedPoint&) {
    ++per_chain;
    return true;
  });
  return per_chain * count_chains(shape);
}

}  // namespace fquot
