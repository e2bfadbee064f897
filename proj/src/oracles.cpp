#include "fquot/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fquot/localization.hpp"

namespace fquot::oracle {

Rational pn_localization_sum(std::size_t n, std::size_t d, const WeightSample& w) {
  if (w.size() != n + 1) {
    throw std::invalid_argument("P^" + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                " weights");
  }
  const auto power = static_cast<unsigned long>((n + 1) * d + n);
  // pole (i, k) sits at lambda_i + k hbar
  std::vector<Rational> poles;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    for (std::size_t k = 0; k <= d; ++k) {
      poles.emplace_back(w.lambda(i) + Rational(static_cast<unsigned long>(k)) * w.hbar());
    }
  }
  Rational total = 0;
  for (std::size_t x = 0; x < poles.size(); ++x) {
    Rational den = 1;
    for (std::size_t y = 0; y < poles.size(); ++y) {
      if (y == x) continue;
      Rational gap = poles[x] - poles[y];
      if (gap == 0) throw ZeroDenominator("coincident poles in projective-space residue sum");
      den *= gap;
    }
    mpz_class num_pow, den_pow;
    mpz_pow_ui(num_pow.get_mpz_t(), poles[x].get_num_mpz_t(), power);
    mpz_pow_ui(den_pow.get_mpz_t(), poles[x].get_den_mpz_t(), power);
    total += make_rational(num_pow, den_pow) / den;
  }
  return total;
}

namespace {

// Visits every chain J_1 ⊆ ... ⊆ J_l as membership masks over 1..n.
void for_each_flag(const FlagShape& shape,
                   const std::function<void(const std::vector<std::vector<bool>>&)>& visit) {
  const auto n = shape.n();
  const auto l = shape.length();
  std::vector<std::vector<bool>> masks(l, std::vector<bool>(n, false));

  std::function<void(std::size_t, std::size_t, std::size_t)> grow =
      [&](std::size_t level, std::size_t from, std::size_t missing) {
        if (missing == 0) {
          if (level == l) {
            visit(masks);
            return;
          }
          masks[level] = masks[level - 1];
          grow(level + 1, 0, shape.s(level + 1) - shape.s(level));
          return;
        }
        auto& mask = masks[level - 1];
        for (std::size_t j = from; j < n; ++j) {
          if (mask[j]) continue;
          mask[j] = true;
          grow(level, j + 1, missing - 1);
          mask[j] = false;
        }
      };
  grow(1, 0, shape.s(1));
}

}  // namespace

Rational classical_flag_integral(const FlagShape& shape, std::span<const Insertion> insertions,
                                 const WeightSample& w) {
  const auto dim = shape.flag_dimension();
  std::size_t total_beta = 0;
  for (const auto& ins : insertions) {
    if (ins.alpha < 1 || ins.alpha > shape.length()) {
      throw ValidationError(ValidationErrorKind::ShapeInvalid, "insertion alpha out of range");
    }
    total_beta += ins.beta;
  }
  if (total_beta != dim) {
    throw ValidationError(ValidationErrorKind::DimensionMismatch,
                          "insertion degrees sum to " + std::to_string(total_beta) +
                              " but dim Fl = " + std::to_string(dim));
  }
  if (w.size() != shape.n()) throw std::invalid_argument("weight sample size != n");

  const auto n = shape.n();
  const auto l = shape.length();
  Rational total = 0;
  for_each_flag(shape, [&](const std::vector<std::vector<bool>>& masks) {
    auto in_level = [&](std::size_t i, std::size_t j) {
      return i > l || masks[i - 1][j - 1];
    };
    Rational term = 1;
    for (const auto& ins : insertions) {
      std::vector<Rational> dual;
      for (std::size_t j = 1; j <= n; ++j) {
        if (in_level(ins.alpha, j)) dual.emplace_back(-w.lambda(j));
      }
      term *= ins.beta > dual.size() ? Rational(0) : elementary_symmetric(dual, ins.beta);
    }
    Rational euler = 1;
    for (std::size_t i = 1; i <= l; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (!in_level(i, j)) continue;
        for (std::size_t m = 1; m <= n; ++m) {
          if (in_level(i + 1, m) && !in_level(i, m)) euler *= w.lambda(m) - w.lambda(j);
        }
      }
    }
    if (euler == 0) throw ZeroDenominator("tangent weight vanishes at a coordinate flag");
    total += term / euler;
  });
  return total;
}

std::uint64_t classical_term_count(const FlagShape& shape) {
  std::uint64_t count = 0;
  for_each_flag(shape, [&](const std::vector<std::vector<bool>>&) { ++count; });
  return count;
}

Partition::Partition(std::vector<std::size_t> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::size_t Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

Partition Partition::rectangle(std::size_t rows, std::size_t width) {
  return Partition(std::vector<std::size_t>(width == 0 ? 0 : rows, width));
}

Partition Partition::column(std::size_t height) {
  return Partition(std::vector<std::size_t>(height, 1));
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    out += (i ? "," : "") + std::to_string(p.parts[i]);
  }
  return out + ")";
}

void QPolynomial::add(std::size_t exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt QPolynomial::coeff(std::size_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<Partition> column_pieri(const Partition& lambda, std::size_t beta, std::size_t k) {
  std::vector<Partition> out;
  if (lambda.rows() > k || beta > k) return out;
  std::vector<std::size_t> base(lambda.parts);
  base.resize(k, 0);
  // choose the beta rows that receive a box
  std::vector<bool> pick(k, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(beta), true);
  do {
    std::vector<std::size_t> mu(base);
    for (std::size_t i = 0; i < k; ++i) mu[i] += pick[i] ? 1 : 0;
    if (std::is_sorted(mu.begin(), mu.end(), std::greater<>())) out.emplace_back(std::move(mu));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RimHookReduction> rim_hook_reduce(const Partition& lambda, std::size_t n,
                                                std::size_t k) {
  if (lambda.rows() > k) return std::nullopt;
  // Beta numbers (abacus): bead_i = lambda_i + (k - i). Removing an n-rim hook
  // moves one bead from x to the free position x - n; the hook occupies
  // 1 + (#beads strictly between) rows.
  std::vector<std::size_t> beads(k);
  for (std::size_t i = 0; i < k; ++i) {
    beads[i] = (i < lambda.rows() ? lambda.parts[i] : 0) + (k - 1 - i);
  }
  RimHookReduction out;
  const auto max_width = n - k;
  auto width = [&] { return beads[0] - (k - 1); };
  while (width() > max_width) {
    bool moved = false;
    for (std::size_t i = 0; i < k && !moved; ++i) {
      const auto x = beads[i];
      if (x < n) continue;
      const auto target = x - n;
      if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
      const auto between = static_cast<std::size_t>(std::count_if(
          beads.begin(), beads.end(), [&](std::size_t b) { return b > target && b < x; }));
      const auto height = between + 1;
      if ((k - height) % 2 == 1) out.sign = -out.sign;
      ++out.q_power;
      beads[i] = target;
      std::sort(beads.begin(), beads.end(), std::greater<>());
      moved = true;
    }
    if (!moved) return std::nullopt;
  }
  std::vector<std::size_t> parts(k);
  for (std::size_t i = 0; i < k; ++i) parts[i] = beads[i] - (k - 1 - i);
  out.core = Partition(std::move(parts));
  return out;
}

QuantumClass quantum_multiply(const QuantumClass& cls, std::size_t beta, std::size_t n,
                              std::size_t k) {
  QuantumClass out;
  for (const auto& [lambda, poly] : cls) {
    for (const auto& mu : column_pieri(lambda, beta, k)) {
      const auto reduced = rim_hook_reduce(mu, n, k);
      if (!reduced) continue;
      auto& target = out[reduced->core];
      for (const auto& [e, c] : poly.terms()) {
        target.add(e + reduced->q_power, reduced->sign > 0 ? c : BigInt(-c));
      }
      if (target.is_zero()) out.erase(reduced->core);
    }
  }
  return out;
}

BigInt grassmannian_quantum_integral(std::size_t n, std::size_t k, std::size_t d,
                                     std::span<const std::size_t> betas) {
  if (k == 0 || k >= n) {
    throw ValidationError(ValidationErrorKind::ShapeInvalid, "Grassmannian needs 0 < k < n");
  }
  const auto total = std::accumulate(betas.begin(), betas.end(), std::size_t{0});
  const auto dim = k * (n - k) + n * d;
  if (total != dim) {
    throw ValidationError(ValidationErrorKind::DimensionMismatch,
                          "insertion degrees sum to " + std::to_string(total) +
                              " but the point class of degree " + std::to_string(d) +
                              " needs " + std::to_string(dim));
  }
  QuantumClass cls;
  cls[Partition{}].add(0, 1);
  for (auto beta : betas) {
    cls = quantum_multiply(cls, beta, n, k);
    if (cls.empty()) return 0;
  }
  auto it = cls.find(Partition::rectangle(k, n - k));
  return it == cls.end() ? BigInt(0) : it->second.coeff(d);
}

}  // namespace fquot::oracle
