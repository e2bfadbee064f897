#include "fquot/exact.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace fquot {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

Character::Character(std::int64_t hbar_coeff, std::vector<LambdaTerm> lambda_terms)
    : hbar_(hbar_coeff), lambda_(std::move(lambda_terms)) {
  normalize();
}

Character Character::weight_difference(std::int64_t hbar_coeff, std::size_t plus,
                                       std::size_t minus) {
  return Character(hbar_coeff, {{plus, 1}, {minus, -1}});
}

void Character::normalize() {
  for (const auto& t : lambda_) {
    if (t.index == 0) throw std::out_of_range("lambda index must be 1-based");
  }
  std::sort(lambda_.begin(), lambda_.end(),
            [](const LambdaTerm& x, const LambdaTerm& y) { return x.index < y.index; });
  std::vector<LambdaTerm> merged;
  merged.reserve(lambda_.size());
  for (const auto& t : lambda_) {
    if (!merged.empty() && merged.back().index == t.index) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const LambdaTerm& t) { return t.coeff == 0; });
  lambda_ = std::move(merged);
}

std::int64_t Character::lambda_coeff(std::size_t index) const {
  for (const auto& t : lambda_) {
    if (t.index == index) return t.coeff;
  }
  return 0;
}

Character Character::operator+(const Character& other) const {
  std::vector<LambdaTerm> terms(lambda_);
  terms.insert(terms.end(), other.lambda_.begin(), other.lambda_.end());
  return Character(hbar_ + other.hbar_, std::move(terms));
}

Character Character::operator-() const {
  std::vector<LambdaTerm> terms(lambda_);
  for (auto& t : terms) t.coeff = -t.coeff;
  return Character(-hbar_, std::move(terms));
}

std::string to_string(const Character& ch) {
  std::string out;
  auto append = [&out](std::int64_t c, const std::string& sym) {
    if (c == 0) return;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += sym;
  };
  append(ch.hbar_coeff(), "h");
  for (const auto& t : ch.lambda_terms()) append(t.coeff, "l" + std::to_string(t.index));
  return out.empty() ? "0" : out;
}

WeightSample::WeightSample(Rational hbar, std::vector<Rational> lambda)
    : hbar_(std::move(hbar)), lambda_(std::move(lambda)) {
  if (hbar_ == 0) throw std::invalid_argument("weight sample needs hbar != 0");
  if (lambda_.empty()) throw std::invalid_argument("weight sample needs n >= 1");
  std::vector<Rational> sorted(lambda_);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("weight sample lambdas must be pairwise distinct");
  }
}

const Rational& WeightSample::lambda(std::size_t index) const {
  if (index == 0 || index > lambda_.size()) {
    throw std::out_of_range("lambda index " + std::to_string(index) +
                            " outside 1.." + std::to_string(lambda_.size()));
  }
  return lambda_[index - 1];
}

WeightSample WeightSample::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != lambda_.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Rational> out;
  out.reserve(perm.size());
  for (auto p : perm) out.push_back(lambda(p));
  return WeightSample(hbar_, std::move(out));
}

WeightSample WeightSample::scaled(const Rational& t) const {
  std::vector<Rational> out;
  out.reserve(lambda_.size());
  for (const auto& l : lambda_) out.emplace_back(t * l);
  return WeightSample(t * hbar_, std::move(out));
}

Rational eval_character(const Character& ch, const WeightSample& w) {
  Rational acc = Rational(static_cast<long>(ch.hbar_coeff())) * w.hbar();
  for (const auto& t : ch.lambda_terms()) {
    acc += Rational(static_cast<long>(t.coeff)) * w.lambda(t.index);
  }
  return acc;
}

Rational eval_weight_difference(std::int64_t hbar_coeff, std::size_t plus,
                                std::size_t minus, const WeightSample& w) {
  Rational acc = w.lambda(plus) - w.lambda(minus);
  if (hbar_coeff != 0) acc += Rational(static_cast<long>(hbar_coeff)) * w.hbar();
  return acc;
}

Rational elementary_symmetric(std::span<const Rational> values, std::size_t k) {
  if (k > values.size()) {
    throw std::invalid_argument("elementary_symmetric: k=" + std::to_string(k) +
                                " exceeds " + std::to_string(values.size()) + " values");
  }
  // e[t] after processing a prefix of values; only degrees up to k matter.
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (const auto& v : values) {
    for (std::size_t t = k; t >= 1; --t) e[t] += e[t - 1] * v;
  }
  return e[k];
}

WeightSample sample_weights(std::size_t n, std::int64_t seed, std::uint64_t attempt,
                            std::uint64_t magnitude) {
  if (n == 0) throw std::invalid_argument("sample_weights needs n >= 1");
  magnitude = std::clamp<std::uint64_t>(magnitude, n, std::uint64_t{1} << 62);
  const auto useed = static_cast<std::uint64_t>(seed);
  std::seed_seq seq{static_cast<std::uint32_t>(useed), static_cast<std::uint32_t>(useed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(attempt),
                    static_cast<std::uint32_t>(attempt >> 32)};
  std::mt19937_64 gen(seq);
  const std::uint64_t span = 2 * magnitude + 1;
  auto draw = [&] {
    return static_cast<std::int64_t>(gen() % span) - static_cast<std::int64_t>(magnitude);
  };

  std::int64_t hbar = 0;
  while (hbar == 0) hbar = draw();

  std::set<std::int64_t> seen;
  std::vector<Rational> lambda;
  lambda.reserve(n);
  while (lambda.size() < n) {
    const auto v = draw();
    if (seen.insert(v).second) lambda.emplace_back(static_cast<long>(v));
  }
  return WeightSample(Rational(static_cast<long>(hbar)), std::move(lambda));
}

}  // namespace fquot
