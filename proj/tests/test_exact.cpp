#include <doctest.h>

#include <random>
#include <set>

#include "fquot/exact.hpp"

using namespace fquot;

namespace {

WeightSample sample_10_01() { return WeightSample(Rational(10), {Rational(0), Rational(1)}); }

// Brute-force e_k: sum over all k-subsets.
Rational subset_sum(const std::vector<Rational>& values, std::size_t k) {
  Rational total = 0;
  const auto n = values.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Rational prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) prod *= values[i];
    }
    total += prod;
  }
  return total;
}

std::vector<Rational> random_rationals(std::mt19937& gen, std::size_t n) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(make_rational(num(gen), den(gen)));
  return out;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  auto q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(is_integer(make_rational(10, 5)));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("eval_character by direct substitution") {
  const auto w = sample_10_01();
  CHECK(eval_character(Character(1, {{2, 1}, {1, -1}}), w) == 11);
  CHECK(eval_character(Character(), w) == 0);
  CHECK(eval_character(Character(-1), w) == -10);
  CHECK(eval_weight_difference(1, 2, 1, w) == 11);
  CHECK_THROWS_AS(eval_character(Character(0, {{3, 1}}), w), std::out_of_range);
}

TEST_CASE("characters normalize their lambda terms") {
  const auto c = Character(2, {{3, 1}, {1, -1}, {3, -1}});
  CHECK(c.lambda_terms().size() == 1);
  CHECK(c.lambda_coeff(1) == -1);
  CHECK(c.lambda_coeff(3) == 0);
  CHECK(Character::weight_difference(4, 2, 2) == Character(4));
  CHECK(to_string(Character::weight_difference(-1, 2, 1)) == "-h - l1 + l2");
  CHECK((c + (-c)).is_zero());
}

TEST_CASE("eval_character is linear") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coeff(-5, 5), idx(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = sample_weights(4, trial, 0, 1000);
    Character c1(coeff(gen), {{static_cast<std::size_t>(idx(gen)), coeff(gen)},
                             {static_cast<std::size_t>(idx(gen)), coeff(gen)}});
    Character c2(coeff(gen), {{static_cast<std::size_t>(idx(gen)), coeff(gen)}});
    CHECK(eval_character(c1 + c2, w) == eval_character(c1, w) + eval_character(c2, w));
  }
}

TEST_CASE("elementary_symmetric small cases") {
  const std::vector<Rational> v{2, 3};
  CHECK(elementary_symmetric(v, 0) == 1);
  CHECK(elementary_symmetric(v, 1) == 5);
  CHECK(elementary_symmetric(v, 2) == 6);
  CHECK(elementary_symmetric(std::vector<Rational>{}, 0) == 1);
  CHECK_THROWS_AS(elementary_symmetric(v, 3), std::invalid_argument);
}

TEST_CASE("elementary_symmetric agrees with subset enumeration and Newton identities") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 7);
    const auto values = random_rationals(gen, n);
    std::vector<Rational> e(n + 1), p(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      e[k] = elementary_symmetric(values, k);
      CHECK(e[k] == subset_sum(values, k));
      p[k] = 0;
      for (const auto& v : values) {
        Rational pw = 1;
        for (std::size_t t = 0; t < k; ++t) pw *= v;
        p[k] += pw;
      }
    }
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    for (std::size_t k = 1; k <= n; ++k) {
      Rational rhs = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        rhs += (i % 2 == 1 ? 1 : -1) * e[k - i] * p[i];
      }
      CHECK(Rational(static_cast<long>(k)) * e[k] == rhs);
    }
  }
}

TEST_CASE("generating polynomial prod (t + v) matches e_k") {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto values = random_rationals(gen, 5);
    for (const auto& t : random_rationals(gen, 3)) {
      Rational lhs = 1;
      for (const auto& v : values) lhs *= t + v;
      Rational rhs = 0, tpow = 1;
      for (std::size_t k = values.size() + 1; k-- > 0;) {
        rhs += elementary_symmetric(values, k) * tpow;
        tpow *= t;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("sample_weights is deterministic and generic") {
  const auto a = sample_weights(5, 42, 0);
  const auto b = sample_weights(5, 42, 0);
  CHECK(a.hbar() == b.hbar());
  CHECK(std::equal(a.lambdas().begin(), a.lambdas().end(), b.lambdas().begin()));

  const auto c = sample_weights(2, 42, 1);
  const auto d = sample_weights(2, 42, 0);
  CHECK((c.hbar() != d.hbar() || c.lambda(1) != d.lambda(1) || c.lambda(2) != d.lambda(2)));

  for (std::uint64_t attempt = 0; attempt < 20; ++attempt) {
    const auto w = sample_weights(6, -3, attempt);
    CHECK(w.hbar() != 0);
    std::set<std::string> seen;
    for (const auto& l : w.lambdas()) {
      CHECK(is_integer(l));
      CHECK(abs(l) <= Rational(static_cast<unsigned long>(kDefaultSampleMagnitude)));
      seen.insert(to_string(l));
    }
    CHECK(seen.size() == 6);
  }
  // a window of 1 still yields distinct values (it is widened to n)
  const auto tight = sample_weights(4, 0, 0, 1);
  CHECK(tight.size() == 4);
}

TEST_CASE("weight samples reject degenerate input") {
  CHECK_THROWS_AS(WeightSample(Rational(0), {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSample(Rational(1), {Rational(2), Rational(2)}), std::invalid_argument);
  const auto w = sample_10_01();
  const std::vector<std::size_t> swap{2, 1};
  CHECK(w.permuted(swap).lambda(1) == 1);
  CHECK(w.scaled(Rational(3)).hbar() == 30);
}
