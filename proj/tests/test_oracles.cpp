#include <doctest.h>

#include <functional>

#include "fquot/localization.hpp"
#include "fquot/oracles.hpp"

using namespace fquot;
using namespace fquot::oracle;

namespace {

// The projective-space sum with denominators ((p-k) hbar) and
// ((q-k) hbar + lambda_j - lambda_i), i.e. each factor negated.
Rational pn_sum_negated_factors(std::size_t n, std::size_t d, const WeightSample& w) {
  const auto power = (n + 1) * d + n;
  Rational total = 0;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    for (std::size_t k = 0; k <= d; ++k) {
      const Rational kk(static_cast<unsigned long>(k));
      Rational num = 1;
      for (std::size_t t = 0; t < power; ++t) num *= w.lambda(i) + kk * w.hbar();
      Rational den = 1;
      for (std::size_t p = 0; p <= d; ++p) {
        if (p != k) den *= (Rational(static_cast<unsigned long>(p)) - kk) * w.hbar();
      }
      for (std::size_t q = 0; q <= d; ++q) {
        for (std::size_t j = 1; j <= n + 1; ++j) {
          if (j == i) continue;
          den *= (Rational(static_cast<unsigned long>(q)) - kk) * w.hbar() + w.lambda(j) -
                 w.lambda(i);
        }
      }
      total += num / den;
    }
  }
  return total;
}

QuantumClass single(const Partition& p) {
  QuantumClass cls;
  cls[p].add(0, 1);
  return cls;
}

QuantumClass power_of(std::size_t beta, std::size_t times, std::size_t n, std::size_t k) {
  auto cls = single(Partition{});
  for (std::size_t t = 0; t < times; ++t) cls = quantum_multiply(cls, beta, n, k);
  return cls;
}

void for_each_multiset(std::size_t total, std::size_t max_part,
                       const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t cap) {
    if (left == 0) {
      fn(parts);
      return;
    }
    for (std::size_t v = std::min(left, cap); v >= 1; --v) {
      parts.push_back(v);
      rec(left - v, v);
      parts.pop_back();
    }
  };
  rec(total, max_part);
}

}  // namespace

TEST_CASE("projective-space residue sum is 1") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 0; d <= 2; ++d) {
      for (std::int64_t seed = 0; seed < 3; ++seed) {
        const auto w = sample_weights(n + 1, seed, 0);
        CHECK(pn_localization_sum(n, d, w) == 1);
        const auto power = (n + 1) * d + n;
        CHECK(pn_sum_negated_factors(n, d, w) == (power % 2 == 0 ? 1 : -1));
      }
    }
  }
  CHECK_THROWS_AS(pn_localization_sum(2, 1, sample_weights(2, 0, 0)), std::invalid_argument);
  // lambda_2 + hbar = lambda_1 + 2 hbar collides at d = 2
  const WeightSample bad(Rational(1), {Rational(0), Rational(1)});
  CHECK_THROWS_AS(pn_localization_sum(1, 2, bad), ZeroDenominator);
}

TEST_CASE("classical flag integrals") {
  const auto w = sample_weights(4, 1, 0);
  const std::vector<Insertion> p1{{1, 1}};
  CHECK(classical_flag_integral(FlagShape(2, {1}), p1,
                                WeightSample(Rational(10), {Rational(0), Rational(1)})) == 1);
  const std::vector<Insertion> gr{{1, 2}, {1, 2}};
  CHECK(classical_flag_integral(FlagShape(4, {2}), gr, w) == 1);
  const std::vector<Insertion> gr_sigma1{4, {1, 1}};
  CHECK(classical_flag_integral(FlagShape(4, {2}), gr_sigma1, w) == 2);
  const std::vector<Insertion> short_list{{1, 1}, {2, 1}};
  CHECK_THROWS_AS(classical_flag_integral(FlagShape(3, {1, 2}), short_list, sample_weights(3, 0, 0)),
                  ValidationError);
  CHECK(classical_term_count(FlagShape(3, {1, 2})) == 6);
  CHECK(classical_term_count(FlagShape(5, {2, 3})) == 30);
}

TEST_CASE("column Pieri rule") {
  CHECK(column_pieri(Partition{}, 1, 2) == std::vector<Partition>{Partition({1})});
  CHECK(column_pieri(Partition({1}), 1, 2) ==
        std::vector<Partition>{Partition({1, 1}), Partition({2})});
  CHECK(column_pieri(Partition({2, 1}), 2, 2) == std::vector<Partition>{Partition({3, 2})});
  CHECK(column_pieri(Partition({1}), 2, 2) == std::vector<Partition>{Partition({2, 1})});
  CHECK(column_pieri(Partition{}, 3, 2).empty());
  CHECK(column_pieri(Partition({1, 1, 1}), 1, 2).empty());
}

TEST_CASE("rim hook reduction reproduces the quantum relations") {
  // In QH*(Gr(k,n)): h_{n-k+1} = ... = h_{n-1} = 0 and h_n = (-1)^{k+1} q.
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t m = n - k + 1; m < n; ++m) {
        CHECK_FALSE(rim_hook_reduce(Partition({m}), n, k).has_value());
      }
      const auto top = rim_hook_reduce(Partition({n}), n, k);
      REQUIRE(top.has_value());
      CHECK(top->q_power == 1);
      CHECK(top->core == Partition{});
      CHECK(top->sign == (k % 2 == 1 ? 1 : -1));
    }
  }
  const auto five = rim_hook_reduce(Partition({5}), 4, 2);
  REQUIRE(five.has_value());
  CHECK(five->core == Partition({1}));
  CHECK(five->sign == -1);
  const auto inside = rim_hook_reduce(Partition({2, 1}), 4, 2);
  REQUIRE(inside.has_value());
  CHECK(inside->q_power == 0);
  CHECK(inside->core == Partition({2, 1}));
}

TEST_CASE("rim hook sign anchors") {
  // single row in Gr(1, n+1)
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto r = rim_hook_reduce(Partition({n + 2}), n + 1, 1);
    REQUIRE(r.has_value());
    CHECK(r->sign == 1);
    CHECK(r->core == Partition({1}));
  }
  // Gr(2,4): sigma_1 * sigma_21 and sigma_2 * sigma_11 both have q-coefficient +1
  const auto a = quantum_multiply(single(Partition({2, 1})), 1, 4, 2);
  CHECK(a.at(Partition{}).coeff(1) == 1);
  CHECK(a.at(Partition({2, 2})).coeff(0) == 1);
  const auto b = quantum_multiply(single(Partition({2})), 2, 4, 2);
  CHECK(b.size() == 1);
  CHECK(b.at(Partition{}).coeff(1) == 1);
}

TEST_CASE("Gr(2,4) quantum products") {
  const auto sq = power_of(1, 2, 4, 2);
  CHECK(sq.size() == 2);
  CHECK(sq.at(Partition({2})).terms() == std::map<std::size_t, BigInt>{{0, 1}});
  CHECK(sq.at(Partition({1, 1})).terms() == std::map<std::size_t, BigInt>{{0, 1}});

  const auto eighth = power_of(1, 8, 4, 2);
  CHECK(eighth.at(Partition({2, 2})).coeff(1) == 8);

  const std::vector<std::size_t> ones(8, 1);
  CHECK(grassmannian_quantum_integral(4, 2, 1, ones) == 8);
  const std::vector<std::size_t> twos(4, 2);
  CHECK(grassmannian_quantum_integral(4, 2, 1, twos) == 0);
  const std::vector<std::size_t> wrong(7, 1);
  CHECK_THROWS_AS(grassmannian_quantum_integral(4, 2, 1, wrong), ValidationError);
}

TEST_CASE("projective space through the Grassmannian oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 0; d <= 3; ++d) {
      const std::vector<std::size_t> ones((n + 1) * d + n, 1);
      CHECK(grassmannian_quantum_integral(n + 1, 1, d, ones) == 1);
    }
  }
}

TEST_CASE("Grassmannian oracle at d = 0 equals the classical integral") {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const FlagShape shape(n, {k});
      const auto w = sample_weights(n, static_cast<std::int64_t>(n * 10 + k), 0);
      for_each_multiset(k * (n - k), k, [&](const std::vector<std::size_t>& betas) {
        std::vector<Insertion> ins;
        for (auto b : betas) ins.push_back({1, b});
        CHECK(Rational(grassmannian_quantum_integral(n, k, 0, betas)) ==
              classical_flag_integral(shape, ins, w));
      });
    }
  }
}
