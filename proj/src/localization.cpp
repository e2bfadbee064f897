#include "fquot/localization.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace fquot {

std::string to_string(EngineErrorKind kind) {
  switch (kind) {
    case EngineErrorKind::SampleDisagreement: return "SampleDisagreement";
    case EngineErrorKind::NonIntegerResult: return "NonIntegerResult";
    case EngineErrorKind::ResampleExhausted: return "ResampleExhausted";
  }
  return "EngineError";
}

namespace {

// Calls emit1/emit2(hbar_coeff, plus, minus) for every character
// hbar_coeff * hbar + lambda_plus - lambda_minus of tang1 / tang2.
template <class Emit1, class Emit2>
void for_each_tangent_character(const FixedPoint& fp, const FlagShape& shape, Emit1&& emit1,
                                Emit2&& emit2) {
  const auto& chain = fp.chain();
  const auto n = shape.n();
  const auto l = shape.length();
  for (std::size_t i = 1; i <= l; ++i) {
    for (auto j : chain.level(i)) {
      const auto a = static_cast<std::int64_t>(fp.a(i, j));
      const auto b = static_cast<std::int64_t>(fp.b(i, j));
      const auto d = a + b;

      // Hom(S_i, Q_i): summands inside J_i, then coordinate lines outside it.
      for (auto jp : chain.level(i)) {
        const auto ap = static_cast<std::int64_t>(fp.a(i, jp));
        const auto bp = static_cast<std::int64_t>(fp.b(i, jp));
        for (std::int64_t p = 0; p < ap; ++p) emit1(p - a, jp, j);
        for (std::int64_t p = 0; p < bp; ++p) emit1(b - p, jp, j);
      }
      for (std::size_t m = 1; m <= n; ++m) {
        if (chain.contains(i, m)) continue;
        for (std::int64_t p = 0; p <= d; ++p) emit1(p - a, m, j);
      }

      if (i == l) continue;
      // Hom(S_i, Q_{i+1})
      for (auto jp : chain.level(i + 1)) {
        const auto ap = static_cast<std::int64_t>(fp.a(i + 1, jp));
        const auto bp = static_cast<std::int64_t>(fp.b(i + 1, jp));
        for (std::int64_t p = 0; p < ap; ++p) emit2(p - a, jp, j);
        for (std::int64_t p = 0; p < bp; ++p) emit2(b - p, jp, j);
      }
      for (std::size_t m = 1; m <= n; ++m) {
        if (chain.contains(i + 1, m)) continue;
        for (std::int64_t p = 0; p <= d; ++p) emit2(p - a, m, j);
      }
    }
  }
}

// Running product kept as an unreduced fraction num/den.
struct FractionProduct {
  BigInt num = 1;
  BigInt den = 1;

  void multiply(const Rational& v) {
    num *= v.get_num();
    if (v.get_den() != 1) den *= v.get_den();
  }
  void divide(const Rational& v) {
    den *= v.get_num();
    if (v.get_den() != 1) num *= v.get_den();
  }
  Rational value() const { return make_rational(num, den); }
};

}  // namespace

TangentData tangent_characters(const FixedPoint& fp, const FlagShape& shape) {
  TangentData out;
  for_each_tangent_character(
      fp, shape,
      [&](std::int64_t h, std::size_t plus, std::size_t minus) {
        out.tang1.push_back(Character::weight_difference(h, plus, minus));
      },
      [&](std::int64_t h, std::size_t plus, std::size_t minus) {
        out.tang2.push_back(Character::weight_difference(h, plus, minus));
      });
  return out;
}

Rational sigma(const FixedPoint& fp, std::size_t alpha, std::size_t beta,
               const WeightSample& w) {
  const auto& J = fp.chain().level(alpha);
  if (beta > J.size()) return 0;
  std::vector<Rational> dual;
  dual.reserve(J.size());
  for (auto j : J) {
    dual.emplace_back(-(Rational(static_cast<unsigned long>(fp.a(alpha, j))) * w.hbar() +
                        w.lambda(j)));
  }
  return elementary_symmetric(dual, beta);
}

Rational contribution(const FixedPoint& fp, const ProblemSpec& problem, const WeightSample& w) {
  FractionProduct term;
  for (const auto& ins : problem.insertions) term.multiply(sigma(fp, ins.alpha, ins.beta, w));
  for_each_tangent_character(
      fp, problem.shape,
      [&](std::int64_t h, std::size_t plus, std::size_t minus) {
        const auto v = eval_weight_difference(h, plus, minus, w);
        if (v == 0) {
          throw ZeroDenominator("tang1 character vanishes at " + to_string(fp));
        }
        term.divide(v);
      },
      [&](std::int64_t h, std::size_t plus, std::size_t minus) {
        term.multiply(eval_weight_difference(h, plus, minus, w));
      });
  if (term.num == 0) return 0;
  return term.value();
}

LocalizationSum localization_sum(const ProblemSpec& problem, const WeightSample& w,
                                 std::size_t workers) {
  workers = std::max<std::size_t>(workers, 1);
  ChainEnumerator chains(problem.shape);
  std::mutex chains_mutex;
  std::atomic<bool> abort{false};
  std::vector<Rational> partial(workers, Rational(0));
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](std::size_t id) {
    try {
      while (!abort.load(std::memory_order_relaxed)) {
        std::optional<SubsetChain> chain;
        {
          std::lock_guard lock(chains_mutex);
          chain = chains.next();
        }
        if (!chain) break;
        enumerate_weight_matrices(problem.shape, problem.degrees, *chain,
                                  [&](const FixedPoint& fp) {
                                    partial[id] += contribution(fp, problem, w);
                                    ++counts[id];
                                    return !abort.load(std::memory_order_relaxed);
                                  });
      }
    } catch (...) {
      errors[id] = std::current_exception();
      abort = true;
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  LocalizationSum out{Rational(0), 0};
  for (std::size_t id = 0; id < workers; ++id) {
    out.total += partial[id];
    out.fixed_points += counts[id];
  }
  return out;
}

SampledValue evaluate_across_samples(std::size_t n, const SampleOptions& options,
                                     const std::function<Rational(const WeightSample&)>& at) {
  const auto wanted = std::max<std::size_t>(options.samples, 1);
  std::optional<Rational> first;
  SampledValue out;
  std::uint64_t attempt = 0;
  for (; out.samples_used < wanted; ++attempt) {
    if (attempt >= wanted + options.max_resamples) {
      throw EngineError(EngineErrorKind::ResampleExhausted,
                        "no admissible sample after " + std::to_string(attempt) + " attempts");
    }
    const auto w = sample_weights(n, options.seed, attempt, options.magnitude);
    Rational value;
    try {
      value = at(w);
    } catch (const ZeroDenominator&) {
      continue;
    }
    if (!is_integer(value)) {
      throw EngineError(EngineErrorKind::NonIntegerResult,
                        "total " + to_string(value) + " at attempt " + std::to_string(attempt));
    }
    if (first && *first != value) {
      throw EngineError(EngineErrorKind::SampleDisagreement,
                        "totals " + to_string(*first) + " and " + to_string(value) +
                            " differ across samples");
    }
    if (!first) first = value;
    ++out.samples_used;
  }
  out.value = *first;
  out.attempts = attempt;
  return out;
}

InvariantResult invariant(const ProblemSpec& problem, const SampleOptions& options,
                          std::size_t workers) {
  if (options.samples < 2) throw std::invalid_argument("invariant needs at least 2 samples");
  std::uint64_t fixed_points = 0;
  const auto sampled =
      evaluate_across_samples(problem.shape.n(), options, [&](const WeightSample& w) {
        auto sum = localization_sum(problem, w, workers);
        fixed_points = sum.fixed_points;
        return sum.total;
      });
  InvariantResult result;
  result.value = sampled.value;
  result.is_integer = is_integer(sampled.value);
  result.fixed_point_count = fixed_points;
  result.dimension = problem.dimension;
  result.samples_used = sampled.samples_used;
  result.seed = options.seed;
  result.outside_proven_regime = problem.outside_proven_regime();
  return result;
}

InvariantResult invariant(const ProblemSpec& problem, std::int64_t seed,
                          std::size_t num_samples, std::size_t workers) {
  SampleOptions options;
  options.seed = seed;
  options.samples = num_samples;
  return invariant(problem, options, workers);
}

}  // namespace fquot
