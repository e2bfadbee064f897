#include "fquot/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fquot/fixed_points.hpp"
#include "fquot/localization.hpp"
#include "fquot/oracles.hpp"

namespace fquot::cli {

using fquot::to_string;

namespace {

struct ModeName {
  Mode mode;
  const char* name;
};

constexpr ModeName kModes[] = {
    {Mode::Invariant, "invariant"},
    {Mode::ListFixedPoints, "list-fixed-points"},
    {Mode::OraclePn, "oracle-pn"},
    {Mode::OracleGrassmannian, "oracle-grassmannian"},
    {Mode::OracleClassical, "oracle-classical"},
};

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    throw std::invalid_argument("malformed " + what + " '" + text + "'");
  }
  return std::stoul(text);
}

}  // namespace

std::string to_string(Mode mode) {
  for (const auto& m : kModes) {
    if (m.mode == mode) return m.name;
  }
  return "invariant";
}

Mode parse_mode(const std::string& name) {
  for (const auto& m : kModes) {
    if (name == m.name) return m.mode;
  }
  throw std::invalid_argument("unknown mode '" + name + "'");
}

std::vector<Insertion> parse_insertions(const std::string& spec) {
  std::vector<Insertion> out;
  std::stringstream items(spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("insertion '" + item + "' is not alpha:beta");
    }
    const auto times = item.find('x', colon);
    const auto alpha = parse_count(item.substr(0, colon), "alpha");
    const auto beta = parse_count(
        item.substr(colon + 1, times == std::string::npos ? std::string::npos : times - colon - 1),
        "beta");
    const auto repeat =
        times == std::string::npos ? std::size_t{1} : parse_count(item.substr(times + 1), "repeat");
    out.insert(out.end(), repeat, Insertion{alpha, beta});
  }
  return out;
}

Outcome evaluate(const RunConfig& config) {
  auto problem =
      validate_problem(config.n, config.s, config.d, config.insertions, config.allow_beta_overflow);
  Outcome outcome{problem, config.mode, "", 0, 0, config.seed, problem.outside_proven_regime()};
  SampleOptions options;
  options.seed = config.seed;
  options.samples = config.samples;

  auto require = [](bool ok, const std::string& why) {
    if (!ok) throw ValidationError(ValidationErrorKind::ShapeInvalid, why);
  };
  const bool grassmannian = problem.shape.length() == 1;
  const bool alpha_one = std::all_of(problem.insertions.begin(), problem.insertions.end(),
                                     [](const Insertion& ins) { return ins.alpha == 1; });

  switch (config.mode) {
    case Mode::Invariant: {
      if (config.samples < 2) throw std::invalid_argument("--samples must be at least 2");
      const auto result = invariant(problem, options, config.workers);
      outcome.invariant = to_string(result.value);
      outcome.fixed_points = result.fixed_point_count;
      outcome.samples = result.samples_used;
      break;
    }
    case Mode::OraclePn: {
      require(grassmannian && problem.shape.s(1) == 1 && alpha_one &&
                  std::all_of(problem.insertions.begin(), problem.insertions.end(),
                              [](const Insertion& ins) { return ins.beta == 1; }),
              "oracle-pn needs s = 1 and insertions 1:1");
      const auto pn = problem.shape.n() - 1;
      const auto degree = problem.degrees[0];
      const auto value = evaluate_across_samples(
          problem.shape.n(), options,
          [&](const WeightSample& w) { return oracle::pn_localization_sum(pn, degree, w); });
      outcome.invariant = to_string(value.value);
      outcome.fixed_points = (pn + 1) * (degree + 1);
      outcome.samples = value.samples_used;
      break;
    }
    case Mode::OracleClassical: {
      require(std::all_of(problem.degrees.begin(), problem.degrees.end(),
                          [](std::size_t d) { return d == 0; }),
              "oracle-classical needs all degrees 0");
      const auto value = evaluate_across_samples(
          problem.shape.n(), options, [&](const WeightSample& w) {
            return oracle::classical_flag_integral(problem.shape, problem.insertions, w);
          });
      outcome.invariant = to_string(value.value);
      outcome.fixed_points = oracle::classical_term_count(problem.shape);
      outcome.samples = value.samples_used;
      break;
    }
    case Mode::OracleGrassmannian: {
      require(grassmannian && alpha_one, "oracle-grassmannian needs one flag step and alpha = 1");
      std::vector<std::size_t> betas;
      for (const auto& ins : problem.insertions) betas.push_back(ins.beta);
      outcome.invariant =
          oracle::grassmannian_quantum_integral(problem.shape.n(), problem.shape.s(1),
                                                problem.degrees[0], betas)
              .get_str();
      break;
    }
    case Mode::ListFixedPoints:
      throw std::logic_error("list-fixed-points is not an evaluation mode");
  }
  return outcome;
}

nlohmann::ordered_json to_json(const Outcome& outcome) {
  nlohmann::ordered_json out;
  out["flag"]["n"] = outcome.problem.shape.n();
  out["flag"]["s"] = outcome.problem.shape.steps();
  out["degree"] = outcome.problem.degrees;
  auto insertions = nlohmann::ordered_json::array();
  for (const auto& ins : outcome.problem.insertions) {
    nlohmann::ordered_json item;
    item["alpha"] = ins.alpha;
    item["beta"] = ins.beta;
    insertions.push_back(std::move(item));
  }
  out["insertions"] = std::move(insertions);
  out["dimension"] = outcome.problem.dimension;
  out["fixed_points"] = outcome.fixed_points;
  out["invariant"] = outcome.invariant;
  out["samples"] = outcome.samples;
  out["seed"] = outcome.seed;
  out["mode"] = to_string(outcome.mode);
  return out;
}

RunConfig config_from_json(const nlohmann::json& record, const RunConfig& defaults) {
  RunConfig config = defaults;
  config.n = record.at("flag").at("n").get<std::size_t>();
  config.s = record.at("flag").at("s").get<std::vector<std::size_t>>();
  config.d = record.at("degree").get<std::vector<std::size_t>>();
  config.insertions.clear();
  for (const auto& item : record.at("insertions")) {
    config.insertions.push_back(
        Insertion{item.at("alpha").get<std::size_t>(), item.at("beta").get<std::size_t>()});
  }
  if (record.contains("seed")) config.seed = record.at("seed").get<std::int64_t>();
  if (record.contains("samples")) config.samples = record.at("samples").get<std::size_t>();
  if (record.contains("mode")) config.mode = parse_mode(record.at("mode").get<std::string>());
  if (record.contains("allow_beta_overflow")) {
    config.allow_beta_overflow = record.at("allow_beta_overflow").get<bool>();
  }
  return config;
}

namespace {

nlohmann::ordered_json error_record(std::size_t line, const std::string& kind,
                                    const std::string& message) {
  nlohmann::ordered_json out;
  out["line"] = line;
  out["error"] = kind;
  out["message"] = message;
  return out;
}

void list_fixed_points(const RunConfig& config, std::ostream& out) {
  const FlagShape shape(config.n, config.s);
  dim_fquot(shape, config.d);  // length check
  enumerate_fixed_points(shape, config.d, [&](const FixedPoint& fp) {
    if (config.format == Format::Text) {
      out << to_string(fp) << '\n';
      return true;
    }
    nlohmann::ordered_json record;
    auto chain = nlohmann::ordered_json::array();
    auto a = nlohmann::ordered_json::array();
    auto b = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i <= shape.length(); ++i) {
      const auto& J = fp.chain().level(i);
      chain.push_back(J);
      std::vector<std::size_t> ai, bi;
      for (auto j : J) {
        ai.push_back(fp.a(i, j));
        bi.push_back(fp.b(i, j));
      }
      a.push_back(ai);
      b.push_back(bi);
    }
    record["chain"] = std::move(chain);
    record["a"] = std::move(a);
    record["b"] = std::move(b);
    out << record.dump() << '\n';
    return true;
  });
}

void print_text(const Outcome& outcome, std::ostream& out) {
  out << "problem       " << describe(outcome.problem) << '\n'
      << "mode          " << to_string(outcome.mode) << '\n'
      << "dimension     " << outcome.problem.dimension << '\n'
      << "fixed points  " << outcome.fixed_points << '\n'
      << "samples       " << outcome.samples << " (seed " << outcome.seed << ")\n"
      << "invariant     " << outcome.invariant << '\n';
  if (outcome.outside_proven_regime) {
    out << "note          some beta >= s_{alpha+1} - s_{alpha-1}; outside the proven range\n";
  }
}

}  // namespace

void run_batch(std::istream& in, std::ostream& out, const RunConfig& defaults) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (std::all_of(line.begin(), line.end(), ::isspace)) continue;
    try {
      const auto config = config_from_json(nlohmann::json::parse(line), defaults);
      if (config.mode == Mode::ListFixedPoints) {
        throw std::invalid_argument("list-fixed-points is not available in batch mode");
      }
      out << to_json(evaluate(config)).dump() << '\n';
    } catch (const ValidationError& e) {
      out << error_record(number, to_string(e.kind()), e.what()).dump() << '\n';
    } catch (const EngineError& e) {
      out << error_record(number, to_string(e.kind()), e.what()).dump() << '\n';
    } catch (const nlohmann::json::exception& e) {
      out << error_record(number, "ParseError", e.what()).dump() << '\n';
    } catch (const std::exception& e) {
      out << error_record(number, "InvalidInput", e.what()).dump() << '\n';
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-0 Gromov invariants of partial flag varieties by torus localization"};
  RunConfig config;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> insertion_specs;
  std::string mode_name = "invariant";
  std::string oracle_name;
  std::string format_name = "text";
  std::string batch_path;

  app.add_option("--n", config.n, "ambient dimension n");
  app.add_option("--s", config.s, "flag steps s_1 < ... < s_l")->delimiter(',');
  app.add_option("--d", config.d, "multidegree d_1..d_l")->delimiter(',');
  app.add_option("--insertions", insertion_specs, "alpha:beta[xN], comma separated");
  app.add_option("--seed", config.seed, "sampling seed")->capture_default_str();
  app.add_option("--samples", config.samples, "independent weight samples (>= 2)")
      ->capture_default_str();
  app.add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format_name, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--allow-beta-overflow", config.allow_beta_overflow,
               "accept beta >= s_{alpha+1} - s_{alpha-1}");
  app.add_option("--mode", mode_name,
                 "invariant | list-fixed-points | oracle-pn | oracle-grassmannian | "
                 "oracle-classical")
      ->capture_default_str();
  app.add_option("--oracle", oracle_name, "shorthand for --mode oracle-<name>")
      ->check(CLI::IsMember({"pn", "grassmannian", "classical"}));
  app.add_option("--batch", batch_path, "JSON-lines file of problems");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    config.mode = parse_mode(oracle_name.empty() ? mode_name : "oracle-" + oracle_name);
    config.format = format_name == "json" ? Format::Json : Format::Text;
    for (const auto& spec : insertion_specs) {
      const auto parsed = parse_insertions(spec);
      config.insertions.insert(config.insertions.end(), parsed.begin(), parsed.end());
    }

    if (!batch_path.empty()) {
      std::ifstream in(batch_path);
      if (!in) {
        err << "error: cannot read batch file " << batch_path << '\n';
        return kExitValidation;
      }
      run_batch(in, out, config);
      return kExitOk;
    }

    if (config.mode == Mode::ListFixedPoints) {
      list_fixed_points(config, out);
      return kExitOk;
    }
    const auto outcome = evaluate(config);
    if (config.format == Format::Json) {
      out << to_json(outcome).dump() << '\n';
    } else {
      print_text(outcome, out);
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const EngineError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace fquot::cli
