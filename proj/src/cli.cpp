#include "meanbounds/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "meanbounds/bounds.hpp"
#include "meanbounds/kernels.hpp"
#include "meanbounds/means.hpp"

namespace meanbounds {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Raised for flag values that parse but are out of range.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalArgs {
  std::string mean, a, b;
};
struct EndpointArgs {
  std::string mean, family = "power", side;
};
struct WitnessArgs {
  std::string mean, family = "power", param, side;
};
struct TableArgs {
  std::string which;
};
struct TraceArgs {
  std::string function, p, t_min = "1e-3", t_max = "10";
  int n = 100;
};
struct VerifyArgs {
  std::string check = "all";
  int samples = 1000;
  std::uint64_t seed = 20240229;
};

double parse_flag_real(const std::string& flag, const std::string& text) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid value for " + flag + ": '" + text + "'");
  }
}

MeanKind parse_flag_mean(const std::string& text) {
  try {
    return parse_mean(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  const MeanKind kind = parse_flag_mean(args.mean);
  const double a = parse_flag_real("--a", args.a);
  const double b = parse_flag_real("--b", args.b);
  std::optional<PositivePair> pair;
  try {
    pair.emplace(a, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  double value = 0.0;
  try {
    value = eval_mean(kind, *pair);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << format_real(value) << '\n';
  return kExitOk;
}

int cmd_endpoint(const EndpointArgs& args, std::ostream& out) {
  const MeanKind kind = parse_flag_mean(args.mean);
  const Family family = parse_family(args.family);
  const Side side = parse_side(args.side);
  const EndpointReport report = best_exponent(kind, family, side);
  out << "mean,family,side,expression,closed_form,numeric,difference,witness_t\n";
  out << to_string(report.mean) << ',' << to_string(report.family) << ','
      << to_string(report.side) << ',' << report.closed_form_expression << ',';
  if (report.closed_form) {
    out << format_real(*report.closed_form) << ',' << format_real(report.numeric) << ','
        << format_real(report.numeric - *report.closed_form);
  } else {
    out << ',' << format_real(report.numeric) << ',';
  }
  out << ',' << (report.witness_t ? format_real(*report.witness_t) : std::string()) << '\n';
  return report.within_tolerance() ? kExitOk : kExitFailed;
}

int cmd_witness(const WitnessArgs& args, std::ostream& out) {
  const MeanKind kind = parse_flag_mean(args.mean);
  const Family family = parse_family(args.family);
  const Side side = parse_side(args.side);
  const double param = parse_flag_real("--param", args.param);
  const auto witness = find_witness(kind, family, param, side);
  out << "witness_t\n" << (witness ? format_real(*witness) : std::string("none")) << '\n';
  return kExitOk;
}

int cmd_table(const TableArgs& args, std::ostream& out) {
  const auto rows = args.which == "constants" ? sharp_constant_table() : corollary31_table();
  out << "label,expression,value\n";
  for (const auto& row : rows)
    out << row.label << ',' << row.expression << ',' << format_real(row.value) << '\n';
  return kExitOk;
}

int cmd_trace(const TraceArgs& args, std::ostream& out) {
  const double p = parse_flag_real("--p", args.p);
  const double t_min = parse_flag_real("--t-min", args.t_min);
  const double t_max = parse_flag_real("--t-max", args.t_max);
  if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_max))
    throw UsageError("trace needs 0 < t-min < t-max < inf");
  if (args.n < 2) throw UsageError("trace needs n >= 2");
  if (!std::isfinite(p)) throw UsageError("trace needs a finite p");
  if (args.function == "F" && p == 0.0) throw UsageError("F is defined for p != 0 only");

  std::function<double(KernelPoint)> fn;
  if (args.function == "F") {
    fn = [](KernelPoint x) { return F(x); };
  } else if (args.function == "f1") {
    fn = [](KernelPoint x) { return f1(x); };
  } else {
    fn = [](KernelPoint x) { return f2(x); };
  }
  out << "t,value\n";
  for (double t : log_grid(t_min, t_max, static_cast<std::size_t>(args.n)))
    out << format_real(t) << ',' << format_real(fn({t, p})) << '\n';
  return kExitOk;
}

// Random pair with log-uniform ratio up to 1e12 and log-uniform scale.
PositivePair random_pair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> scale(-6.0, 6.0);
  std::uniform_real_distribution<double> ratio(0.0, 12.0);
  const double a = std::pow(10.0, scale(rng));
  return PositivePair(a, a * std::pow(10.0, ratio(rng)));
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.samples < 1) throw UsageError("verify needs samples >= 1");
  const bool all = args.check == "all";
  std::mt19937_64 rng(args.seed);
  int failures = 0;
  out << "check,violations,samples\n";
  auto report = [&](const char* name, int violations, int samples) {
    out << name << ',' << violations << ',' << samples << '\n';
    failures += violations;
  };

  if (all || args.check == "identity") {
    std::uniform_real_distribution<double> param(-3.0, 3.0);
    std::uniform_real_distribution<double> log_ratio(0.0, 6.0);
    int bad = 0;
    for (int i = 0; i < args.samples; ++i) {
      const double a = 1.0;
      const double b = std::pow(10.0, log_ratio(rng));
      double p = param(rng);
      if (p == 0.0) p = 0.5;
      if (!(log_identity_check(PositivePair(a, b == a ? 2.0 : b), p) <= 1e-11)) ++bad;
    }
    report("identity", bad, args.samples);
  }
  if (all || args.check == "inequality") {
    int bad = 0;
    for (int i = 0; i < args.samples; ++i) {
      const PositivePair pair = random_pair(rng);
      if (!pair.equal() && !verify_sandor_yang_between_a_q(pair)) ++bad;
    }
    report("inequality", bad, args.samples);
  }
  if (all || args.check == "chain") {
    int bad = 0;
    for (int i = 0; i < args.samples; ++i) {
      const PositivePair pair = random_pair(rng);
      if (!pair.equal() && !verify_chain_corollary31(pair)) ++bad;
    }
    report("chain", bad, args.samples);
  }
  if (all || args.check == "corollary34") {
    report("corollary34", verify_corollary34().all() ? 0 : 1, 1);
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 15);
  return std::string(buffer, result.ptr);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivariate means and their sharp power/Lehmer mean bounds", "meanbounds"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a mean at (a, b)");
  eval->add_option("--mean", eval_args.mean, "Mean name, e.g. power:2, sandor-yang")->required();
  eval->add_option("--a", eval_args.a, "First argument (> 0)")->required();
  eval->add_option("--b", eval_args.b, "Second argument (> 0)")->required();

  EndpointArgs endpoint_args;
  auto* endpoint = app.add_subcommand("endpoint", "Solve for a sharp bound parameter");
  endpoint->add_option("--mean", endpoint_args.mean, "Mean name")->required();
  endpoint->add_option("--family", endpoint_args.family, "power or lehmer")
      ->check(CLI::IsMember({"power", "lehmer"}));
  endpoint->add_option("--side", endpoint_args.side, "lower or upper")
      ->required()
      ->check(CLI::IsMember({"lower", "upper"}));

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Find a t where a claimed bound fails");
  witness->add_option("--mean", witness_args.mean, "Mean name")->required();
  witness->add_option("--family", witness_args.family, "power or lehmer")
      ->check(CLI::IsMember({"power", "lehmer"}));
  witness->add_option("--param", witness_args.param, "Family parameter")->required();
  witness->add_option("--side", witness_args.side, "lower or upper")
      ->required()
      ->check(CLI::IsMember({"lower", "upper"}));

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print a table of sharp constants as CSV");
  table->add_option("--which", table_args.which, "corollary31 or constants")
      ->required()
      ->check(CLI::IsMember({"corollary31", "constants"}));

  TraceArgs trace_args;
  auto* trace = app.add_subcommand("trace", "Sample F, f1 or f2 on a log-spaced t grid");
  trace->add_option("--function", trace_args.function, "F, f1 or f2")
      ->required()
      ->check(CLI::IsMember({"F", "f1", "f2"}));
  trace->add_option("--p", trace_args.p, "Parameter p (accepts p0 and fractions)")->required();
  trace->add_option("--t-min", trace_args.t_min, "Smallest t (> 0)");
  trace->add_option("--t-max", trace_args.t_max, "Largest t");
  trace->add_option("--n", trace_args.n, "Number of samples (>= 2)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run randomized identity and inequality checks");
  verify->add_option("--check", verify_args.check, "identity, inequality, chain, corollary34 or all")
      ->check(CLI::IsMember({"identity", "inequality", "chain", "corollary34", "all"}));
  verify->add_option("--samples", verify_args.samples, "Random samples per check");
  verify->add_option("--seed", verify_args.seed, "Random seed");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("meanbounds");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_args, out);
    if (endpoint->parsed()) return cmd_endpoint(endpoint_args, out);
    if (witness->parsed()) return cmd_witness(witness_args, out);
    if (table->parsed()) return cmd_table(table_args, out);
    if (trace->parsed()) return cmd_trace(trace_args, out);
    if (verify->parsed()) return cmd_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace meanbounds
