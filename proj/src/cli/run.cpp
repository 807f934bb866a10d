#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "subadd/cli.hpp"

namespace subadd::cli {
namespace {

constexpr std::size_t kQuadraticLimit = 100000;
constexpr std::size_t kAuditGridLimit = 20000;

struct Options {
  double tol = 1e-9;
  std::string format = "auto";
  std::string output = "json";
  std::optional<std::uint64_t> seed;
  bool prepend_zero = false;
  bool force = false;

  std::string input = "-";

  bool witnesses = false;
  std::optional<double> at;
  bool audit = false;
  double step = 0.1;
  std::optional<std::size_t> period;
  bool scan = false;
  double max_eps = 0.0;
};

/// Parameter problems detected after parsing; mapped to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

InputFormat format_from(const std::string& name) {
  if (name == "csv") return InputFormat::csv;
  if (name == "json") return InputFormat::json;
  return InputFormat::automatic;
}

Sequence load_sequence(const Options& o, std::istream& in) {
  auto values = parse_input(read_all(o.input, in), o.input, format_from(o.format));
  Sequence u(std::move(values));
  return o.prepend_zero ? prepend_zero(u) : u;
}

void guard_quadratic(const Options& o, const Sequence& u, std::string_view what) {
  if (u.size() > kQuadraticLimit && !o.force)
    throw UsageError(std::string(what) + " is quadratic in the input length; " +
                     std::to_string(u.size()) + " values exceed " +
                     std::to_string(kQuadraticLimit) + ", pass --force to run anyway");
}

Json header(std::string_view command, const Options& o) {
  Json j;
  j["schema"] = std::string(kReportSchema);
  j["tool_version"] = SUBADD_VERSION;
  j["command"] = std::string(command);
  j["tolerance"] = o.tol;
  return j;
}

struct Outcome {
  Json report;
  int code = kExitOk;
};

Outcome cmd_check(const Options& o, const Sequence& u, Tolerance tol) {
  guard_quadratic(o, u, "check");
  Outcome r{header("check", o)};
  r.report["input"] = digest(u);
  const auto check = is_subadditive(u, tol);
  r.report.update(to_json(check));
  r.report["nonneg_decreasing"] = is_nonneg_decreasing(u);
  r.report["difference_bound"] = difference_bound_holds(u, tol);
  // Non-positivity is only implied for subadditive input with u_1 <= 0.
  r.report["u1_nonpositive"] = u(1) <= 0.0;
  r.report["all_nonpositive"] = tol.leq(u.max(), 0.0);
  r.code = check ? kExitOk : kExitPropertyFailed;
  return r;
}

Outcome cmd_envelope(const Options& o, const Sequence& u) {
  guard_quadratic(o, u, "envelope");
  Outcome r{header("envelope", o)};
  r.report["input"] = digest(u);
  const auto env = subadditive_envelope(u);
  r.report["envelope"] = to_json(env, o.witnesses);
  std::size_t lowered = 0;
  for (std::size_t n = 1; n <= u.size(); ++n) lowered += env.v(n) < u(n) ? 1 : 0;
  r.report["envelope"]["lowered"] = lowered;
  return r;
}

Outcome cmd_fekete(const Options& o, const Sequence& u, Tolerance tol) {
  Outcome r{header("fekete", o)};
  r.report["input"] = digest(u);
  r.report["fekete"] = to_json(fekete_estimate(u, tol));
  return r;
}

Outcome cmd_bounds(const Options& o, const Sequence& u, Tolerance tol) {
  Outcome r{header("bounds", o)};
  r.report["input"] = digest(u);
  const auto b = hermite_hadamard_bounds(u, tol);
  r.report["bounds"] = to_json(b);
  r.report["bounds"]["ostrowski"] = u.size() >= 2 ? Json(ostrowski_check(u, tol)) : Json(nullptr);
  if (b.subadditive && b.hh_lower && !b.bracket_holds) r.code = kExitPropertyFailed;
  return r;
}

Outcome cmd_interp(const Options& o, const Sequence& u, Tolerance tol) {
  Outcome r{header("interp", o)};
  r.report["input"] = digest(u);
  const Interpolant f(u);
  if (o.at) {
    try {
      r.report["at"] = Json{{"x", *o.at}, {"value", f(*o.at)}};
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
  r.report["ratio_infimum"] = to_json(ratio_infimum(f));
  if (o.audit) {
    if (!(o.step > 0.0)) throw UsageError("--step must be positive");
    const double points = static_cast<double>(u.size() - 1) / o.step;
    if (points > static_cast<double>(kAuditGridLimit) && !o.force)
      throw UsageError("audit grid exceeds " + std::to_string(kAuditGridLimit) +
                       " points; use a larger --step or pass --force");
    const auto audit = audit_subadditivity(f, o.step, tol);
    r.report["audit"] = to_json(audit, o.step);
    if (!audit.holds) r.code = kExitPropertyFailed;
  }
  return r;
}

Outcome cmd_period(const Options& o, const Sequence& u) {
  Outcome r{header("period", o)};
  r.report["input"] = digest(u);
  if (o.scan == o.period.has_value()) throw UsageError("period needs exactly one of --L or --scan");
  std::size_t L = 0;
  if (o.scan) {
    if (!(o.max_eps >= 0.0)) throw UsageError("--max-eps must be non-negative");
    const auto scan = scan_periods(u, o.max_eps);
    r.report["scan"] = to_json(scan, o.max_eps);
    if (!scan.best_period) {
      r.code = kExitPropertyFailed;
      return r;
    }
    L = *scan.best_period;
  } else {
    L = *o.period;
  }
  const auto eps = epsilon_for_period(u, L);
  r.report["decomposition"] = to_json(decompose(u, L), eps.worst_class);
  return r;
}

Outcome cmd_characterize(const Options& o, const Sequence& u, Tolerance tol) {
  Outcome r{header("characterize", o)};
  r.report["input"] = digest(u);
  if (!o.period) throw UsageError("characterize needs --L");
  const std::size_t L = *o.period;
  const auto eps = epsilon_for_period(u, L);
  const auto profile = partial_sum_profile(u, L, tol);
  const auto partition = constant_partition(u, L, tol);
  r.report["L"] = L;
  r.report["epsilon"] = eps.epsilon;
  r.report["periodic"] = eps.epsilon <= tol.abs_tol;
  Json sums = Json::array();
  for (double s : partial_sums(u)) sums.push_back(s);
  r.report["partial_sums"] = std::move(sums);
  r.report["profile"] = to_json(profile);
  r.report["constant_partition"] = to_json(partition);
  r.code = r.report["periodic"].get<bool>() ? kExitOk : kExitPropertyFailed;
  return r;
}

Outcome cmd_generate(const Options& o, std::istream& in) {
  Json spec_json;
  try {
    spec_json = Json::parse(read_all(o.input, in));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid generator spec JSON: ") + e.what());
  }
  auto spec = generator_spec_from_json(spec_json);
  if (o.seed) spec.seed = *o.seed;
  const Sequence u = [&] {
    try {
      return generate(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  Outcome r{header("generate", o)};
  r.report["generator"] = to_json(spec);
  r.report["values"] = to_json(u);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Subadditive and periodic sequence analysis", "subadd"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", SUBADD_VERSION);
  app.add_option("--tol", o.tol, "Absolute slack for every inequality test")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "Input format")->check(CLI::IsMember({"auto", "csv", "json"}));
  app.add_option("--output", o.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "Seed override for generate");
  app.add_flag("--prepend-zero", o.prepend_zero, "Treat the input as u_1, u_2, ... after a leading u_0 = 0");
  app.add_flag("--force", o.force, "Allow inputs above the size guards");

  auto input_arg = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Input file, or - for standard input");
  };

  auto* check = app.add_subcommand("check", "Subadditivity and elementary structure predicates");
  input_arg(check);
  auto* envelope = app.add_subcommand("envelope", "Largest subadditive sequence below the input");
  input_arg(envelope);
  envelope->add_flag("--witnesses", o.witnesses, "Include a minimising partition per index");
  auto* fekete = app.add_subcommand("fekete", "Ratios u_n/n, prefix infimum and convergence gap");
  input_arg(fekete);
  auto* bounds = app.add_subcommand("bounds", "Mean, height and Hermite-Hadamard type bounds");
  input_arg(bounds);
  auto* interp = app.add_subcommand("interp", "Piecewise-linear interpolant evaluation and audit");
  input_arg(interp);
  interp->add_option("--at", o.at, "Evaluate the interpolant at x");
  interp->add_flag("--audit", o.audit, "Grid-audit f(x+y) <= f(x) + f(y)");
  interp->add_option("--step", o.step, "Audit grid step");
  auto* period = app.add_subcommand("period", "Epsilon-periodicity and midrange decomposition");
  input_arg(period);
  period->add_option("--L", o.period, "Period")->check(CLI::PositiveNumber);
  period->add_flag("--scan", o.scan, "Scan L = 1..N/2");
  period->add_option("--max-eps", o.max_eps, "Largest epsilon accepted by --scan");
  auto* characterize = app.add_subcommand("characterize", "Partial-sum and constant-partition tests of L-periodicity");
  input_arg(characterize);
  characterize->add_option("--L", o.period, "Period")->check(CLI::PositiveNumber)->required();
  auto* gen = app.add_subcommand("generate", "Emit a sequence from a generator spec (JSON)");
  input_arg(gen);

  // CLI11 wants argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SUBADD_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "subadd: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Tolerance tol = Tolerance::absolute(o.tol);
    Outcome result;
    if (gen->parsed()) {
      result = cmd_generate(o, in);
    } else {
      const Sequence u = load_sequence(o, in);
      if (check->parsed()) result = cmd_check(o, u, tol);
      else if (envelope->parsed()) result = cmd_envelope(o, u);
      else if (fekete->parsed()) result = cmd_fekete(o, u, tol);
      else if (bounds->parsed()) result = cmd_bounds(o, u, tol);
      else if (interp->parsed()) result = cmd_interp(o, u, tol);
      else if (period->parsed()) result = cmd_period(o, u);
      else result = cmd_characterize(o, u, tol);
    }
    if (o.output == "text") {
      if (gen->parsed()) {
        for (const auto& x : result.report["values"]) out << format_number(x.get<double>()) << "\n";
      } else {
        out << dump_text(result.report);
      }
    } else {
      out << dump_json(result.report);
    }
    return result.code;
  } catch (const InputError& e) {
    err << "subadd: input error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "subadd: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "subadd: invalid input: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "subadd: parameter out of range: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "subadd: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace subadd::cli
