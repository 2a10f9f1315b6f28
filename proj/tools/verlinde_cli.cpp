// verlinde: splitting types of Verlinde bundles on lines, jumping-locus classes, and the
// seeded verification suites. JSON goes to stdout, progress to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "verlinde/verlinde.hpp"

namespace {

using namespace verlinde;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct SplitArgs {
  int n = 0, d = 0, k = 0;
  std::string f1, f2, sample;
  std::uint64_t seed = 0;
  int trials = 3;
};

struct JumpingArgs {
  int n = 0, d = 0;
  int trials = 3;
  std::uint64_t seed = 0;
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
};

/// "@path" reads the file; anything else is the polynomial text itself.
std::string polynomial_source(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ParseError("cannot read polynomial file '" + arg.substr(1) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LineMode parse_sample_mode(const std::string& s) {
  if (s == "random") return RandomLine{};
  const std::string prefix = "jumping:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string rest = s.substr(prefix.size());
    std::size_t used = 0;
    int dp = -1;
    try {
      dp = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == rest.size() && !rest.empty()) return JumpingLine{dp};
  }
  throw PreconditionError("--sample must be 'random' or 'jumping:D', got '" + s + "'");
}

int cmd_split(const SplitArgs& a) {
  const VerlindeContext ctx = context(a.n, a.d, a.k);
  const bool have_forms = !a.f1.empty() || !a.f2.empty();
  if (!a.sample.empty() && have_forms) throw PreconditionError("give either --f1/--f2 or --sample, not both");
  if (a.sample.empty() && (a.f1.empty() || a.f2.empty()))
    throw PreconditionError("split needs both --f1 and --f2, or --sample");

  const LineInSystem line = a.sample.empty()
                                ? LineInSystem(parse_polynomial_text(polynomial_source(a.f1), a.n, a.d),
                                               parse_polynomial_text(polynomial_source(a.f2), a.n, a.d))
                                : sample_line(ctx, parse_sample_mode(a.sample), a.seed);
  const Pencil pencil = verlinde_pencil(ctx, line);
  const SplittingType type = splitting_type(pencil);

  Json out;
  out["n"] = a.n;
  out["d"] = a.d;
  out["k"] = a.k;
  out["f1"] = to_inline(line.f1());
  out["f2"] = to_inline(line.f2());
  out["w"] = ctx.w;
  out["u"] = ctx.u;
  out["type"] = type.entries();
  out["p"] = zero_count(ctx, line);
  if (ctx.has_generic_type()) {
    const auto pred = predict_by_gcd(ctx, line, a.trials, a.seed);
    const SplittingType generic = ctx.generic_type();
    out["generic"] = is_generic_type(ctx, line);
    out["gcd_degree"] = pred.gcd_degree;
    out["gcd_prediction"] = pred.verdict == Prediction::generic ? "generic" : "jumping";
    out["predicted_type"] = pred.type ? Json(pred.type->entries()) : Json(nullptr);
    out["generic_type"] = generic.entries();
    out["dominates_generic"] = dominates(type, generic);
  } else {
    out["generic"] = nullptr;
    out["gcd_degree"] = gcd_degree(line.f1(), line.f2(), a.trials, a.seed);
    out["gcd_prediction"] = nullptr;
    out["predicted_type"] = nullptr;
    out["generic_type"] = nullptr;
    out["dominates_generic"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_jumping_class(const JumpingArgs& a) {
  if (a.n != 2 && a.n != 3) throw PreconditionError("jumping-class needs n in {2, 3}");
  const JumpingClassReport report = reconcile(a.n, a.d, a.trials, a.seed);
  std::cout << to_json(report).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> names;
  if (a.suite == "all")
    names = suites::suite_names();
  else if (std::find(suites::suite_names().begin(), suites::suite_names().end(), a.suite) != suites::suite_names().end())
    names = {a.suite};
  else
    throw PreconditionError("unknown suite '" + a.suite + "'");

  Json results = Json::array();
  bool passed = true;
  for (const auto& name : names) {
    std::cerr << "[verify] " << name << " ..." << std::flush;
    const auto r = suites::run_suite(name, a.seed);
    std::cerr << " " << r.cases << " cases, " << r.failures.size() << " failures (" << r.wall_seconds << " s)\n";
    passed = passed && r.passed();
    results.push_back(suites::to_json(r));
  }
  const Json out = names.size() == 1 ? results[0] : Json{{"seed", a.seed}, {"suites", results}, {"passed", passed}};
  std::cout << out.dump(2) << "\n";
  return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting types of Verlinde bundles and the class of their jumping locus"};
  app.require_subcommand(1);

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Splitting type of V_k on a line of degree-d hypersurfaces");
  split_cmd->add_option("--n", split.n, "ambient dimension")->required();
  split_cmd->add_option("--d", split.d, "hypersurface degree")->required();
  split_cmd->add_option("--k", split.k, "twist")->required();
  split_cmd->add_option("--f1", split.f1, "first form: inline text, JSON, or @file");
  split_cmd->add_option("--f2", split.f2, "second form: inline text, JSON, or @file");
  split_cmd->add_option("--sample", split.sample, "random | jumping:D");
  split_cmd->add_option("--seed", split.seed, "root seed");
  split_cmd->add_option("--trials", split.trials, "gcd oracle trials")->check(CLI::PositiveNumber);

  JumpingArgs jumping;
  auto* jumping_cmd = app.add_subcommand("jumping-class", "Reconciled class of the jumping locus of V_{d+1}");
  jumping_cmd->add_option("--n", jumping.n, "ambient dimension (2 or 3)")->required();
  jumping_cmd->add_option("--d", jumping.d, "hypersurface degree")->required();
  jumping_cmd->add_option("--trials", jumping.trials, "Jacobian oracle trials")->check(CLI::PositiveNumber);
  jumping_cmd->add_option("--seed", jumping.seed, "root seed");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run seeded verification suites");
  verify_cmd->add_option("--suite", verify.suite, "algebra | pencil | criteria | schubert | jumping | all");
  verify_cmd->add_option("--seed", verify.seed, "root seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*split_cmd) return cmd_split(split);
    if (*jumping_cmd) return cmd_jumping_class(jumping);
    if (*verify_cmd) return cmd_verify(verify);
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
