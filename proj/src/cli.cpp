#include "cglab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "cglab/errors.hpp"
#include "cglab/explorer.hpp"
#include "cglab/inequality.hpp"
#include "cglab/literal.hpp"
#include "cglab/report.hpp"
#include "cglab/verify.hpp"

namespace cglab {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int resolve_jobs(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("CGLAB_JOBS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return 0;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw IoError("failed writing '" + path + "'");
}

struct Options {
  std::string a, b, e, v, w, format = "text", suite, parity = "opposite_pure", output, pairs_csv;
  std::optional<int> weight;
  std::optional<Mult> dim_diff;
  int n = -1;
  int max_weight = 8;
  Mult max_mult = 3;
  int jobs = 0;
  std::uint64_t seed = SuiteOptions{}.seed;
  int samples = SuiteOptions{}.samples;
  std::size_t extremes = 100;
  bool require_prop1 = false;
};

int cmd_tensor(const Options& o, std::ostream& out) {
  const Rep product = tensor(parse_rep(o.a), parse_rep(o.b));
  if (o.format == "json")
    out << rep_to_json(product).dump() << '\n';
  else
    out << format_rep(product) << '\n';
  return kExitOk;
}

int cmd_weights(const Options& o, std::ostream& out) {
  const Rep e = parse_rep(o.e);
  if (o.weight) {
    out << weight_space_dim(e, *o.weight) << '\n';
    return kExitOk;
  }
  const auto mult = weight_multiplicities(e);
  const Weight top = e.max_weight();
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::object();
    for (Weight i = top; i >= -top; --i) j[std::to_string(i)] = mult[static_cast<std::size_t>(i + top)];
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (Weight i = top; i >= -top; --i) out << i << ' ' << mult[static_cast<std::size_t>(i + top)] << '\n';
  return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const InequalityProfile p = make_profile(parse_rep(o.v), parse_rep(o.w));
  if (o.format == "json")
    out << profile_to_json(p).dump() << '\n';
  else if (o.format == "csv")
    out << profile_csv_header() << '\n' << profile_to_csv_row(p) << '\n';
  else
    out << profile_to_text(p) << '\n';
  return kExitOk;
}

int cmd_star(const Options& o, std::ostream& out) {
  const Rep v = parse_rep(o.v);
  const Rep w = parse_rep(o.w);
  const int n = o.n >= 0 ? o.n : star_threshold(v, w);
  const auto terms = star_terms(v, w, n);
  const VirtualRep closed = star_expansion(v, w, n);
  const VirtualRep direct = formal_difference(v, w, n, 1);
  const bool ok = closed == direct;
  if (o.format == "json") {
    nlohmann::json j;
    j["n"] = n;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : terms) j["terms"].push_back({{"label", t.label}, {"weight", t.weight}, {"coefficient", t.coefficient}});
    j["expansion"] = format_rep(closed);
    j["direct"] = format_rep(direct);
    j["verified"] = ok;
    out << j.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? ", " : "") << terms[i].label << '=' << terms[i].coefficient;
    out << '\n';
    out << "expansion: " << format_rep(closed) << '\n';
    out << "direct:    " << format_rep(direct) << '\n';
    out << "verification " << (ok ? "OK" : "FAILED") << '\n';
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_check(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.max_weight = o.max_weight;
  so.max_mult = o.max_mult;
  so.jobs = resolve_jobs(o.jobs);
  so.seed = o.seed;
  so.samples = o.samples;
  const CheckResult r = run_suite(o.suite, so);
  if (o.format == "json")
    out << check_to_json(r).dump(2) << '\n';
  else
    out << check_to_text(r);
  return r.passed() ? kExitOk : kExitViolation;
}

int cmd_explore(const Options& o, std::ostream& out, std::ostream& err) {
  SearchConstraints c;
  c.max_weight = o.max_weight;
  c.max_mult = o.max_mult;
  c.parity_mode = parse_parity_mode(o.parity);
  c.dim_diff_filter = o.dim_diff;
  c.require_prop1_conditions = o.require_prop1;
  c.extremes_cap = o.extremes;
  c.collect_nonpositive = !o.pairs_csv.empty();

  const auto start = std::chrono::steady_clock::now();
  const SearchReport report = search(c, resolve_jobs(o.jobs));
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const std::string body = o.format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_text(report);
  if (o.output.empty() || o.output == "-")
    out << body;
  else
    write_file(o.output, body);
  if (!o.pairs_csv.empty()) write_file(o.pairs_csv, report_pairs_csv(report));
  err << "explored " << report.tally.total << " pairs in " << elapsed.count() << " s\n";
  return report.violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact SU(2) representation-ring calculator and deficit-inequality explorer", "cglab"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  auto* tensor_cmd = app.add_subcommand("tensor", "Clebsch-Gordan product of two representations");
  tensor_cmd->add_option("--a", o.a, "first factor, e.g. 2*S3+S0")->required();
  tensor_cmd->add_option("--b", o.b, "second factor")->required();
  tensor_cmd->add_option("--format", o.format)->check(formats);

  auto* weights_cmd = app.add_subcommand("weights", "Weight-space dimensions of a representation");
  weights_cmd->add_option("--e", o.e, "representation")->required();
  weights_cmd->add_option("--i", o.weight, "single weight to report");
  weights_cmd->add_option("--format", o.format)->check(formats);

  auto* profile_cmd = app.add_subcommand("profile", "Deficits and bounds for one pair (V, W)");
  profile_cmd->add_option("--v", o.v)->required();
  profile_cmd->add_option("--w", o.w)->required();
  profile_cmd->add_option("--format", o.format)->check(formats);

  auto* star_cmd = app.add_subcommand("star", "Closed-form expansion of V St_n - W St_(n+1), verified");
  star_cmd->add_option("--v", o.v)->required();
  star_cmd->add_option("--w", o.w)->required();
  star_cmd->add_option("--n", o.n, "defaults to 2d + 2");
  star_cmd->add_option("--format", o.format)->check(formats);

  auto* check_cmd = app.add_subcommand("check", "Exhaustive verification suite; exit 4 on any violation");
  check_cmd->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  check_cmd->add_option("--max-weight", o.max_weight)->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--max-mult", o.max_mult)->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--jobs", o.jobs, "worker threads (fallback: CGLAB_JOBS)");
  check_cmd->add_option("--seed", o.seed, "randomized suites only");
  check_cmd->add_option("--samples", o.samples, "randomized suites only")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* explore_cmd = app.add_subcommand("explore", "Classify all pairs on a grid by the sign of d(V,W)");
  explore_cmd->add_option("--max-weight", o.max_weight)->check(CLI::NonNegativeNumber);
  explore_cmd->add_option("--max-mult", o.max_mult)->check(CLI::NonNegativeNumber);
  explore_cmd->add_option("--parity", o.parity)->check(CLI::IsMember({"opposite_pure", "same_pure", "any"}));
  explore_cmd->add_option("--dim-diff", o.dim_diff, "keep pairs with dim V - dim W equal to this");
  explore_cmd->add_flag("--require-prop1", o.require_prop1, "keep pairs meeting the Young-order hypotheses");
  explore_cmd->add_option("--extremes", o.extremes, "cap on the most-negative list");
  explore_cmd->add_option("--output", o.output, "report file (default: stdout)");
  explore_cmd->add_option("--pairs-csv", o.pairs_csv, "also write every d2 <= 0 pair as CSV");
  explore_cmd->add_option("--jobs", o.jobs, "worker threads (fallback: CGLAB_JOBS)");
  explore_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tensor_cmd) return cmd_tensor(o, out);
    if (*weights_cmd) return cmd_weights(o, out);
    if (*profile_cmd) return cmd_profile(o, out);
    if (*star_cmd) return cmd_star(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*explore_cmd) return cmd_explore(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitUsage;
}

}  // namespace cglab
