#include "cglab/report.hpp"

#include <sstream>

#include "cglab/literal.hpp"

namespace cglab {
namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

template <class T>
std::string optional_text(const std::optional<T>& value, const char* missing) {
  return value ? std::to_string(*value) : std::string(missing);
}

nlohmann::json constraints_to_json(const SearchConstraints& c) {
  return {{"max_weight", c.max_weight},
          {"max_mult", c.max_mult},
          {"parity_mode", to_string(c.parity_mode)},
          {"dim_diff_filter", optional_json(c.dim_diff_filter)},
          {"require_prop1_conditions", c.require_prop1_conditions},
          {"extremes_cap", c.extremes_cap}};
}

nlohmann::json histogram(const std::map<Mult, std::uint64_t>& h) {
  nlohmann::json out = nlohmann::json::object();
  for (auto [k, n] : h) out[std::to_string(k)] = n;
  return out;
}

}  // namespace

nlohmann::json rep_to_json(const Rep& r) {
  nlohmann::json out = nlohmann::json::object();
  auto mult = r.multiplicities();
  for (std::size_t m = 0; m < mult.size(); ++m)
    if (mult[m] != 0) out[std::to_string(m)] = mult[m];
  return out;
}

nlohmann::json profile_to_json(const InequalityProfile& p) {
  return {{"v", rep_to_json(p.v)},
          {"w", rep_to_json(p.w)},
          {"d0", p.d0},
          {"d2", p.d2},
          {"dim_diff", p.dim_diff},
          {"lemma2_lower_twice", optional_json(p.lemma2_lower_twice)},
          {"prop1_applicable", p.prop1_applicable},
          {"prop1_upper", optional_json(p.prop1_upper)},
          {"corollary_slack", optional_json(p.corollary_slack)}};
}

std::string profile_to_text(const InequalityProfile& p) {
  std::ostringstream out;
  out << "d0=" << p.d0 << " d2=" << p.d2 << " dim_diff=" << p.dim_diff
      << " lemma2_lower_twice=" << optional_text(p.lemma2_lower_twice, "n/a")
      << " prop1_applicable=" << (p.prop1_applicable ? "true" : "false")
      << " prop1_upper=" << optional_text(p.prop1_upper, "n/a")
      << " corollary_slack=" << optional_text(p.corollary_slack, "n/a") << " v=" << format_rep(p.v)
      << " w=" << format_rep(p.w);
  return out.str();
}

std::string profile_csv_header() {
  return "v,w,d0,d2,dim_diff,lemma2_lower_twice,prop1_applicable,prop1_upper,corollary_slack";
}

std::string profile_to_csv_row(const InequalityProfile& p) {
  std::ostringstream out;
  out << format_rep(p.v) << ',' << format_rep(p.w) << ',' << p.d0 << ',' << p.d2 << ',' << p.dim_diff << ','
      << optional_text(p.lemma2_lower_twice, "") << ',' << (p.prop1_applicable ? "true" : "false") << ','
      << optional_text(p.prop1_upper, "") << ',' << optional_text(p.corollary_slack, "");
  return out.str();
}

nlohmann::json report_to_json(const SearchReport& r) {
  nlohmann::json extremes = nlohmann::json::array();
  for (const auto& rec : r.extremes) {
    auto row = profile_to_json(rec.profile);
    row["index"] = rec.index;
    extremes.push_back(std::move(row));
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"index", v.index}, {"v", rep_to_json(v.v)}, {"w", rep_to_json(v.w)}, {"bound", v.bound}});
  const Tally& t = r.tally;
  return {{"schema", kReportSchema},
          {"constraints", constraints_to_json(r.constraints)},
          {"totals",
           {{"total", t.total},
            {"negative", t.negative},
            {"zero", t.zero},
            {"positive", t.positive},
            {"min_d2", optional_json(t.min_d2)},
            {"negative_by_dim_diff", histogram(t.negative_by_dim_diff)},
            {"zero_by_dim_diff", histogram(t.zero_by_dim_diff)}}},
          {"extremes", std::move(extremes)},
          {"violations", std::move(violations)},
          {"annotations", nlohmann::json::array()}};
}

std::string report_to_text(const SearchReport& r) {
  std::ostringstream out;
  const SearchConstraints& c = r.constraints;
  const Tally& t = r.tally;
  out << "schema: " << kReportSchema << '\n';
  out << "constraints: max_weight=" << c.max_weight << " max_mult=" << c.max_mult
      << " parity_mode=" << to_string(c.parity_mode) << " dim_diff_filter=" << optional_text(c.dim_diff_filter, "none")
      << " require_prop1_conditions=" << (c.require_prop1_conditions ? "true" : "false") << '\n';
  out << "pairs: " << t.total << '\n';
  out << "d2 < 0: " << t.negative << '\n';
  out << "d2 = 0: " << t.zero << '\n';
  out << "d2 > 0: " << t.positive << '\n';
  out << "min d2: " << optional_text(t.min_d2, "n/a") << '\n';
  out << "d2 < 0 by dim V - dim W:";
  for (auto [k, n] : t.negative_by_dim_diff) out << ' ' << k << ':' << n;
  out << '\n';
  out << "d2 = 0 by dim V - dim W:";
  for (auto [k, n] : t.zero_by_dim_diff) out << ' ' << k << ':' << n;
  out << '\n';
  out << "violations: " << r.violations.size() << '\n';
  for (const auto& v : r.violations)
    out << "  #" << v.index << ' ' << v.bound << " v=" << format_rep(v.v) << " w=" << format_rep(v.w) << '\n';
  out << "most negative (" << r.extremes.size() << "):\n";
  for (const auto& rec : r.extremes) out << "  #" << rec.index << ' ' << profile_to_text(rec.profile) << '\n';
  return out.str();
}

std::string report_pairs_csv(const SearchReport& r) {
  std::ostringstream out;
  out << "# schema: " << kReportSchema << '\n';
  out << "index," << profile_csv_header() << '\n';
  for (const auto& rec : r.nonpositive) out << rec.index << ',' << profile_to_csv_row(rec.profile) << '\n';
  return out.str();
}

nlohmann::json check_to_json(const CheckResult& r) {
  return {{"schema", kReportSchema},
          {"suite", r.suite},
          {"examined", r.examined},
          {"failures", r.failures},
          {"failure_samples", r.failure_samples},
          {"notes", r.notes},
          {"passed", r.passed()}};
}

std::string check_to_text(const CheckResult& r) {
  std::ostringstream out;
  out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " examined=" << r.examined << " failures=" << r.failures
      << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  for (const auto& s : r.failure_samples) out << "  failure: " << s << '\n';
  return out.str();
}

}  // namespace cglab
