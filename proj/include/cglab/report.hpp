#pragma once

// Serialization of profiles and search reports. Every format is a pure
// function of its input, so equal reports serialize to identical bytes.

#include <string>

#include <json.hpp>

#include "cglab/explorer.hpp"
#include "cglab/inequality.hpp"
#include "cglab/verify.hpp"

namespace cglab {

/// {"0": 2, "3": 1} for 2 Sym^0 + Sym^3.
nlohmann::json rep_to_json(const Rep& r);

/// Flat record: v, w, d0, d2, dim_diff, lemma2_lower_twice, prop1_applicable,
/// prop1_upper, corollary_slack. Inapplicable bounds are null.
nlohmann::json profile_to_json(const InequalityProfile& p);
std::string profile_to_text(const InequalityProfile& p);
std::string profile_csv_header();
std::string profile_to_csv_row(const InequalityProfile& p);

nlohmann::json report_to_json(const SearchReport& r);
std::string report_to_text(const SearchReport& r);
/// One row per collected d2 <= 0 pair, with the schema on the first line.
std::string report_pairs_csv(const SearchReport& r);

nlohmann::json check_to_json(const CheckResult& r);
std::string check_to_text(const CheckResult& r);

}  // namespace cglab
