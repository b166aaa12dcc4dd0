#include "cglab/explorer.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <tuple>

#include "cglab/errors.hpp"
#include "cglab/young.hpp"

namespace cglab {
namespace {

std::vector<Weight> weights_of_parity(int max_weight, std::optional<Parity> parity) {
  std::vector<Weight> out;
  for (Weight m = 0; m <= max_weight; ++m)
    if (!parity || parity_of(m) == *parity) out.push_back(m);
  return out;
}

PairIndex checked_power(PairIndex base, std::size_t exponent) {
  PairIndex out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<PairIndex>::max() / 4 / base) throw PreconditionError("search space too large to index");
    out *= base;
  }
  return out;
}

bool same_pure_parity(const Rep& v, const Rep& w) {
  return (has_pure_parity(v, Parity::even) && has_pure_parity(w, Parity::even)) ||
         (has_pure_parity(v, Parity::odd) && has_pure_parity(w, Parity::odd));
}

bool index_order(const PairRecord& a, const PairRecord& b) { return a.index < b.index; }

bool violation_order(const Violation& a, const Violation& b) {
  return std::tie(a.index, a.bound) < std::tie(b.index, b.bound);
}

void record(SearchReport& report, PairIndex index, Classification&& result) {
  const InequalityProfile& p = result.profile;
  Tally& t = report.tally;
  ++t.total;
  if (p.d2 < 0) {
    ++t.negative;
    ++t.negative_by_dim_diff[p.dim_diff];
  } else if (p.d2 == 0) {
    ++t.zero;
    ++t.zero_by_dim_diff[p.dim_diff];
  } else {
    ++t.positive;
  }
  t.min_d2 = t.min_d2 ? std::min(*t.min_d2, p.d2) : p.d2;
  for (auto& bound : result.violated) report.violations.push_back({index, p.v, p.w, std::move(bound)});
  if (report.constraints.collect_nonpositive && p.d2 <= 0) report.nonpositive.push_back({index, p});
  if (p.d2 < 0) report.extremes.push_back({index, std::move(result.profile)});
}

void prune_extremes(std::vector<PairRecord>& extremes, std::size_t cap) {
  std::sort(extremes.begin(), extremes.end(), extreme_before);
  if (extremes.size() > cap) extremes.resize(cap);
}

}  // namespace

std::string to_string(ParityMode mode) {
  switch (mode) {
    case ParityMode::opposite_pure: return "opposite_pure";
    case ParityMode::same_pure: return "same_pure";
    case ParityMode::any: return "any";
  }
  return "?";
}

ParityMode parse_parity_mode(const std::string& text) {
  if (text == "opposite_pure") return ParityMode::opposite_pure;
  if (text == "same_pure") return ParityMode::same_pure;
  if (text == "any") return ParityMode::any;
  throw PreconditionError("unknown parity mode '" + text + "'");
}

PairSpace::PairSpace(const SearchConstraints& c) : constraints_(c) {
  if (c.max_weight < 0 || c.max_mult < 0) throw PreconditionError("max_weight and max_mult must be nonnegative");
  const auto even = weights_of_parity(c.max_weight, Parity::even);
  const auto odd = weights_of_parity(c.max_weight, Parity::odd);
  switch (c.parity_mode) {
    case ParityMode::opposite_pure: blocks_.push_back({even, odd}); break;
    case ParityMode::same_pure:
      blocks_.push_back({even, even});
      blocks_.push_back({odd, odd});
      blocks_.back().skip_zero_pair = true;
      break;
    case ParityMode::any: {
      const auto all = weights_of_parity(c.max_weight, std::nullopt);
      blocks_.push_back({all, all});
      break;
    }
  }
  const auto base = static_cast<PairIndex>(c.max_mult) + 1;
  for (auto& b : blocks_) {
    b.v_count = checked_power(base, b.v_slots.size());
    b.w_count = checked_power(base, b.w_slots.size());
    b.offset = size_;
    if (b.v_count > std::numeric_limits<PairIndex>::max() / 4 / b.w_count)
      throw PreconditionError("search space too large to index");
    size_ += b.v_count * b.w_count;
  }
}

Rep PairSpace::decode(PairIndex digits, const std::vector<Weight>& slots) const {
  const auto base = static_cast<PairIndex>(constraints_.max_mult) + 1;
  std::vector<Mult> dense(slots.empty() ? 0 : static_cast<std::size_t>(slots.back()) + 1, 0);
  for (std::size_t j = slots.size(); j-- > 0;) {
    dense[static_cast<std::size_t>(slots[j])] = static_cast<Mult>(digits % base);
    digits /= base;
  }
  return Rep(std::move(dense));
}

std::pair<Rep, Rep> PairSpace::at(PairIndex index) const {
  for (const auto& b : blocks_) {
    if (index >= b.offset + b.v_count * b.w_count) continue;
    const PairIndex local = index - b.offset;
    return {decode(local / b.w_count, b.v_slots), decode(local % b.w_count, b.w_slots)};
  }
  throw PreconditionError("pair index out of range");
}

bool PairSpace::admits(PairIndex index, const Rep& v, const Rep& w) const {
  for (const auto& b : blocks_) {
    if (index >= b.offset + b.v_count * b.w_count) continue;
    if (b.skip_zero_pair && index == b.offset) return false;
    break;
  }
  if (constraints_.dim_diff_filter && dimension(v) - dimension(w) != *constraints_.dim_diff_filter) return false;
  if (constraints_.require_prop1_conditions) {
    if (!has_pure_parity(v, Parity::even) || !has_pure_parity(w, Parity::odd)) return false;
    if (!prop1_conditions(v, w)) return false;
  }
  return true;
}

void enumerate_pairs(const SearchConstraints& c,
                     const std::function<void(PairIndex, const Rep&, const Rep&)>& visit) {
  const PairSpace space(c);
  for (PairIndex i = 0; i < space.size(); ++i) {
    auto [v, w] = space.at(i);
    if (space.admits(i, v, w)) visit(i, v, w);
  }
}

Classification classify_pair(const Rep& v, const Rep& w) {
  Classification out{make_profile(v, w), {}};
  const InequalityProfile& p = out.profile;
  auto fail = [&out](const char* bound) { out.violated.emplace_back(bound); };

  if (p.d2 != p.d0 - endomorphism_dim(v) - endomorphism_dim(w)) fail("d2_identity");

  const CentralSplit sv = central_split(v);
  const CentralSplit sw = central_split(w);
  if (p.d0 != d_zero(sv.plus, sw.minus) + d_zero(sw.plus, sv.minus)) fail("parity_decomposition");

  if (same_pure_parity(v, w)) {
    const Mult same = d_zero_same(v, w);
    if (same < 0 || (same == 0) != (v == w)) fail("lemma1_same_character");
  }

  if (!p.split_pair) return out;
  if (!v.is_zero() && !w.is_zero() && p.d0 < 1) fail("lemma1_opposite_character");
  if (section3_identity(v, w) != p.d0) fail("l2_identity");
  if (p.lemma2_lower_twice && 2 * p.d0 < *p.lemma2_lower_twice) fail("lemma2");
  if (p.corollary_slack && *p.corollary_slack < 0) fail("corollary");
  if (p.prop1_upper && p.d0 > *p.prop1_upper) fail("prop1");
  return out;
}

void Tally::merge(const Tally& other) {
  total += other.total;
  negative += other.negative;
  zero += other.zero;
  positive += other.positive;
  for (auto [k, n] : other.negative_by_dim_diff) negative_by_dim_diff[k] += n;
  for (auto [k, n] : other.zero_by_dim_diff) zero_by_dim_diff[k] += n;
  if (other.min_d2) min_d2 = min_d2 ? std::min(*min_d2, *other.min_d2) : *other.min_d2;
}

bool extreme_before(const PairRecord& a, const PairRecord& b) {
  const auto key = [](const PairRecord& r) {
    return std::tuple(r.profile.d2, dimension(r.profile.v) + dimension(r.profile.w), r.index);
  };
  return key(a) < key(b);
}

void SearchReport::merge(SearchReport other) {
  tally.merge(other.tally);
  extremes.insert(extremes.end(), std::make_move_iterator(other.extremes.begin()),
                  std::make_move_iterator(other.extremes.end()));
  prune_extremes(extremes, constraints.extremes_cap);
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
  std::sort(violations.begin(), violations.end(), violation_order);
  nonpositive.insert(nonpositive.end(), std::make_move_iterator(other.nonpositive.begin()),
                     std::make_move_iterator(other.nonpositive.end()));
  std::sort(nonpositive.begin(), nonpositive.end(), index_order);
}

SearchReport search_serial(const SearchConstraints& c) {
  SearchReport report;
  report.constraints = c;
  enumerate_pairs(c, [&report](PairIndex i, const Rep& v, const Rep& w) { record(report, i, classify_pair(v, w)); });
  prune_extremes(report.extremes, c.extremes_cap);
  return report;
}

SearchReport search(const SearchConstraints& c, int jobs) {
  const PairSpace space(c);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto total = static_cast<std::int64_t>(space.size());

  std::vector<SearchReport> partial(static_cast<std::size_t>(threads));
  for (auto& p : partial) p.constraints = c;

#pragma omp parallel num_threads(threads)
  {
    SearchReport& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 512)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto index = static_cast<PairIndex>(i);
      auto [v, w] = space.at(index);
      if (!space.admits(index, v, w)) continue;
      record(local, index, classify_pair(v, w));
      if (local.extremes.size() > 4 * c.extremes_cap + 1024) prune_extremes(local.extremes, c.extremes_cap);
    }
  }

  SearchReport report;
  report.constraints = c;
  for (auto& p : partial) report.merge(std::move(p));
  return report;
}

}  // namespace cglab
