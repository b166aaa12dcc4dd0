#include "cglab/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "cglab/errors.hpp"
#include "cglab/explorer.hpp"
#include "cglab/inequality.hpp"
#include "cglab/literal.hpp"
#include "cglab/worked_examples.hpp"
#include "cglab/young.hpp"

namespace cglab {
namespace {

constexpr std::size_t kMaxSamples = 10;

struct Outcome {
  std::optional<std::string> failure;
  bool flagged = false;  // suite-specific tally (e.g. bound attained)
};

using PairCheck = std::function<Outcome(const Rep&, const Rep&)>;

struct GridTotals {
  CheckResult result;
  std::uint64_t flagged = 0;
};

std::string describe(const Rep& v, const Rep& w, const std::string& what) {
  return "V=" + format_rep(v) + " W=" + format_rep(w) + ": " + what;
}

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

GridTotals grid_check(const std::string& name, const SearchConstraints& c, int jobs, const PairCheck& check) {
  struct Local {
    std::uint64_t examined = 0;
    std::uint64_t failures = 0;
    std::uint64_t flagged = 0;
    std::vector<std::pair<PairIndex, std::string>> samples;
  };
  const PairSpace space(c);
  const int threads = thread_count(jobs);
  std::vector<Local> locals(static_cast<std::size_t>(threads));
  const auto total = static_cast<std::int64_t>(space.size());

#pragma omp parallel num_threads(threads)
  {
    Local& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 512)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto index = static_cast<PairIndex>(i);
      auto [v, w] = space.at(index);
      if (!space.admits(index, v, w)) continue;
      ++local.examined;
      Outcome out = check(v, w);
      if (out.flagged) ++local.flagged;
      if (out.failure) {
        ++local.failures;
        if (local.samples.size() < kMaxSamples) local.samples.emplace_back(index, describe(v, w, *out.failure));
      }
    }
  }

  GridTotals totals;
  totals.result.suite = name;
  std::vector<std::pair<PairIndex, std::string>> samples;
  for (auto& l : locals) {
    totals.result.examined += l.examined;
    totals.result.failures += l.failures;
    totals.flagged += l.flagged;
    samples.insert(samples.end(), l.samples.begin(), l.samples.end());
  }
  std::sort(samples.begin(), samples.end());
  for (std::size_t i = 0; i < std::min(samples.size(), kMaxSamples); ++i)
    totals.result.failure_samples.push_back(samples[i].second);
  return totals;
}

SearchConstraints grid(const SuiteOptions& o, ParityMode mode) {
  SearchConstraints c;
  c.max_weight = o.max_weight;
  c.max_mult = o.max_mult;
  c.parity_mode = mode;
  return c;
}

void fail(CheckResult& r, const std::string& message) {
  ++r.failures;
  if (r.failure_samples.size() < kMaxSamples) r.failure_samples.push_back(message);
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  std::vector<int> parts;
  // Parts in weakly decreasing order, each <= cap, total <= remaining.
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    out.emplace_back(parts);
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      parts.push_back(p);
      extend(remaining - p, p);
      parts.pop_back();
    }
  };
  extend(max_size, max_size);
  return out;
}

}  // namespace

CheckResult check_lemma1_same(const SuiteOptions& o) {
  return grid_check("lemma1_same", grid(o, ParityMode::same_pure), o.jobs, [](const Rep& v, const Rep& w) -> Outcome {
           const Mult value = d_zero_same(v, w);
           if (value < 0) return {"d_zero_same = " + std::to_string(value) + " < 0"};
           if ((value == 0) != (v == w)) return {"d_zero_same = 0 must hold exactly when V = W"};
           return {};
         }).result;
}

CheckResult check_lemma1_opposite(const SuiteOptions& o) {
  return grid_check("lemma1_opposite", grid(o, ParityMode::opposite_pure), o.jobs,
                    [](const Rep& v, const Rep& w) -> Outcome {
                      if (v.is_zero() || w.is_zero()) return {};
                      const Mult value = d_zero(v, w);
                      if (value < 1) return {"d_zero = " + std::to_string(value) + " < 1"};
                      return {};
                    })
      .result;
}

CheckResult check_lemma1(const SuiteOptions& o) {
  CheckResult same = check_lemma1_same(o);
  CheckResult opposite = check_lemma1_opposite(o);
  CheckResult r;
  r.suite = "lemma1";
  r.examined = same.examined + opposite.examined;
  r.failures = same.failures + opposite.failures;
  for (auto* part : {&same, &opposite})
    for (auto& s : part->failure_samples) r.failure_samples.push_back(part->suite + ": " + s);
  r.notes.push_back("same-character pairs: " + std::to_string(same.examined));
  r.notes.push_back("opposite-character pairs: " + std::to_string(opposite.examined));
  return r;
}

CheckResult check_lemma2(const SuiteOptions& o) {
  GridTotals t = grid_check("lemma2", grid(o, ParityMode::opposite_pure), o.jobs, [](const Rep& v, const Rep& w) -> Outcome {
    if (a_coeffs(v, w).d() == 0) return {};
    const Mult bound = lemma2_lower_twice(v, w);
    const Mult twice = 2 * d_zero(v, w);
    if (twice < bound) return {"2 d_zero = " + std::to_string(twice) + " < " + std::to_string(bound)};
    return {std::nullopt, twice == bound};
  });
  t.result.notes.push_back("pairs attaining the bound: " + std::to_string(t.flagged));
  return t.result;
}

CheckResult check_corollary(const SuiteOptions& o) {
  return grid_check("corollary", grid(o, ParityMode::opposite_pure), o.jobs, [](const Rep& v, const Rep& w) -> Outcome {
           const Mult slack = corollary_check(v, w);
           if (slack < 0) return {"corollary slack " + std::to_string(slack) + " < 0"};
           return {};
         }).result;
}

CheckResult check_prop1(const SuiteOptions& o) {
  const SearchConstraints c = grid(o, ParityMode::opposite_pure);
  GridTotals t = grid_check("prop1", c, o.jobs, [](const Rep& v, const Rep& w) -> Outcome {
    const bool by_partitions = prop1_conditions(v, w);
    if (by_partitions) {
      const Mult upper = prop1_upper(v, w);
      const Mult value = d_zero(v, w);
      if (value > upper) return {"d_zero = " + std::to_string(value) + " > " + std::to_string(upper)};
    }
    if (by_partitions != prop1_conditions_by_coefficients(v, w))
      return {"partition form " + std::string(by_partitions ? "holds" : "fails") +
                  ", the a_i sign form " + std::string(by_partitions ? "fails" : "holds"),
              by_partitions};
    return {std::nullopt, by_partitions};
  });
  t.result.notes.push_back("pairs satisfying the hypotheses: " + std::to_string(t.flagged));

  const GridTotals full = grid_check("prop1_full", c, o.jobs, [](const Rep& v, const Rep& w) -> Outcome {
    if (prop1_conditions(v, w) != prop1_conditions_by_coefficients_full(v, w))
      return {"partition form and a_i sign form with a_1 + n_0 >= 0 disagree"};
    return {};
  });
  t.result.notes.push_back("disagreements once a_1 + n_0 >= 0 is added to the sign form: " +
                           std::to_string(full.result.failures));
  for (const auto& s : full.result.failure_samples) t.result.failure_samples.push_back("prop1_full: " + s);
  t.result.failures += full.result.failures;
  return t.result;
}

CheckResult check_star(const SuiteOptions& o) {
  return grid_check("star", grid(o, ParityMode::opposite_pure), o.jobs, [](const Rep& v, const Rep& w) -> Outcome {
           const int base = star_threshold(v, w);
           for (int n : {base, base + 2}) {
             const VirtualRep closed = star_expansion(v, w, n);
             const VirtualRep direct = formal_difference(v, w, n, 1);
             if (closed != direct)
               return {"n=" + std::to_string(n) + ": closed form " + format_rep(closed) + " != " + format_rep(direct)};
           }
           return {};
         }).result;
}

CheckResult check_l2(const SuiteOptions& o) {
  return grid_check("l2", grid(o, ParityMode::opposite_pure), o.jobs, [](const Rep& v, const Rep& w) -> Outcome {
           const Mult value = d_zero(v, w);
           const Mult closed = section3_identity(v, w);
           if (closed != value) return {"closed form " + std::to_string(closed) + " != d_zero " + std::to_string(value)};
           const int n0 = stability_threshold(v, w);
           for (int n = n0; n <= n0 + 2; ++n)
             for (L2Variant variant : {L2Variant::n_minus_1, L2Variant::n_plus_1}) {
               const Mult l2 = l2_difference(v, w, n, variant);
               if (l2 != value)
                 return {"n=" + std::to_string(n) + (variant == L2Variant::n_minus_1 ? " (n-1)" : " (n+1)") +
                         ": L2 " + std::to_string(l2) + " != d_zero " + std::to_string(value)};
             }
           return {};
         }).result;
}

CheckResult check_section1(const SuiteOptions& o) {
  CheckResult r;
  r.suite = "section1";
  const int max_d = std::max(2, o.max_weight / 2);
  for (int d = 2; d <= max_d; ++d)
    for (int rr = 2; 2 * rr - 1 < 2 * d; ++rr)
      for (Mult n0 = 0; n0 <= o.max_mult; ++n0)
        for (Mult n2 = 0; n2 <= o.max_mult; ++n2)
          for (Mult n2d = 0; n2d <= o.max_mult; ++n2d)
            for (Mult m1 = 0; m1 <= o.max_mult; ++m1)
              for (Mult m2r1 = 0; m2r1 <= o.max_mult; ++m2r1) {
                const ThreeTermParams p{n0, n2, n2d, m1, m2r1, d, rr};
                ++r.examined;
                const ThreeTermCounts closed = section1_example(p);
                const ThreeTermCounts generic = section1_generic(p);
                if (closed != generic) {
                  const auto [v, w] = three_term_pair(p);
                  fail(r, describe(v, w, "closed form (" + std::to_string(closed.vv0) + "," + std::to_string(closed.ww0) +
                                             "," + std::to_string(closed.vw1) + ") != generic (" +
                                             std::to_string(generic.vv0) + "," + std::to_string(generic.ww0) + "," +
                                             std::to_string(generic.vw1) + ")"));
                }
              }
  r.notes.push_back("d in 2.." + std::to_string(max_d) + ", r in 2..d");
  return r;
}

CheckResult check_section4(const SuiteOptions& o) {
  CheckResult r;
  r.suite = "section4";
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> length(1, std::max(1, o.max_length));
  std::uniform_int_distribution<Mult> entry(0, o.max_mult);
  auto sequence = [&] {
    std::vector<Mult> s(static_cast<std::size_t>(length(rng)));
    for (auto& x : s) x = entry(rng);
    return s;
  };
  for (int sample = 0; sample < o.samples; ++sample) {
    const std::vector<Mult> n = sequence();
    const std::vector<Mult> m = sample % 10 == 0 ? n : sequence();  // every tenth: n_i = m_i
    const auto [v, w] = section4_pair(n, m);
    ++r.examined;
    const Mult expected = section4_predicted_d0(n, m);
    const Mult value = d_zero(v, w);
    if (value != expected) {
      fail(r, describe(v, w, "d_zero " + std::to_string(value) + " != " + std::to_string(expected)));
      continue;
    }
    if (n == m && value != 2 * section4_predicted_d0(n, {}))
      fail(r, describe(v, w, "equal sequences must give 2 sum n_i^2"));
    if (!prop1_conditions_by_parity(v, w)) fail(r, describe(v, w, "Young hypotheses fail"));
    const int big_n = std::max(stability_threshold(v, w), static_cast<int>(n.size()));
    for (int shift = 0; shift <= 1; ++shift) {
      const VirtualRep direct = formal_difference(v, w, big_n + shift, 1);
      const VirtualRep predicted = section4_predicted_difference(n, m, big_n + shift);
      if (direct != predicted)
        fail(r, describe(v, w, "difference " + format_rep(direct) + " != predicted " + format_rep(predicted)));
    }
  }
  r.notes.push_back("seed " + std::to_string(o.seed));
  return r;
}

CheckResult check_young(const SuiteOptions& o) {
  CheckResult r;
  r.suite = "young";
  const std::vector<Partition> all = partitions_up_to(o.max_partition_size);
  const auto count = static_cast<std::int64_t>(all.size());
  std::uint64_t examined = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> samples;

#pragma omp parallel for num_threads(thread_count(o.jobs)) schedule(dynamic, 16) reduction(+ : examined, failures)
  for (std::int64_t i = 0; i < count; ++i) {
    const Partition& b = all[static_cast<std::size_t>(i)];
    for (std::int64_t j = 0; j < count; ++j) {
      const Partition& a = all[static_cast<std::size_t>(j)];
      ++examined;
      const bool contained = young_leq(b, a);
      bool bad = contained != young_leq_by_counts(b, a);
      if (contained && i != j && young_leq(a, b)) bad = true;  // antisymmetry
      if (i == j && !contained) bad = true;                    // reflexivity
      if (bad) {
        ++failures;
#pragma omp critical(young_samples)
        if (samples.size() < kMaxSamples)
          samples.push_back(format_partition(b) + " vs " + format_partition(a));
      }
    }
  }

  // Transitivity on random triples, biased toward comparable chains by
  // drawing c from the partitions contained in b.
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int sample = 0; sample < 10 * o.samples; ++sample) {
    const Partition& a = all[pick(rng)];
    std::vector<int> b_parts = a.parts();
    for (auto& p : b_parts) p -= static_cast<int>(rng() % static_cast<std::uint64_t>(p + 1));
    std::erase(b_parts, 0);
    std::vector<int> c_parts = b_parts;
    for (auto& p : c_parts) p -= static_cast<int>(rng() % static_cast<std::uint64_t>(p + 1));
    std::erase(c_parts, 0);
    const Partition b(b_parts);
    const Partition c = sample % 2 == 0 ? Partition(c_parts) : all[pick(rng)];
    ++examined;
    if (young_leq(c, b) && young_leq(b, a) && !young_leq(c, a)) {
      ++failures;
      if (samples.size() < kMaxSamples) samples.push_back("transitivity: " + format_partition(c) + " <= " +
                                                         format_partition(b) + " <= " + format_partition(a));
    }
  }

  r.examined = examined;
  r.failures = failures;
  std::sort(samples.begin(), samples.end());
  r.failure_samples = std::move(samples);
  r.notes.push_back(std::to_string(all.size()) + " partitions of size <= " + std::to_string(o.max_partition_size));
  return r;
}

std::vector<std::string> suite_names() {
  return {"lemma1", "lemma2", "corollary", "prop1", "section1", "section4", "star", "l2", "young"};
}

CheckResult run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "lemma1") return check_lemma1(o);
  if (name == "lemma2") return check_lemma2(o);
  if (name == "corollary") return check_corollary(o);
  if (name == "prop1") return check_prop1(o);
  if (name == "section1") return check_section1(o);
  if (name == "section4") return check_section4(o);
  if (name == "star") return check_star(o);
  if (name == "l2") return check_l2(o);
  if (name == "young") return check_young(o);
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace cglab
