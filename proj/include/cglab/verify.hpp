#pragma once

// Exhaustive and randomized verification suites. Each suite walks a finite
// grid (in parallel where the grid is large), tests one family of identities
// or bounds, and reports how many cases it examined and which failed.

#include <cstdint>
#include <string>
#include <vector>

#include "cglab/rep.hpp"

namespace cglab {

struct SuiteOptions {
  int max_weight = 8;
  Mult max_mult = 3;
  int jobs = 0;  // <= 0: OpenMP default
  std::uint64_t seed = 20240229;
  int samples = 1000;          // randomized suites
  int max_length = 6;          // section4 sequence length
  int max_partition_size = 20;  // young
};

struct CheckResult {
  std::string suite;
  std::uint64_t examined = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_samples;  // first few, in enumeration order
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures == 0; }
};

/// d_zero_same >= 0 on same-parity pairs, zero exactly on the diagonal.
CheckResult check_lemma1_same(const SuiteOptions& o);
/// d_zero >= 1 on nonzero split pairs.
CheckResult check_lemma1_opposite(const SuiteOptions& o);
/// Both parts of the above.
CheckResult check_lemma1(const SuiteOptions& o);
/// 2 d_zero >= lemma2_lower_twice; notes whether equality occurs.
CheckResult check_lemma2(const SuiteOptions& o);
CheckResult check_corollary(const SuiteOptions& o);
/// Partition and coefficient forms of the Young hypotheses agree, and
/// d_zero <= prop1_upper where they hold.
CheckResult check_prop1(const SuiteOptions& o);
/// Closed-form expansion equals V(x)St_n - W(x)St_(n+1) at n = 2d+2, 2d+4.
CheckResult check_star(const SuiteOptions& o);
/// L2 norms of both shifted differences agree with the closed form and
/// d_zero at N0, N0+1, N0+2.
CheckResult check_l2(const SuiteOptions& o);
/// Closed-form three-term polynomials equal the generic weight counts.
CheckResult check_section1(const SuiteOptions& o);
/// Paired-shift family: d_zero = sum (n_i^2 + m_i^2), hypotheses hold,
/// and the difference has the predicted two-sided shape.
CheckResult check_section4(const SuiteOptions& o);
/// Containment and count forms of the Young order agree; order axioms hold.
CheckResult check_young(const SuiteOptions& o);

std::vector<std::string> suite_names();
/// Throws PreconditionError for an unknown name.
CheckResult run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace cglab
