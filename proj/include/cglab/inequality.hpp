#pragma once

// Deficit functions of a pair (V, W) of SU(2)-representations and the bounds
// they satisfy.
//
// Throughout, the "split" pairs are V = sum_{i=0..d} n_i Sym^(2i) (pure even)
// and W = sum_{i=1..d} m_i Sym^(2i-1) (pure odd), with d the largest index
// carrying a nonzero n_i or m_i across both.

#include <optional>
#include <string>
#include <vector>

#include "cglab/rep.hpp"

namespace cglab {

/// Tail sums a_i = sum_{j >= i} (n_j - m_j) for i = 1..d, plus the raw n_i, m_i.
class ACoefficients {
 public:
  ACoefficients(std::vector<Mult> n, std::vector<Mult> m);

  int d() const noexcept { return static_cast<int>(n_.size()) - 1; }
  Mult n0() const noexcept { return n_[0]; }
  /// 1 <= i <= d
  Mult a(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  /// 0 <= i <= d
  Mult n(int i) const { return n_.at(static_cast<std::size_t>(i)); }
  /// 1 <= i <= d; m(0) is always 0.
  Mult m(int i) const { return m_.at(static_cast<std::size_t>(i)); }

  /// a_1, or 0 when d = 0.
  Mult a1_or_zero() const noexcept { return d() >= 1 ? a_[1] : 0; }

 private:
  std::vector<Mult> n_;  // index 0..d
  std::vector<Mult> m_;  // index 0..d, m_[0] = 0
  std::vector<Mult> a_;  // index 0..d, a_[0] unused (0)
};

/// Throws ParityError unless V is pure even and W pure odd.
ACoefficients a_coeffs(const Rep& v, const Rep& w);

/// dim (V(x)V)[0] + dim (W(x)W)[0] - 2 dim (V(x)W)[1]. Any parities.
Mult d_zero(const Rep& v, const Rep& w);

/// dim (V(x)V)[0] + dim (W(x)W)[0] - 2 dim (V(x)W)[0].
Mult d_zero_same(const Rep& v, const Rep& w);

/// d(V,W) = dim (V(x)V)[2] + dim (W(x)W)[2] - 2 dim (V(x)W)[1]. Any parities.
Mult d_two(const Rep& v, const Rep& w);

/// Smallest n with no Clebsch-Gordan reflection at weight 0 in V(x)St_n,
/// W(x)St_(n-1) and W(x)St_(n+1): max highest weight + 2.
int stability_threshold(const Rep& v, const Rep& w);

/// Smallest n accepted by star_expansion: 2d + 2.
int star_threshold(const Rep& v, const Rep& w);

/// One coefficient of chi_V St_n - chi_W St_(n+1), in closed form.
struct StarTerm {
  Weight weight;
  std::string label;  // "a2", "middle" (a_1 + n_0), "a2+m2"
  Mult coefficient;
};

/// Terms ordered by descending weight: a_d .. a_1 at n+2d .. n+2, a_1 + n_0
/// at n, a_i + m_i at n-2i. Throws PreconditionError for n < star_threshold.
std::vector<StarTerm> star_terms(const Rep& v, const Rep& w, int n);

/// star_terms assembled into a virtual representation.
VirtualRep star_expansion(const Rep& v, const Rep& w, int n);

/// V(x)St_n - W(x)St_(n+shift), computed directly from Clebsch-Gordan.
/// St_(-1) is zero.
VirtualRep formal_difference(const Rep& v, const Rep& w, int n, int shift);

enum class L2Variant { n_minus_1, n_plus_1 };

/// <D, D> for D = V(x)St_n - W(x)St_(n-+1).
Mult l2_difference(const Rep& v, const Rep& w, int n, L2Variant variant);

/// (a_1 + n_0)^2 + sum_{i>=1} [a_i^2 + (a_i + m_i)^2].
Mult section3_identity(const Rep& v, const Rep& w);

/// 2x the lower bound: max(sum m_i^2, n_0^2 + n_1^2 + ... + n_(d-1)^2 + 2 n_d^2).
/// Throws PreconditionError when d = 0.
Mult lemma2_lower_twice(const Rep& v, const Rep& w);

/// sum n_i^2 + sum m_i^2 + d(V,W); nonnegative for every split pair.
Mult corollary_check(const Rep& v, const Rep& w);

/// sum m_i^2 + (a_1 + n_0)^2. Throws ConditionsNotMetError when the Young
/// hypotheses fail (ParityError for mixed input).
Mult prop1_upper(const Rep& v, const Rep& w);

/// Every quantity above for one pair.
struct InequalityProfile {
  Rep v;
  Rep w;
  Mult d0 = 0;
  Mult d2 = 0;
  Mult dim_diff = 0;  // dim V - dim W
  bool split_pair = false;  // V pure even and W pure odd
  std::optional<Mult> lemma2_lower_twice;  // split pair with d >= 1
  std::optional<Mult> corollary_slack;     // split pair
  bool prop1_applicable = false;
  std::optional<Mult> prop1_upper;  // when applicable

  friend bool operator==(const InequalityProfile&, const InequalityProfile&) = default;
};

InequalityProfile make_profile(const Rep& v, const Rep& w);

}  // namespace cglab
