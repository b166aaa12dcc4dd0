#pragma once

// Test-only reference computations that never touch the library's
// Clebsch-Gordan or weight-space code. Representations are expanded into
// explicit weight multisets; tensor products are sums over weight pairs;
// decompositions are recovered by peeling off highest weights; inner
// products come from numerical Weyl integration.

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

using Multiset = std::map<int, std::int64_t>;  // weight -> multiplicity

/// dense[m] copies of Sym^m, expanded to weights m, m-2, ..., -m.
inline Multiset weights(const std::vector<std::int64_t>& dense) {
  Multiset out;
  for (int m = 0; m < static_cast<int>(dense.size()); ++m)
    for (int wt = -m; wt <= m; wt += 2)
      if (dense[static_cast<std::size_t>(m)] != 0) out[wt] += dense[static_cast<std::size_t>(m)];
  return out;
}

inline Multiset product(const Multiset& a, const Multiset& b) {
  Multiset out;
  for (auto [x, p] : a)
    for (auto [y, q] : b) out[x + y] += p * q;
  return out;
}

inline std::int64_t at(const Multiset& s, int wt) {
  auto it = s.find(wt);
  return it == s.end() ? 0 : it->second;
}

/// Highest-weight peeling: the number of Sym^m summands is
/// dim E[m] - dim E[m+2].
inline std::vector<std::int64_t> decompose(const Multiset& s) {
  int top = -1;
  for (auto [wt, k] : s)
    if (k != 0) top = std::max(top, wt);
  std::vector<std::int64_t> dense(static_cast<std::size_t>(top + 1), 0);
  for (int m = 0; m <= top; ++m) dense[static_cast<std::size_t>(m)] = at(s, m) - at(s, m + 2);
  while (!dense.empty() && dense.back() == 0) dense.pop_back();
  return dense;
}

/// Character of sum dense[m] Sym^m at the torus element diag(e^{i t}, e^{-i t}).
inline double character(const std::vector<std::int64_t>& dense, double t) {
  // Explicit weight sum rather than sin((m+1)t)/sin t: no 0/0 at the ends.
  double total = 0;
  for (int m = 0; m < static_cast<int>(dense.size()); ++m)
    for (int wt = -m; wt <= m; wt += 2) total += dense[static_cast<std::size_t>(m)] * std::cos(wt * t);
  return total;
}

/// (2/pi) * integral_0^pi chi_A chi_B sin^2 t dt, by a midpoint rule with
/// enough nodes to be exact for these trigonometric polynomials, rounded.
inline std::int64_t haar_inner_product(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const int nodes = 4 * static_cast<int>(a.size() + b.size()) + 16;
  double sum = 0;
  for (int k = 0; k < nodes; ++k) {
    const double t = std::numbers::pi * (k + 0.5) / nodes;
    const double s = std::sin(t);
    sum += character(a, t) * character(b, t) * s * s;
  }
  return std::llround(2.0 * sum / nodes);
}

inline std::int64_t d_zero(const std::vector<std::int64_t>& v, const std::vector<std::int64_t>& w) {
  const Multiset wv = weights(v), ww = weights(w);
  return at(product(wv, wv), 0) + at(product(ww, ww), 0) - 2 * at(product(wv, ww), 1);
}

inline std::int64_t d_two(const std::vector<std::int64_t>& v, const std::vector<std::int64_t>& w) {
  const Multiset wv = weights(v), ww = weights(w);
  return at(product(wv, wv), 2) + at(product(ww, ww), 2) - 2 * at(product(wv, ww), 1);
}

inline std::int64_t d_zero_same(const std::vector<std::int64_t>& v, const std::vector<std::int64_t>& w) {
  const Multiset wv = weights(v), ww = weights(w);
  return at(product(wv, wv), 0) + at(product(ww, ww), 0) - 2 * at(product(wv, ww), 0);
}

}  // namespace oracle
