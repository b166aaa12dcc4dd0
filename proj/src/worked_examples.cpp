#include "cglab/worked_examples.hpp"

#include <algorithm>

#include "cglab/errors.hpp"

namespace cglab {

std::pair<Rep, Rep> three_term_pair(const ThreeTermParams& p) {
  if (p.d < 2 || p.r < 2 || 2 * p.d <= 2 * p.r - 1)
    throw PreconditionError("three-term example needs d >= 2, r >= 2 and 2d > 2r - 1");
  if (p.n0 < 0 || p.n2 < 0 || p.n2d < 0 || p.m1 < 0 || p.m2r1 < 0)
    throw PreconditionError("multiplicities must be nonnegative");
  Rep v{{0, p.n0}, {2, p.n2}, {2 * p.d, p.n2d}};
  Rep w{{1, p.m1}, {2 * p.r - 1, p.m2r1}};
  return {std::move(v), std::move(w)};
}

ThreeTermCounts section1_example(const ThreeTermParams& p) {
  three_term_pair(p);  // range checks
  const Mult d = p.d;
  const Mult r = p.r;
  ThreeTermCounts c;
  c.vv0 = p.n0 * p.n0 + 3 * p.n2 * p.n2 + (2 * d + 1) * p.n2d * p.n2d + 2 * p.n0 * p.n2 + 2 * p.n0 * p.n2d +
          6 * p.n2 * p.n2d;
  c.ww0 = 2 * p.m1 * p.m1 + 2 * r * p.m2r1 * p.m2r1 + 4 * p.m1 * p.m2r1;
  c.vw1 = p.n0 * p.m1 + p.n0 * p.m2r1 + 2 * p.n2 * p.m1 + 3 * p.n2 * p.m2r1 + 2 * p.n2d * p.m1 +
          2 * r * p.n2d * p.m2r1;
  return c;
}

ThreeTermCounts section1_generic(const ThreeTermParams& p) {
  const auto [v, w] = three_term_pair(p);
  return {weight_space_dim(tensor(v, v), 0), weight_space_dim(tensor(w, w), 0), weight_space_dim(tensor(v, w), 1)};
}

std::pair<Rep, Rep> section4_pair(const std::vector<Mult>& n, const std::vector<Mult>& m) {
  const std::size_t len = std::max(n.size(), m.size());
  std::vector<Mult> v(len + 1, 0);
  std::vector<Mult> w(len + 1, 0);
  for (std::size_t i = 0; i < n.size(); ++i) {
    v[i] += n[i];
    if (i >= 1) w[i - 1] += n[i];
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    v[i] += m[i];
    w[i + 1] += m[i];
  }
  return {Rep(std::move(v)), Rep(std::move(w))};
}

Mult section4_predicted_d0(const std::vector<Mult>& n, const std::vector<Mult>& m) {
  Mult total = 0;
  for (Mult x : n) total += x * x;
  for (Mult x : m) total += x * x;
  return total;
}

VirtualRep section4_predicted_difference(const std::vector<Mult>& n, const std::vector<Mult>& m, int big_n) {
  if (big_n < static_cast<int>(n.size())) throw PreconditionError("N must be at least the length of n");
  std::vector<Mult> dense(static_cast<std::size_t>(big_n) + m.size() + 2, 0);
  for (std::size_t i = 0; i < n.size(); ++i) dense[static_cast<std::size_t>(big_n) - i] += n[i];
  for (std::size_t i = 0; i < m.size(); ++i) dense[static_cast<std::size_t>(big_n) + i + 2] -= m[i];
  return VirtualRep(std::move(dense));
}

}  // namespace cglab
