#include "cglab/inequality.hpp"

#include <algorithm>
#include <string>

#include "cglab/errors.hpp"
#include "cglab/young.hpp"

namespace cglab {
namespace {

void require_split(const Rep& v, const Rep& w) {
  if (!has_pure_parity(v, Parity::even)) throw ParityError("V must be a sum of Sym^(2i) (pure even)");
  if (!has_pure_parity(w, Parity::odd)) throw ParityError("W must be a sum of Sym^(2i-1) (pure odd)");
}

int shared_top_index(const Rep& v, const Rep& w) {
  const int dv = v.is_zero() ? 0 : v.max_weight() / 2;
  const int dw = w.is_zero() ? 0 : (w.max_weight() + 1) / 2;
  return std::max(dv, dw);
}

Mult sum_of_squares_m(const ACoefficients& c) {
  Mult total = 0;
  for (int i = 1; i <= c.d(); ++i) total += c.m(i) * c.m(i);
  return total;
}

}  // namespace

ACoefficients::ACoefficients(std::vector<Mult> n, std::vector<Mult> m)
    : n_(std::move(n)), m_(std::move(m)), a_(n_.size(), 0) {
  if (n_.empty() || m_.size() != n_.size()) throw std::invalid_argument("ACoefficients: n and m must have length d + 1");
  m_[0] = 0;
  Mult tail = 0;
  for (int i = d(); i >= 1; --i) {
    tail += n_[static_cast<std::size_t>(i)] - m_[static_cast<std::size_t>(i)];
    a_[static_cast<std::size_t>(i)] = tail;
  }
}

ACoefficients a_coeffs(const Rep& v, const Rep& w) {
  require_split(v, w);
  const int d = shared_top_index(v, w);
  std::vector<Mult> n(static_cast<std::size_t>(d) + 1, 0);
  std::vector<Mult> m(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d; ++i) n[static_cast<std::size_t>(i)] = v.multiplicity(2 * i);
  for (int i = 1; i <= d; ++i) m[static_cast<std::size_t>(i)] = w.multiplicity(2 * i - 1);
  return ACoefficients(std::move(n), std::move(m));
}

Mult d_zero(const Rep& v, const Rep& w) {
  return weight_space_dim(tensor(v, v), 0) + weight_space_dim(tensor(w, w), 0) - 2 * weight_space_dim(tensor(v, w), 1);
}

Mult d_zero_same(const Rep& v, const Rep& w) {
  return weight_space_dim(tensor(v, v), 0) + weight_space_dim(tensor(w, w), 0) - 2 * weight_space_dim(tensor(v, w), 0);
}

Mult d_two(const Rep& v, const Rep& w) {
  return weight_space_dim(tensor(v, v), 2) + weight_space_dim(tensor(w, w), 2) - 2 * weight_space_dim(tensor(v, w), 1);
}

int stability_threshold(const Rep& v, const Rep& w) { return std::max({v.max_weight(), w.max_weight(), 0}) + 2; }

int star_threshold(const Rep& v, const Rep& w) { return 2 * shared_top_index(v, w) + 2; }

std::vector<StarTerm> star_terms(const Rep& v, const Rep& w, int n) {
  const ACoefficients c = a_coeffs(v, w);
  const int threshold = 2 * c.d() + 2;
  if (n < threshold)
    throw PreconditionError("n = " + std::to_string(n) + " is below the threshold 2d + 2 = " + std::to_string(threshold));
  std::vector<StarTerm> terms;
  for (int i = c.d(); i >= 1; --i) terms.push_back({n + 2 * i, "a" + std::to_string(i), c.a(i)});
  terms.push_back({n, "middle", c.a1_or_zero() + c.n0()});
  for (int i = 1; i <= c.d(); ++i)
    terms.push_back({n - 2 * i, "a" + std::to_string(i) + "+m" + std::to_string(i), c.a(i) + c.m(i)});
  return terms;
}

VirtualRep star_expansion(const Rep& v, const Rep& w, int n) {
  const auto terms = star_terms(v, w, n);
  std::vector<Mult> dense(static_cast<std::size_t>(terms.front().weight) + 1, 0);
  for (const auto& t : terms) dense[static_cast<std::size_t>(t.weight)] += t.coefficient;
  return VirtualRep(std::move(dense));
}

VirtualRep formal_difference(const Rep& v, const Rep& w, int n, int shift) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  const int other = n + shift;
  const Rep st_other = other >= 0 ? Rep::irreducible(other) : Rep{};
  return subtract(tensor(v, Rep::irreducible(n)), tensor(w, st_other));
}

Mult l2_difference(const Rep& v, const Rep& w, int n, L2Variant variant) {
  const VirtualRep diff = formal_difference(v, w, n, variant == L2Variant::n_minus_1 ? -1 : 1);
  return inner_product(diff, diff);
}

Mult section3_identity(const Rep& v, const Rep& w) {
  const ACoefficients c = a_coeffs(v, w);
  const Mult middle = c.a1_or_zero() + c.n0();
  Mult total = middle * middle;
  for (int i = 1; i <= c.d(); ++i) {
    const Mult lower = c.a(i) + c.m(i);
    total += c.a(i) * c.a(i) + lower * lower;
  }
  return total;
}

Mult lemma2_lower_twice(const Rep& v, const Rep& w) {
  const ACoefficients c = a_coeffs(v, w);
  if (c.d() == 0) throw PreconditionError("lower bound needs d >= 1 (V is a multiple of Sym^0 and W = 0)");
  Mult from_n = c.n0() * c.n0() + 2 * c.n(c.d()) * c.n(c.d());
  for (int i = 1; i < c.d(); ++i) from_n += c.n(i) * c.n(i);
  return std::max(sum_of_squares_m(c), from_n);
}

Mult corollary_check(const Rep& v, const Rep& w) {
  require_split(v, w);
  return endomorphism_dim(v) + endomorphism_dim(w) + d_two(v, w);
}

Mult prop1_upper(const Rep& v, const Rep& w) {
  if (!prop1_conditions(v, w)) throw ConditionsNotMetError("Young-order hypotheses W >=_Y V^- and V >=_Y W^- fail");
  const ACoefficients c = a_coeffs(v, w);
  const Mult middle = c.a1_or_zero() + c.n0();
  return sum_of_squares_m(c) + middle * middle;
}

InequalityProfile make_profile(const Rep& v, const Rep& w) {
  InequalityProfile p;
  p.v = v;
  p.w = w;
  p.d0 = d_zero(v, w);
  p.d2 = d_two(v, w);
  p.dim_diff = dimension(v) - dimension(w);
  p.split_pair = has_pure_parity(v, Parity::even) && has_pure_parity(w, Parity::odd);
  if (!p.split_pair) return p;
  if (shared_top_index(v, w) >= 1) p.lemma2_lower_twice = lemma2_lower_twice(v, w);
  p.corollary_slack = corollary_check(v, w);
  p.prop1_applicable = prop1_conditions(v, w);
  if (p.prop1_applicable) p.prop1_upper = prop1_upper(v, w);
  return p;
}

}  // namespace cglab
