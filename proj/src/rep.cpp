#include "cglab/rep.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cglab {
namespace {

void trim(std::vector<Mult>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Mult> from_terms(std::initializer_list<std::pair<Weight, Mult>> terms) {
  std::vector<Mult> dense;
  for (auto [m, k] : terms) {
    if (m < 0) throw std::invalid_argument("negative highest weight " + std::to_string(m));
    if (static_cast<std::size_t>(m) >= dense.size()) dense.resize(static_cast<std::size_t>(m) + 1, 0);
    dense[static_cast<std::size_t>(m)] += k;
  }
  trim(dense);
  return dense;
}

std::vector<Mult> pointwise_sum(std::span<const Mult> a, std::span<const Mult> b) {
  std::vector<Mult> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

std::vector<Mult> pointwise_scale(Mult k, std::span<const Mult> a) {
  if (k == 0) return {};
  std::vector<Mult> out(a.begin(), a.end());
  for (auto& x : out) x *= k;
  return out;
}

std::vector<Mult> clebsch_gordan(std::span<const Mult> a, std::span<const Mult> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Mult> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const Mult coeff = a[i] * b[j];
      const std::size_t lo = i > j ? i - j : j - i;
      for (std::size_t k = lo; k <= i + j; k += 2) out[k] += coeff;
    }
  }
  trim(out);
  return out;
}

Mult weight_space(std::span<const Mult> mult, Weight i) {
  const Weight w = std::abs(i);
  Mult total = 0;
  for (std::size_t m = static_cast<std::size_t>(w); m < mult.size(); m += 2) total += mult[m];
  return total;
}

Mult dim_of(std::span<const Mult> mult) {
  Mult total = 0;
  for (std::size_t m = 0; m < mult.size(); ++m) total += mult[m] * static_cast<Mult>(m + 1);
  return total;
}

Mult at(std::span<const Mult> mult, Weight m) {
  if (m < 0 || static_cast<std::size_t>(m) >= mult.size()) return 0;
  return mult[static_cast<std::size_t>(m)];
}

}  // namespace

Rep::Rep(std::vector<Mult> dense) : mult_(std::move(dense)) {
  for (Mult k : mult_)
    if (k < 0) throw std::invalid_argument("Rep multiplicities must be nonnegative");
  trim(mult_);
}

Rep::Rep(std::initializer_list<std::pair<Weight, Mult>> terms) : Rep(from_terms(terms)) {}

Rep Rep::irreducible(Weight m) {
  if (m < 0) throw std::invalid_argument("negative highest weight " + std::to_string(m));
  std::vector<Mult> dense(static_cast<std::size_t>(m) + 1, 0);
  dense.back() = 1;
  return Rep(std::move(dense));
}

Mult Rep::multiplicity(Weight m) const noexcept { return at(mult_, m); }

VirtualRep Rep::to_virtual() const { return VirtualRep(*this); }

VirtualRep::VirtualRep(std::vector<Mult> dense) : mult_(std::move(dense)) { trim(mult_); }

VirtualRep::VirtualRep(std::initializer_list<std::pair<Weight, Mult>> terms) : mult_(from_terms(terms)) {}

Mult VirtualRep::multiplicity(Weight m) const noexcept { return at(mult_, m); }

std::optional<Rep> VirtualRep::to_rep() const {
  if (std::any_of(mult_.begin(), mult_.end(), [](Mult k) { return k < 0; })) return std::nullopt;
  return Rep(mult_);
}

Mult dimension(const Rep& r) { return dim_of(r.multiplicities()); }
Mult dimension(const VirtualRep& r) { return dim_of(r.multiplicities()); }

Mult constituent_count(const Rep& r) {
  Mult total = 0;
  for (Mult k : r.multiplicities()) total += k;
  return total;
}

Rep add(const Rep& a, const Rep& b) { return Rep(pointwise_sum(a.multiplicities(), b.multiplicities())); }

VirtualRep add(const VirtualRep& a, const VirtualRep& b) {
  return VirtualRep(pointwise_sum(a.multiplicities(), b.multiplicities()));
}

Rep scale(Mult k, const Rep& a) {
  if (k < 0) throw std::invalid_argument("scaling a Rep by a negative factor; use scale_virtual");
  return Rep(pointwise_scale(k, a.multiplicities()));
}

VirtualRep scale_virtual(Mult k, const VirtualRep& a) { return VirtualRep(pointwise_scale(k, a.multiplicities())); }

VirtualRep subtract(const VirtualRep& a, const VirtualRep& b) { return add(a, scale_virtual(-1, b)); }

Rep tensor(const Rep& a, const Rep& b) { return Rep(clebsch_gordan(a.multiplicities(), b.multiplicities())); }

VirtualRep tensor(const VirtualRep& a, const VirtualRep& b) {
  return VirtualRep(clebsch_gordan(a.multiplicities(), b.multiplicities()));
}

Mult weight_space_dim(const Rep& e, Weight i) { return weight_space(e.multiplicities(), i); }
Mult weight_space_dim(const VirtualRep& e, Weight i) { return weight_space(e.multiplicities(), i); }

std::vector<Mult> weight_multiplicities(const Rep& e) {
  const Weight top = e.max_weight();
  if (top < 0) return {};
  std::vector<Mult> out(static_cast<std::size_t>(2 * top + 1), 0);
  for (Weight i = -top; i <= top; ++i) out[static_cast<std::size_t>(i + top)] = weight_space_dim(e, i);
  return out;
}

CentralSplit central_split(const Rep& e) {
  auto mult = e.multiplicities();
  std::vector<Mult> plus(mult.size(), 0);
  std::vector<Mult> minus(mult.size(), 0);
  for (std::size_t m = 0; m < mult.size(); ++m) (m % 2 == 0 ? plus : minus)[m] = mult[m];
  return {Rep(std::move(plus)), Rep(std::move(minus))};
}

bool has_pure_parity(const Rep& e, Parity p) noexcept {
  auto mult = e.multiplicities();
  for (std::size_t m = 0; m < mult.size(); ++m)
    if (mult[m] != 0 && parity_of(static_cast<Weight>(m)) != p) return false;
  return true;
}

Rep shift_down(const Rep& e) {
  auto mult = e.multiplicities();
  if (mult.size() <= 1) return {};
  return Rep(std::vector<Mult>(mult.begin() + 1, mult.end()));
}

Mult inner_product(const VirtualRep& a, const VirtualRep& b) {
  auto x = a.multiplicities();
  auto y = b.multiplicities();
  Mult total = 0;
  for (std::size_t m = 0; m < std::min(x.size(), y.size()); ++m) total += x[m] * y[m];
  return total;
}

Mult invariant_dim(const Rep& e) { return e.multiplicity(0); }

Mult endomorphism_dim(const Rep& e) { return inner_product(e, e); }

}  // namespace cglab
