#include "cglab/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cglab/errors.hpp"
#include "cglab/inequality.hpp"

namespace cglab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p <= 0; }))
    throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::part_counts() const {
  std::vector<int> counts(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
  for (int p : parts_) ++counts[static_cast<std::size_t>(p)];
  return counts;
}

std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + "]";
}

Partition rep_to_partition(const Rep& e) {
  std::vector<int> parts;
  auto mult = e.multiplicities();
  for (std::size_t m = mult.size(); m-- > 0;)
    for (Mult k = 0; k < mult[m]; ++k) parts.push_back(static_cast<int>(m) + 1);
  return Partition(std::move(parts));
}

bool young_leq(const Partition& b, const Partition& a) {
  if (b.length() > a.length()) return false;
  for (int row = 0; row < b.length(); ++row)
    if (b.part(row) > a.part(row)) return false;
  return true;
}

bool young_leq_by_counts(const Partition& b, const Partition& a) {
  const auto ca = a.part_counts();
  const auto cb = b.part_counts();
  const std::size_t top = std::max(ca.size(), cb.size()) - 1;
  long running_a = 0;
  long running_b = 0;
  for (std::size_t s = top; s >= 1; --s) {
    if (s < ca.size()) running_a += ca[s];
    if (s < cb.size()) running_b += cb[s];
    if (running_a < running_b) return false;
  }
  return true;
}

bool prop1_conditions(const Rep& v, const Rep& w) {
  if (!has_pure_parity(v, Parity::even) || !has_pure_parity(w, Parity::odd))
    throw ParityError("Young-order hypotheses need V pure even and W pure odd");
  return young_leq(rep_to_partition(shift_down(v)), rep_to_partition(w)) &&
         young_leq(rep_to_partition(shift_down(w)), rep_to_partition(v));
}

bool prop1_conditions_by_coefficients(const Rep& v, const Rep& w) {
  const ACoefficients c = a_coeffs(v, w);
  for (int i = 1; i <= c.d(); ++i)
    if (c.a(i) > 0 || c.a(i) + c.m(i) < 0) return false;
  return true;
}

bool prop1_conditions_by_coefficients_full(const Rep& v, const Rep& w) {
  const ACoefficients c = a_coeffs(v, w);
  return prop1_conditions_by_coefficients(v, w) && c.a1_or_zero() + c.n0() >= 0;
}

bool prop1_conditions_by_parity(const Rep& v, const Rep& w) {
  const CentralSplit sv = central_split(v);
  const CentralSplit sw = central_split(w);
  return prop1_conditions(sv.plus, sw.minus) && prop1_conditions(sw.plus, sv.minus);
}

}  // namespace cglab
