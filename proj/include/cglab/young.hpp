#pragma once

// Partitions and the Young (diagram containment) order.

#include <string>
#include <vector>

#include "cglab/rep.hpp"

namespace cglab {

/// Weakly decreasing sequence of positive parts. The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  /// Parts are sorted descending; throws std::invalid_argument on a part <= 0.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;  // sum of parts
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int part(int row) const noexcept { return row < length() ? parts_[static_cast<std::size_t>(row)] : 0; }

  /// counts[s] = number of parts equal to s, for s = 0 .. largest part.
  std::vector<int> part_counts() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// `[4,2]`
std::string format_partition(const Partition& p);

/// Each Sym^m contributes mult(m) parts of size m + 1.
Partition rep_to_partition(const Rep& e);

/// b <=_Y a: b's diagram fits inside a's, row by row after zero padding.
bool young_leq(const Partition& b, const Partition& a);

/// Same order through part multiplicities: for every size s, scanning from
/// the largest part down, a has at least as many parts >= s as b does.
bool young_leq_by_counts(const Partition& b, const Partition& a);

/// W >=_Y V^- and V >=_Y W^- on partition encodings. V pure even, W pure odd;
/// throws ParityError otherwise.
bool prop1_conditions(const Rep& v, const Rep& w);

/// Sign conditions on tail sums: a_i <= 0 and a_i + m_i >= 0 for all i >= 1.
/// This misses the bottom row of V >=_Y W^- (parts of size 1), so it is
/// strictly weaker than prop1_conditions: it also accepts pairs with
/// a_1 + n_0 < 0, such as V = 0, W = Sym^1.
bool prop1_conditions_by_coefficients(const Rep& v, const Rep& w);

/// The coefficient conditions plus the bottom row a_1 + n_0 >= 0. Agrees
/// with prop1_conditions on every split pair.
bool prop1_conditions_by_coefficients_full(const Rep& v, const Rep& w);

/// prop1_conditions applied to both central blocks of an arbitrary pair:
/// (V^+, W^odd) and (W^+, V^odd).
bool prop1_conditions_by_parity(const Rep& v, const Rep& w);

}  // namespace cglab
