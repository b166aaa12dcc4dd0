#pragma once

// Representation ring of SU(2).
//
// A representation is stored as a dense vector of multiplicities indexed by
// highest weight m (the irreducible Sym^m, of dimension m + 1). Trailing
// zeros are trimmed, so the zero representation has an empty vector and two
// equal representations always compare equal element-wise.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cglab {

using Weight = int;
using Mult = std::int64_t;

/// Central character: the center {+1, -1} acts trivially on Sym^even and by
/// -1 on Sym^odd.
enum class Parity { even, odd };

constexpr Parity parity_of(Weight m) noexcept { return m % 2 == 0 ? Parity::even : Parity::odd; }

class VirtualRep;

/// Honest representation: every multiplicity is nonnegative.
class Rep {
 public:
  Rep() = default;

  /// Throws std::invalid_argument on a negative entry.
  explicit Rep(std::vector<Mult> dense);
  /// Sparse construction from (weight, multiplicity) terms; repeated weights add.
  Rep(std::initializer_list<std::pair<Weight, Mult>> terms);

  static Rep irreducible(Weight m);

  Mult multiplicity(Weight m) const noexcept;
  /// -1 for the zero representation.
  Weight max_weight() const noexcept { return static_cast<Weight>(mult_.size()) - 1; }
  bool is_zero() const noexcept { return mult_.empty(); }
  std::span<const Mult> multiplicities() const noexcept { return mult_; }

  VirtualRep to_virtual() const;

  friend bool operator==(const Rep&, const Rep&) = default;

 private:
  std::vector<Mult> mult_;
};

/// Formal Z-linear combination of irreducibles.
class VirtualRep {
 public:
  VirtualRep() = default;
  explicit VirtualRep(std::vector<Mult> dense);
  VirtualRep(std::initializer_list<std::pair<Weight, Mult>> terms);
  VirtualRep(const Rep& r) : VirtualRep(std::vector<Mult>(r.multiplicities().begin(), r.multiplicities().end())) {}  // NOLINT

  Mult multiplicity(Weight m) const noexcept;
  Weight max_weight() const noexcept { return static_cast<Weight>(mult_.size()) - 1; }
  bool is_zero() const noexcept { return mult_.empty(); }
  std::span<const Mult> multiplicities() const noexcept { return mult_; }

  /// nullopt when some multiplicity is negative.
  std::optional<Rep> to_rep() const;

  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

 private:
  std::vector<Mult> mult_;
};

Mult dimension(const Rep& r);
Mult dimension(const VirtualRep& r);

/// Total number of irreducible constituents counted with multiplicity.
Mult constituent_count(const Rep& r);

Rep add(const Rep& a, const Rep& b);
VirtualRep add(const VirtualRep& a, const VirtualRep& b);
Rep scale(Mult k, const Rep& a);  // requires k >= 0
VirtualRep scale_virtual(Mult k, const VirtualRep& a);
VirtualRep subtract(const VirtualRep& a, const VirtualRep& b);

inline Rep operator+(const Rep& a, const Rep& b) { return add(a, b); }
inline VirtualRep operator+(const VirtualRep& a, const VirtualRep& b) { return add(a, b); }
inline VirtualRep operator-(const VirtualRep& a, const VirtualRep& b) { return subtract(a, b); }
inline VirtualRep operator-(const VirtualRep& a) { return scale_virtual(-1, a); }
inline Rep operator*(Mult k, const Rep& a) { return scale(k, a); }

/// Clebsch-Gordan: Sym^a (x) Sym^b = Sym^|a-b| + Sym^(|a-b|+2) + ... + Sym^(a+b),
/// extended bilinearly.
Rep tensor(const Rep& a, const Rep& b);
VirtualRep tensor(const VirtualRep& a, const VirtualRep& b);

/// dim E[i], the z -> z^i eigenspace of the maximal torus.
Mult weight_space_dim(const Rep& e, Weight i);
Mult weight_space_dim(const VirtualRep& e, Weight i);

/// Weight multiplicities for i = -max_weight .. max_weight (index i + max_weight).
std::vector<Mult> weight_multiplicities(const Rep& e);

struct CentralSplit {
  Rep plus;   // center acts trivially (even highest weights)
  Rep minus;  // center acts by -1 (odd highest weights)
};
CentralSplit central_split(const Rep& e);

/// True when every constituent has parity p. The zero representation has
/// every parity.
bool has_pure_parity(const Rep& e, Parity p) noexcept;

/// E^-: Sym^i -> Sym^(i-1), Sym^0 dropped.
Rep shift_down(const Rep& e);

/// Integral of chi_A * chi_B over SU(2) with unit Haar measure.
Mult inner_product(const VirtualRep& a, const VirtualRep& b);

/// dim of the SU(2)-invariants, i.e. the multiplicity of Sym^0.
Mult invariant_dim(const Rep& e);

/// dim End_SU(2)(E) = sum of squared multiplicities.
Mult endomorphism_dim(const Rep& e);

}  // namespace cglab
