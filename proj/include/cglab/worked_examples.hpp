#pragma once

// Two closed-form families of pairs whose weight-space counts are known
// polynomially, used to cross-check the generic machinery.

#include <tuple>
#include <utility>
#include <vector>

#include "cglab/rep.hpp"

namespace cglab {

/// V = n0 Sym^0 + n2 Sym^2 + n2d Sym^(2d), W = m1 Sym^1 + m2r1 Sym^(2r-1).
struct ThreeTermParams {
  Mult n0 = 0, n2 = 0, n2d = 0, m1 = 0, m2r1 = 0;
  int d = 2;
  int r = 2;
};

/// Throws PreconditionError unless d >= 2, r >= 2 and 2d > 2r - 1.
std::pair<Rep, Rep> three_term_pair(const ThreeTermParams& p);

struct ThreeTermCounts {
  Mult vv0 = 0;  // dim (V(x)V)[0]
  Mult ww0 = 0;  // dim (W(x)W)[0]
  Mult vw1 = 0;  // dim (V(x)W)[1]

  friend bool operator==(const ThreeTermCounts&, const ThreeTermCounts&) = default;
};

/// Closed-form polynomials in the multiplicities:
///   vv0 = n0^2 + 3 n2^2 + (2d+1) n2d^2 + 2 n0 n2 + 2 n0 n2d + 6 n2 n2d
///   ww0 = 2 m1^2 + 2r m2r1^2 + 4 m1 m2r1
///   vw1 = n0 m1 + n0 m2r1 + 2 n2 m1 + 3 n2 m2r1 + 2 n2d m1 + 2r n2d m2r1
ThreeTermCounts section1_example(const ThreeTermParams& p);

/// The same counts from Clebsch-Gordan and weight spaces.
ThreeTermCounts section1_generic(const ThreeTermParams& p);

/// V = sum (n_i + m_i) Sym^i,  W = sum n_i Sym^(i-1) + sum m_i Sym^(i+1)
/// (Sym^-1 = 0). Sequences are indexed from i = 0 and may differ in length.
std::pair<Rep, Rep> section4_pair(const std::vector<Mult>& n, const std::vector<Mult>& m);

/// sum (n_i^2 + m_i^2), the predicted d_zero of section4_pair.
Mult section4_predicted_d0(const std::vector<Mult>& n, const std::vector<Mult>& m);

/// sum n_i St_(N-i) - sum m_i St_(N+i+2), the predicted
/// V(x)St_N - W(x)St_(N+1). Requires N >= length of n.
VirtualRep section4_predicted_difference(const std::vector<Mult>& n, const std::vector<Mult>& m, int big_n);

}  // namespace cglab
