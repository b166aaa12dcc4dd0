#pragma once

// Text form of representations: `2*S3 + S0` is 2 Sym^3 + Sym^0.
// Terms are `k*S<m>` or `S<m>`, joined by `+`; whitespace is ignored and
// repeated weights merge. The literal `0` is the zero representation.

#include <string>
#include <string_view>

#include "cglab/rep.hpp"

namespace cglab {

/// Throws ParseError with the offending character offset.
Rep parse_rep(std::string_view text);

/// Canonical form: descending weights, explicit multiplicities (`2*S3+1*S0`).
std::string format_rep(const Rep& r);
std::string format_rep(const VirtualRep& r);

}  // namespace cglab
