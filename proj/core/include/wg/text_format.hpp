#pragma once

#include <string>

#include "wg/laurent.hpp"
#include "wg/rational_function.hpp"

namespace wg {

/// Display form for Weingarten values: when the (monic) denominator
/// splits over the integers the factored form is printed, e.g.
/// "-1/((N-1) N (N+1))" with roots descending; otherwise the expanded
/// polynomial form.
std::string factored_str(const RationalFunction& f, const std::string& var = "N");

}  // namespace wg
