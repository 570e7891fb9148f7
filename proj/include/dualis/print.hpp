#pragma once

#include <string>

#include "dualis/groebner.hpp"

namespace dualis {

/// Deterministic text in the stored (descending) term order, e.g.
/// "4*x0^3-x0*x1^2+1/2*x3". Parseable back by the poly production.
std::string print_polynomial(const Polynomial& p);

/// Full document (ring declaration plus ideal declaration), parseable by
/// parse_ideal. The zero ideal prints as "ideal = 0;".
std::string print_ideal(const Ideal& ideal);

} // namespace dualis
