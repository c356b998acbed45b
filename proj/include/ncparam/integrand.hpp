#pragma once

#include "ncparam/amplitude.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace ncparam {

/// Numeric values keyed by registry name (a1, a1_1, theta, s_1_1, msq, ...)
/// plus "a". theta, msq and a fall back to the model parameters; m1sq and
/// m2sq are always derived from msq, theta and a.
using NumericPoint = std::map<std::string, double>;

/// Parses "k=v,k=v". Throws ParseError.
NumericPoint parse_point(std::string_view text);

/// sign (a/theta^2)^|S| U_theta^(-D/2) exp(-W/U_theta) exp(-M) for term S.
/// Throws ConstraintError for nonpositive Schwinger parameters or inadmissible
/// (theta, m^2, a), and Error for a missing value.
double eval_integrand(const AmplitudeExpansion& expansion, std::uint64_t subset, const NumericPoint& point);

/// U^(-D/2) exp(-V/U) exp(-m^2 sum a_l) from the commutative pair.
double eval_commutative_integrand(const AmplitudeExpansion& expansion, const NumericPoint& point);

} // namespace ncparam
