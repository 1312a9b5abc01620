#pragma once

#include "nsmean/means.hpp"
#include "nsmean/numeric.hpp"

namespace nsmean {

/// Generalized logarithmic mean
///   L_p = [(b^(p+1) - a^(p+1)) / ((p+1)(b-a))]^(1/p),
///   L_0 = (1/e) (b^b / a^a)^(1/(b-a)),  L_-1 = (b-a) / (log b - log a).
/// Continuous and strictly increasing in p for a != b; L_1 = A, L_2 is
/// sqrt((a^2+ab+b^2)/3). Near p = 0 (|p| < 1e-6) the value is interpolated
/// linearly between L_0 and L_{+-1e-6}.
double generalized_log_mean(double p, const PositivePair& pair);

/// log(L_p / A) as a function of the scaled variable.
double generalized_log_mean_scaled_log(double p, const ScaledVariable& v);

/// (p+1)^(1/p) - 2 log(1 + sqrt 2).
double p0_equation(double p);

/// The unique root p0 = 1.8435... of p0_equation on [1, 3].
RootResult solve_p0();

}  // namespace nsmean
