/**
 * Complex log-Gamma, polygamma functions, and Taylor jets of 1/Gamma.
 */
#pragma once

#include <complex>
#include <vector>

namespace bbgkz {

using Complex = std::complex<double>;

/// log Gamma(z) for Re z >= 1/2, some branch of the logarithm.
Complex log_gamma(Complex z);

/// n-th derivative of the digamma function, n >= 0, for Re z >= 1/2.
Complex polygamma(int n, Complex z);

/// Taylor coefficients c_0..c_{order-1} of eps -> 1/Gamma(l + 1 + eps).
std::vector<Complex> reciprocal_gamma_jet(Complex l, int order);

} // namespace bbgkz
