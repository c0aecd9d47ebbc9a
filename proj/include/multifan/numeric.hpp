#pragma once

// Floating-point evaluation of the basic function
//
//                        1 - zeta t         (1 - zeta t q^k)(1 - zeta^-1 t^-1 q^k)
//   phi = zeta^{-1/2} * ------------ * prod ---------------------------------------
//                          1 - t      k>=1       (1 - t q^k)(1 - t^-1 q^k)
//
// with t = e^{2 pi i z}, q = e^{2 pi i tau}, zeta = e^{2 pi i sigma},
// plus residual checks of its SL2(Z) transformation law.  These are
// diagnostics for the exact q-series code, not production arithmetic.

#include "multifan/errors.hpp"

#include <complex>

namespace multifan {

struct ComplexPoint {
    std::complex<double> z;
    std::complex<double> tau;   // Im tau > 0
    std::complex<double> sigma;
};

struct NumericPhi {
    std::complex<double> value;
    double tail_bound; // rigorous bound on the dropped tail, infinity if n/a
};

// Product truncated after `truncation` values of k.  Throws PoleProximity
// when any factor in the truncated product has magnitude below 1e-12, and
// PreconditionUnmet when Im tau <= 0.
NumericPhi numeric_phi(const ComplexPoint& p, int truncation = 64);

// |LHS - RHS| for phi(A(z,tau), sigma) =
//   e^{pi i c (2 z sigma + (c tau + d) sigma^2)} phi(z, tau, (c tau + d) sigma)
// with A = [[a,b],[c,d]] in SL2(Z).
double check_modular_transformation(long a, long b, long c, long d, const ComplexPoint& p,
                                    int truncation = 64);

// |phi(z + m tau + n) - zeta^{-m} phi(z)|.
double check_quasi_periodicity(long m, long n, const ComplexPoint& p, int truncation = 64);

} // namespace multifan
