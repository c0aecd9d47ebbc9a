#include "multifan/numeric.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace multifan {

namespace {

constexpr double kPoleTol = 1e-12;
const double kPi = 3.14159265358979323846;

std::complex<double> e2pi(const std::complex<double>& w) {
    return std::exp(std::complex<double>(0.0, 2.0 * kPi) * w);
}

void pole_guard(const std::complex<double>& factor, const char* where) {
    if (std::abs(factor) < kPoleTol)
        throw PoleProximity(std::string("factor vanishes numerically in ") + where);
}

} // namespace

NumericPhi numeric_phi(const ComplexPoint& p, int truncation) {
    if (p.tau.imag() <= 0) throw PreconditionUnmet("tau must have positive imaginary part");
    const std::complex<double> q = e2pi(p.tau);
    const std::complex<double> t = e2pi(p.z);
    const std::complex<double> zeta = e2pi(p.sigma);
    const std::complex<double> tinv = 1.0 / t;
    const std::complex<double> zinv = 1.0 / zeta;

    std::complex<double> den0 = 1.0 - t;
    pole_guard(den0, "head");
    std::complex<double> value =
        std::exp(std::complex<double>(0.0, -kPi) * p.sigma) * (1.0 - zeta * t) / den0;

    std::complex<double> qk = 1.0;
    for (int k = 1; k <= truncation; ++k) {
        qk *= q;
        std::complex<double> d1 = 1.0 - t * qk;
        std::complex<double> d2 = 1.0 - tinv * qk;
        pole_guard(d1, "tower");
        pole_guard(d2, "tower");
        value *= (1.0 - zeta * t * qk) * (1.0 - zinv * tinv * qk) / (d1 * d2);
    }

    // Dropped factors are (1 + x) with |x| <= c * |q|^k; bound the tail of
    // sum |x|/(1-|x|) geometrically when the first dropped x is small.
    NumericPhi out{value, std::numeric_limits<double>::infinity()};
    double aq = std::abs(q);
    if (aq < 1.0) {
        double at = std::abs(t), az = std::abs(zeta);
        double c = az * at + 1.0 / (az * at) + at + 1.0 / at;
        double xmax = std::max(std::max(az * at, 1.0 / (az * at)), std::max(at, 1.0 / at)) *
                      std::pow(aq, truncation + 1);
        if (xmax < 0.5) {
            double s = c * std::pow(aq, truncation + 1) / ((1.0 - aq) * (1.0 - xmax));
            out.tail_bound = std::abs(value) * std::expm1(s);
        }
    }
    return out;
}

double check_modular_transformation(long a, long b, long c, long d, const ComplexPoint& p,
                                    int truncation) {
    if (a * d - b * c != 1) throw PreconditionUnmet("matrix is not in SL2(Z)");
    const std::complex<double> cd = double(c) * p.tau + double(d);
    ComplexPoint moved{p.z / cd, (double(a) * p.tau + double(b)) / cd, p.sigma};
    std::complex<double> lhs = numeric_phi(moved, truncation).value;

    ComplexPoint scaled{p.z, p.tau, cd * p.sigma};
    std::complex<double> automorphy = std::exp(std::complex<double>(0.0, kPi) * double(c) *
                                               (2.0 * p.z * p.sigma + cd * p.sigma * p.sigma));
    std::complex<double> rhs = automorphy * numeric_phi(scaled, truncation).value;
    return std::abs(lhs - rhs);
}

double check_quasi_periodicity(long m, long n, const ComplexPoint& p, int truncation) {
    ComplexPoint moved{p.z + double(m) * p.tau + double(n), p.tau, p.sigma};
    std::complex<double> lhs = numeric_phi(moved, truncation).value;
    std::complex<double> rhs =
        std::exp(std::complex<double>(0.0, -2.0 * kPi) * double(m) * p.sigma) *
        numeric_phi(p, truncation).value;
    return std::abs(lhs - rhs);
}

} // namespace multifan
