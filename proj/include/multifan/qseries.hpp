#pragma once

// q-expansions of the elliptic genera of a complete simplicial multi-fan
// along a generic lattice direction v.
//
// Each fixed-point datum contributes a product of factors
//
//              phi(t^a q^f alpha; q, zeta)
//   zeta^{-1/2} ------------------------------ -type blocks,
//
// expanded as a q-series whose coefficients are Laurent polynomials in t
// over a cyclotomic field, except that a factor with f = 0 keeps its
// 1/(1 - alpha t^a) head symbolically (a factored denominator).  Summing
// the contributions over all fixed-point data cancels every denominator;
// reduce() performs that cancellation exactly and refuses to continue if
// anything fails to cancel.
//
// sigma enters only through the root of unity zeta = exp(2 pi i sigma)
// and must be an exact fraction k/N.

#include "multifan/fan.hpp"
#include "multifan/tlaurent.hpp"

#include <map>

namespace multifan {

enum class GenusKind { Plain, Orbifold, Breve };

// q-series with rational exponents in [0, Q], coefficients still carrying
// denominators.
using QSeriesRaw = std::map<Rat, TFraction>;

// Expansion of one phi factor with data (a, f, alpha): the head
//     (1 - zeta alpha t^a q^f) / (1 - alpha t^a q^f)
// times the k >= 1 tower, truncated at q^Q.  f must lie in [0, 1).
// Throws DegenerateFactor when f = 0, a = 0, alpha = 1.
// The zeta^{-1/2} normalization is included.
QSeriesRaw phi_factor_expand(TExp a, const Rat& f, const Rat& alpha_e, const Rat& sigma,
                             const Rat& Q);

struct GenusQSeries {
    int rank = 0;
    GenusKind kind = GenusKind::Plain;
    Rat sigma;
    Rat truncation; // Q
    ZVec v;
    Int rho;                     // lcm of q-exponent denominators
    std::map<Rat, TLaurent> coeffs; // reduced coefficients, exponents in [0, Q]

    bool is_zero() const;
    // zeta^{n/2} * coefficient: the normalization that must be integral
    TLaurent normalized(const Rat& s) const;
    bool integral() const;
    // global conductor: lcm over every coefficient of every slot
    long conductor() const;
};

// The genus along v at level sigma = k/N through order Q in q.
//   Plain:    sum over maximal I and h in H_I
//   Orbifold: additional twisted sectors from every interior class
//   Breve:    orbifold with the sector prefactor exponent pushed through
//             breve into Z/N (requires gcd(N, |H_I|) = 1)
// v must be generic and pair integrally with every dual basis (i.e. lie
// in the intersection lattice); otherwise NotGeneric is thrown.
GenusQSeries elliptic_genus_along(const MultiFan& fan, const ZVec& v, const Rat& sigma,
                                  const Rat& Q, GenusKind kind, int jobs = 1);

inline GenusQSeries orbifold_elliptic_genus_along(const MultiFan& fan, const ZVec& v,
                                                  const Rat& sigma, const Rat& Q,
                                                  int jobs = 1) {
    return elliptic_genus_along(fan, v, sigma, Q, GenusKind::Orbifold, jobs);
}

inline GenusQSeries modified_orbifold_elliptic_genus_along(const MultiFan& fan,
                                                           const ZVec& v, const Rat& sigma,
                                                           const Rat& Q, int jobs = 1) {
    return elliptic_genus_along(fan, v, sigma, Q, GenusKind::Breve, jobs);
}

// Deterministic generic direction scaled into the intersection lattice:
// the moment-curve vector times the lcm of its pairing denominators.
ZVec generic_lattice_vector(const MultiFan& fan, int index);

// One line per (q-exponent, t-exponent) pair with exact cyclotomic
// coordinates at the series' global conductor; stable output for diffing.
std::string series_machine_text(const GenusQSeries& s);
std::string series_human_text(const GenusQSeries& s);

} // namespace multifan
