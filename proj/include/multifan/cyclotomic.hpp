#pragma once

// Exact arithmetic in cyclotomic fields Q(xi_m), xi_m = exp(2*pi*i/m).
//
// A value is stored as rational coordinates in the power basis
// 1, xi, ..., xi^{phi(m)-1}, i.e. as a polynomial reduced modulo the m-th
// cyclotomic polynomial.  Reduction makes the representation canonical for
// a fixed conductor, so equality and zero tests are exact; values with
// different conductors are compared after embedding both into Q(xi_lcm).
// Conductors are raised lazily, only when two operands actually meet.
//
// The power basis is a Z-module basis of Z[xi_m], so "all coordinates are
// integers" is the right meaning of integrality for the normalization
// checks done by the genus code.

#include "multifan/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace multifan {

class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_(1, Rat(0)) {} // zero

    static Cyclotomic from_rat(const Rat& r);
    // exp(2*pi*i*e) for rational e; conductor = denominator of e mod 1
    static Cyclotomic root_of_unity(const Rat& e);

    long conductor() const { return m_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;       // lies in Q
    Rat rational_value() const;     // requires is_rational()
    bool integral() const;          // all coordinates in Z

    Cyclotomic embedded(long M) const; // requires m | M

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic operator*(const Rat& r) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic inverse() const; // throws on zero

    std::complex<double> to_complex() const;
    std::string str() const;

    // Coefficients of the m-th cyclotomic polynomial, constant term first
    // (monic, integer).  Cached; thread safe.
    static std::vector<Int> cyclotomic_poly(long m);

private:
    Cyclotomic(long m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
    static std::vector<Rat> reduce_mod_phi(long m, std::vector<Rat> p);

    long m_;
    std::vector<Rat> c_; // size phi(m)
};

inline Cyclotomic operator*(const Rat& r, const Cyclotomic& c) { return c * r; }

} // namespace multifan
