#pragma once

// Laurent polynomials in the fixed-point variable t with cyclotomic
// coefficients, and formal fractions whose denominators are kept as
// factored multisets of binomials 1 - alpha t^a (alpha a root of unity,
// a > 0).  Keeping denominators factored makes the final cancellation
// check cheap and exact: a sum of fractions is a Laurent polynomial iff
// the merged numerator is divisible by every denominator factor.

#include "multifan/cyclotomic.hpp"

#include <complex>
#include <map>
#include <optional>

namespace multifan {

using TExp = long long; // t-exponents: pairings of desk-size duals stay tiny

class TLaurent {
public:
    static TLaurent monomial(TExp e, Cyclotomic c);
    static TLaurent one();

    bool is_zero() const { return c_.empty(); }
    const std::map<TExp, Cyclotomic>& terms() const { return c_; }
    Cyclotomic coeff(TExp e) const;

    void add_term(TExp e, const Cyclotomic& c);
    TLaurent operator+(const TLaurent& o) const;
    TLaurent operator-(const TLaurent& o) const;
    TLaurent operator*(const TLaurent& o) const;
    TLaurent scaled(const Cyclotomic& c) const;
    TLaurent shifted(TExp e) const; // multiply by t^e
    bool operator==(const TLaurent& o) const;

    TExp min_exp() const; // 0 when zero
    TExp max_exp() const;

    // Quotient by 1 - alpha t^a with a > 0, when the division is exact.
    std::optional<TLaurent> divide_binomial(const Cyclotomic& alpha, TExp a) const;

    std::complex<double> eval(const std::complex<double>& t) const;
    std::string str() const;

private:
    std::map<TExp, Cyclotomic> c_; // zero coefficients never stored
};

// 1 - root_of_unity(alpha_e) * t^a; normalized so a > 0.
struct BinomialFactor {
    Rat alpha_e;
    TExp a;
    bool operator==(const BinomialFactor& o) const { return alpha_e == o.alpha_e && a == o.a; }
    bool operator<(const BinomialFactor& o) const {
        if (a != o.a) return a < o.a;
        return alpha_e < o.alpha_e;
    }
    Cyclotomic alpha() const { return Cyclotomic::root_of_unity(alpha_e); }
    TLaurent expand() const; // as a Laurent polynomial
};

class TFraction {
public:
    TFraction() = default; // zero
    explicit TFraction(TLaurent num) : num_(std::move(num)) {}
    static TFraction scalar(const Cyclotomic& c);

    const TLaurent& num() const { return num_; }
    const std::vector<BinomialFactor>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    void mul_laurent(const TLaurent& p);
    void mul_scalar(const Cyclotomic& c);
    void mul_monomial(TExp e, const Cyclotomic& c);
    void mul_fraction(const TFraction& o);
    // divide by 1 - alpha t^a (a may be negative; the factor is then
    // rewritten with positive exponent, adjusting the numerator by the
    // unit -alpha^{-1} t^{-a})
    void div_binomial(const Rat& alpha_e, TExp a);
    void add(const TFraction& o);

    // collapse to a Laurent polynomial; throws PolynomialityFailure when
    // some denominator factor does not divide the numerator
    TLaurent reduce() const;

private:
    TLaurent num_;
    std::vector<BinomialFactor> den_; // sorted multiset
};

} // namespace multifan
