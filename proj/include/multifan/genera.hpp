#pragma once

// T_y-type genera.  Polynomials are written in w = -y, so the plain genus
// of a complete fan is sum_k h_k w^k; the orbifold variant picks up
// fractional powers w^{f} with f the fraction totals of the interior
// lattice classes, and the modified variant folds those exponents into
// Z/N through the breve map.

#include "multifan/cyclotomic.hpp"
#include "multifan/fan.hpp"

#include <map>

namespace multifan {

// Finite sum of terms c * w^e with integer c and rational e >= 0.
class FracExpPoly {
public:
    static FracExpPoly zero() { return {}; }
    static FracExpPoly constant(const Int& c);

    void add_term(const Rat& e, const Int& c);
    Int coeff(const Rat& e) const;
    const std::map<Rat, Int>& terms() const { return t_; }
    bool is_zero() const;
    bool integer_exponents() const;

    FracExpPoly operator+(const FracExpPoly& o) const;
    FracExpPoly operator-(const FracExpPoly& o) const;
    FracExpPoly operator*(const FracExpPoly& o) const;
    FracExpPoly shifted(const Rat& e) const; // multiply by w^e
    bool operator==(const FracExpPoly& o) const { return t_ == o.t_; }

    Rat min_exp() const; // 0 for the zero polynomial
    Rat max_exp() const;

    // Exact division by a monic-in-lowest-term integer-exponent divisor;
    // nullopt when the division leaves a remainder.
    std::optional<FracExpPoly> divide_exact(const FracExpPoly& divisor) const;

    // Substitute w = exp(2 pi i sigma); fractional exponents use the same
    // branch, w^e = exp(2 pi i sigma e).
    Cyclotomic eval_root(const Rat& sigma) const;

    std::string str() const; // rendered in y, fractional powers as (-y)^(e)

private:
    std::map<Rat, Int> t_;
    void prune();
};

// Element of Z[w]/(w^N - 1): exponent vector of length N.
class CyclicExpPoly {
public:
    CyclicExpPoly(long N) : n_(N), c_(N, Int(0)) {}
    long modulus() const { return n_; }
    void add_term(long e, const Int& c);
    const std::vector<Int>& coeffs() const { return c_; }
    bool operator==(const CyclicExpPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

    // value at w = exp(2 pi i j / N)
    Cyclotomic eval_root_power(long j) const;
    // true when the polynomial is an integer multiple of 1 + w + ... + w^{N-1}
    bool constant_coefficients() const;

    std::string str() const;

private:
    long n_;
    std::vector<Int> c_;
};

// sum_k h_k w^k.
FracExpPoly ty_genus(const MultiFan& fan);

// Same genus through the face-count route: sum_k e_k (w - 1)^{n-k}.
FracExpPoly ty_via_e(const MultiFan& fan);

// T_y of the projection of `fan` along K (constant w(K) when K is maximal).
FracExpPoly ty_of_projection(const MultiFan& fan, const std::vector<int>& K);

// sum over simplices K and interior classes h of w^{f_{K,h}} T_y(fan_K).
FracExpPoly orbifold_ty(const MultiFan& fan);

// Orbifold genus with every exponent pushed into Z/N by breve; requires
// gcd(N, |H_I|) = 1 for all maximal I (throws NotCoprime).
CyclicExpPoly modified_orbifold_ty(const MultiFan& fan, const Int& N);

// Exponent-wise breve image; matches modified_orbifold_ty whenever the
// denominators are coprime to N.
CyclicExpPoly breve_image(const FracExpPoly& p, const Int& N);

// Orbifold T_y divisibility by 1 + w + ... + w^{N-1}; precondition:
// c_1 T-Cartier divisible by N.
bool check_hatT_divisible(const MultiFan& fan, const Int& N);

// Vanishing of the modified orbifold T_y at every nontrivial N-th root.
// Verified through two independent certificates (root evaluation and the
// constant-coefficient shape), which must agree.  Precondition: the
// coprimality above plus plain divisibility of c_1 by N.
bool check_breve_vanishing(const MultiFan& fan, const Int& N);

// Vanishing of the orbifold T_y as a polynomial; precondition c_1 = 0.
bool check_hatT_vanishing(const MultiFan& fan);

} // namespace multifan
