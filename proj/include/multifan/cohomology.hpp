#pragma once

// Degree-two equivariant classes x = sum_i c_i x_i, their restrictions to
// fixed points, T-Cartier-ness, and divisibility of the first Chern class.
//
// Restriction to a maximal cone I sends x to sum_{i in I} c_i u_i^I where
// {u_i^I} is the basis dual to the edge vectors of I.  The class is
// T-Cartier when every restriction is an integral covector.  c_1 is the
// class with all c_i = 1; it is divisible by N in the plain sense when
// some integral u pairs to 1 mod N with every edge vector, and T-Cartier
// divisibly when additionally (c_1 - u)/N can be written with integer
// coefficients whose restrictions are all integral.

#include "multifan/fan.hpp"

namespace multifan {

struct FaceRingClass {
    ZVec c; // one coefficient per ray, aligned with fan ray indices
};

FaceRingClass c1T(const MultiFan& fan);

// Restriction of x to the fixed point of a maximal cone, as a covector in
// the dual basis coordinates of the ambient lattice.
QVec restrict_to(const MultiFan& fan, const FaceRingClass& x, const Cone& cone);

bool is_T_Cartier(const MultiFan& fan, const FaceRingClass& x);

struct DivisibilityWitness {
    Int N;
    bool divisible = false;   // c_1 = u + N x with u integral, x in the face ring
    bool t_cartier = false;   // the quotient class can be taken T-Cartier
    std::optional<ZVec> u;    // canonical witness covector (coordinates in [0, N))
    std::optional<FaceRingClass> x; // witness quotient class when t_cartier
};

// Plain divisibility: solve <u, v_i> == 1 (mod N) for every ray.  The
// witness is the lexicographically smallest solution with all coordinates
// in [0, N).
DivisibilityWitness divisibility(const MultiFan& fan, const Int& N);

// T-Cartier divisibility.  Requires every restriction of c_1 integral and
// mutually congruent mod N, plus the plain ray condition; the witness x
// satisfies c_1 = u + N x with x T-Cartier.
DivisibilityWitness t_cartier_divisibility(const MultiFan& fan, const Int& N);

// Integral u with <u, v_i> = 1 for every ray, when one exists; this is
// exactly the vanishing of c_1 in the quotient of the face ring.
std::optional<ZVec> c1_zero_witness(const MultiFan& fan);
bool c1_is_zero(const MultiFan& fan);

// The class sum_i <u, v_i> x_i induced by an integral covector; these are
// the relations modulo which c_1 divisibility is understood.
FaceRingClass covector_class(const MultiFan& fan, const ZVec& u);

} // namespace multifan
