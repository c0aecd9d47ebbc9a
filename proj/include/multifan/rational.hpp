#pragma once

// Exact integer/rational scalars and small helpers shared by every module.
// GMP does the heavy lifting; nothing in the library ever rounds.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace multifan {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// floor(x) as an integer.
Int floor_rat(const Rat& x);

// Fractional part x - floor(x), always in [0, 1).
Rat frac_rat(const Rat& x);

// Representative of a mod m in [0, m); requires m > 0.
Int mod_floor(const Int& a, const Int& m);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// Inverse of a modulo m; throws NotCoprime when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

// For f = s/r in lowest terms with gcd(r, N) = 1, returns the unique
// e in [0, N) with r*e == s (mod N).  Additive in f modulo N.
Int breve(const Rat& f, const Int& N);

Rat dot(const QVec& a, const ZVec& b);
Rat dot(const QVec& a, const QVec& b);
Int dot(const ZVec& a, const ZVec& b);

ZVec to_zvec(const std::vector<long>& v);
QVec to_qvec(const ZVec& v);

std::string vec_str(const ZVec& v);
std::string vec_str(const QVec& v);

// Strict "p/q" or integer literal parser; throws ParseError on anything
// else (floats in particular are rejected).
Rat parse_rat(const std::string& s);

} // namespace multifan
