#include "multifan/rational.hpp"

#include "multifan/errors.hpp"

#include <sstream>

namespace multifan {

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rat frac_rat(const Rat& x) {
    return x - Rat(floor_rat(x));
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotCoprime("no inverse of " + a.get_str() + " modulo " + m.get_str());
    return r;
}

Int breve(const Rat& f, const Int& N) {
    if (N <= 1) throw Error("breve needs modulus > 1");
    const Int& s = f.get_num();
    const Int& r = f.get_den(); // mpq_class keeps s/r canonical with r > 0
    Int d = mod_inverse(r, N);  // throws NotCoprime when gcd(r, N) > 1
    return mod_floor(d * s, N);
}

Rat dot(const QVec& a, const ZVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const ZVec& a, const ZVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

ZVec to_zvec(const std::vector<long>& v) {
    ZVec r;
    r.reserve(v.size());
    for (long x : v) r.emplace_back(x);
    return r;
}

QVec to_qvec(const ZVec& v) {
    QVec r;
    r.reserve(v.size());
    for (const Int& x : v) r.emplace_back(x);
    return r;
}

std::string vec_str(const ZVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

std::string vec_str(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

Rat parse_rat(const std::string& s) {
    // accepted: [-]digits or [-]digits/digits (den > 0)
    auto bad = [&]() { throw ParseError("not an exact rational: '" + s + "'"); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    auto check_int = [&](const std::string& p, bool sign_ok) {
        if (p.empty()) bad();
        size_t i = 0;
        if (sign_ok && (p[0] == '-' || p[0] == '+')) i = 1;
        if (i == p.size()) bad();
        for (; i < p.size(); ++i)
            if (p[i] < '0' || p[i] > '9') bad();
    };
    // mpz rejects a leading '+', so shed it after validation
    auto strip_plus = [](std::string p) {
        if (!p.empty() && p[0] == '+') p.erase(0, 1);
        return p;
    };
    if (slash == std::string::npos) {
        check_int(s, true);
        return Rat(Int(strip_plus(s)));
    }
    std::string num = strip_plus(s.substr(0, slash)), den = s.substr(slash + 1);
    check_int(s.substr(0, slash), true);
    check_int(den, false);
    Int d(den);
    if (d == 0) bad();
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
}

} // namespace multifan
