#include "multifan/cyclotomic.hpp"

#include "multifan/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace multifan {

namespace {

std::mutex phi_cache_mutex;
std::map<long, std::vector<Int>>& phi_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}

// quotient of exact division of integer polynomials (constant term first)
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
    std::vector<Int> q(dn - dd + 1, Int(0));
    for (int k = dn - dd; k >= 0; --k) {
        Int c = num[k + dd] / den[dd]; // den is monic here, division exact
        q[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const Int& r : num)
        if (r != 0) throw Error("poly_div_exact: nonzero remainder");
    return q;
}

std::vector<Int> compute_cyclotomic(long m) {
    // (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div_exact(std::move(num), Cyclotomic::cyclotomic_poly(d));
    }
    return num;
}

} // namespace

std::vector<Int> Cyclotomic::cyclotomic_poly(long m) {
    if (m < 1) throw Error("cyclotomic_poly: m must be positive");
    {
        std::lock_guard<std::mutex> lock(phi_cache_mutex);
        auto it = phi_cache().find(m);
        if (it != phi_cache().end()) return it->second;
    }
    // compute outside the lock; recursion reacquires it for divisors
    std::vector<Int> p = m == 1 ? std::vector<Int>{Int(-1), Int(1)} : compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(phi_cache_mutex);
    phi_cache().emplace(m, p);
    return p;
}

std::vector<Rat> Cyclotomic::reduce_mod_phi(long m, std::vector<Rat> p) {
    std::vector<Int> phi = cyclotomic_poly(m);
    const int deg = int(phi.size()) - 1;
    for (int k = int(p.size()) - 1; k >= deg; --k) {
        if (p[k] == 0) continue;
        Rat c = p[k]; // phi monic: subtract c * x^{k-deg} * phi
        for (int j = 0; j <= deg; ++j) p[k - deg + j] -= c * Rat(phi[j]);
    }
    p.resize(deg, Rat(0));
    return p;
}

Cyclotomic Cyclotomic::from_rat(const Rat& r) {
    Cyclotomic z;
    z.c_[0] = r;
    return z;
}

Cyclotomic Cyclotomic::root_of_unity(const Rat& e) {
    Rat f = frac_rat(e);
    long m = f.get_den().get_si();
    long p = f.get_num().get_si(); // 0 <= p < m
    std::vector<Rat> poly(size_t(p) + 1, Rat(0));
    poly[p] = 1;
    return Cyclotomic(m, reduce_mod_phi(m, std::move(poly)));
}

bool Cyclotomic::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational");
    return c_[0];
}

bool Cyclotomic::integral() const {
    for (const Rat& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

Cyclotomic Cyclotomic::embedded(long M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw Error("conductor embedding needs m | M");
    long k = M / m_;
    std::vector<Rat> poly(size_t(c_.size() - 1) * k + 1, Rat(0));
    for (size_t j = 0; j < c_.size(); ++j) poly[j * k] = c_[j];
    return Cyclotomic(M, reduce_mod_phi(M, std::move(poly)));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long M = std::lcm(m_, o.m_);
    Cyclotomic a = embedded(M), b = o.embedded(M);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long M = std::lcm(m_, o.m_);
    Cyclotomic a = embedded(M), b = o.embedded(M);
    std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Cyclotomic(M, reduce_mod_phi(M, std::move(prod)));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) { return *this = *this + o; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this = *this - o; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
    Cyclotomic a = *this;
    for (Rat& x : a.c_) x *= r;
    return a;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    long M = std::lcm(m_, o.m_);
    return embedded(M).c_ == o.embedded(M).c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("inverse of zero cyclotomic");
    // extended Euclid in Q[x] for gcd(f, Phi_m) = 1: s f + t Phi = 1
    std::vector<Rat> r0(c_), r1;
    for (const Int& x : cyclotomic_poly(m_)) r1.emplace_back(x);
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(r0);
    trim(r1);
    std::vector<Rat> s0{Rat(1)}, s1; // coefficients of f in the Bezout identity
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<Rat> q(std::max<int>(int(r0.size()) - int(r1.size()) + 1, 0), Rat(0));
        std::vector<Rat> rem = r0;
        for (int k = int(rem.size()) - int(r1.size()); k >= 0; --k) {
            Rat c = rem[k + r1.size() - 1] / r1.back();
            q[k] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < r1.size(); ++j) rem[k + j] -= c * r1[j];
        }
        trim(rem);
        // s_new = s0 - q * s1
        std::vector<Rat> snew = s0;
        snew.resize(std::max(s0.size(), q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        trim(snew);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    // r0 = gcd (a nonzero constant, since Phi_m is squarefree and f != 0
    // in the field); s0 holds the cofactor of f
    if (r0.size() != 1)
        throw Error("cyclotomic inverse: value is a zero divisor (bug)");
    Rat scale = 1 / r0[0];
    std::vector<Rat> inv(s0.size());
    for (size_t i = 0; i < s0.size(); ++i) inv[i] = s0[i] * scale;
    return Cyclotomic(m_, reduce_mod_phi(m_, std::move(inv)));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        double ang = 2.0 * std::numbers::pi * double(j) / double(m_);
        z += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "cyc" << m_ << "(";
    for (size_t j = 0; j < c_.size(); ++j) {
        if (j) os << ",";
        os << c_[j].get_str();
    }
    os << ")";
    return os.str();
}

} // namespace multifan
