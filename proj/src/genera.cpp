#include "multifan/genera.hpp"

#include "multifan/cohomology.hpp"
#include "multifan/errors.hpp"

#include <sstream>

namespace multifan {

FracExpPoly FracExpPoly::constant(const Int& c) {
    FracExpPoly p;
    p.add_term(Rat(0), c);
    return p;
}

void FracExpPoly::add_term(const Rat& e, const Int& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Int FracExpPoly::coeff(const Rat& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Int(0) : it->second;
}

bool FracExpPoly::is_zero() const { return t_.empty(); }

bool FracExpPoly::integer_exponents() const {
    for (const auto& [e, c] : t_)
        if (e.get_den() != 1) return false;
    return true;
}

FracExpPoly FracExpPoly::operator+(const FracExpPoly& o) const {
    FracExpPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

FracExpPoly FracExpPoly::operator-(const FracExpPoly& o) const {
    FracExpPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

FracExpPoly FracExpPoly::operator*(const FracExpPoly& o) const {
    FracExpPoly r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

FracExpPoly FracExpPoly::shifted(const Rat& e) const {
    FracExpPoly r;
    for (const auto& [e1, c1] : t_) r.add_term(e1 + e, c1);
    return r;
}

Rat FracExpPoly::min_exp() const { return t_.empty() ? Rat(0) : t_.begin()->first; }
Rat FracExpPoly::max_exp() const { return t_.empty() ? Rat(0) : t_.rbegin()->first; }

std::optional<FracExpPoly> FracExpPoly::divide_exact(const FracExpPoly& divisor) const {
    if (divisor.is_zero()) throw Error("division by zero polynomial");
    if (!integer_exponents() || !divisor.integer_exponents())
        throw Error("exact division handles integer exponents only");
    if (is_zero()) return FracExpPoly::zero();
    // dense long division from the top; the divisor's leading coefficient
    // must be a unit so everything stays integral
    long lo = min_exp().get_num().get_si(), hi = max_exp().get_num().get_si();
    long dlo = divisor.min_exp().get_num().get_si(), dhi = divisor.max_exp().get_num().get_si();
    const Int lead = divisor.coeff(Rat(dhi));
    if (lead != 1 && lead != -1)
        throw Error("exact division wants a +-1 leading coefficient");
    std::vector<Int> rem(hi - lo + 1, Int(0));
    for (const auto& [e, c] : t_) rem[e.get_num().get_si() - lo] = c;
    FracExpPoly q;
    for (long k = hi - dhi; k >= lo - dlo; --k) {
        Int c = rem[k + dhi - lo] * lead; // lead * lead == 1
        if (c == 0) continue;
        q.add_term(Rat(k), c);
        for (const auto& [e, dc] : divisor.terms())
            rem[k + e.get_num().get_si() - lo] -= c * dc;
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return q;
}

Cyclotomic FracExpPoly::eval_root(const Rat& sigma) const {
    Cyclotomic z;
    for (const auto& [e, c] : t_)
        z += Cyclotomic::root_of_unity(sigma * e) * Rat(c);
    return z;
}

std::string FracExpPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        Int shown = c;
        std::string power;
        if (e == 0) {
            power = "";
        } else if (e.get_den() == 1) {
            // w^e = (-1)^e y^e for integer e
            if (e.get_num() % 2 != 0) shown = -shown;
            power = e == 1 ? "y" : "y^" + e.get_num().get_str();
        } else {
            power = "(-y)^(" + e.get_str() + ")";
        }
        if (first) {
            if (shown < 0) os << "-";
            first = false;
        } else {
            os << (shown < 0 ? " - " : " + ");
        }
        Int mag = abs(shown);
        if (mag != 1 || power.empty()) {
            os << mag.get_str();
            if (!power.empty()) os << "*";
        }
        os << power;
    }
    return os.str();
}

void FracExpPoly::prune() {
    for (auto it = t_.begin(); it != t_.end();)
        it = it->second == 0 ? t_.erase(it) : std::next(it);
}

void CyclicExpPoly::add_term(long e, const Int& c) {
    long r = e % n_;
    if (r < 0) r += n_;
    c_[r] += c;
}

Cyclotomic CyclicExpPoly::eval_root_power(long j) const {
    Cyclotomic z;
    for (long e = 0; e < n_; ++e) {
        if (c_[e] == 0) continue;
        z += Cyclotomic::root_of_unity(Rat(j * e, n_)) * Rat(c_[e]);
    }
    return z;
}

bool CyclicExpPoly::constant_coefficients() const {
    for (long e = 1; e < n_; ++e)
        if (c_[e] != c_[0]) return false;
    return true;
}

std::string CyclicExpPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (long e = 0; e < n_; ++e) {
        if (c_[e] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[e].get_str();
        if (e > 0) os << "*w^" << e;
    }
    if (first) os << "0";
    os << "  (w^" << n_ << " = 1)";
    return os.str();
}

FracExpPoly ty_genus(const MultiFan& fan) {
    FracExpPoly p;
    std::vector<long> h = fan.h_vector();
    for (size_t k = 0; k < h.size(); ++k) p.add_term(Rat(k), Int(h[k]));
    return p;
}

FracExpPoly ty_via_e(const MultiFan& fan) {
    std::vector<long> e = fan.e_vector();
    const int n = fan.rank();
    FracExpPoly wm1;
    wm1.add_term(Rat(1), 1);
    wm1.add_term(Rat(0), -1);
    FracExpPoly acc = FracExpPoly::constant(0);
    FracExpPoly pow = FracExpPoly::constant(1); // (w-1)^0
    // accumulate from k = n downward so each step reuses (w-1)^{n-k}
    for (int k = n; k >= 0; --k) {
        FracExpPoly term = pow;
        acc = acc + term * FracExpPoly::constant(Int(e[k]));
        pow = pow * wm1;
    }
    return acc;
}

FracExpPoly ty_of_projection(const MultiFan& fan, const std::vector<int>& K) {
    if (int(K.size()) == fan.rank()) {
        // projection along a maximal simplex is the rank-zero fan with the
        // single weight w(K)
        for (const Cone& c : fan.cones())
            if (c.rays == K) return FracExpPoly::constant(Int(c.w()));
        throw NotASimplex("maximal simplex is not a cone");
    }
    ProjectedFan p = fan.project(K);
    return ty_genus(*p.fan);
}

FracExpPoly orbifold_ty(const MultiFan& fan) {
    if (!fan.is_complete()) throw NotComplete("orbifold T_y needs a complete fan");
    FracExpPoly total;
    for (const auto& K : fan.simplices()) {
        auto hat = fan.hat_HK(K);
        if (hat.empty()) continue;
        FracExpPoly tyK = ty_of_projection(fan, K);
        for (const FractionData& h : hat) total = total + tyK.shifted(h.f_total);
    }
    return total;
}

CyclicExpPoly modified_orbifold_ty(const MultiFan& fan, const Int& N) {
    if (!fan.is_complete()) throw NotComplete("modified orbifold T_y needs a complete fan");
    if (N <= 1) throw Error("modulus must exceed 1");
    for (const Cone& c : fan.cones()) {
        Int o = fan.group_order(c.rays);
        if (gcd_int(o, N) != 1)
            throw NotCoprime("|H_I| = " + o.get_str() + " shares a factor with N = " + N.get_str());
    }
    long n = N.get_si();
    CyclicExpPoly total(n);
    for (const auto& K : fan.simplices()) {
        auto hat = fan.hat_HK(K);
        if (hat.empty()) continue;
        FracExpPoly tyK = ty_of_projection(fan, K);
        for (const FractionData& h : hat) {
            Int base = K.empty() ? Int(0) : breve(h.f_total, N);
            for (const auto& [e, c] : tyK.terms()) {
                // inner exponents are integers; breve is additive, so the
                // term lands at breve(f) + e mod N
                if (e.get_den() != 1) throw Error("projected genus has fractional exponent (bug)");
                total.add_term(base.get_si() + e.get_num().get_si(), c);
            }
        }
    }
    return total;
}

CyclicExpPoly breve_image(const FracExpPoly& p, const Int& N) {
    CyclicExpPoly out(N.get_si());
    for (const auto& [e, c] : p.terms()) out.add_term(breve(e, N).get_si(), c);
    return out;
}

bool check_hatT_divisible(const MultiFan& fan, const Int& N) {
    DivisibilityWitness w = t_cartier_divisibility(fan, N);
    if (!w.t_cartier)
        throw PreconditionUnmet("c_1 is not T-Cartier divisible by " + N.get_str());
    FracExpPoly hat = orbifold_ty(fan);
    if (!hat.integer_exponents())
        throw TheoremViolation("orbifold T_y has fractional exponents despite divisibility");
    FracExpPoly divisor;
    long n = N.get_si();
    for (long k = 0; k < n; ++k) divisor.add_term(Rat(k), 1);
    return hat.divide_exact(divisor).has_value();
}

bool check_breve_vanishing(const MultiFan& fan, const Int& N) {
    DivisibilityWitness w = divisibility(fan, N);
    if (!w.divisible)
        throw PreconditionUnmet("c_1 is not divisible by " + N.get_str());
    CyclicExpPoly p = modified_orbifold_ty(fan, N); // throws NotCoprime if unsuitable
    // certificate 1: evaluation at every nontrivial N-th root
    bool roots_vanish = true;
    for (long j = 1; j < p.modulus(); ++j)
        if (!p.eval_root_power(j).is_zero()) { roots_vanish = false; break; }
    // certificate 2: the polynomial is a multiple of 1 + w + ... + w^{N-1}
    bool shape = p.constant_coefficients();
    if (roots_vanish != shape)
        throw Error("vanishing certificates disagree (bug)");
    return roots_vanish;
}

bool check_hatT_vanishing(const MultiFan& fan) {
    if (!c1_is_zero(fan))
        throw PreconditionUnmet("c_1 does not vanish");
    return orbifold_ty(fan).is_zero();
}

} // namespace multifan
