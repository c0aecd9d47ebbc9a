#include "multifan/tlaurent.hpp"

#include "multifan/errors.hpp"

#include <algorithm>
#include <sstream>

namespace multifan {

TLaurent TLaurent::monomial(TExp e, Cyclotomic c) {
    TLaurent p;
    p.add_term(e, c);
    return p;
}

TLaurent TLaurent::one() {
    return monomial(0, Cyclotomic::from_rat(Rat(1)));
}

Cyclotomic TLaurent::coeff(TExp e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Cyclotomic() : it->second;
}

void TLaurent::add_term(TExp e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
}

TLaurent TLaurent::operator+(const TLaurent& o) const {
    TLaurent r = *this;
    for (const auto& [e, c] : o.c_) r.add_term(e, c);
    return r;
}

TLaurent TLaurent::operator-(const TLaurent& o) const {
    TLaurent r = *this;
    for (const auto& [e, c] : o.c_) r.add_term(e, -c);
    return r;
}

TLaurent TLaurent::operator*(const TLaurent& o) const {
    TLaurent r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

TLaurent TLaurent::scaled(const Cyclotomic& c) const {
    TLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, x] : c_) r.add_term(e, x * c);
    return r;
}

TLaurent TLaurent::shifted(TExp e) const {
    TLaurent r;
    for (const auto& [e1, c] : c_) r.c_.emplace(e1 + e, c);
    return r;
}

bool TLaurent::operator==(const TLaurent& o) const {
    // canonical per conductor, but conductors may differ term by term
    if (c_.size() != o.c_.size()) return false;
    auto it = c_.begin(), jt = o.c_.begin();
    for (; it != c_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

TExp TLaurent::min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
TExp TLaurent::max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

std::optional<TLaurent> TLaurent::divide_binomial(const Cyclotomic& alpha, TExp a) const {
    if (a <= 0) throw Error("divide_binomial wants a positive exponent");
    if (is_zero()) return TLaurent();
    // p = q (1 - alpha t^a): ascending recurrence q_e = p_e + alpha q_{e-a};
    // exactness shows up as q vanishing on the top `a` exponents
    const TExp lo = min_exp(), hi = max_exp();
    TLaurent q;
    for (TExp e = lo; e <= hi; ++e) {
        Cyclotomic qe = coeff(e);
        if (e - a >= lo) qe += alpha * q.coeff(e - a);
        if (!qe.is_zero()) {
            if (e > hi - a) return std::nullopt; // would leak past the top
            q.add_term(e, qe);
        }
    }
    return q;
}

std::complex<double> TLaurent::eval(const std::complex<double>& t) const {
    std::complex<double> z = 0;
    for (const auto& [e, c] : c_) z += c.to_complex() * std::pow(t, double(e));
    return z;
}

std::string TLaurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e != 0) os << "*t^" << e;
    }
    return os.str();
}

TLaurent BinomialFactor::expand() const {
    TLaurent p = TLaurent::one();
    p.add_term(a, -alpha());
    return p;
}

TFraction TFraction::scalar(const Cyclotomic& c) {
    return TFraction(TLaurent::monomial(0, c));
}

void TFraction::mul_laurent(const TLaurent& p) { num_ = num_ * p; }

void TFraction::mul_scalar(const Cyclotomic& c) { num_ = num_.scaled(c); }

void TFraction::mul_monomial(TExp e, const Cyclotomic& c) {
    num_ = num_.shifted(e).scaled(c);
}

void TFraction::mul_fraction(const TFraction& o) {
    num_ = num_ * o.num_;
    den_.insert(den_.end(), o.den_.begin(), o.den_.end());
    std::sort(den_.begin(), den_.end());
}

void TFraction::div_binomial(const Rat& alpha_e, TExp a) {
    if (a == 0) throw Error("constant denominator factor does not belong here");
    if (a < 0) {
        // 1/(1 - alpha t^a) = (-alpha^{-1} t^{-a}) / (1 - alpha^{-1} t^{-a})
        Rat inv_e = frac_rat(-alpha_e);
        mul_monomial(-a, -Cyclotomic::root_of_unity(inv_e));
        den_.push_back(BinomialFactor{inv_e, -a});
    } else {
        den_.push_back(BinomialFactor{frac_rat(alpha_e), a});
    }
    std::sort(den_.begin(), den_.end());
}

void TFraction::add(const TFraction& o) {
    if (o.is_zero()) return;
    if (is_zero()) {
        *this = o;
        return;
    }
    // common denominator = multiset union; each numerator picks up the
    // factors it is missing
    std::vector<BinomialFactor> common;
    std::set_union(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(),
                   std::back_inserter(common));
    std::vector<BinomialFactor> mine, theirs;
    std::set_difference(common.begin(), common.end(), den_.begin(), den_.end(),
                        std::back_inserter(mine));
    std::set_difference(common.begin(), common.end(), o.den_.begin(), o.den_.end(),
                        std::back_inserter(theirs));
    TLaurent a = num_;
    for (const BinomialFactor& b : mine) a = a * b.expand();
    TLaurent bnum = o.num_;
    for (const BinomialFactor& b : theirs) bnum = bnum * b.expand();
    num_ = a + bnum;
    den_ = std::move(common);
    if (num_.is_zero()) den_.clear();
}

TLaurent TFraction::reduce() const {
    TLaurent p = num_;
    for (const BinomialFactor& b : den_) {
        auto q = p.divide_binomial(b.alpha(), b.a);
        if (!q)
            throw PolynomialityFailure("denominator factor does not cancel: exponent " +
                                       std::to_string(b.a));
        p = std::move(*q);
    }
    return p;
}

} // namespace multifan
