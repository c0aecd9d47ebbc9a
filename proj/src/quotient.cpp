#include "multifan/quotient.hpp"

#include "multifan/errors.hpp"

namespace multifan {

namespace {
constexpr long kMaxEnumeratedOrder = 1 << 20;
}

QuotientGroup::QuotientGroup(const IntMatrix& basis) : n_(basis.rows()) {
    if (basis.rows() != basis.cols())
        throw Error("quotient basis must be square");
    SmithDecomposition s = smith_normal_form(basis);
    if (s.rank() != n_)
        throw SingularInput("quotient basis is singular");
    u_ = s.U;
    uinv_ = s.uinv;
    d_.resize(n_);
    order_ = 1;
    for (int i = 0; i < n_; ++i) {
        d_[i] = s.D.at(i, i);
        order_ *= d_[i];
    }
    if (order_ > kMaxEnumeratedOrder)
        throw Error("quotient order too large to enumerate: " + order_.get_str());

    // mixed-radix walk, last coordinate fastest
    ZVec c(n_, Int(0));
    long total = order_.get_si();
    elems_.reserve(total);
    for (long k = 0; k < total; ++k) {
        elems_.push_back(uinv_.apply(c));
        for (int i = n_ - 1; i >= 0; --i) {
            c[i] += 1;
            if (c[i] < d_[i]) break;
            c[i] = 0;
        }
    }
}

ZVec QuotientGroup::reduce(const ZVec& x) const {
    ZVec c = u_.apply(x);
    for (int i = 0; i < n_; ++i) c[i] = mod_floor(c[i], d_[i]);
    return uinv_.apply(c);
}

bool QuotientGroup::same_coset(const ZVec& x, const ZVec& y) const {
    return reduce(x) == reduce(y);
}

ZVec QuotientGroup::add(const ZVec& x, const ZVec& y) const {
    ZVec s(n_);
    for (int i = 0; i < n_; ++i) s[i] = x[i] + y[i];
    return reduce(s);
}

QuotientGroup quotient_group(const IntMatrix& basis) {
    return QuotientGroup(basis);
}

} // namespace multifan
