#pragma once

// Finite quotient Z^n / B Z^n for a nonsingular integer matrix B, with a
// deterministic transversal.  Writing U B V = D (Smith form), a vector x
// and its class are matched through c = (U x) mod diag(D): the canonical
// representative is uinv * c, and enumeration walks c in mixed radix.

#include "multifan/matrix.hpp"

namespace multifan {

class QuotientGroup {
public:
    explicit QuotientGroup(const IntMatrix& sublattice_basis);

    int ambient_rank() const { return n_; }
    const Int& order() const { return order_; }
    const std::vector<Int>& invariant_factors() const { return d_; } // all entries, each >= 1

    // Canonical representatives of all cosets; element 0 is the identity.
    const std::vector<ZVec>& elements() const { return elems_; }

    ZVec reduce(const ZVec& x) const;                 // canonical representative
    bool same_coset(const ZVec& x, const ZVec& y) const;
    ZVec add(const ZVec& x, const ZVec& y) const;     // reduce(x + y)

private:
    int n_;
    IntMatrix u_, uinv_;
    std::vector<Int> d_;
    Int order_;
    std::vector<ZVec> elems_;
};

QuotientGroup quotient_group(const IntMatrix& sublattice_basis);

} // namespace multifan
