#include "doctest.h"

#include "multifan/quotient.hpp"

#include <algorithm>

using namespace multifan;

namespace {

int index_of(const QuotientGroup& g, const ZVec& x) {
    ZVec r = g.reduce(x);
    const auto& e = g.elements();
    auto it = std::find(e.begin(), e.end(), r);
    REQUIRE(it != e.end()); // reduce must land on the transversal
    return int(it - e.begin());
}

} // namespace

TEST_CASE("order-two quotient") {
    // Z^2 / <(0,1), (-2,-1)>: the singular cone of P(2,1,1).
    QuotientGroup g(IntMatrix::from_columns({to_zvec({0, 1}), to_zvec({-2, -1})}));
    CHECK(g.ambient_rank() == 2);
    CHECK(g.order() == 2);
    CHECK(g.elements().size() == 2);
    CHECK(g.elements()[0] == g.reduce(to_zvec({0, 0})));

    ZVec e1 = g.elements()[1];
    CHECK_FALSE(g.same_coset(e1, to_zvec({0, 0})));
    CHECK(g.same_coset(g.add(e1, e1), to_zvec({0, 0}))); // order divides 2
    CHECK(g.same_coset(to_zvec({1, 0}), e1));            // (1,0) is the nontrivial class
    CHECK(g.same_coset(to_zvec({3, 5}), g.add(e1, to_zvec({2, 5}))));
}

TEST_CASE("invariant factors multiply to the order") {
    QuotientGroup g(IntMatrix::from_columns({to_zvec({2, 0, 0}), to_zvec({0, 3, 0}),
                                             to_zvec({0, 0, 1})}));
    CHECK(g.order() == 6);
    Int p(1);
    for (const Int& d : g.invariant_factors()) p *= d;
    CHECK(p == 6);
}

TEST_CASE("group law closure by brute force") {
    // Z^2 / <(2,1), (0,4)>, order 8, noncyclic-looking basis.
    QuotientGroup g(IntMatrix::from_columns({to_zvec({2, 1}), to_zvec({0, 4})}));
    CHECK(g.order() == 8);
    const auto& e = g.elements();
    REQUIRE(e.size() == 8);

    // distinct canonical representatives, reduce is idempotent
    for (size_t i = 0; i < e.size(); ++i) {
        CHECK(g.reduce(e[i]) == e[i]);
        for (size_t j = i + 1; j < e.size(); ++j) CHECK_FALSE(e[i] == e[j]);
    }

    // identity, closure, and the sublattice acts trivially
    for (const ZVec& a : e) {
        CHECK(g.add(a, e[0]) == a);
        ZVec shifted = a;
        shifted[0] += 2; // + (2,1)
        shifted[1] += 1;
        CHECK(g.same_coset(shifted, a));
        for (const ZVec& b : e) index_of(g, g.add(a, b));
    }

    // associativity on a few triples
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = 0; j < e.size(); ++j) {
            ZVec lhs = g.add(g.add(e[i], e[j]), e[(i + j) % 8]);
            ZVec rhs = g.add(e[i], g.add(e[j], e[(i + j) % 8]));
            CHECK(lhs == rhs);
        }

    // every element has order dividing the group order
    for (const ZVec& a : e) {
        ZVec acc = g.reduce(to_zvec({0, 0}));
        for (int k = 0; k < 8; ++k) acc = g.add(acc, a);
        CHECK(acc == e[0]);
    }
}

TEST_CASE("trivial quotient") {
    QuotientGroup g(IntMatrix::identity(2));
    CHECK(g.order() == 1);
    CHECK(g.elements().size() == 1);
    CHECK(g.reduce(to_zvec({7, -4})) == g.elements()[0]);
}
