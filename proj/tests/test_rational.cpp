#include "doctest.h"

#include "multifan/errors.hpp"
#include "multifan/rational.hpp"

#include <random>

using namespace multifan;

TEST_CASE("floor and fractional part") {
    CHECK(floor_rat(Rat(7, 3)) == 2);
    CHECK(floor_rat(Rat(-7, 3)) == -3);
    CHECK(floor_rat(Rat(4)) == 4);
    CHECK(frac_rat(Rat(7, 3)) == Rat(1, 3));
    CHECK(frac_rat(Rat(-7, 3)) == Rat(2, 3));
    CHECK(frac_rat(Rat(-5)) == 0);

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 12);
    for (int i = 0; i < 200; ++i) {
        Rat x(num(rng), den(rng));
        Rat f = frac_rat(x);
        CHECK(f >= 0);
        CHECK(f < 1);
        CHECK(Rat(floor_rat(x)) + f == x);
    }
}

TEST_CASE("modular helpers") {
    CHECK(mod_floor(Int(-5), Int(3)) == 1);
    CHECK(mod_floor(Int(5), Int(3)) == 2);
    CHECK(mod_floor(Int(6), Int(3)) == 0);
    CHECK(gcd_int(Int(12), Int(18)) == 6);
    CHECK(gcd_int(Int(0), Int(5)) == 5);
    CHECK(lcm_int(Int(4), Int(6)) == 12);
    CHECK(mod_inverse(Int(3), Int(10)) == 7);
    CHECK(mod_inverse(Int(1), Int(1)) == 0);
    CHECK_THROWS_AS(mod_inverse(Int(2), Int(4)), NotCoprime);
}

TEST_CASE("breve on pinned values") {
    // f = 1/2, N = 3: 2e == 1 (mod 3) forces e = 2.
    CHECK(breve(Rat(1, 2), Int(3)) == 2);
    // f = 3/2, N = 5: 2e == 3 (mod 5) forces e = 4.
    CHECK(breve(Rat(3, 2), Int(5)) == 4);
    CHECK(breve(Rat(0), Int(7)) == 0);
    CHECK(breve(Rat(7), Int(5)) == 2);   // integers reduce mod N
    CHECK(breve(Rat(2, 3), Int(5)) == 4);
    CHECK(breve(Rat(4, 3), Int(5)) == 3);
    CHECK_THROWS_AS(breve(Rat(1, 2), Int(2)), NotCoprime);
    CHECK_THROWS_AS(breve(Rat(1, 2), Int(4)), NotCoprime);
    CHECK_THROWS_AS(breve(Rat(1, 6), Int(3)), NotCoprime);
}

TEST_CASE("breve defining equation and additivity") {
    const long dens[] = {1, 2, 3, 4, 6, 7, 8, 9, 11, 12};
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(0, 59);
    std::uniform_int_distribution<size_t> pick(0, std::size(dens) - 1);
    Int N(5);
    for (int i = 0; i < 300; ++i) {
        Rat f1(num(rng), dens[pick(rng)]);
        Rat f2(num(rng), dens[pick(rng)]);
        Int e1 = breve(f1, N), e2 = breve(f2, N);
        // r e == s (mod N) for f = s/r in lowest terms
        CHECK(mod_floor(f1.get_den() * e1 - f1.get_num(), N) == 0);
        // additive modulo N
        CHECK(mod_floor(e1 + e2 - breve(f1 + f2, N), N) == 0);
    }
}

TEST_CASE("dot products and vector text") {
    ZVec a = to_zvec({2, 3});
    CHECK(dot(a, to_zvec({-1, 4})) == 10);
    QVec q{Rat(1, 2), Rat(1, 3)};
    CHECK(dot(q, a) == 2);
    CHECK(dot(q, QVec{Rat(2), Rat(3)}) == 2);
    CHECK(vec_str(a) == "(2,3)");
    CHECK(vec_str(q) == "(1/2,1/3)");
}

TEST_CASE("rational parsing is strict") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("+2/6") == Rat(1, 3)); // canonicalized
    CHECK(parse_rat("0") == 0);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("3/"), ParseError);
    CHECK_THROWS_AS(parse_rat("/3"), ParseError);
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
}
