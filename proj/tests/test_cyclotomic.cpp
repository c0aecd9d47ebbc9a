#include "doctest.h"

#include "multifan/cyclotomic.hpp"
#include "multifan/errors.hpp"

#include <cmath>
#include <complex>

using namespace multifan;

namespace {
const double PI = 3.14159265358979323846;

Cyclotomic xi(long num, long den) { return Cyclotomic::root_of_unity(Rat(num, den)); }
} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(Cyclotomic::cyclotomic_poly(1) == std::vector<Int>{Int(-1), Int(1)});
    CHECK(Cyclotomic::cyclotomic_poly(2) == std::vector<Int>{Int(1), Int(1)});
    CHECK(Cyclotomic::cyclotomic_poly(4) == std::vector<Int>{Int(1), Int(0), Int(1)});
    CHECK(Cyclotomic::cyclotomic_poly(8) ==
          std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(1)});
    // Phi_12 = x^4 - x^2 + 1
    CHECK(Cyclotomic::cyclotomic_poly(12) ==
          std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});
    // Phi_p = 1 + x + ... + x^{p-1}
    CHECK(Cyclotomic::cyclotomic_poly(5) ==
          std::vector<Int>{Int(1), Int(1), Int(1), Int(1), Int(1)});
}

TEST_CASE("fourth roots: (1+i)(1-i) = 2") {
    Cyclotomic one = Cyclotomic::from_rat(Rat(1));
    Cyclotomic i = xi(1, 4);
    CHECK((one + i) * (one - i) == Cyclotomic::from_rat(Rat(2)));
    CHECK(i * i == Cyclotomic::from_rat(Rat(-1)));
    CHECK(i.conductor() == 4);
}

TEST_CASE("cross-conductor equality and products") {
    CHECK(xi(1, 2) == Cyclotomic::from_rat(Rat(-1)));
    CHECK(xi(2, 6) == xi(1, 3));
    CHECK(xi(5, 1) == Cyclotomic::from_rat(Rat(1)));
    CHECK(xi(-1, 3) == xi(2, 3));
    CHECK(xi(1, 2) * xi(1, 3) == xi(5, 6));
    CHECK(xi(1, 8) * xi(1, 8) == xi(1, 4));
    // exponent arithmetic across mixed conductors
    CHECK(xi(1, 4) * xi(1, 6) == xi(5, 12));
}

TEST_CASE("root sums") {
    // primitive cube roots sum to -1
    CHECK(xi(1, 3) + xi(2, 3) == Cyclotomic::from_rat(Rat(-1)));
    // all nontrivial fifth roots sum to -1
    Cyclotomic s = xi(1, 5) + xi(2, 5) + xi(3, 5) + xi(4, 5);
    CHECK(s == Cyclotomic::from_rat(Rat(-1)));
    // full sum over sixth roots is zero
    Cyclotomic z;
    for (long k = 0; k < 6; ++k) z += xi(k, 6);
    CHECK(z.is_zero());
    // exact cancellation
    CHECK((xi(1, 3) - xi(1, 3)).is_zero());
}

TEST_CASE("inverses") {
    CHECK(xi(1, 3).inverse() == xi(2, 3));
    Cyclotomic x = xi(1, 7) * Rat(3) + Cyclotomic::from_rat(Rat(2));
    CHECK(x * x.inverse() == Cyclotomic::from_rat(Rat(1)));
    CHECK_THROWS(Cyclotomic().inverse());
}

TEST_CASE("rationality and integrality") {
    CHECK(Cyclotomic::from_rat(Rat(2)).is_rational());
    CHECK(Cyclotomic::from_rat(Rat(2)).integral());
    CHECK_FALSE(Cyclotomic::from_rat(Rat(1, 2)).integral());
    CHECK((xi(1, 3) * xi(2, 3)).is_rational());
    CHECK((xi(1, 3) * xi(2, 3)).rational_value() == 1);
    CHECK_FALSE(xi(1, 5).is_rational());
    CHECK(xi(1, 5).integral()); // power-basis coordinates (0,1,0,0)
    Cyclotomic mixed = xi(1, 3) + Cyclotomic::from_rat(Rat(1, 2));
    CHECK_FALSE(mixed.integral());
    CHECK((mixed + mixed).integral()); // 2 xi_3 + 1
}

TEST_CASE("numeric embedding") {
    std::complex<double> got = xi(1, 8).to_complex();
    std::complex<double> want = std::polar(1.0, 2 * PI / 8);
    CHECK(std::abs(got - want) < 1e-12);

    Cyclotomic x = xi(1, 3) * Rat(2) + xi(1, 4);
    std::complex<double> direct =
        2.0 * std::polar(1.0, 2 * PI / 3) + std::polar(1.0, 2 * PI / 4);
    CHECK(std::abs(x.to_complex() - direct) < 1e-12);
}

TEST_CASE("negative exponents and halves") {
    // the zeta^{-1/2} prefactors live at doubled conductor
    CHECK(xi(-1, 4) * xi(-1, 4) == xi(-1, 2));
    CHECK(xi(-1, 6).inverse() == xi(1, 6));
    CHECK(xi(7, 6) == xi(1, 6));
}
