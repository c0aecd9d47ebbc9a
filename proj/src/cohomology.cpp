#include "multifan/cohomology.hpp"

#include "multifan/errors.hpp"

#include <algorithm>

namespace multifan {

FaceRingClass c1T(const MultiFan& fan) {
    return FaceRingClass{ZVec(fan.num_rays(), Int(1))};
}

QVec restrict_to(const MultiFan& fan, const FaceRingClass& x, const Cone& cone) {
    if (x.c.size() != size_t(fan.num_rays()))
        throw Error("class has wrong number of coefficients");
    QVec r(fan.rank(), Rat(0));
    auto duals = fan.cone_duals(cone);
    for (size_t i = 0; i < cone.rays.size(); ++i) {
        const Int& ci = x.c[cone.rays[i]];
        if (ci == 0) continue;
        for (int j = 0; j < fan.rank(); ++j) r[j] += Rat(ci) * duals[i][j];
    }
    return r;
}

bool is_T_Cartier(const MultiFan& fan, const FaceRingClass& x) {
    for (const Cone& c : fan.cones()) {
        for (const Rat& coord : restrict_to(fan, x, c))
            if (coord.get_den() != 1) return false;
    }
    return true;
}

namespace {

// All solutions u (mod N) of A u == b (mod N), via the Smith form of A:
// with U A V = D the system becomes D y == U b, solved coordinatewise.
// Returns the full solution set as reduced vectors in [0, N)^n, or empty
// when unsolvable.  The set is small for the moduli used here, but guard
// against blowup anyway.
std::vector<ZVec> solve_mod_N(const IntMatrix& A, const ZVec& b, const Int& N) {
    const int m = A.rows(), n = A.cols();
    SmithDecomposition s = smith_normal_form(A);
    ZVec c = s.U.apply(b);
    const int k = std::min(m, n);

    // base solution and per-coordinate solution counts; unconstrained
    // coordinates keep step 1 and range over every residue
    ZVec y0(n, Int(0));
    std::vector<Int> step(n, Int(1)); // y_i ranges over y0_i + step_i * Z (mod N)
    for (int i = 0; i < k; ++i) {
        const Int& d = s.D.at(i, i);
        Int cn = mod_floor(c[i], N);
        if (d == 0) {
            if (cn != 0) return {};
            continue; // y_i free mod N
        }
        Int g = gcd_int(d, N);
        if (cn % g != 0) return {};
        Int Ng = N / g;
        Int inv = mod_inverse(mod_floor(d / g, Ng), Ng);
        y0[i] = mod_floor((cn / g) * inv, Ng);
        step[i] = Ng;
    }
    for (int i = k; i < m; ++i)
        if (mod_floor(c[i], N) != 0) return {};

    // enumerate y over the residue classes, map back through V
    Int count = 1;
    std::vector<long> reps(n);
    for (int i = 0; i < n; ++i) {
        Int r = N / step[i];
        reps[i] = r.get_si();
        count *= r;
        if (count > 200000) throw Error("mod-N solution set too large to enumerate");
    }
    std::vector<ZVec> out;
    std::vector<long> idx(n, 0);
    long total = count.get_si();
    for (long it = 0; it < total; ++it) {
        ZVec y(n);
        for (int i = 0; i < n; ++i) y[i] = y0[i] + idx[i] * step[i];
        ZVec u = s.V.apply(y);
        for (Int& x : u) x = mod_floor(x, N);
        out.push_back(std::move(u));
        for (int i = n - 1; i >= 0; --i) {
            if (++idx[i] < reps[i]) break;
            idx[i] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntMatrix ray_matrix(const MultiFan& fan) {
    IntMatrix A(fan.num_rays(), fan.rank());
    for (int i = 0; i < fan.num_rays(); ++i)
        for (int j = 0; j < fan.rank(); ++j) A.at(i, j) = fan.ray(i)[j];
    return A;
}

} // namespace

DivisibilityWitness divisibility(const MultiFan& fan, const Int& N) {
    if (N < 1) throw Error("divisibility level must be positive");
    DivisibilityWitness w;
    w.N = N;
    ZVec ones(fan.num_rays(), Int(1));
    auto sols = solve_mod_N(ray_matrix(fan), ones, N);
    if (sols.empty()) return w;
    w.divisible = true;
    w.u = sols.front(); // sorted: lexicographically smallest
    return w;
}

DivisibilityWitness t_cartier_divisibility(const MultiFan& fan, const Int& N) {
    if (N < 1) throw Error("divisibility level must be positive");
    DivisibilityWitness w;
    w.N = N;

    FaceRingClass c1 = c1T(fan);
    // restrictions u^I of c_1 must be integral ...
    std::vector<ZVec> uI;
    for (const Cone& c : fan.cones()) {
        QVec r = restrict_to(fan, c1, c);
        ZVec z(fan.rank());
        for (int j = 0; j < fan.rank(); ++j) {
            if (r[j].get_den() != 1) return w;
            z[j] = r[j].get_num();
        }
        uI.push_back(std::move(z));
    }
    if (uI.empty()) return w;
    // ... and mutually congruent mod N
    for (size_t i = 1; i < uI.size(); ++i)
        for (int j = 0; j < fan.rank(); ++j)
            if (mod_floor(uI[i][j] - uI[0][j], N) != 0) return w;
    // rays outside every maximal cone still need <u, v_i> == 1 (mod N);
    // for rays inside some cone this holds automatically
    ZVec u(fan.rank());
    for (int j = 0; j < fan.rank(); ++j) u[j] = mod_floor(uI[0][j], N);
    for (int i = 0; i < fan.num_rays(); ++i)
        if (mod_floor(dot(u, fan.ray(i)) - 1, N) != 0) return w;

    // witness quotient class: coefficients (1 - <u, v_i>)/N
    FaceRingClass x;
    x.c.resize(fan.num_rays());
    for (int i = 0; i < fan.num_rays(); ++i) {
        Int num = Int(1) - dot(u, fan.ray(i));
        if (num % N != 0) throw Error("witness reduction failed (bug)");
        x.c[i] = num / N;
    }
    if (!is_T_Cartier(fan, x)) throw Error("witness class is not T-Cartier (bug)");

    w.divisible = true;
    w.t_cartier = true;
    w.u = u;
    w.x = x;
    return w;
}

std::optional<ZVec> c1_zero_witness(const MultiFan& fan) {
    ZVec ones(fan.num_rays(), Int(1));
    return solve_integer(ray_matrix(fan), ones);
}

bool c1_is_zero(const MultiFan& fan) {
    return c1_zero_witness(fan).has_value();
}

FaceRingClass covector_class(const MultiFan& fan, const ZVec& u) {
    FaceRingClass x;
    x.c.resize(fan.num_rays());
    for (int i = 0; i < fan.num_rays(); ++i) x.c[i] = dot(u, fan.ray(i));
    return x;
}

} // namespace multifan
