#include "multifan/classify.hpp"

#include "multifan/errors.hpp"

#include <algorithm>
#include <sstream>

namespace multifan {

namespace {

FracExpPoly geometric_w(int upto) { // 1 + w + ... + w^upto
    FracExpPoly p;
    for (int k = 0; k <= upto; ++k) p.add_term(Rat(k), Int(1));
    return p;
}

bool is_nonsingular(const MultiFan& fan) {
    for (const Cone& c : fan.cones())
        if (fan.group_order(c.rays) != 1) return false;
    return true;
}

// Single positive primitive integer relation among the rays, if the kernel
// of the ray matrix is one-dimensional.
std::vector<Int> positive_relation(const MultiFan& fan) {
    std::vector<ZVec> cols;
    for (int i = 0; i < fan.num_rays(); ++i) cols.push_back(fan.ray(i));
    IntMatrix kernel = integer_kernel(IntMatrix::from_columns(cols));
    if (kernel.cols() != 1) return {};
    ZVec a = kernel.column(0);
    Int g(0);
    for (const Int& x : a) g = gcd_int(g, x);
    if (g > 1)
        for (Int& x : a) x /= g;
    int pos = 0, neg = 0;
    for (const Int& x : a) {
        if (x > 0) ++pos;
        if (x < 0) ++neg;
    }
    if (neg > 0 && pos == 0)
        for (Int& x : a) x = -x;
    else if (neg > 0)
        return {};
    return a;
}

} // namespace

bool check_toddone(const MultiFan& fan, bool deep) {
    if (!fan.is_complete()) throw NotComplete("Todd-one test needs a complete fan");
    for (const Cone& c : fan.cones())
        if (c.w() != 1) return false;
    std::vector<long> h = fan.h_vector();
    if (h.empty() || h[0] != 1) return false;
    if (deep) {
        for (const auto& K : fan.simplices()) {
            if (K.empty()) continue;
            ProjectedFan p = fan.project(K);
            if (p.fan->degree() != 1) return false;
        }
    }
    return true;
}

std::pair<long, long> max_divisibility(const MultiFan& fan) {
    if (!check_toddone(fan))
        throw PreconditionUnmet("divisibility scan needs Todd genus 1 and unit weights");
    const int n = fan.rank();
    long plain = 1, cartier = 1;
    for (long N = n + 1; N >= 2; --N) {
        if (plain == 1 && divisibility(fan, Int(N)).divisible) plain = N;
        if (cartier == 1 && t_cartier_divisibility(fan, Int(N)).t_cartier) cartier = N;
    }
    for (long N = n + 2; N <= n + 3; ++N)
        if (t_cartier_divisibility(fan, Int(N)).t_cartier)
            throw TheoremViolation("T-Cartier divisibility above rank+1");
    return {plain, cartier};
}

ClassificationReport classify_extremal(const MultiFan& fan) {
    if (!check_toddone(fan))
        throw PreconditionUnmet("classification needs Todd genus 1 and unit weights");
    if (!fan.all_primitive())
        throw PreconditionUnmet("classification needs primitive edge vectors");

    const int n = fan.rank();
    ClassificationReport rep;
    rep.satisfies_toddone = true;
    std::tie(rep.max_plain_N, rep.max_t_cartier_N) = max_divisibility(fan);
    rep.h = fan.h_vector();
    rep.ty = ty_genus(fan);
    rep.hat_ty = orbifold_ty(fan);

    if (rep.max_t_cartier_N == n + 1) {
        // Extremal family: the fan must be nonsingular with T_y the full
        // geometric sum, and n+1 rays adding to zero.
        if (!is_nonsingular(fan))
            throw TheoremViolation("divisibility n+1 forces a nonsingular fan");
        if (!(rep.ty == geometric_w(n)))
            throw TheoremViolation("divisibility n+1 forces T_y = sum of powers");
        if (fan.num_rays() == n + 1) {
            rep.relation = positive_relation(fan);
            for (const Int& a : rep.relation)
                if (a != 1) throw TheoremViolation("extremal fan rays must sum to zero");
        }
        rep.family = FanFamily::ProjectiveSpaceLike;
        return rep;
    }

    if (rep.max_t_cartier_N == n && n >= 2) {
        FracExpPoly expect_hat = geometric_w(0); // (1 + w)(1 + ... + w^{n-1})
        {
            FracExpPoly one_plus_w;
            one_plus_w.add_term(Rat(0), Int(1));
            one_plus_w.add_term(Rat(1), Int(1));
            expect_hat = one_plus_w * geometric_w(n - 1);
        }
        if (!(rep.hat_ty == expect_hat))
            throw TheoremViolation("divisibility n forces (1+w)(1+...+w^{n-1}) orbifold T_y");

        long h_penult = rep.h[static_cast<std::size_t>(n - 1)];
        if (h_penult == 2) {
            // Nonsingular bundle family over a line: n+2 rays, a size-n
            // subset summing to zero, twist sum congruent to -2 mod n.
            if (!is_nonsingular(fan))
                throw TheoremViolation("h_{n-1} = 2 branch must be nonsingular");
            if (!(rep.ty == expect_hat))
                throw TheoremViolation("nonsingular branch needs T_y = orbifold T_y");
            if (fan.num_rays() != n + 2)
                throw TheoremViolation("nonsingular branch needs rank+2 rays");
            rep.family = FanFamily::CaseA_Bundle;

            const int R = fan.num_rays();
            std::vector<int> fiber;
            for (unsigned mask = 0; mask < (1u << R) && fiber.empty(); ++mask) {
                if (__builtin_popcount(mask) != n) continue;
                ZVec s(static_cast<std::size_t>(n), Int(0));
                std::vector<int> idx;
                for (int i = 0; i < R; ++i)
                    if (mask & (1u << i)) {
                        idx.push_back(i);
                        for (int j = 0; j < n; ++j) s[j] += fan.ray(i)[j];
                    }
                bool zero = std::all_of(s.begin(), s.end(),
                                        [](const Int& x) { return x == 0; });
                if (zero) fiber = idx;
            }
            if (!fiber.empty()) {
                std::vector<int> rest;
                for (int i = 0; i < R; ++i)
                    if (std::find(fiber.begin(), fiber.end(), i) == fiber.end())
                        rest.push_back(i);
                ZVec target(static_cast<std::size_t>(n), Int(0));
                for (int i : rest)
                    for (int j = 0; j < n; ++j) target[j] -= fan.ray(i)[j];
                std::vector<ZVec> cols;
                for (int i : fiber) cols.push_back(fan.ray(i));
                if (auto k = solve_integer(IntMatrix::from_columns(cols), target)) {
                    Int ksum(0);
                    for (const Int& x : *k) ksum += x;
                    rep.relation = *k;
                    std::ostringstream os;
                    os << "fiber rays";
                    for (int i : fiber) os << " " << fan.ray_id(i);
                    os << "; twist sum " << ksum.get_str();
                    if (mod_floor(ksum + 2, Int(n)) == 0) os << " (+2 divisible by rank)";
                    rep.note = os.str();
                }
            }
            return rep;
        }

        if (h_penult == 1) {
            // Singular family: weighted projective with weights 2,...,2,1,1.
            if (!(rep.ty == geometric_w(n)))
                throw TheoremViolation("singular branch needs T_y = sum of powers");
            if (fan.num_rays() != n + 1)
                throw TheoremViolation("singular branch needs rank+1 rays");

            std::vector<std::vector<int>> special;
            for (const auto& K : fan.simplices()) {
                if (K.empty()) continue;
                if (!fan.hat_HK(K).empty()) special.push_back(K);
            }
            if (special.size() != 1)
                throw TheoremViolation("singular branch needs a unique twisted simplex");
            rep.special_K = special[0];
            std::vector<FractionData> hats = fan.hat_HK(rep.special_K);
            if (hats.size() != 1 || hats[0].f_total != 1)
                throw TheoremViolation("twisted sector must be a single class with f = 1");
            if (!(ty_of_projection(fan, rep.special_K) == geometric_w(n - 2)))
                throw TheoremViolation("projected T_y must be the sum of powers below rank-1");

            rep.relation = positive_relation(fan);
            if (static_cast<int>(rep.relation.size()) != n + 1)
                throw TheoremViolation("singular branch needs one positive ray relation");
            std::vector<Int> sorted = rep.relation;
            std::sort(sorted.begin(), sorted.end(), [](const Int& a, const Int& b) {
                return a > b;
            });
            Int asum(0);
            for (const Int& a : sorted) asum += a;
            bool shape = asum == 2 * n && sorted[static_cast<std::size_t>(n - 1)] == 1 &&
                         sorted[static_cast<std::size_t>(n)] == 1;
            for (int i = 0; i + 1 < n; ++i) shape = shape && sorted[static_cast<std::size_t>(i)] == 2;
            if (!shape)
                throw TheoremViolation("ray relation must have weights 2,...,2,1,1");

            // Lattice indices of the complements reproduce the relation.
            for (int i = 0; i < fan.num_rays(); ++i) {
                std::vector<int> complement;
                for (int j = 0; j < fan.num_rays(); ++j)
                    if (j != i) complement.push_back(j);
                if (fan.group_order(complement) != rep.relation[static_cast<std::size_t>(i)])
                    throw TheoremViolation("complement index must match the relation weight");
            }

            // Twice the generator dual to a weight-1 ray is T-Cartier.
            bool cartier2 = false;
            for (int i = 0; i < fan.num_rays(); ++i) {
                if (rep.relation[static_cast<std::size_t>(i)] != 1) continue;
                FaceRingClass x;
                x.c.assign(static_cast<std::size_t>(fan.num_rays()), Int(0));
                x.c[static_cast<std::size_t>(i)] = 2;
                if (is_T_Cartier(fan, x)) cartier2 = true;
            }
            if (!cartier2)
                throw TheoremViolation("no doubled weight-1 coordinate class is T-Cartier");

            rep.family = FanFamily::CaseB_WeightedProjective;
            return rep;
        }

        throw TheoremViolation("divisibility n forces h_{n-1} in {1, 2}");
    }

    rep.family = FanFamily::Other;
    return rep;
}

std::string family_name(FanFamily f) {
    switch (f) {
    case FanFamily::ProjectiveSpaceLike: return "projective-space";
    case FanFamily::CaseA_Bundle: return "bundle-over-line";
    case FanFamily::CaseB_WeightedProjective: return "weighted-projective-2..211";
    case FanFamily::Other: return "other";
    }
    return "other";
}

std::string classification_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "toddone " << (r.satisfies_toddone ? "yes" : "no") << "\n";
    os << "max-divisibility plain " << r.max_plain_N << " t-cartier " << r.max_t_cartier_N
       << "\n";
    os << "family " << family_name(r.family) << "\n";
    os << "h-vector";
    for (long h : r.h) os << " " << h;
    os << "\n";
    os << "ty " << r.ty.str() << "\n";
    os << "orbifold-ty " << r.hat_ty.str() << "\n";
    if (!r.relation.empty()) {
        os << "relation";
        for (const Int& a : r.relation) os << " " << a.get_str();
        os << "\n";
    }
    if (!r.special_K.empty()) {
        os << "twisted-simplex";
        for (int i : r.special_K) os << " " << i;
        os << "\n";
    }
    if (!r.note.empty()) os << "note " << r.note << "\n";
    return os.str();
}

} // namespace multifan
