// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Usage: acceptance <multifan-cli-binary> <fixtures-dir>

#include "multifan/builders.hpp"
#include "multifan/classify.hpp"
#include "multifan/cohomology.hpp"
#include "multifan/errors.hpp"
#include "multifan/genera.hpp"
#include "multifan/numeric.hpp"
#include "multifan/qseries.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace multifan;

namespace {

struct NamedFan {
    std::string name;
    MultiFan fan;
};

std::vector<NamedFan> corpus() {
    std::vector<NamedFan> fans;
    fans.push_back({"p1", projective_fan(1)});
    fans.push_back({"p2", projective_fan(2)});
    fans.push_back({"p3", projective_fan(3)});
    fans.push_back({"p1xp1", hirzebruch_fan(0)});
    fans.push_back({"hirzebruch-1", hirzebruch_fan(1)});
    fans.push_back({"hirzebruch-3", hirzebruch_fan(3)});
    fans.push_back({"wp211", weighted_projective_fan({2, 1, 1})});
    fans.push_back({"wp2211", weighted_projective_fan({2, 2, 1, 1})});
    fans.push_back({"wp22211", weighted_projective_fan({2, 2, 2, 1, 1})});
    for (long b = 1; b <= 4; ++b)
        fans.push_back({"ex1-b" + std::to_string(b), example_fan_1(b)});
    for (long b = 1; b <= 4; ++b)
        fans.push_back({"ex2-b" + std::to_string(b), example_fan_2(b)});
    return fans;
}

FracExpPoly geometric(int upto) {
    FracExpPoly p;
    for (int k = 0; k <= upto; ++k) p.add_term(Rat(k), Int(1));
    return p;
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string shell_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    status = pclose(pipe);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <multifan-cli-binary> <fixtures-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string fixtures = argv[2];

    const std::vector<NamedFan> fans = corpus();
    int failures = 0;

    auto criterion = [&](int idx, const std::string& slug,
                         const std::function<std::string()>& body) {
        try {
            std::string detail = body();
            std::cout << "PASS criterion-" << idx << " " << slug;
            if (!detail.empty()) std::cout << " (" << detail << ")";
            std::cout << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL criterion-" << idx << " " << slug << ": " << e.what() << "\n";
        }
        std::cout.flush();
    };

    criterion(1, "ty-genus-agrees-with-e-route", [&] {
        for (const NamedFan& nf : fans)
            if (!(ty_genus(nf.fan) == ty_via_e(nf.fan))) fail(nf.name + ": routes disagree");
        return std::to_string(fans.size()) + " fans";
    });

    criterion(2, "projective-space-extremal-divisibility", [&] {
        for (int n = 1; n <= 4; ++n) {
            MultiFan pn = projective_fan(n);
            auto [plain, cartier] = max_divisibility(pn);
            (void)plain;
            if (cartier != n + 1)
                fail("p" + std::to_string(n) + ": t-cartier level " + std::to_string(cartier));
            if (!(ty_genus(pn) == geometric(n)))
                fail("p" + std::to_string(n) + ": T_y is not the geometric sum");
        }
        return "n = 1..4";
    });

    criterion(3, "weighted-projective-next-to-extremal", [&] {
        for (int n = 2; n <= 4; ++n) {
            std::vector<long> a(size_t(n) - 1, 2);
            a.push_back(1);
            a.push_back(1);
            MultiFan fan = weighted_projective_fan(a);
            auto [plain, cartier] = max_divisibility(fan);
            (void)plain;
            if (cartier != n) fail("n=" + std::to_string(n) + ": t-cartier level mismatch");

            std::vector<std::vector<int>> twisted;
            for (const auto& K : fan.simplices())
                if (!K.empty() && !fan.hat_HK(K).empty()) twisted.push_back(K);
            if (twisted.size() != 1) fail("n=" + std::to_string(n) + ": twisted simplex not unique");
            auto hats = fan.hat_HK(twisted[0]);
            if (hats.size() != 1 || !(hats[0].f_total == 1))
                fail("n=" + std::to_string(n) + ": twisted sector exponent is not 1");

            FracExpPoly one_plus_w = geometric(1);
            if (!(orbifold_ty(fan) == one_plus_w * geometric(n - 1)))
                fail("n=" + std::to_string(n) + ": orbifold T_y mismatch");
        }
        return "n = 2..4";
    });

    criterion(4, "orbifold-ty-divisible-at-every-t-cartier-level", [&] {
        int instances = 0;
        for (const NamedFan& nf : fans)
            for (long N = 2; N <= nf.fan.rank() + 1; ++N) {
                if (!t_cartier_divisibility(nf.fan, Int(N)).t_cartier) continue;
                ++instances;
                if (!check_hatT_divisible(nf.fan, Int(N)))
                    fail(nf.name + " at N=" + std::to_string(N));
            }
        if (instances < 8) fail("only " + std::to_string(instances) + " instances found");
        return std::to_string(instances) + " instances";
    });

    criterion(5, "breve-ty-vanishes-at-nontrivial-roots", [&] {
        struct Inst {
            std::string name;
            MultiFan fan;
            long N;
        };
        std::vector<Inst> insts;
        insts.push_back({"ex1-b1", example_fan_1(1), 3});
        insts.push_back({"ex1-b3", example_fan_1(3), 5});
        insts.push_back({"ex2-b2", example_fan_2(2), 3});
        insts.push_back({"ex2-b4", example_fan_2(4), 3});
        int values = 0;
        for (const Inst& inst : insts) {
            CyclicExpPoly p = modified_orbifold_ty(inst.fan, Int(inst.N));
            for (long j = 1; j < inst.N; ++j, ++values)
                if (!p.eval_root_power(j).is_zero())
                    fail(inst.name + ": nonzero at root power " + std::to_string(j));
        }
        return std::to_string(values) + " root evaluations";
    });

    criterion(6, "breve-elliptic-genus-zero-series", [&] {
        struct Inst {
            std::string name;
            MultiFan fan;
            Rat sigma;
        };
        std::vector<Inst> insts;
        insts.push_back({"ex1-b3", example_fan_1(3), Rat(1, 5)});
        insts.push_back({"ex1-b3", example_fan_1(3), Rat(2, 5)});
        insts.push_back({"ex2-b2", example_fan_2(2), Rat(1, 3)});
        for (const Inst& inst : insts)
            for (int i = 0; i < 3; ++i) {
                ZVec v = generic_lattice_vector(inst.fan, i);
                GenusQSeries s =
                    elliptic_genus_along(inst.fan, v, inst.sigma, Rat(2), GenusKind::Breve, 2);
                if (!s.is_zero())
                    fail(inst.name + " sigma " + inst.sigma.get_str() + " direction " +
                         std::to_string(i));
            }
        return "3 levels x 3 directions, order 2";
    });

    criterion(7, "orbifold-elliptic-genus-zero-series", [&] {
        struct Inst {
            std::string name;
            MultiFan fan;
            Rat sigma;
        };
        std::vector<Inst> insts;
        insts.push_back({"wp211", weighted_projective_fan({2, 1, 1}), Rat(1, 2)});
        for (long k = 1; k <= 2; ++k) insts.push_back({"p2", projective_fan(2), Rat(k, 3)});
        for (long k = 1; k <= 3; ++k) insts.push_back({"p3", projective_fan(3), Rat(k, 4)});
        int series = 0;
        for (const Inst& inst : insts)
            for (int i = 0; i < 2; ++i, ++series) {
                ZVec v = generic_lattice_vector(inst.fan, i);
                GenusQSeries s =
                    elliptic_genus_along(inst.fan, v, inst.sigma, Rat(2), GenusKind::Orbifold, 2);
                if (!s.is_zero())
                    fail(inst.name + " sigma " + inst.sigma.get_str() + " direction " +
                         std::to_string(i));
            }
        return std::to_string(series) + " series, order 2";
    });

    criterion(8, "polynomiality-and-integrality", [&] {
        int series = 0;
        for (const NamedFan& nf : fans) {
            ZVec v = generic_lattice_vector(nf.fan, 0);
            struct Case {
                GenusKind kind;
                Rat sigma;
            };
            for (const Case& c : {Case{GenusKind::Plain, Rat(1, 3)},
                                  Case{GenusKind::Orbifold, Rat(1, 2)}}) {
                GenusQSeries s = elliptic_genus_along(nf.fan, v, c.sigma, Rat(2), c.kind, 4);
                ++series;
                if (!s.integral()) fail(nf.name + ": non-integral normalized coefficient");
            }
        }
        return std::to_string(series) + " series, order 2";
    });

    criterion(9, "numeric-modular-transformation-laws", [&] {
        std::vector<ComplexPoint> points = {
            {{0.30, 0.10}, {0.20, 1.30}, {1.0 / 3.0, 0.0}},
            {{0.41, 0.07}, {-0.30, 1.10}, {0.50, 0.0}},
            {{0.19, -0.05}, {0.60, 1.70}, {0.25, 0.10}},
            {{-0.23, 0.11}, {0.35, 1.45}, {0.20, 0.0}},
            {{0.08, 0.02}, {-0.15, 1.25}, {0.40, 0.0}},
        };
        struct Mat {
            long a, b, c, d;
        };
        std::vector<Mat> mats = {{1, 1, 0, 1}, {0, -1, 1, 0}, {1, -1, 1, 0}}; // T, S, TS
        double worst = 0;
        for (const ComplexPoint& p : points)
            for (const Mat& m : mats) {
                double r = check_modular_transformation(m.a, m.b, m.c, m.d, p, 40);
                worst = std::max(worst, r);
                if (!(r < 1e-8)) {
                    std::ostringstream os;
                    os << "residual " << r << " for [[" << m.a << "," << m.b << "],[" << m.c
                       << "," << m.d << "]]";
                    fail(os.str());
                }
            }
        std::ostringstream os;
        os << "15 residuals, worst " << worst;
        return os.str();
    });

    criterion(10, "structural-identities", [&] {
        for (const NamedFan& nf : fans) {
            const MultiFan& fan = nf.fan;
            std::vector<long> h = fan.h_vector();
            const size_t n = h.size() - 1;
            for (size_t k = 0; k <= n; ++k)
                if (h[k] != h[n - k]) fail(nf.name + ": h-vector not symmetric");

            if (!check_toddone(fan)) fail(nf.name + ": corpus fan is not Todd-one");
            if (h[0] != 1 || fan.degree() != 1) fail(nf.name + ": h_0 or degree is not 1");

            std::vector<long> e = fan.e_vector();
            for (size_t k = 0; k < e.size(); ++k)
                if (e[k] != long(fan.simplices_of_size(int(k)).size()))
                    fail(nf.name + ": e_" + std::to_string(k) + " is not the simplex count");

            for (const auto& I : fan.simplices()) {
                long total = 0;
                for (unsigned mask = 0; mask < (1u << I.size()); ++mask) {
                    std::vector<int> K;
                    for (size_t j = 0; j < I.size(); ++j)
                        if (mask & (1u << j)) K.push_back(I[size_t(j)]);
                    total += long(fan.hat_HK(K).size());
                }
                if (fan.group_order(I) != total)
                    fail(nf.name + ": group order is not the sum of interior sector counts");
            }
        }
        return std::to_string(fans.size()) + " fans";
    });

    criterion(11, "byte-identical-machine-output", [&] {
        auto cmd = [&](int jobs) {
            return "'" + cli + "' elliptic '" + fixtures +
                   "/p211.fan' --kind orbifold --sigma 1/3 --order 2 --v 2,4 --format machine"
                   " --jobs " + std::to_string(jobs) + " 2>/dev/null";
        };
        int s1 = 0, s2 = 0, s3 = 0;
        std::string run1 = shell_capture(cmd(1), s1);
        std::string run2 = shell_capture(cmd(1), s2);
        std::string run4 = shell_capture(cmd(4), s3);
        if (s1 != 0 || s2 != 0 || s3 != 0) fail("cli invocation failed");
        if (run1.empty()) fail("cli produced no output");
        if (run1 != run2) fail("two identical runs differ");
        if (run1 != run4) fail("--jobs 1 and --jobs 4 differ");
        return std::to_string(run1.size()) + " bytes compared";
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
