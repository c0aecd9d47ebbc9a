#include "multifan/builders.hpp"

#include "multifan/errors.hpp"

#include <optional>
#include <set>

namespace multifan {

namespace {

// all k-subsets of {0..m-1}, lexicographic
std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < m; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

MultiFan projective_fan(int n) {
    std::vector<long> a(n + 1, 1);
    return weighted_projective_fan(a);
}

MultiFan weighted_projective_fan(const std::vector<long>& a) {
    const int n = int(a.size()) - 1;
    if (n < 1) throw InvalidWeights("need at least two weights");
    for (long w : a)
        if (w <= 0) throw InvalidWeights("weights must be positive");
    if (a[n] != 1)
        throw InvalidWeights("this construction needs the last weight equal to 1");
    std::vector<ZVec> rays;
    for (int i = 0; i < n; ++i) {
        ZVec e(n, Int(0));
        e[i] = 1;
        rays.push_back(e);
    }
    ZVec last(n, Int(0));
    for (int i = 0; i < n; ++i) last[i] = -Int(a[i]);
    rays.push_back(last);

    std::vector<Cone> cones;
    for (auto& s : subsets(n + 1, n)) cones.push_back(Cone{s, 1, 0});
    return MultiFan(n, std::move(rays), std::move(cones));
}

MultiFan example_fan_1(long b) {
    std::vector<ZVec> rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-b)}};
    std::vector<Cone> cones;
    for (auto& s : subsets(3, 2)) cones.push_back(Cone{s, 1, 0});
    return MultiFan(2, std::move(rays), std::move(cones));
}

MultiFan example_fan_2(long b) {
    std::vector<ZVec> rays = {{Int(1), Int(0)}, {Int(0), Int(b)}, {Int(-1), Int(-b)}};
    std::vector<Cone> cones;
    for (auto& s : subsets(3, 2)) cones.push_back(Cone{s, 1, 0});
    return MultiFan(2, std::move(rays), std::move(cones));
}

MultiFan p1_bundle_fan(int n, const std::vector<long>& twists) {
    if (n < 2) throw InvalidWeights("bundle fan needs rank >= 2");
    if (int(twists.size()) != n - 1)
        throw InvalidWeights("need one twist per fiber ray v_2..v_n");
    std::vector<ZVec> rays;
    // fiber rays v_1..v_n: a P^{n-1} fan at height zero
    for (int i = 0; i < n - 1; ++i) {
        ZVec e(n, Int(0));
        e[i] = 1;
        rays.push_back(e);
    }
    ZVec fsum(n, Int(0));
    for (int i = 0; i < n - 1; ++i) fsum[i] = -1;
    rays.push_back(fsum);
    // base rays: v_0 = e_n and v_{n+1} = -e_n - sum k_i v_i
    ZVec up(n, Int(0));
    up[n - 1] = 1;
    rays.push_back(up);
    ZVec down(n, Int(0));
    down[n - 1] = -1;
    for (int i = 2; i <= n; ++i) {
        const ZVec& vi = rays[i - 1];
        long k = twists[i - 2];
        for (int j = 0; j < n; ++j) down[j] -= k * vi[j];
    }
    rays.push_back(down);

    std::vector<Cone> cones;
    for (auto& s : subsets(n, n - 1)) {
        std::vector<int> c1 = s, c2 = s;
        c1.push_back(n);     // with v_0
        c2.push_back(n + 1); // with v_{n+1}
        cones.push_back(Cone{c1, 1, 0});
        cones.push_back(Cone{c2, 1, 0});
    }
    return MultiFan(n, std::move(rays), std::move(cones));
}

MultiFan hirzebruch_fan(long k) {
    return p1_bundle_fan(2, {k});
}

MultiFan doubled_p1_fan() {
    std::vector<ZVec> rays = {{Int(1)}, {Int(-1)}, {Int(1)}, {Int(-1)}};
    std::vector<Cone> cones = {Cone{{0}, 1, 0}, Cone{{1}, 1, 0}, Cone{{2}, 1, 0},
                               Cone{{3}, 1, 0}};
    return MultiFan(1, std::move(rays), std::move(cones));
}

MultiFan vanishing_c1_fan() {
    // Directions (1+a, -a) for a in [-2, 2]; every vector pairs to 1 with
    // u = (1,1), so c_1 vanishes as soon as the weights balance.  The
    // balance condition at each ray reduces to an incidence equation of
    // the complete graph on the five rays, and any integer cycle vector
    // solves it.
    const int R = 5;
    std::vector<ZVec> dirs;
    for (long a = -2; a <= 2; ++a) dirs.push_back({Int(1 + a), Int(-a)});

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < R; ++i)
        for (int j = i + 1; j < R; ++j) pairs.emplace_back(i, j);

    IntMatrix M(R, int(pairs.size()));
    for (int p = 0; p < int(pairs.size()); ++p) {
        M.at(pairs[p].first, p) = -1;
        M.at(pairs[p].second, p) = 1;
    }
    IntMatrix ker = integer_kernel(M);

    auto build = [&](const ZVec& x) -> std::optional<MultiFan> {
        std::vector<Cone> cones;
        std::set<int> used;
        for (size_t p = 0; p < pairs.size(); ++p) {
            if (x[p] == 0) continue;
            Cone c;
            c.rays = {pairs[p].first, pairs[p].second};
            if (x[p] > 0) {
                c.wplus = x[p].get_si();
                c.wminus = 0;
            } else {
                c.wplus = 0;
                c.wminus = Int(-x[p]).get_si();
            }
            used.insert(c.rays[0]);
            used.insert(c.rays[1]);
            cones.push_back(std::move(c));
        }
        if (cones.empty()) return std::nullopt;
        std::vector<int> remap(R, -1);
        std::vector<ZVec> rays;
        std::vector<int> ids;
        for (int r : used) {
            remap[r] = int(rays.size());
            rays.push_back(dirs[r]);
            ids.push_back(r + 1);
        }
        for (Cone& c : cones)
            for (int& r : c.rays) r = remap[r];
        MultiFan fan(2, std::move(rays), std::move(cones), std::move(ids));
        if (!fan.is_complete()) return std::nullopt;
        return fan;
    };

    for (int j = 0; j < ker.cols(); ++j)
        if (auto f = build(ker.column(j))) return *f;
    // combine two kernel vectors if no single one gave a usable fan
    for (int j = 0; j < ker.cols(); ++j)
        for (int l = j + 1; l < ker.cols(); ++l) {
            ZVec x = ker.column(j);
            ZVec y = ker.column(l);
            for (size_t p = 0; p < x.size(); ++p) x[p] += y[p];
            if (auto f = build(x)) return *f;
        }
    throw Error("no balanced weight vector found (bug)");
}

} // namespace multifan
