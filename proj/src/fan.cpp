#include "multifan/fan.hpp"

#include "multifan/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace multifan {

MultiFan::MultiFan(int rank, std::vector<ZVec> rays, std::vector<Cone> cones,
                   std::vector<int> ray_ids)
    : rank_(rank), rays_(std::move(rays)), ray_ids_(std::move(ray_ids)),
      cones_(std::move(cones)) {
    if (rank_ < 0) throw Error("negative rank");
    for (const ZVec& v : rays_)
        if (int(v.size()) != rank_) throw Error("ray length does not match rank");
    if (ray_ids_.empty()) {
        ray_ids_.resize(rays_.size());
        for (size_t i = 0; i < rays_.size(); ++i) ray_ids_[i] = int(i) + 1;
    }
    if (ray_ids_.size() != rays_.size()) throw Error("ray id list length mismatch");
    for (Cone& c : cones_) {
        for (int r : c.rays)
            if (r < 0 || r >= int(rays_.size())) throw Error("cone references missing ray");
        std::sort(c.rays.begin(), c.rays.end());
    }
    build_simplices();
}

void MultiFan::build_simplices() {
    std::set<std::vector<int>> seen;
    seen.insert(std::vector<int>{}); // empty simplex always present
    for (const Cone& c : cones_) {
        const int k = int(c.rays.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> s;
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) s.push_back(c.rays[b]);
            seen.insert(std::move(s));
        }
    }
    simplices_.assign(seen.begin(), seen.end());
    std::sort(simplices_.begin(), simplices_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
}

bool MultiFan::is_simplex(const std::vector<int>& K) const {
    std::vector<int> s = K;
    std::sort(s.begin(), s.end());
    return std::find(simplices_.begin(), simplices_.end(), s) != simplices_.end();
}

std::vector<std::vector<int>> MultiFan::simplices_of_size(int k) const {
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices_)
        if (int(s.size()) == k) out.push_back(s);
    return out;
}

ValidationReport MultiFan::validate() const {
    ValidationReport rep;
    auto note = [&](const std::string& s) { rep.problems.push_back(s); };

    if (cones_.empty()) note("no maximal cones");
    for (size_t i = 0; i < rays_.size(); ++i) {
        bool zero = true;
        for (const Int& x : rays_[i])
            if (x != 0) zero = false;
        if (zero && rank_ > 0)
            note("ray " + std::to_string(ray_ids_[i]) + " is the zero vector");
    }
    std::set<std::vector<int>> cone_sets;
    for (const Cone& c : cones_) {
        std::ostringstream name;
        name << "cone {";
        for (size_t j = 0; j < c.rays.size(); ++j)
            name << (j ? " " : "") << ray_ids_[c.rays[j]];
        name << "}";
        if (int(c.rays.size()) != rank_)
            note(name.str() + " has " + std::to_string(c.rays.size()) +
                 " rays, expected " + std::to_string(rank_));
        if (std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end())
            note(name.str() + " repeats a ray");
        if (c.wplus < 0 || c.wminus < 0)
            note(name.str() + " has negative weight");
        if (!cone_sets.insert(c.rays).second)
            note(name.str() + " appears twice");
        if (int(c.rays.size()) == rank_ && rank_ > 0) {
            std::vector<ZVec> vs;
            for (int r : c.rays) vs.push_back(rays_[r]);
            if (det(IntMatrix::from_columns(vs)) == 0)
                note(name.str() + " has dependent edge vectors");
        }
    }
    return rep;
}

bool MultiFan::all_primitive() const {
    for (const ZVec& v : rays_) {
        Int g = 0;
        for (const Int& x : v) g = gcd_int(g, x);
        if (g != 1) return false;
    }
    return true;
}

std::vector<QVec> MultiFan::cone_duals(const Cone& cone) const {
    std::vector<ZVec> vs;
    vs.reserve(cone.rays.size());
    for (int r : cone.rays) vs.push_back(rays_[r]);
    return dual_basis(vs);
}

bool MultiFan::is_generic(const ZVec& v) const {
    if (int(v.size()) != rank_) throw Error("direction length does not match rank");
    if (rank_ == 0) return true;
    bool nonzero = false;
    for (const Int& x : v)
        if (x != 0) nonzero = true;
    if (!nonzero) return false;
    // v must avoid the span of every simplex of dimension < rank
    for (const auto& J : simplices_) {
        if (J.empty() || int(J.size()) >= rank_) continue;
        std::vector<ZVec> vs;
        for (int r : J) vs.push_back(rays_[r]);
        vs.push_back(v);
        if (rank_of(IntMatrix::from_columns(vs)) != int(J.size()) + 1) return false;
    }
    // walls spanned by facets of maximal cones (covers rank-1 fans too,
    // where the loop above is empty)
    for (const Cone& c : cones_) {
        if (int(c.rays.size()) != rank_) continue;
        for (const QVec& u : cone_duals(c))
            if (dot(u, v) == 0) return false;
    }
    return true;
}

ZVec MultiFan::generic_vector(int index) const {
    if (rank_ == 0) return {};
    if (rank_ == 1) return {Int(index + 1)};
    int hits = 0;
    for (long M = 2; M < 10000; ++M) {
        ZVec v(rank_);
        Int p = 1;
        for (int i = 0; i < rank_; ++i) {
            v[i] = p;
            p *= M;
        }
        if (is_generic(v)) {
            if (hits == index) return v;
            ++hits;
        }
    }
    throw Error("no generic vector found on the moment curve (degenerate fan?)");
}

long MultiFan::degree_along(const ZVec& v) const {
    if (!is_generic(v)) throw NotGeneric("direction lies on a wall: " + vec_str(v));
    long d = 0;
    for (const Cone& c : cones_) {
        bool inside = true;
        for (const QVec& u : cone_duals(c))
            if (dot(u, v) < 0) { inside = false; break; }
        if (inside) d += c.w();
    }
    return d;
}

bool MultiFan::is_complete() const {
    if (cones_.empty()) return false;
    for (const Cone& c : cones_)
        if (int(c.rays.size()) != rank_) return false;
    if (rank_ == 0) return true;
    // balance of the rank-one projection at every (n-1)-simplex
    for (const auto& J : simplices_of_size(rank_ - 1)) {
        ProjectedFan p = project(J);
        long plus = 0, minus = 0;
        for (const Cone& c : p.fan->cones()) {
            const Int& x = p.fan->ray(c.rays[0])[0];
            if (x > 0)
                plus += c.w();
            else
                minus += c.w();
        }
        if (plus != minus) return false;
    }
    return true;
}

long MultiFan::degree() const {
    if (!is_complete()) throw NotComplete("degree is only defined for complete fans");
    long d = degree_along(generic_vector(0));
    for (int i = 1; i < 5; ++i)
        if (degree_along(generic_vector(i)) != d)
            throw Error("degree depends on the direction (bug)");
    return d;
}

ProjectedFan MultiFan::project(const std::vector<int>& K_in) const {
    std::vector<int> K = K_in;
    std::sort(K.begin(), K.end());
    if (!is_simplex(K))
        throw NotASimplex("cannot project: not a simplex");

    const int k = int(K.size());
    const int q = rank_ - k;

    IntMatrix chart;
    if (k == 0) {
        chart = IntMatrix::identity(rank_);
    } else {
        std::vector<ZVec> vs;
        for (int r : K) vs.push_back(rays_[r]);
        SmithDecomposition s = smith_normal_form(IntMatrix::from_columns(vs));
        if (s.rank() != k) throw Error("simplex with dependent edges");
        chart = IntMatrix(q, rank_);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < rank_; ++j) chart.at(i, j) = s.U.at(k + i, j);
    }

    // rays of the projection: vertices of the link of K
    std::vector<int> parent_ray;
    std::vector<ZVec> prays;
    std::vector<int> pids;
    std::vector<int> where(rays_.size(), -1);
    for (int j = 0; j < int(rays_.size()); ++j) {
        if (std::binary_search(K.begin(), K.end(), j)) continue;
        std::vector<int> KJ = K;
        KJ.push_back(j);
        std::sort(KJ.begin(), KJ.end());
        if (!is_simplex(KJ)) continue;
        where[j] = int(prays.size());
        parent_ray.push_back(j);
        prays.push_back(chart.apply(rays_[j]));
        pids.push_back(ray_ids_[j]);
    }

    std::vector<Cone> pcones;
    for (const Cone& c : cones_) {
        if (!std::includes(c.rays.begin(), c.rays.end(), K.begin(), K.end())) continue;
        Cone pc;
        pc.wplus = c.wplus;
        pc.wminus = c.wminus;
        for (int r : c.rays)
            if (!std::binary_search(K.begin(), K.end(), r)) pc.rays.push_back(where[r]);
        pcones.push_back(std::move(pc));
    }

    ProjectedFan out;
    out.K = K;
    out.chart = chart;
    out.parent_ray = parent_ray;
    out.fan = std::make_shared<MultiFan>(q, std::move(prays), std::move(pcones),
                                         std::move(pids));
    return out;
}

QuotientGroup MultiFan::group_HI(const Cone& cone) const {
    if (int(cone.rays.size()) != rank_)
        throw Error("H_I needs a maximal cone");
    std::vector<ZVec> vs;
    for (int r : cone.rays) vs.push_back(rays_[r]);
    return QuotientGroup(IntMatrix::from_columns(vs));
}

Int MultiFan::group_order(const std::vector<int>& K) const {
    if (K.empty()) return 1;
    std::vector<ZVec> vs;
    for (int r : K) vs.push_back(rays_[r]);
    SmithDecomposition s = smith_normal_form(IntMatrix::from_columns(vs));
    Int o = 1;
    for (const Int& d : s.invariant_factors()) o *= d;
    return o;
}

std::vector<FractionData> MultiFan::fraction_data(const std::vector<int>& K_in) const {
    std::vector<int> K = K_in;
    std::sort(K.begin(), K.end());
    if (!is_simplex(K)) throw NotASimplex("fraction data: not a simplex");

    if (K.empty()) {
        FractionData z;
        z.representative.assign(rank_, Int(0));
        z.f_total = 0;
        z.interior = true;
        return {z};
    }

    const int k = int(K.size());
    std::vector<ZVec> vs;
    for (int r : K) vs.push_back(rays_[r]);
    IntMatrix B = IntMatrix::from_columns(vs);
    SmithDecomposition s = smith_normal_form(B);
    if (s.rank() != k) throw Error("simplex with dependent edges");

    // saturation basis: first k columns of uinv; in those coordinates the
    // edge sublattice is (top k x k of D) * vinv
    IntMatrix S = s.uinv.column_slice(0, k);
    IntMatrix W(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) W.at(i, j) = s.D.at(i, i) * s.vinv.at(i, j);

    QuotientGroup H(W);
    std::vector<FractionData> out;
    for (const ZVec& y : H.elements()) {
        ZVec x = S.apply(y);
        auto c = solve_exact(B, to_qvec(x));
        if (!c) throw Error("saturation point not in the rational span (bug)");
        FractionData fd;
        fd.K = K;
        fd.f.resize(k);
        fd.f_total = 0;
        fd.interior = true;
        for (int i = 0; i < k; ++i) {
            fd.f[i] = frac_rat((*c)[i]);
            fd.f_total += fd.f[i];
            if (fd.f[i] == 0) fd.interior = false;
        }
        fd.representative.assign(rank_, Int(0));
        QVec rep(rank_, Rat(0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < rank_; ++j) rep[j] += fd.f[i] * Rat(vs[i][j]);
        for (int j = 0; j < rank_; ++j) {
            if (rep[j].get_den() != 1)
                throw Error("reduced representative is not a lattice point (bug)");
            fd.representative[j] = rep[j].get_num();
        }
        out.push_back(std::move(fd));
    }
    std::sort(out.begin(), out.end(), [](const FractionData& a, const FractionData& b) {
        return a.f < b.f;
    });
    return out;
}

std::vector<FractionData> MultiFan::hat_HK(const std::vector<int>& K) const {
    std::vector<FractionData> all = fraction_data(K);
    std::vector<FractionData> out;
    for (auto& fd : all)
        if (fd.interior) out.push_back(std::move(fd));
    return out;
}

std::vector<long> MultiFan::h_vector() const {
    if (!is_complete()) throw NotComplete("h-vector needs a complete fan");
    std::vector<std::vector<long>> results;
    for (int t = 0; t < 3; ++t) {
        ZVec v = generic_vector(t);
        std::vector<long> h(rank_ + 1, 0);
        for (const Cone& c : cones_) {
            int mu = 0;
            for (const QVec& u : cone_duals(c))
                if (dot(u, v) > 0) ++mu;
            h[mu] += c.w();
        }
        results.push_back(std::move(h));
    }
    if (results[0] != results[1] || results[0] != results[2])
        throw Error("h-vector depends on the direction (bug)");
    return results[0];
}

std::vector<long> MultiFan::e_vector() const {
    if (!is_complete()) throw NotComplete("e-vector needs a complete fan");
    std::vector<long> e(rank_ + 1, 0);
    for (const auto& J : simplices_) {
        int k = int(J.size());
        if (k == rank_) {
            for (const Cone& c : cones_)
                if (c.rays == J) e[k] += c.w();
        } else {
            e[k] += project(J).fan->degree();
        }
    }
    return e;
}

} // namespace multifan
