#pragma once

// Complete simplicial multi-fans with prescribed edge vectors.
//
// A fan is stored as its rank, the list of edge vectors v_i (one per ray),
// and the maximal simplices, each carrying a pair of nonnegative weights
// (w+, w-); the effective weight of a maximal simplex is w+ - w-.  Lower
// simplices are the subsets of maximal ones.  Edge vectors need not be
// primitive and weights may cancel; nothing here assumes the fan comes
// from an honest toric variety.

#include "multifan/matrix.hpp"
#include "multifan/quotient.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace multifan {

struct Cone {
    std::vector<int> rays; // ray indices, kept sorted
    long wplus = 1;
    long wminus = 0;
    long w() const { return wplus - wminus; }
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// One element h of the quotient H_K = L_K / (Z v_i : i in K), recorded by
// its reduced representative v(h) = sum_i f_i v_i with all f_i in [0, 1).
// `interior` marks the elements with every f_i nonzero: those form the
// stratum of K itself, the rest already live over a proper subset of K.
struct FractionData {
    std::vector<int> K;
    ZVec representative;  // in ambient lattice coordinates
    QVec f;               // aligned with K
    Rat f_total;          // sum of f
    bool interior;
};

class MultiFan;

struct ProjectedFan {
    std::vector<int> K;           // parent ray indices projected out
    IntMatrix chart;              // (n-k) x n; quotient coordinates = chart * x
    std::vector<int> parent_ray;  // projected ray index -> parent ray index
    std::shared_ptr<MultiFan> fan;
};

class MultiFan {
public:
    MultiFan(int rank, std::vector<ZVec> rays, std::vector<Cone> cones,
             std::vector<int> ray_ids = {});

    int rank() const { return rank_; }
    int num_rays() const { return int(rays_.size()); }
    const ZVec& ray(int i) const { return rays_[i]; }
    const std::vector<ZVec>& rays() const { return rays_; }
    int ray_id(int i) const { return ray_ids_[i]; }
    const std::vector<int>& ray_ids() const { return ray_ids_; }
    const std::vector<Cone>& cones() const { return cones_; }

    // Every simplex (subsets of maximal cones plus the empty set), sorted
    // by size then lexicographically.
    const std::vector<std::vector<int>>& simplices() const { return simplices_; }
    bool is_simplex(const std::vector<int>& K) const;
    std::vector<std::vector<int>> simplices_of_size(int k) const;

    ValidationReport validate() const;
    bool all_primitive() const;

    // Dual basis u_i^I of a maximal cone, aligned with cone.rays.
    std::vector<QVec> cone_duals(const Cone& cone) const;

    bool is_generic(const ZVec& v) const;
    // Deterministic supply of generic directions: moment-curve vectors
    // (1, M, M^2, ...) for growing M, skipping walls.  index >= 0.
    ZVec generic_vector(int index) const;

    // Weighted number of maximal cones containing v.  Throws NotGeneric.
    long degree_along(const ZVec& v) const;

    bool is_complete() const;
    long degree() const; // throws NotComplete

    ProjectedFan project(const std::vector<int>& K) const; // throws NotASimplex

    // H_I for a maximal cone: ambient lattice modulo the edge sublattice.
    QuotientGroup group_HI(const Cone& cone) const;
    Int group_order(const std::vector<int>& K) const; // |H_K| for any simplex

    // All of H_K as fraction data (for K = empty: the single zero element).
    std::vector<FractionData> fraction_data(const std::vector<int>& K) const;
    // Only the interior elements; this is H-hat_K.  For K = empty the
    // zero element is kept, so the union over all K tiles every H_I.
    std::vector<FractionData> hat_HK(const std::vector<int>& K) const;

    std::vector<long> h_vector() const; // throws NotComplete
    std::vector<long> e_vector() const; // throws NotComplete

private:
    int rank_;
    std::vector<ZVec> rays_;
    std::vector<int> ray_ids_;
    std::vector<Cone> cones_;
    std::vector<std::vector<int>> simplices_;

    void build_simplices();
};

} // namespace multifan
