#pragma once

// Structure detection for complete multi-fans whose Todd genus is 1 and
// whose weights are all 1: maximal divisibility of c_1, and recognition of
// the two extremal families (divisibility n+1 and n).

#include "multifan/cohomology.hpp"
#include "multifan/genera.hpp"

#include <string>
#include <utility>
#include <vector>

namespace multifan {

enum class FanFamily {
    ProjectiveSpaceLike,      // T-Cartier divisibility n+1
    CaseA_Bundle,             // divisibility n, nonsingular (bundle over a line)
    CaseB_WeightedProjective, // divisibility n, singular (weights 2,...,2,1,1)
    Other,
};

struct ClassificationReport {
    bool satisfies_toddone = false;
    long max_plain_N = 1;     // largest N <= rank+1 with plain divisibility
    long max_t_cartier_N = 1; // largest N <= rank+1 with T-Cartier divisibility
    FanFamily family = FanFamily::Other;

    std::vector<long> h;         // h-vector
    FracExpPoly ty;              // T_y
    FracExpPoly hat_ty;          // orbifold T_y
    std::vector<Int> relation;   // a_i with sum a_i v_i = 0, when recognized
    std::vector<int> special_K;  // unique K with nonempty hat-H_K (weighted-projective family)
    std::string note;
};

// Todd genus 1 and every weight 1.  With `deep` also checks that every
// projected fan has Todd genus 1 (a consequence, so a self-check).
bool check_toddone(const MultiFan& fan, bool deep = false);

// (largest plain N, largest T-Cartier N) scanning n+1 down to 2, and a
// confirmation that T-Cartier divisibility fails at n+2 and n+3 (anything
// else would contradict the classification, hence TheoremViolation).  Note
// the window: plain divisibility genuinely can exceed n+1 -- the weighted
// projective space with weights (2,1,1) has c_1 plain-divisible by 4 --
// so only the T-Cartier side carries a theorem bound.  Requires
// check_toddone.
std::pair<long, long> max_divisibility(const MultiFan& fan);

// Full report.  Requires check_toddone and primitive edge vectors.  When
// the divisibility hypotheses of one of the extremal families hold but its
// characterizing identities fail, throws TheoremViolation.
ClassificationReport classify_extremal(const MultiFan& fan);

std::string family_name(FanFamily f);
std::string classification_text(const ClassificationReport& r);

} // namespace multifan
