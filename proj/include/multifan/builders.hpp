#pragma once

// Stock fans used throughout the tests and the command line examples.

#include "multifan/fan.hpp"

namespace multifan {

// Fan of P^n: rays e_1..e_n and -(e_1+...+e_n), all n-subsets as cones.
MultiFan projective_fan(int n);

// Simplicial fan of the weighted projective space P(a_1,...,a_{n+1}):
// rays satisfy sum_i a_i v_i = 0 with gcd(a) = 1.  The construction used
// here requires a_{n+1} = 1 and a_i == a_{n+1} (mod a_{n+1}) trivially;
// more precisely it takes v_i = e_i for i <= n and
// v_{n+1} = -(a_1 e_1 + ... + a_n e_n), which needs every a_i > 0 and
// a_{n+1} = 1.  Throws InvalidWeights otherwise.
MultiFan weighted_projective_fan(const std::vector<long>& a);

// Rank-2 fan with rays (1,0), (0,1), (-1,-b) and all three 2-subsets.
MultiFan example_fan_1(long b);

// Rank-2 fan with rays (1,0), (0,b), (-1,-b): non-primitive middle ray.
MultiFan example_fan_2(long b);

// Fan of the projectivized bundle P(O + O(k_2) + ... + O(k_n)) over P^1,
// rank n (so `twists` has n-1 entries): fiber rays e_1..e_{n-1} and
// -(e_1+...+e_{n-1}) lifted at height 0, base rays e_n and
// -e_n - sum_i k_i v_i over the fiber rays v_2..v_n.
MultiFan p1_bundle_fan(int n, const std::vector<long>& twists);

MultiFan hirzebruch_fan(long k); // = p1_bundle_fan(2, {k})

// Rank-1 multi-fan consisting of two disjoint copies of the P^1 fan;
// every generic direction hits two cones, so the degree is 2.
MultiFan doubled_p1_fan();

// A complete rank-2 multi-fan (with genuinely negative effective weights)
// whose first Chern class vanishes: all edge vectors lie on the affine
// line <(1,1), x> = 1, and the weights solve the balance equations.
// Deterministic: the lexicographically first Smith-basis kernel vector of
// the balance system that yields a complete fan.
MultiFan vanishing_c1_fan();

MultiFan from_file(const std::string& path);
MultiFan parse_fan(const std::string& text);
std::string to_fan_text(const MultiFan& fan);
void write_file(const MultiFan& fan, const std::string& path);

// FNV-1a (64-bit) of the raw bytes of a file, as fixed-width hex.
std::string file_hash(const std::string& path);
std::string bytes_hash(const std::string& bytes);

} // namespace multifan
