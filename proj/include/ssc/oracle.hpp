#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "ssc/code.hpp"
#include "ssc/qcombinatorics.hpp"
#include "ssc/subspace.hpp"

namespace ssc {

/// Exhaustive distance histogram around a center: counts of subspaces by
/// (dimension, distance). Ground truth for the per-distance counting
/// formulas.
struct DistanceProfile {
    Subspace center;
    Metric metric;
    std::map<std::pair<uint32_t, uint32_t>, BigCount> histogram; // (s,d) -> count

    BigCount at(uint32_t s, uint32_t d) const;
    BigCount ball(uint32_t t) const; // sum over all s, d <= t
};

DistanceProfile brute_distance_profile(const AmbientSpace& space,
                                       const Subspace& center, Metric metric);

/// max over E(q,n) of the distance to the nearest codeword.
uint32_t brute_covering_radius(const Code& code, Metric metric,
                               uint64_t enum_limit = 100000000);

/// min over codeword pairs; needs at least two codewords.
uint32_t brute_min_distance(const Code& code, Metric metric);

/// Exact maximum code size with pairwise distance >= d: maximum clique in
/// the distance graph on E(q,n), branch-and-bound in canonical vertex
/// order. Deliberately naive; limited to |E(q,n)| <= 100.
BigCount brute_max_packing(unsigned long q, uint32_t n, uint32_t d, Metric metric);

} // namespace ssc
