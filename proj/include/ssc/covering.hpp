#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssc/lp.hpp"
#include "ssc/qcombinatorics.hpp"

namespace ssc {

struct CoveringBoundReport {
    BigCount lower;
    BigCount upper;
    Rational lp_value;                   // exact optimum of the LP relaxation
    std::optional<mpz_class> ilp_value;  // exact integer optimum when requested
    std::vector<std::string> lower_provenance;
    std::vector<std::string> upper_provenance;
};

/// Exact covering numbers where they are pinned: K_S is |E(q,n)| at rho = 0,
/// 1 at rho = n, and 2 for floor(n/2) <= rho < n; K_I is |E(q,n)| at rho = 0,
/// 1 for rho >= n - floor(n/2), and 2 at rho = floor(n/2) when n is odd.
/// Empty optional means not determined by a boundary case.
std::optional<BigCount> covering_boundary_cases(unsigned long q, uint32_t n,
                                                uint32_t rho, Metric metric);

/// Sphere-covering lower bound: minimize sum A_i over integer sequences with
/// 0 <= A_i <= [n i] and, for every r, sum_i A_i * (ball count from dim i to
/// dim r within rho) >= [n r]. lp mode reports ceil of the exact rational
/// optimum; ilp additionally runs branch-and-bound. Requires 0 < rho <
/// floor(n/2).
CoveringBoundReport sphere_covering_lower(unsigned long q, uint32_t n, uint32_t rho,
                                          Metric metric, bool ilp = false,
                                          uint64_t node_budget = 100000);

/// Greedy covering upper bound, subspace metric:
/// 2 + 2 * sum_{r=rho+1}^{floor(n/2)} floor(k_r) with
/// k_r = [n r]/[n-r+rho rho] + ([n r-rho]/[r rho]) ln [n-r+rho rho],
/// floors taken on the certified upper ends.
BigCount greedy_upper_subspace(unsigned long q, uint32_t n, uint32_t rho,
                               mpfr_prec_t prec = 256);

/// Greedy covering upper bound, injection metric:
/// ceil( |E(q,n)| / min_r V_I(r,rho) * (1 + ln max_r V_I(r,rho)) ).
BigCount greedy_upper_injection(unsigned long q, uint32_t n, uint32_t rho,
                                mpfr_prec_t prec = 256);

/// Union-of-Grassmannians cover: dimensions J_1 = {0} union the arithmetic
/// progression down from floor(n/2)-rho in steps of 2 rho + 1, J_2 mirrored;
/// total = sum of the Grassmannian sizes over J_1 union J_2.
struct UnionIndexSets {
    std::vector<uint32_t> j1, j2;
    BigCount total;
};
UnionIndexSets union_grassmannian_upper(unsigned long q, uint32_t n, uint32_t rho);

/// Combined report: boundary cases are exact; otherwise sphere-covering
/// lower versus the minimum of the applicable uppers (for the injection
/// metric, any subspace-radius-rho cover also works, so subspace uppers
/// apply as well).
CoveringBoundReport covering_bounds(unsigned long q, uint32_t n, uint32_t rho,
                                    Metric metric, bool ilp = false,
                                    uint64_t node_budget = 100000);

} // namespace ssc
