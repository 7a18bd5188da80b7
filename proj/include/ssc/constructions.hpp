#pragma once

#include <cstdint>

#include "ssc/code.hpp"
#include "ssc/qcombinatorics.hpp"

namespace ssc {

/// {{0}, GF(q)^n}: subspace covering radius exactly floor(n/2).
Code trivial_covering_code(unsigned long q, uint32_t n);

/// Lifted MRD (Gabidulin) code: row spaces of [I_r | A] where A runs over
/// evaluations of the linearized polynomials of q-degree <= r-d over
/// GF(q^{n-r}) at the polynomial-basis points 1, x, ..., x^{r-1}.
/// q^{(n-r)(r-d+1)} codewords with minimum injection distance d.
/// Requires 1 <= d <= r <= n-r.
Code kk_code(unsigned long q, uint32_t n, uint32_t r, uint32_t d,
             uint64_t limit = 100000000);

/// Union of lifted MRD layers at dimensions floor(n/2) - i*d. Subspace
/// metric: layers i = -z..z (z = floor(floor(n/2)/d)) with injection
/// distance ceil(d/2), minimum subspace distance d. Injection metric:
/// layers i = -z+1..z-1 at injection distance d, plus {0} and the full
/// space, minimum injection distance d. Dimensions above n/2 lift on the
/// right ([A | I_r]); layers where the MRD shape is infeasible contribute
/// one canonical codeword.
Code layered_packing_code(unsigned long q, uint32_t n, uint32_t d, Metric metric,
                          uint64_t limit = 100000000);

/// All Grassmannians with dimensions in J_1 union J_2 (see
/// union_grassmannian_upper): subspace covering radius <= rho.
Code grassmann_union_code(unsigned long q, uint32_t n, uint32_t rho,
                          uint64_t limit = 100000000);

/// Constructive greedy cover with radius rho. Subspace metric: {0} and the
/// full space, plus per-layer greedy covers of each Grassmannian E_t
/// (rho < t <= floor(n/2)) by centers of dimension t - rho (a center covers
/// the targets containing it), with the upper half covered by orthogonal
/// complements; rho >= floor(n/2) degenerates to the trivial cover.
/// Injection metric: whole-space greedy with balls of injection radius rho.
/// Ties always break toward the smallest canonical form.
Code greedy_cover(unsigned long q, uint32_t n, uint32_t rho, Metric metric,
                  uint64_t limit = 100000000);

} // namespace ssc
