#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ssc/interval.hpp"
#include "ssc/qcombinatorics.hpp"

namespace ssc {

/// Two-sided bound on a code size, each side tagged with the argument that
/// produced it (so reports can say which bound won).
struct BoundInterval {
    BigCount lower;
    BigCount upper;
    std::vector<std::string> lower_provenance;
    std::vector<std::string> upper_provenance;
};

/// Bounds on the maximum constant-dimension code in E_r(q,n) with minimum
/// injection distance d. Symmetric in r <-> n-r; d = 1 is the full
/// Grassmannian; d > min(r, n-r) leaves only a singleton code. In between:
/// lower q^{(n-r)(r-d+1)} + 1 (lifted-MRD code plus one), upper the
/// anticode ratio floor([n r-d+1] / [r r-d+1]).
BoundInterval cdc_bounds(unsigned long q, uint32_t n, uint32_t r, uint32_t d);

/// Bounds on the maximum code in E(q,n) with minimum subspace distance d,
/// 2 <= d <= n. n odd with d = n is exactly 2.
BoundInterval subspace_packing_bounds(unsigned long q, uint32_t n, uint32_t d);

/// Bounds on the maximum code in E(q,n) with minimum injection distance d,
/// 2 <= d <= n. d > floor(n/2) is exactly 2.
BoundInterval injection_packing_bounds(unsigned long q, uint32_t n, uint32_t d);

/// Singleton-style upper bound via puncturing: |E(q, n-d+1)|,
/// for 2 <= d <= floor(n/2).
BigCount singleton_upper(unsigned long q, uint32_t n, uint32_t d);

/// Scalar factors (lower, upper) relating the best CDC in E_r(q,n) to the
/// best unrestricted code at the same minimum distance. Subspace metric
/// needs ceil(d/2) <= r <= floor(n/2); injection needs 2 <= d <= r <=
/// floor(n/2). Certified enclosures.
std::pair<Interval, Interval> comparison_sandwich(unsigned long q, uint32_t n,
                                                  uint32_t r, uint32_t d,
                                                  Metric metric,
                                                  mpfr_prec_t prec = 256);

/// Closed-form asymptotic rates, exact rationals in [0,1].
struct RateQuery {
    enum class Kind { a_S, a_S_cdc, a_I, a_I_cdc, k_S, k_I };
    Kind kind;
    mpq_class rprime;  // normalized dimension, used by the *_cdc kinds
    mpq_class dprime;  // normalized distance (or covering radius for k_*)
};

mpq_class asymptotic_rate(const RateQuery& query);

} // namespace ssc
