#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ssc/errors.hpp"
#include "ssc/interval.hpp"

namespace ssc {

/// All cardinalities and volumes are exact arbitrary-precision integers.
using BigCount = mpz_class;

enum class Metric { subspace, injection };

/// Gaussian binomial [n r]_q via the q-Pascal recurrence (integer-only,
/// memoized per (q,n) row). Out-of-range r (r < 0 or r > n) gives 0.
BigCount gaussian_binomial(unsigned long q, uint32_t n, int64_t r);

/// |E(q,n)| = sum of all Gaussian binomials [n r]_q, r = 0..n.
BigCount projective_space_size(unsigned long q, uint32_t n);

/// Number of s-dimensional subspaces at subspace distance d from a fixed
/// r-dimensional subspace of GF(q)^n:
///   q^{u(d-u)} [r u] [n-r d-u]  with  u = (r+d-s)/2
/// when u is a nonnegative integer (0 otherwise; out-of-range binomials
/// vanish on their own).
BigCount n_subspace(unsigned long q, uint32_t n, uint32_t r, uint32_t s, uint32_t d);

/// Injection-metric counterpart: N_I(r,s,d) = N_S(r,s,2d-|r-s|).
BigCount n_injection(unsigned long q, uint32_t n, uint32_t r, uint32_t s, uint32_t d);

/// Volume of the ball of radius t around an r-dimensional center, i.e.
/// sum over s = 0..n and d = 0..t of the per-distance counts.
BigCount ball_volume(unsigned long q, uint32_t n, uint32_t r, uint32_t t, Metric metric);

/// Piecewise exponent g(r,t) governing the subspace-metric ball volume,
/// exact rational (the middle branch has denominator 12):
///   t(n-r-t)                      for t <= (n-2r)/3
///   (n-2r)^2/12 + t(2n-t)/4       for (n-2r)/3 < t <= (n+4r)/3
///   (t-r)(n-t+r)                  for (n+4r)/3 < t <= n/2
/// Requires r <= floor(n/2) and t <= floor(n/2).
mpq_class g_exponent(uint32_t n, uint32_t r, uint32_t t);

enum class ConstantMethod { euler_product, pentagonal, partition_series, theta_series };

/// A certified estimate of one of the field-size constants. `value` is an
/// outward-rounded enclosure; the truncation error argument backing it is
/// rigorous (geometric or alternating tail).
struct ConstantEstimate {
    Interval value;
    ConstantMethod method;
    unsigned truncation_index = 0;

    std::string method_name() const;
};

/// K_q = prod_{j>=1} (1 - q^{-j}), computed by the requested method
/// (pentagonal-number series and the partition-number series for 1/K_q are
/// cross-checks of the Euler product). digits <= 100.
ConstantEstimate kq_constant(unsigned long q, unsigned digits,
                             ConstantMethod method = ConstantMethod::euler_product);

/// theta(q) = sum_{n>=0} q^{-n^2}, geometric tail bound. digits <= 100.
ConstantEstimate theta_constant(unsigned long q, unsigned digits);

/// Certified enclosure of theta(q^e) for rational e > 0 (used with e = 3
/// and e = 3/4 in the ball-volume bounds).
Interval theta_power(unsigned long q, const mpq_class& e, mpfr_prec_t prec = 256);

/// Convenience enclosures at a given binary precision.
Interval kq_interval(unsigned long q, mpfr_prec_t prec = 256);
Interval theta_interval(unsigned long q, mpfr_prec_t prec = 256);

} // namespace ssc
