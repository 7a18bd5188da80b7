#include "ssc/packing.hpp"

#include <algorithm>

namespace ssc {

namespace {

mpz_class pow_z(unsigned long q, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), q, e);
    return out;
}

} // namespace

BoundInterval cdc_bounds(unsigned long q, uint32_t n, uint32_t r, uint32_t d) {
    if (q < 2) throw OutOfRange("field size must be at least 2");
    if (r > n) throw OutOfRange("dimension exceeds ambient space");
    if (d < 1) throw OutOfRange("minimum distance must be at least 1");
    if (r > n - r) r = n - r; // same Grassmannian geometry up to duality
    BoundInterval out;
    if (d > r) {
        out.lower = out.upper = 1;
        out.lower_provenance = {"singleton-code"};
        out.upper_provenance = {"dimension-gap-exact"};
        return out;
    }
    if (d == 1) {
        out.lower = out.upper = gaussian_binomial(q, n, r);
        out.lower_provenance = {"complete-grassmannian"};
        out.upper_provenance = {"complete-grassmannian"};
        return out;
    }
    out.lower = pow_z(q, (unsigned long)(n - r) * (r - d + 1)) + 1;
    out.lower_provenance = {"lifted-mrd-plus-one"};
    mpq_class ratio(gaussian_binomial(q, n, r - d + 1),
                    gaussian_binomial(q, r, r - d + 1));
    ratio.canonicalize();
    out.upper = ratio.get_num() / ratio.get_den(); // exact floor (all positive)
    out.upper_provenance = {"anticode-ratio"};
    return out;
}

BoundInterval subspace_packing_bounds(unsigned long q, uint32_t n, uint32_t d) {
    if (q < 2) throw OutOfRange("field size must be at least 2");
    if (d < 2 || d > n) throw OutOfRange("need 2 <= d <= n");
    BoundInterval out;
    uint32_t half = n / 2;
    if (n % 2 == 1 && d == n) {
        out.lower = out.upper = 2;
        out.lower_provenance = {"odd-full-distance-exact"};
        out.upper_provenance = {"odd-full-distance-exact"};
        return out;
    }
    uint32_t di = (d + 1) / 2; // matching injection distance ceil(d/2)
    BigCount l1 = cdc_bounds(q, n, half, di).lower;
    uint32_t z = half / d;
    BigCount l2 = 0;
    for (int64_t i = -(int64_t)z; i <= (int64_t)z; ++i) {
        uint32_t dim = (uint32_t)((int64_t)half - i * (int64_t)d);
        l2 += cdc_bounds(q, n, dim, di).lower;
    }
    if (l2 > l1) {
        out.lower = l2;
        out.lower_provenance = {"layered-lifted-mrd"};
    } else {
        out.lower = l1;
        out.lower_provenance = {"half-dimension-lifted-mrd"};
    }
    BigCount u = 2;
    for (uint32_t r = di; r + di <= n; ++r)
        u += cdc_bounds(q, n, r, di).upper;
    out.upper = u;
    out.upper_provenance = {"dimension-window-anticode-sum"};
    return out;
}

BigCount singleton_upper(unsigned long q, uint32_t n, uint32_t d) {
    if (q < 2) throw OutOfRange("field size must be at least 2");
    if (d < 2 || d > n / 2) throw OutOfRange("need 2 <= d <= floor(n/2)");
    return projective_space_size(q, n - d + 1);
}

BoundInterval injection_packing_bounds(unsigned long q, uint32_t n, uint32_t d) {
    if (q < 2) throw OutOfRange("field size must be at least 2");
    if (d < 2 || d > n) throw OutOfRange("need 2 <= d <= n");
    BoundInterval out;
    uint32_t half = n / 2;
    if (d > half) {
        out.lower = out.upper = 2;
        out.lower_provenance = {"large-distance-exact"};
        out.upper_provenance = {"large-distance-exact"};
        return out;
    }
    BigCount l1 = cdc_bounds(q, n, half, d).lower;
    uint32_t z = half / d;
    BigCount l2 = 2; // the zero space and the full space join the layers
    for (int64_t i = -(int64_t)z + 1; i <= (int64_t)z - 1; ++i) {
        uint32_t dim = (uint32_t)((int64_t)half - i * (int64_t)d);
        l2 += cdc_bounds(q, n, dim, d).lower;
    }
    BigCount l3 = subspace_packing_bounds(q, n, 2 * d - 1).lower;
    out.lower = l1;
    out.lower_provenance = {"half-dimension-lifted-mrd"};
    if (l2 > out.lower) {
        out.lower = l2;
        out.lower_provenance = {"layered-lifted-mrd"};
    }
    if (l3 > out.lower) {
        out.lower = l3;
        out.lower_provenance = {"via-subspace-distance-2d-1"};
    }
    BigCount u1 = 2;
    for (uint32_t r = d; r + d <= n; ++r)
        u1 += cdc_bounds(q, n, r, d).upper;
    BigCount u2 = singleton_upper(q, n, d);
    BigCount u3 = subspace_packing_bounds(q, n, d).upper;
    out.upper = u1;
    out.upper_provenance = {"dimension-window-anticode-sum"};
    if (u2 < out.upper) {
        out.upper = u2;
        out.upper_provenance = {"singleton-puncturing"};
    }
    if (u3 < out.upper) {
        out.upper = u3;
        out.upper_provenance = {"via-subspace-distance-d"};
    }
    return out;
}

std::pair<Interval, Interval> comparison_sandwich(unsigned long q, uint32_t n,
                                                  uint32_t r, uint32_t d,
                                                  Metric metric, mpfr_prec_t prec) {
    if (q < 2) throw OutOfRange("field size must be at least 2");
    uint32_t half = n / 2;
    Interval kq = kq_interval(q, prec);
    Interval theta = theta_interval(q, prec);
    Interval two = Interval::from_ui(2, prec);
    if (metric == Metric::subspace) {
        uint32_t di = (d + 1) / 2;
        if (r < di || r > half) throw OutOfRange("need ceil(d/2) <= r <= floor(n/2)");
        unsigned long e = (unsigned long)(half - r) * (half - r + di - 1);
        Interval qe = Interval::from_mpz(pow_z(q, e), prec);
        return {kq * qe, two * kq.inverse() * theta * qe};
    }
    if (d < 2 || r < d || r > half) throw OutOfRange("need 2 <= d <= r <= floor(n/2)");
    unsigned long e = (unsigned long)(half - r) * (r - d + 1);
    Interval qe = Interval::from_mpz(pow_z(q, e), prec);
    return {qe, two * kq.inverse() * theta * qe};
}

mpq_class asymptotic_rate(const RateQuery& query) {
    const mpq_class& rp = query.rprime;
    const mpq_class& dp = query.dprime;
    if (dp < 0 || dp > 1) throw OutOfRange("normalized distance outside [0,1]");
    using Kind = RateQuery::Kind;
    switch (query.kind) {
        case Kind::a_S:
            return 1 - dp;
        case Kind::a_I:
            return dp <= mpq_class(1, 2) ? 1 - 2 * dp : mpq_class(0);
        case Kind::k_S:
            return dp <= mpq_class(1, 2) ? 1 - 2 * dp : mpq_class(0);
        case Kind::k_I: {
            if (dp > mpq_class(1, 2)) return 0;
            mpq_class t = 1 - 2 * dp;
            return t * t;
        }
        case Kind::a_S_cdc: {
            if (rp < 0 || rp > 1) throw OutOfRange("normalized dimension outside [0,1]");
            if (rp >= dp / 2 && rp <= mpq_class(1, 2))
                return 2 * (1 - rp) * (2 * rp - dp);
            if (rp > mpq_class(1, 2) && rp <= 1 - dp / 2)
                return 2 * rp * (2 - 2 * rp - dp);
            return 0;
        }
        case Kind::a_I_cdc: {
            if (rp < 0 || rp > 1) throw OutOfRange("normalized dimension outside [0,1]");
            if (rp >= dp && rp <= mpq_class(1, 2))
                return 4 * (1 - rp) * (rp - dp);
            if (rp > mpq_class(1, 2) && rp <= 1 - dp)
                return 4 * rp * (1 - rp - dp);
            return 0;
        }
    }
    throw OutOfRange("unknown rate kind");
}

} // namespace ssc
