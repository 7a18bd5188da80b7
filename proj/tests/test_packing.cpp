#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/oracle.hpp"
#include "ssc/packing.hpp"

using namespace ssc;

TEST_CASE("constant-dimension bounds: anchors and edge cases") {
    BoundInterval b = cdc_bounds(2, 10, 5, 5);
    CHECK(b.lower == 33);
    CHECK(b.upper == 33);
    b = cdc_bounds(2, 10, 4, 4);
    CHECK(b.lower == 65);
    CHECK(b.upper == 68);
    // d = 1 packs the whole grassmannian
    CHECK(cdc_bounds(2, 6, 3, 1).lower == gaussian_binomial(2, 6, 3));
    CHECK(cdc_bounds(2, 6, 3, 1).upper == gaussian_binomial(2, 6, 3));
    // d beyond min(r, n-r) leaves a single codeword
    CHECK(cdc_bounds(2, 6, 2, 3).upper == 1);
    // symmetric in r <-> n-r
    CHECK(cdc_bounds(2, 10, 7, 3).lower == cdc_bounds(2, 10, 3, 3).lower);
    CHECK(cdc_bounds(2, 10, 7, 3).upper == cdc_bounds(2, 10, 3, 3).upper);
}

TEST_CASE("mixed-dimension bounds: anchors") {
    BoundInterval s = subspace_packing_bounds(2, 10, 9);
    CHECK(s.lower == 33);
    CHECK(s.upper == 35);
    CHECK(subspace_packing_bounds(2, 10, 7).lower == 1025);
    // odd n at full distance is exactly a complementary pair
    CHECK(subspace_packing_bounds(2, 9, 9).lower == 2);
    CHECK(subspace_packing_bounds(2, 9, 9).upper == 2);

    BoundInterval i = injection_packing_bounds(2, 10, 5);
    CHECK(i.lower == 35);
    CHECK(i.upper == 35);
    CHECK(injection_packing_bounds(2, 10, 4).lower == 1027);
    // injection distance beyond floor(n/2) is exactly 2
    CHECK(injection_packing_bounds(2, 10, 6).lower == 2);
    CHECK(injection_packing_bounds(2, 10, 6).upper == 2);

    CHECK(singleton_upper(2, 10, 5) == projective_space_size(2, 6));
}

TEST_CASE("interval validity across the grid (q in {2,3}, n <= 14)") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 2; n <= 14; ++n) {
            for (uint32_t d = 2; d <= n; ++d) {
                BoundInterval s = subspace_packing_bounds(q, n, d);
                CHECK(s.lower <= s.upper);
                CHECK(s.lower >= 1);
                BoundInterval i = injection_packing_bounds(q, n, d);
                CHECK(i.lower <= i.upper);
                // any injection-distance-d code also has subspace distance >= d
                CHECK(i.lower <= s.upper);
            }
            for (uint32_t r = 0; r <= n; ++r)
                for (uint32_t d = 1; d <= n; ++d) {
                    BoundInterval c = cdc_bounds(q, n, r, d);
                    CHECK(c.lower <= c.upper);
                }
        }
}

TEST_CASE("packing bounds shrink as the distance grows") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 4; n <= 12; ++n)
            for (uint32_t d = 3; d <= n; ++d) {
                CHECK(subspace_packing_bounds(q, n, d).upper <=
                      subspace_packing_bounds(q, n, d - 1).upper);
                CHECK(injection_packing_bounds(q, n, d).upper <=
                      injection_packing_bounds(q, n, d - 1).upper);
            }
}

TEST_CASE("comparison sandwich ties the constant-dimension interval to the mixed one") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 4; n <= 12; ++n) {
            uint32_t half = n / 2;
            for (uint32_t d = 2; d <= n; ++d) {
                uint32_t r = half; // the sandwich is stated at the middle dimension
                uint32_t dc = (d + 1) / 2;
                if (dc > r) continue;
                auto [lo_f, hi_f] = comparison_sandwich(q, n, r, d, Metric::subspace);
                BoundInterval cdc = cdc_bounds(q, n, r, dc);
                BoundInterval mixed = subspace_packing_bounds(q, n, d);
                // scaled-lower(A_C) <= upper(A_S) and lower(A_S) <= scaled-upper(A_C)
                CHECK((lo_f * Interval::from_mpz(cdc.lower)).certainly_le(mixed.upper));
                CHECK(Interval::from_mpz(mixed.lower)
                          .certainly_le(hi_f * Interval::from_mpz(cdc.upper)));
            }
            for (uint32_t d = 2; d <= half; ++d) {
                uint32_t r = half;
                auto [lo_f, hi_f] = comparison_sandwich(q, n, r, d, Metric::injection);
                BoundInterval cdc = cdc_bounds(q, n, r, d);
                BoundInterval mixed = injection_packing_bounds(q, n, d);
                CHECK((lo_f * Interval::from_mpz(cdc.lower)).certainly_le(mixed.upper));
                CHECK(Interval::from_mpz(mixed.lower)
                          .certainly_le(hi_f * Interval::from_mpz(cdc.upper)));
            }
        }
}

TEST_CASE("injection bounds chain consistently against the subspace bounds") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 4; n <= 12; ++n)
            for (uint32_t d = 2; d <= n / 2; ++d) {
                BoundInterval inj = injection_packing_bounds(q, n, d);
                CHECK(subspace_packing_bounds(q, n, 2 * d).lower <= inj.upper);
                CHECK(inj.lower >= subspace_packing_bounds(q, n, 2 * d - 1).lower);
            }
}

TEST_CASE("exact tiny-scale packings land inside every interval (q=2, n <= 4)") {
    for (uint32_t n = 2; n <= 4; ++n)
        for (uint32_t d = 2; d <= n; ++d) {
            BigCount exact_s = brute_max_packing(2, n, d, Metric::subspace);
            BoundInterval s = subspace_packing_bounds(2, n, d);
            CHECK(s.lower <= exact_s);
            CHECK(exact_s <= s.upper);
            BigCount exact_i = brute_max_packing(2, n, d, Metric::injection);
            BoundInterval i = injection_packing_bounds(2, n, d);
            CHECK(i.lower <= exact_i);
            CHECK(exact_i <= i.upper);
        }
}

TEST_CASE("closed-form asymptotic rates") {
    RateQuery query;
    query.kind = RateQuery::Kind::k_I;
    query.dprime = mpq_class(1, 4);
    CHECK(asymptotic_rate(query) == mpq_class(1, 4));
    query.kind = RateQuery::Kind::a_S;
    query.dprime = mpq_class(2, 5);
    CHECK(asymptotic_rate(query) == mpq_class(3, 5));
    query.kind = RateQuery::Kind::a_I;
    CHECK(asymptotic_rate(query) == mpq_class(1, 5));
    query.kind = RateQuery::Kind::k_S;
    CHECK(asymptotic_rate(query) == mpq_class(1, 5));
    query.kind = RateQuery::Kind::a_S_cdc;
    query.rprime = mpq_class(1, 2);
    query.dprime = mpq_class(1, 4);
    CHECK(asymptotic_rate(query) == mpq_class(3, 4));
}

namespace {

double rate_error(uint32_t n, const mpq_class& dprime, Metric metric) {
    uint32_t d = (uint32_t)mpz_class(dprime.get_num() * n / dprime.get_den()).get_ui();
    if (d < 2) d = 2;
    BoundInterval b = metric == Metric::subspace ? subspace_packing_bounds(2, n, d)
                                                 : injection_packing_bounds(2, n, d);
    // normalized log-size of the best lower bound versus the closed form
    Interval rate = log_q(b.lower, 2) /
                    log_q(projective_space_size(2, n), 2);
    RateQuery query;
    query.kind = metric == Metric::subspace ? RateQuery::Kind::a_S : RateQuery::Kind::a_I;
    query.dprime = mpq_class(d, n); // the realized normalized distance
    query.dprime.canonicalize();
    mpq_class target = asymptotic_rate(query);
    double mid = (rate.lo_d() + rate.hi_d()) / 2;
    double err = mid - target.get_d();
    return err < 0 ? -err : err;
}

} // namespace

TEST_CASE("finite-n rates approach the closed forms, monotonically over n") {
    for (Metric metric : {Metric::subspace, Metric::injection})
        for (mpq_class dprime : {mpq_class(1, 5), mpq_class(2, 5)}) {
            if (metric == Metric::injection && dprime > mpq_class(2, 5)) continue;
            double e20 = rate_error(20, dprime, metric);
            double e40 = rate_error(40, dprime, metric);
            double e60 = rate_error(60, dprime, metric);
            CHECK(e60 <= 0.06);
            CHECK(e40 <= e20 + 1e-12);
            CHECK(e60 <= e40 + 1e-12);
        }
}
