#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/oracle.hpp"
#include "ssc/qcombinatorics.hpp"

using namespace ssc;

TEST_CASE("gaussian binomial basics and symmetry") {
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(2, 0, 0) == 1);
    CHECK(gaussian_binomial(3, 5, -1) == 0);
    CHECK(gaussian_binomial(3, 5, 6) == 0);
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul})
        for (uint32_t n = 0; n <= 12; ++n)
            for (uint32_t r = 0; r <= n; ++r)
                CHECK(gaussian_binomial(q, n, r) == gaussian_binomial(q, n, n - r));
    CHECK(projective_space_size(2, 6) == 2825);
    CHECK(projective_space_size(4, 3) == 44);
}

TEST_CASE("pair-count formulas equal exhaustive counts (q in {2,3}, n <= 5)") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 1; n <= (q == 2 ? 5u : 4u); ++n) {
            AmbientSpace space(field_from_order(q), n);
            for (uint32_t r = 0; r <= n; ++r) {
                std::vector<std::vector<uint32_t>> rows(r, std::vector<uint32_t>(n, 0));
                for (uint32_t i = 0; i < r; ++i) rows[i][i] = 1;
                Subspace center = r == 0 ? zero_subspace(space.field, n)
                                         : canonicalize(space.field, n, rows);
                DistanceProfile prof_s = brute_distance_profile(space, center, Metric::subspace);
                DistanceProfile prof_i = brute_distance_profile(space, center, Metric::injection);
                for (uint32_t s = 0; s <= n; ++s)
                    for (uint32_t d = 0; d <= n; ++d) {
                        BigCount brute_s = 0, brute_i = 0;
                        for (const auto& [key, cnt] : prof_s.histogram)
                            if (key.first == s && key.second == d) brute_s += cnt;
                        for (const auto& [key, cnt] : prof_i.histogram)
                            if (key.first == s && key.second == d) brute_i += cnt;
                        CHECK(n_subspace(q, n, r, s, d) == brute_s);
                        CHECK(n_injection(q, n, r, s, d) == brute_i);
                    }
            }
        }
}

TEST_CASE("ball volumes agree with brute-force ball sizes") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 1; n <= (q == 2 ? 5u : 4u); ++n) {
            AmbientSpace space(field_from_order(q), n);
            for (uint32_t r = 0; r <= n; ++r) {
                std::vector<std::vector<uint32_t>> rows(r, std::vector<uint32_t>(n, 0));
                for (uint32_t i = 0; i < r; ++i) rows[i][i] = 1;
                Subspace center = r == 0 ? zero_subspace(space.field, n)
                                         : canonicalize(space.field, n, rows);
                for (Metric metric : {Metric::subspace, Metric::injection}) {
                    DistanceProfile prof = brute_distance_profile(space, center, metric);
                    for (uint32_t t = 0; t <= n; ++t)
                        CHECK(ball_volume(q, n, r, t, metric) == prof.ball(t));
                }
            }
        }
    CHECK(ball_volume(2, 4, 2, 1, Metric::subspace) == 7);
}

TEST_CASE("partition identity: the radius-n ball is the whole space (formula only)") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul})
        for (uint32_t n = 1; n <= 12; ++n)
            for (uint32_t r = 0; r <= n; ++r) {
                BigCount total = 0;
                for (uint32_t s = 0; s <= n; ++s)
                    for (uint32_t d = 0; d <= n; ++d) total += n_subspace(q, n, r, s, d);
                CHECK(total == projective_space_size(q, n));
            }
}

TEST_CASE("binomial sandwich: q^{r(n-r)} <= [n r] < K_q^{-1} q^{r(n-r)}") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        Interval inv_kq = kq_interval(q).inverse();
        for (uint32_t n = 0; n <= 20; ++n)
            for (uint32_t r = 0; r <= n; ++r) {
                BigCount binom = gaussian_binomial(q, n, r);
                mpz_class lower;
                mpz_ui_pow_ui(lower.get_mpz_t(), q, (unsigned long)r * (n - r));
                CHECK(binom >= lower);
                Interval upper = inv_kq * Interval::from_mpz(lower);
                CHECK(Interval::from_mpz(binom).certainly_lt(upper));
            }
    }
}

TEST_CASE("projective-space sandwich around the middle grassmannian") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        Interval kq = kq_interval(q);
        Interval theta = theta_interval(q);
        Interval two = Interval::from_ui(2);
        for (uint32_t n = 1; n <= 20; ++n) {
            uint32_t h = n / 2;
            mpz_class mid;
            mpz_ui_pow_ui(mid.get_mpz_t(), q, (unsigned long)h * (n - h));
            BigCount size = projective_space_size(q, n);
            CHECK(size >= mid);
            Interval upper = two * kq.inverse() * theta * Interval::from_mpz(mid);
            CHECK(Interval::from_mpz(size).certainly_lt(upper));
        }
    }
}

TEST_CASE("g exponent: branch values and the documented example") {
    CHECK(g_exponent(10, 2, 3) == mpq_class(63, 4));
    // first branch: t <= (n-2r)/3
    CHECK(g_exponent(12, 1, 3) == mpq_class(3 * (12 - 1 - 3)));
    // last branch: t > (n+4r)/3
    CHECK(g_exponent(12, 1, 6) == mpq_class((6 - 1) * (12 - 6 + 1)));
    CHECK_THROWS_AS(g_exponent(10, 6, 2), OutOfRange);
}

TEST_CASE("subspace ball-volume sandwich with the g exponent (q <= 5, n <= 14)") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        Interval kq = kq_interval(q);
        Interval theta_cubed = theta_power(q, mpq_class(3));
        Interval theta_34 = theta_power(q, mpq_class(3, 4));
        // 2 theta(q^3) K_q^-2 (1 + q^{-4/3}) theta(q^{3/4})
        Interval factor = Interval::from_ui(2) * theta_cubed * (kq * kq).inverse() *
                          (Interval::from_ui(1) + pow_q(mpz_class((long)q), mpq_class(-4, 3))) *
                          theta_34;
        Interval lead = pow_q(mpz_class((long)q), mpq_class(-3, 4));
        for (uint32_t n = 1; n <= 14; ++n)
            for (uint32_t r = 0; r <= n / 2; ++r)
                for (uint32_t t = 0; t <= n / 2; ++t) {
                    Interval vol = Interval::from_mpz(ball_volume(q, n, r, t, Metric::subspace));
                    Interval qg = pow_q(mpz_class((long)q), g_exponent(n, r, t));
                    CHECK((lead * qg).certainly_le(vol));
                    CHECK(vol.certainly_le(factor * qg));
                }
    }
}

TEST_CASE("injection ball-volume sandwich (q <= 5, n <= 14, any center dimension)") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        Interval kq = kq_interval(q);
        Interval theta = theta_interval(q);
        Interval factor = theta * (Interval::from_ui(2) * theta - Interval::from_ui(1)) *
                          (kq * kq).inverse();
        for (uint32_t n = 1; n <= 14; ++n)
            for (uint32_t r = 0; r <= n; ++r)
                for (uint32_t t = 0; t <= n / 2; ++t) {
                    BigCount vol = ball_volume(q, n, r, t, Metric::injection);
                    mpz_class lower;
                    mpz_ui_pow_ui(lower.get_mpz_t(), q, (unsigned long)t * (n - t));
                    CHECK(vol >= lower);
                    Interval upper = factor * Interval::from_mpz(lower);
                    CHECK(Interval::from_mpz(vol).certainly_lt(upper));
                }
    }
}

TEST_CASE("volume symmetry: subspace-metric volume only depends on min(r, n-r)") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 1; n <= 10; ++n)
            for (uint32_t r = 0; r <= n / 2; ++r)
                for (uint32_t t = 0; t <= n; ++t)
                    CHECK(ball_volume(q, n, r, t, Metric::subspace) ==
                          ball_volume(q, n, n - r, t, Metric::subspace));
}

TEST_CASE("K_q: three independent series agree within 10^-30") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        auto euler = kq_constant(q, 40, ConstantMethod::euler_product);
        auto penta = kq_constant(q, 40, ConstantMethod::pentagonal);
        auto part = kq_constant(q, 40, ConstantMethod::partition_series);
        CHECK(euler.value.overlaps(penta.value));
        CHECK(euler.value.overlaps(part.value));
        mpq_class tol(1, 1);
        for (int i = 0; i < 30; ++i) tol /= 10;
        for (const auto* est : {&euler, &penta, &part})
            CHECK(est->value.width_d() <= mpq_class(tol).get_d());
        // pairwise midpoint gap below tolerance: enclosures of width < tol that
        // overlap pin the value to within tol of each other
        CHECK(euler.value.width_d() < 1e-30);
    }
    CHECK(kq_constant(2, 15).value.midpoint_str(15).substr(0, 17) == "0.288788095086602");
}

TEST_CASE("theta constant: documented anchor values and tail honesty") {
    auto t2 = theta_constant(2, 30);
    CHECK(t2.value.contains(mpq_class(0))== false);
    CHECK(t2.value.midpoint_str(9).substr(0, 10) == "1.56446841");
    // theta decreases toward 1 as q grows
    CHECK(theta_constant(5, 30).value.certainly_lt(t2.value));
    // enclosure honors partial sums: the k-term partial sum is a strict lower bound
    mpq_class partial = 1;
    mpq_class term(1, 2); // 2^{-1}
    partial += term;       // n=1: q^{-1}
    CHECK(t2.value.contains(partial) == false);
    CHECK(theta_power(2, mpq_class(3, 4)).midpoint_str(5).substr(0, 6) == "1.7291");
    CHECK_THROWS_AS(kq_constant(2, 500), PrecisionUnsupported);
}
