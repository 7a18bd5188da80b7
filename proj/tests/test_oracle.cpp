#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/constructions.hpp"
#include "ssc/oracle.hpp"
#include "ssc/packing.hpp"

using namespace ssc;

TEST_CASE("distance profile around a center sums to the whole space") {
    AmbientSpace space(field_from_order(2), 4);
    Subspace center = canonicalize(space.field, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    for (Metric metric : {Metric::subspace, Metric::injection}) {
        DistanceProfile prof = brute_distance_profile(space, center, metric);
        CHECK(prof.ball(4) == projective_space_size(2, 4));
        CHECK(prof.at(center.r, 0) == 1);
    }
    DistanceProfile prof = brute_distance_profile(space, center, Metric::subspace);
    CHECK(prof.at(2, 2) == 18);
    CHECK(prof.ball(1) == ball_volume(2, 4, 2, 1, Metric::subspace));
}

TEST_CASE("covering radius and min distance: edge cases and anchors") {
    Code empty;
    empty.field = field_from_order(2);
    empty.n = 4;
    CHECK_THROWS_AS(brute_covering_radius(empty, Metric::subspace), EmptyCode);
    CHECK_THROWS_AS(brute_min_distance(empty, Metric::subspace), EmptyOrSingleton);

    Code whole;
    whole.field = field_from_order(2);
    whole.n = 4;
    whole.add(full_space(whole.field, 4));
    // a single full-space codeword: farthest point is {0}
    CHECK(brute_covering_radius(whole, Metric::subspace) == 4);
    CHECK(brute_covering_radius(whole, Metric::injection) == 4);

    // single half-dimension codeword: injection radius n - floor(n/2)
    for (uint32_t n = 4; n <= 6; ++n) {
        Code half;
        half.field = field_from_order(2);
        half.n = n;
        std::vector<std::vector<uint32_t>> rows(n / 2, std::vector<uint32_t>(n, 0));
        for (uint32_t i = 0; i < n / 2; ++i) rows[i][i] = 1;
        half.add(canonicalize(half.field, n, rows));
        CHECK(brute_covering_radius(half, Metric::injection) == n - n / 2);
    }
}

TEST_CASE("a complementary pair at q=2, n=5 has injection radius 2") {
    FieldPtr f = field_from_order(2);
    Subspace c = canonicalize(f, 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
    Code pair;
    pair.field = f;
    pair.n = 5;
    pair.add(c);
    pair.add(orthogonal_complement(c));
    CHECK(brute_covering_radius(pair, Metric::injection) == 2);
}

TEST_CASE("exact maximum packings at tiny scale") {
    CHECK(brute_max_packing(2, 3, 3, Metric::subspace) == 2);
    CHECK(brute_max_packing(2, 4, 3, Metric::injection) == 2);
    CHECK(brute_max_packing(2, 4, 1, Metric::injection) == 67);
    CHECK(brute_max_packing(2, 4, 1, Metric::subspace) == 67);
    // the oracle result sits inside the formula interval
    for (uint32_t n = 2; n <= 4; ++n)
        for (uint32_t d = 2; d <= n; ++d)
            for (Metric metric : {Metric::subspace, Metric::injection}) {
                BigCount exact = brute_max_packing(2, n, d, metric);
                BoundInterval b = metric == Metric::subspace
                                      ? subspace_packing_bounds(2, n, d)
                                      : injection_packing_bounds(2, n, d);
                CHECK(b.lower <= exact);
                CHECK(exact <= b.upper);
            }
}

TEST_CASE("covering-radius oracle validates every covering construction's claim") {
    for (unsigned long q : {2ul, 3ul}) {
        uint32_t max_n = q == 2 ? 6 : 4;
        for (uint32_t n = 4; n <= max_n; ++n) {
            Code trivial = trivial_covering_code(q, n);
            CHECK(brute_covering_radius(trivial, Metric::subspace) ==
                  *trivial.meta.covering_radius);
            for (uint32_t rho = 1; rho < n / 2; ++rho) {
                Code u = grassmann_union_code(q, n, rho);
                CHECK(brute_covering_radius(u, Metric::subspace) <=
                      *u.meta.covering_radius);
                for (Metric metric : {Metric::subspace, Metric::injection}) {
                    Code g = greedy_cover(q, n, rho, metric);
                    CHECK(brute_covering_radius(g, metric) <= *g.meta.covering_radius);
                }
            }
        }
    }
}
