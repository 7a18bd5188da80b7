#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssc/constructions.hpp"
#include "ssc/covering.hpp"
#include "ssc/oracle.hpp"
#include "ssc/packing.hpp"

using namespace ssc;

namespace {

mpz_class pow_z(unsigned long q, unsigned long e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), q, e);
    return v;
}

} // namespace

TEST_CASE("lifted MRD cardinality is exactly q^{(n-r)(r-d+1)}") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 2; n <= 8; ++n)
            for (uint32_t r = 1; 2 * r <= n; ++r)
                for (uint32_t d = 1; d <= r; ++d) {
                    mpz_class expected = pow_z(q, (unsigned long)(n - r) * (r - d + 1));
                    if (expected > 200000) continue;
                    Code code = kk_code(q, n, r, d);
                    CHECK(BigCount((unsigned long)code.size()) == expected);
                    for (const auto& c : code.codewords) CHECK(c.r == r);
                }
}

TEST_CASE("lifted codewords keep the identity block in canonical form") {
    Code code = kk_code(2, 6, 3, 2);
    for (const auto& c : code.codewords) {
        for (uint32_t i = 0; i < 3; ++i)
            for (uint32_t j = 0; j < 3; ++j)
                CHECK(c.at(i, j) == (i == j ? 1u : 0u));
    }
}

TEST_CASE("lifted MRD minimum injection distance matches the claim (oracle)") {
    for (uint32_t d : {1u, 2u, 3u}) {
        Code code = kk_code(2, 6, 3, d);
        CHECK(code.size() == (size_t)1 << (3 * (4 - d)));
        CHECK(*code.meta.min_distance == d);
        CHECK(brute_min_distance(code, Metric::injection) == d);
    }
    Code c3 = kk_code(3, 4, 2, 2);
    CHECK(brute_min_distance(c3, Metric::injection) == 2);
}

TEST_CASE("layered packing codes meet their claimed minimum distance (oracle)") {
    for (uint32_t d = 2; d <= 6; ++d) {
        Code code = layered_packing_code(2, 6, d, Metric::subspace);
        CHECK(*code.meta.min_distance == d);
        if (code.size() >= 2)
            CHECK(brute_min_distance(code, Metric::subspace) >= d);
    }
    for (uint32_t d = 2; d <= 3; ++d) {
        Code code = layered_packing_code(2, 6, d, Metric::injection);
        CHECK(*code.meta.min_distance == d);
        if (code.size() >= 2)
            CHECK(brute_min_distance(code, Metric::injection) >= d);
    }
    Code c3 = layered_packing_code(3, 4, 2, Metric::subspace);
    if (c3.size() >= 2)
        CHECK(brute_min_distance(c3, Metric::subspace) >= 2);
}

TEST_CASE("layered sizes feed the packing lower bounds") {
    // the mixed-dimension lower bound is the max of the layered construction
    // and alternatives, so the construction can never exceed it
    Code code = layered_packing_code(2, 6, 3, Metric::subspace);
    CHECK(BigCount((unsigned long)code.size()) <= subspace_packing_bounds(2, 6, 3).lower);
    CHECK(code.size() == 66);
    Code icode = layered_packing_code(2, 6, 3, Metric::injection);
    CHECK(icode.size() == 10);
}

TEST_CASE("union-of-grassmannians cover: size identity and oracle radius") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 4; n <= (q == 2 ? 6u : 4u); ++n)
            for (uint32_t rho = 1; rho < n / 2; ++rho) {
                Code code = grassmann_union_code(q, n, rho);
                CHECK(BigCount((unsigned long)code.size()) ==
                      union_grassmannian_upper(q, n, rho).total);
                CHECK(*code.meta.covering_radius == rho);
                CHECK(brute_covering_radius(code, Metric::subspace) <= rho);
            }
}

TEST_CASE("greedy covers achieve their claimed radius (oracle)") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 4; n <= (q == 2 ? 6u : 4u); ++n)
            for (uint32_t rho = 1; rho <= n / 2; ++rho)
                for (Metric metric : {Metric::subspace, Metric::injection}) {
                    Code code = greedy_cover(q, n, rho, metric);
                    CHECK(*code.meta.covering_radius == rho);
                    CHECK(brute_covering_radius(code, metric) <= rho);
                }
}

TEST_CASE("greedy covers are deterministic") {
    Code a = greedy_cover(2, 6, 2, Metric::injection);
    Code b = greedy_cover(2, 6, 2, Metric::injection);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a.codewords[i] == b.codewords[i]);
    CHECK(a.size() == 5);
}

TEST_CASE("trivial cover: exact subspace covering radius floor(n/2)") {
    for (uint32_t n = 4; n <= 6; ++n) {
        Code code = trivial_covering_code(2, n);
        CHECK(code.size() == 2);
        CHECK(brute_covering_radius(code, Metric::subspace) == n / 2);
    }
}

TEST_CASE("construction parameter errors") {
    CHECK_THROWS_AS(kk_code(2, 6, 4, 2), OutOfRange);  // r > n - r
    CHECK_THROWS_AS(kk_code(2, 6, 2, 3), OutOfRange);  // d > r
    CHECK_THROWS_AS(kk_code(2, 20, 10, 1, 1000), EnumerationTooLarge);
    CHECK_THROWS_AS(layered_packing_code(2, 6, 1, Metric::subspace), OutOfRange);
    CHECK_THROWS_AS(layered_packing_code(2, 6, 4, Metric::injection), OutOfRange);
}
