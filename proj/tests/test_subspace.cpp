#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ssc/qcombinatorics.hpp"
#include "ssc/subspace.hpp"

using namespace ssc;

namespace {

std::vector<Subspace> all_of(unsigned long q, uint32_t n) {
    AmbientSpace space(field_from_order(q), n);
    return enumerate_projective_space(space);
}

} // namespace

TEST_CASE("canonical form is invariant under row operations (all of E(2,4))") {
    FieldPtr f = field_from_order(2);
    std::mt19937 rng(7);
    uint64_t violations = 0;
    for (const Subspace& s : all_of(2, 4)) {
        if (s.r == 0) continue;
        for (int trial = 0; trial < 8; ++trial) {
            // random invertible row mixing: shuffle, then add random multiples
            std::vector<std::vector<uint32_t>> rows(s.r, std::vector<uint32_t>(s.n));
            for (uint32_t i = 0; i < s.r; ++i)
                for (uint32_t j = 0; j < s.n; ++j) rows[i][j] = s.at(i, j);
            std::shuffle(rows.begin(), rows.end(), rng);
            for (uint32_t i = 0; i < s.r; ++i)
                for (uint32_t k = 0; k < s.r; ++k)
                    if (k != i && rng() % 2)
                        for (uint32_t j = 0; j < s.n; ++j)
                            rows[i][j] = f->add(rows[i][j], rows[k][j]);
            if (canonicalize(f, s.n, rows) != s) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("both distances satisfy the metric axioms on all triples of E(2,3)") {
    std::vector<Subspace> all = all_of(2, 3);
    uint64_t violations = 0;
    for (const auto& u : all)
        for (const auto& v : all) {
            uint32_t ds = subspace_distance(u, v);
            uint32_t di = injection_distance(u, v);
            if (ds != subspace_distance(v, u)) ++violations;
            if (di != injection_distance(v, u)) ++violations;
            if ((ds == 0) != (u == v)) ++violations;
            if ((di == 0) != (u == v)) ++violations;
            for (const auto& w : all) {
                if (ds > subspace_distance(u, w) + subspace_distance(w, v)) ++violations;
                if (di > injection_distance(u, w) + injection_distance(w, v)) ++violations;
            }
        }
    CHECK(violations == 0);
}

TEST_CASE("distance sandwich d_S/2 <= d_I <= d_S with the equality conditions") {
    std::vector<Subspace> all = all_of(2, 4);
    uint64_t violations = 0;
    for (const auto& u : all)
        for (const auto& v : all) {
            uint32_t ds = subspace_distance(u, v);
            uint32_t di = injection_distance(u, v);
            if (2 * di < ds || di > ds) ++violations;
            // d_I = (d_S + |dim U - dim V|) / 2 exactly, so:
            //   d_I = d_S/2  iff  dim U = dim V
            //   d_I = d_S    iff  one contains the other
            uint32_t gap = u.r > v.r ? u.r - v.r : v.r - u.r;
            if (2 * di != ds + gap) ++violations;
            bool nested = intersection_dim(u, v) == std::min(u.r, v.r);
            if ((di == ds) != (nested || ds == 0)) ++violations;
        }
    CHECK(violations == 0);
}

TEST_CASE("strengthened triangle bound: d_I never exceeds the larger dimension") {
    std::vector<Subspace> all = all_of(2, 4);
    uint64_t violations = 0;
    for (const auto& u : all)
        for (const auto& v : all)
            if (injection_distance(u, v) > std::max(u.r, v.r)) ++violations;
    CHECK(violations == 0);
}

TEST_CASE("grassmannian enumeration counts match the gaussian binomial") {
    for (unsigned long q : {2ul, 3ul})
        for (uint32_t n = 1; n <= 5; ++n) {
            AmbientSpace space(field_from_order(q), n);
            BigCount total = 0;
            for (uint32_t r = 0; r <= n; ++r) {
                auto g = enumerate_grassmannian(space, r);
                CHECK(BigCount((unsigned long)g.size()) == gaussian_binomial(q, n, r));
                // stream yields distinct canonical subspaces
                for (const auto& s : g) CHECK(s.r == r);
                total += (unsigned long)g.size();
            }
            CHECK(total == projective_space_size(q, n));
        }
}

TEST_CASE("orthogonal complement is a dimension-complementary involution on E(2,4)") {
    std::vector<Subspace> all = all_of(2, 4);
    uint64_t violations = 0;
    for (const auto& u : all) {
        Subspace c = orthogonal_complement(u);
        if (c.r != u.n - u.r) ++violations;
        if (orthogonal_complement(c) != u) ++violations;
    }
    // d_I is invariant under complementation
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto& u = all[rng() % all.size()];
        const auto& v = all[rng() % all.size()];
        if (injection_distance(u, v) !=
            injection_distance(orthogonal_complement(u), orthogonal_complement(v)))
            ++violations;
        if (subspace_distance(u, v) !=
            subspace_distance(orthogonal_complement(u), orthogonal_complement(v)))
            ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("intersection agrees with the distance definitions") {
    std::vector<Subspace> all = all_of(2, 4);
    std::mt19937 rng(13);
    uint64_t violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto& u = all[rng() % all.size()];
        const auto& v = all[rng() % all.size()];
        Subspace w = intersection(u, v);
        if (w.r != intersection_dim(u, v)) ++violations;
        if (subspace_distance(u, v) != u.r + v.r - 2 * w.r) ++violations;
        if (injection_distance(u, v) != std::max(u.r, v.r) - w.r) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("puncturing drops injection distance by at most one (1000 random pairs)") {
    FieldPtr f = field_from_order(2);
    AmbientSpace space(f, 6);
    std::vector<Subspace> all = enumerate_projective_space(space);
    std::vector<Subspace> hyperplanes = enumerate_grassmannian(space, 5);
    std::mt19937 rng(17);
    uint64_t violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& u = all[rng() % all.size()];
        const auto& v = all[rng() % all.size()];
        const auto& w = hyperplanes[rng() % hyperplanes.size()];
        Subspace pu = puncture(u, w);
        Subspace pv = puncture(v, w);
        if (pu.n != 5 || pv.n != 5) ++violations;
        if (u.r > 0 && pu.r != u.r - 1) ++violations;
        if (u.r == 0 && pu.r != 0) ++violations;
        if (injection_distance(pu, pv) + 1 < injection_distance(u, v)) ++violations;
    }
    CHECK(violations == 0);
    // {0} maps to {0}; a subspace inside W keeps its leading RREF rows
    Subspace zero = zero_subspace(f, 6);
    CHECK(puncture(zero, hyperplanes[0]).r == 0);
    CHECK_THROWS_AS(puncture(all[3], all[3]), WrongHyperplaneDimension);
}

TEST_CASE("enumeration refuses spaces beyond the configured limit") {
    AmbientSpace space(field_from_order(2), 12, 1000);
    CHECK_THROWS_AS(enumerate_grassmannian(space, 6), EnumerationTooLarge);
}
