#include "ssc/oracle.hpp"

#include <algorithm>

namespace ssc {

BigCount DistanceProfile::at(uint32_t s, uint32_t d) const {
    auto it = histogram.find({s, d});
    return it == histogram.end() ? BigCount(0) : it->second;
}

BigCount DistanceProfile::ball(uint32_t t) const {
    BigCount total = 0;
    for (const auto& [key, count] : histogram)
        if (key.second <= t) total += count;
    return total;
}

DistanceProfile brute_distance_profile(const AmbientSpace& space,
                                       const Subspace& center, Metric metric) {
    if (center.field.get() != space.field.get() || center.n != space.n)
        throw AmbientMismatch("profile center outside the ambient space");
    DistanceProfile profile;
    profile.center = center;
    profile.metric = metric;
    for (uint32_t s = 0; s <= space.n; ++s) {
        for_each_in_grassmannian(space, s, [&](const Subspace& v) {
            uint32_t d = metric == Metric::subspace ? subspace_distance(center, v)
                                                    : injection_distance(center, v);
            profile.histogram[{s, d}] += 1;
        });
    }
    return profile;
}

uint32_t brute_covering_radius(const Code& code, Metric metric, uint64_t enum_limit) {
    if (code.codewords.empty()) throw EmptyCode("covering radius of an empty code");
    AmbientSpace space(code.field, code.n, enum_limit);
    uint32_t radius = 0;
    for (uint32_t s = 0; s <= code.n; ++s) {
        for_each_in_grassmannian(space, s, [&](const Subspace& v) {
            uint32_t best = UINT32_MAX;
            for (const auto& c : code.codewords) {
                uint32_t d = metric == Metric::subspace ? subspace_distance(c, v)
                                                        : injection_distance(c, v);
                best = std::min(best, d);
                if (best == 0) break;
            }
            radius = std::max(radius, best);
        });
    }
    return radius;
}

uint32_t brute_min_distance(const Code& code, Metric metric) {
    if (code.codewords.size() < 2)
        throw EmptyOrSingleton("minimum distance needs at least two codewords");
    uint32_t best = UINT32_MAX;
    for (size_t i = 0; i < code.codewords.size(); ++i)
        for (size_t j = i + 1; j < code.codewords.size(); ++j) {
            uint32_t d = metric == Metric::subspace
                             ? subspace_distance(code.codewords[i], code.codewords[j])
                             : injection_distance(code.codewords[i], code.codewords[j]);
            best = std::min(best, d);
        }
    return best;
}

namespace {

// Max clique on the "distance >= d" graph, vertices in canonical order.
// Plain branch-and-bound: extend the current clique with candidates that
// remain pairwise compatible, prune when even taking all candidates cannot
// beat the incumbent.
struct CliqueSearch {
    const std::vector<std::vector<char>>& adj;
    size_t best = 0;

    void grow(std::vector<size_t>& clique, const std::vector<size_t>& cands) {
        if (clique.size() > best) best = clique.size();
        if (clique.size() + cands.size() <= best) return;
        for (size_t idx = 0; idx < cands.size(); ++idx) {
            if (clique.size() + (cands.size() - idx) <= best) return;
            size_t v = cands[idx];
            std::vector<size_t> next;
            for (size_t j = idx + 1; j < cands.size(); ++j)
                if (adj[v][cands[j]]) next.push_back(cands[j]);
            clique.push_back(v);
            grow(clique, next);
            clique.pop_back();
        }
    }
};

} // namespace

BigCount brute_max_packing(unsigned long q, uint32_t n, uint32_t d, Metric metric) {
    FieldPtr f = field_from_order(q);
    BigCount size = projective_space_size(q, n);
    if (size > 100)
        throw EnumerationTooLarge("exact packing limited to |E(q,n)| <= 100");
    AmbientSpace space(f, n);
    std::vector<Subspace> all = enumerate_projective_space(space);
    size_t m = all.size();
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            uint32_t dist = metric == Metric::subspace
                                ? subspace_distance(all[i], all[j])
                                : injection_distance(all[i], all[j]);
            adj[i][j] = adj[j][i] = dist >= d;
        }
    CliqueSearch search{adj};
    std::vector<size_t> clique;
    std::vector<size_t> cands(m);
    for (size_t i = 0; i < m; ++i) cands[i] = i;
    search.grow(clique, cands);
    return BigCount((unsigned long)search.best);
}

} // namespace ssc
