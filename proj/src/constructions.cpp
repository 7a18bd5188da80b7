#include "ssc/constructions.hpp"

#include <algorithm>

#include "ssc/covering.hpp"

namespace ssc {

namespace {

mpz_class pow_z(unsigned long q, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), q, e);
    return out;
}

std::string params(unsigned long q, uint32_t n, std::initializer_list<std::pair<const char*, uint32_t>> rest) {
    std::string out = "q=" + std::to_string(q) + " n=" + std::to_string(n);
    for (const auto& [k, v] : rest) out += std::string(" ") + k + "=" + std::to_string(v);
    return out;
}

/// All a x b matrices (a <= b) over GF(q) of an MRD code with minimum rank
/// distance d: evaluations of linearized polynomials with q-degree <= a-d
/// over GF(q^b) at the first a polynomial-basis points. Matrices returned
/// row-major as encoded field elements.
std::vector<std::vector<uint32_t>> mrd_matrices(const FieldPtr& f, uint32_t a,
                                                uint32_t b, uint32_t d,
                                                uint64_t limit) {
    if (d < 1 || d > a || a > b) throw OutOfRange("MRD shape needs 1 <= d <= a <= b");
    unsigned long q = (unsigned long)f->q();
    uint32_t K = a - d + 1; // number of polynomial coefficients
    mpz_class count = pow_z(q, (unsigned long)b * K);
    if (count > limit)
        throw EnumerationTooLarge("MRD code has " + count.get_str() +
                                  " matrices, limit " + std::to_string(limit));
    ExtField ext(f, b);
    uint64_t field_size = 1;
    for (uint32_t i = 0; i < b; ++i) field_size *= q;

    // frob[i][k] = (x^i)^(q^k), the k-th Frobenius of the i-th eval point.
    std::vector<std::vector<ExtField::Elt>> frob(a, std::vector<ExtField::Elt>(K));
    for (uint32_t i = 0; i < a; ++i) {
        ExtField::Elt point = ext.basis_element(i);
        for (uint32_t k = 0; k < K; ++k) frob[i][k] = ext.frobenius_q(point, k);
    }

    auto elt_from_index = [&](uint64_t idx) {
        ExtField::Elt e(b, 0);
        for (uint32_t j = 0; j < b; ++j) {
            e[j] = (uint32_t)(idx % q);
            idx /= q;
        }
        return e;
    };

    uint64_t total = count.get_ui();
    std::vector<std::vector<uint32_t>> out;
    out.reserve(total);
    std::vector<ExtField::Elt> coef(K);
    for (uint64_t t = 0; t < total; ++t) {
        uint64_t rem = t;
        for (uint32_t k = 0; k < K; ++k) {
            coef[k] = elt_from_index(rem % field_size);
            rem /= field_size;
        }
        std::vector<uint32_t> mat((size_t)a * b, 0);
        for (uint32_t i = 0; i < a; ++i) {
            ExtField::Elt val = ext.zero();
            for (uint32_t k = 0; k < K; ++k)
                val = ext.add(val, ext.mul(coef[k], frob[i][k]));
            for (uint32_t j = 0; j < b; ++j) mat[(size_t)i * b + j] = val[j];
        }
        out.push_back(std::move(mat));
    }
    return out;
}

std::vector<std::vector<uint32_t>> transpose_all(
    const std::vector<std::vector<uint32_t>>& mats, uint32_t a, uint32_t b) {
    std::vector<std::vector<uint32_t>> out;
    out.reserve(mats.size());
    for (const auto& m : mats) {
        std::vector<uint32_t> t((size_t)a * b);
        for (uint32_t i = 0; i < b; ++i)
            for (uint32_t j = 0; j < a; ++j)
                t[(size_t)j * b + i] = m[(size_t)i * a + j];
        out.push_back(std::move(t));
    }
    return out;
}

Subspace identity_lift_left(const FieldPtr& f, uint32_t n, uint32_t r,
                            const std::vector<uint32_t>& mat) {
    // [I_r | A] is already in reduced row echelon form.
    Subspace s;
    s.field = f;
    s.n = n;
    s.r = r;
    s.rows.assign((size_t)r * n, 0);
    uint32_t b = n - r;
    for (uint32_t i = 0; i < r; ++i) {
        s.rows[(size_t)i * n + i] = 1;
        for (uint32_t j = 0; j < b; ++j)
            s.rows[(size_t)i * n + r + j] = mat[(size_t)i * b + j];
    }
    return s;
}

Subspace identity_lift_right(const FieldPtr& f, uint32_t n, uint32_t r,
                             const std::vector<uint32_t>& mat) {
    // [A | I_r] needs a canonicalization pass.
    uint32_t b = n - r;
    std::vector<std::vector<uint32_t>> rows(r, std::vector<uint32_t>(n, 0));
    for (uint32_t i = 0; i < r; ++i) {
        for (uint32_t j = 0; j < b; ++j) rows[i][j] = mat[(size_t)i * b + j];
        rows[i][b + i] = 1;
    }
    return canonicalize(f, n, std::move(rows));
}

Subspace coordinate_subspace(const FieldPtr& f, uint32_t n, uint32_t r) {
    if (r == 0) return zero_subspace(f, n);
    std::vector<std::vector<uint32_t>> rows(r, std::vector<uint32_t>(n, 0));
    for (uint32_t i = 0; i < r; ++i) rows[i][i] = 1;
    return canonicalize(f, n, std::move(rows));
}

/// One layer of dimension r with pairwise injection distance >= dist inside
/// the layer; falls back to a single canonical codeword when the MRD shape
/// is infeasible.
void append_layer(Code& code, uint32_t r, uint32_t dist, uint64_t limit) {
    const FieldPtr& f = code.field;
    uint32_t n = code.n;
    if (r == 0) {
        code.add(zero_subspace(f, n));
        return;
    }
    if (r == n) {
        code.add(full_space(f, n));
        return;
    }
    if (dist > std::min(r, n - r)) {
        code.add(coordinate_subspace(f, n, r));
        return;
    }
    if (r <= n - r) {
        for (auto& m : mrd_matrices(f, r, n - r, dist, limit))
            code.add(identity_lift_left(f, n, r, m));
    } else {
        auto mats = transpose_all(mrd_matrices(f, n - r, r, dist, limit), r, n - r);
        for (auto& m : mats) code.add(identity_lift_right(f, n, r, m));
    }
}

} // namespace

Code trivial_covering_code(unsigned long q, uint32_t n) {
    if (n < 1) throw OutOfRange("ambient dimension must be positive");
    Code code;
    code.field = field_from_order(q);
    code.n = n;
    code.codewords.push_back(zero_subspace(code.field, n));
    code.codewords.push_back(full_space(code.field, n));
    code.meta.construction = "trivial";
    code.meta.parameters = params(q, n, {});
    code.meta.metric = Metric::subspace;
    code.meta.covering_radius = n / 2;
    return code;
}

Code kk_code(unsigned long q, uint32_t n, uint32_t r, uint32_t d, uint64_t limit) {
    if (d < 1 || d > r || r > n - r)
        throw OutOfRange("lifted MRD code needs 1 <= d <= r <= n-r");
    Code code;
    code.field = field_from_order(q);
    code.n = n;
    auto mats = mrd_matrices(code.field, r, n - r, d, limit);
    code.codewords.reserve(mats.size());
    for (auto& m : mats)
        code.codewords.push_back(identity_lift_left(code.field, n, r, m));
    code.meta.construction = "kk";
    code.meta.parameters = params(q, n, {{"r", r}, {"d", d}});
    code.meta.metric = Metric::injection;
    code.meta.min_distance = d;
    return code;
}

Code layered_packing_code(unsigned long q, uint32_t n, uint32_t d, Metric metric,
                          uint64_t limit) {
    uint32_t half = n / 2;
    if (metric == Metric::injection) {
        if (d < 2 || d > half) throw OutOfRange("need 2 <= d <= floor(n/2)");
    } else {
        if (d < 2 || d > n) throw OutOfRange("need 2 <= d <= n");
    }
    Code code;
    code.field = field_from_order(q);
    code.n = n;
    uint32_t z = half / d;
    if (metric == Metric::subspace) {
        uint32_t di = (d + 1) / 2;
        for (int64_t i = -(int64_t)z; i <= (int64_t)z; ++i)
            append_layer(code, (uint32_t)((int64_t)half - i * (int64_t)d), di, limit);
    } else {
        code.add(zero_subspace(code.field, n));
        for (int64_t i = -(int64_t)z + 1; i <= (int64_t)z - 1; ++i)
            append_layer(code, (uint32_t)((int64_t)half - i * (int64_t)d), d, limit);
        code.add(full_space(code.field, n));
    }
    code.meta.construction = "layered";
    code.meta.parameters = params(q, n, {{"d", d}});
    code.meta.metric = metric;
    code.meta.min_distance = d;
    return code;
}

Code grassmann_union_code(unsigned long q, uint32_t n, uint32_t rho, uint64_t limit) {
    UnionIndexSets sets = union_grassmannian_upper(q, n, rho);
    if (sets.total > limit)
        throw EnumerationTooLarge("union cover has " + sets.total.get_str() +
                                  " codewords, limit " + std::to_string(limit));
    Code code;
    code.field = field_from_order(q);
    code.n = n;
    AmbientSpace space(code.field, n, limit);
    std::vector<uint32_t> dims = sets.j1;
    dims.insert(dims.end(), sets.j2.begin(), sets.j2.end());
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    for (uint32_t r : dims)
        for_each_in_grassmannian(space, r,
                                 [&](const Subspace& s) { code.codewords.push_back(s); });
    code.meta.construction = "union";
    code.meta.parameters = params(q, n, {{"rho", rho}});
    code.meta.metric = Metric::subspace;
    code.meta.covering_radius = rho;
    return code;
}

namespace {

/// Greedy set cover: picks the candidate covering the most uncovered
/// targets; candidates are scanned in canonical order, so the first maximum
/// is also the smallest canonical form.
std::vector<size_t> greedy_set_cover(const std::vector<std::vector<uint32_t>>& covers,
                                     size_t num_targets) {
    std::vector<char> covered(num_targets, 0);
    size_t remaining = num_targets;
    std::vector<size_t> picked;
    while (remaining > 0) {
        size_t best = covers.size();
        size_t best_gain = 0;
        for (size_t c = 0; c < covers.size(); ++c) {
            size_t gain = 0;
            for (uint32_t t : covers[c]) gain += !covered[t];
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        if (best == covers.size())
            throw Error("greedy cover: targets unreachable");
        picked.push_back(best);
        for (uint32_t t : covers[best]) {
            if (!covered[t]) {
                covered[t] = 1;
                --remaining;
            }
        }
    }
    return picked;
}

} // namespace

Code greedy_cover(unsigned long q, uint32_t n, uint32_t rho, Metric metric,
                  uint64_t limit) {
    uint32_t half = n / 2;
    FieldPtr f = field_from_order(q);
    if (metric == Metric::subspace && rho >= half) {
        Code code = trivial_covering_code(q, n);
        code.meta.covering_radius = std::min(rho, half);
        return code;
    }
    if (metric == Metric::injection && rho >= n - half) {
        // A single subspace of dimension floor(n/2) reaches everything
        // within injection distance n - floor(n/2).
        Code code;
        code.field = f;
        code.n = n;
        code.codewords.push_back(coordinate_subspace(f, n, half));
        code.meta.construction = "greedy";
        code.meta.parameters = params(q, n, {{"rho", rho}});
        code.meta.metric = Metric::injection;
        code.meta.covering_radius = n - half;
        return code;
    }
    if (metric == Metric::injection && n % 2 == 1 && rho == half) {
        Code code;
        code.field = f;
        code.n = n;
        Subspace c = coordinate_subspace(f, n, half);
        code.add(c);
        code.add(orthogonal_complement(c));
        code.meta.construction = "greedy";
        code.meta.parameters = params(q, n, {{"rho", rho}});
        code.meta.metric = Metric::injection;
        code.meta.covering_radius = rho;
        return code;
    }
    if (rho == 0) throw OutOfRange("covering radius must be positive");

    AmbientSpace space(f, n, limit);
    Code code;
    code.field = f;
    code.n = n;
    code.meta.construction = "greedy";
    code.meta.parameters = params(q, n, {{"rho", rho}});
    code.meta.metric = metric;
    code.meta.covering_radius = rho;

    if (metric == Metric::subspace) {
        code.add(zero_subspace(f, n));
        code.add(full_space(f, n));
        for (uint32_t t = rho + 1; t <= half; ++t) {
            std::vector<Subspace> targets = enumerate_grassmannian(space, t);
            std::vector<Subspace> centers = enumerate_grassmannian(space, t - rho);
            std::vector<std::vector<uint32_t>> covers(centers.size());
            for (size_t c = 0; c < centers.size(); ++c)
                for (size_t j = 0; j < targets.size(); ++j)
                    if (intersection_dim(centers[c], targets[j]) == t - rho)
                        covers[c].push_back((uint32_t)j);
            for (size_t c : greedy_set_cover(covers, targets.size())) {
                code.add(centers[c]);
                code.add(orthogonal_complement(centers[c]));
            }
        }
        return code;
    }

    std::vector<Subspace> all = enumerate_projective_space(space);
    std::vector<std::vector<uint32_t>> covers(all.size());
    for (size_t c = 0; c < all.size(); ++c)
        for (size_t j = 0; j < all.size(); ++j)
            if (injection_distance(all[c], all[j]) <= rho)
                covers[c].push_back((uint32_t)j);
    for (size_t c : greedy_set_cover(covers, all.size())) code.add(all[c]);
    return code;
}

} // namespace ssc
