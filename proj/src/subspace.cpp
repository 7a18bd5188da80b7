#include "ssc/subspace.hpp"

#include <algorithm>

#include "ssc/qcombinatorics.hpp"

namespace ssc {

namespace {

void check_same_ambient(const Subspace& u, const Subspace& v) {
    if (u.field.get() != v.field.get() || u.n != v.n)
        throw AmbientMismatch("subspaces live in different ambient spaces");
}

// Rank of a stack of GF(2) rows packed into 64-bit masks.
uint32_t rank_gf2(std::vector<uint64_t>& rows) {
    uint32_t rank = 0;
    for (int bit = 63; bit >= 0 && rank < rows.size(); --bit) {
        uint64_t mask = 1ull << bit;
        uint32_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (uint32_t i = 0; i < rows.size(); ++i)
            if (i != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

bool gf2_packable(const Subspace& s) {
    return s.field->p() == 2 && s.field->m() == 1 && s.n <= 64;
}

uint64_t pack_row_gf2(const Subspace& s, uint32_t i) {
    uint64_t m = 0;
    for (uint32_t j = 0; j < s.n; ++j)
        if (s.at(i, j)) m |= 1ull << (63 - j);
    return m;
}

uint32_t stacked_rank(const Subspace& u, const Subspace& v) {
    if (gf2_packable(u)) {
        std::vector<uint64_t> rows;
        rows.reserve(u.r + v.r);
        for (uint32_t i = 0; i < u.r; ++i) rows.push_back(pack_row_gf2(u, i));
        for (uint32_t i = 0; i < v.r; ++i) rows.push_back(pack_row_gf2(v, i));
        return rank_gf2(rows);
    }
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(u.r + v.r);
    for (uint32_t i = 0; i < u.r; ++i)
        rows.emplace_back(u.rows.begin() + (size_t)i * u.n,
                          u.rows.begin() + (size_t)(i + 1) * u.n);
    for (uint32_t i = 0; i < v.r; ++i)
        rows.emplace_back(v.rows.begin() + (size_t)i * v.n,
                          v.rows.begin() + (size_t)(i + 1) * v.n);
    return rref_in_place(*u.field, rows);
}

} // namespace

uint32_t rref_in_place(const FieldSpec& f, std::vector<std::vector<uint32_t>>& rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    uint32_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        uint32_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        uint32_t inv = f.inv(rows[rank][col]);
        if (inv != 1)
            for (size_t j = col; j < ncols; ++j)
                rows[rank][j] = f.mul(rows[rank][j], inv);
        for (uint32_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            uint32_t c = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

Subspace canonicalize(const FieldPtr& field, uint32_t n,
                      std::vector<std::vector<uint32_t>> rows) {
    for (const auto& row : rows)
        if (row.size() != n) throw RaggedMatrix("row length differs from n");
    uint32_t rank = rref_in_place(*field, rows);
    Subspace s;
    s.field = field;
    s.n = n;
    s.r = rank;
    s.rows.reserve((size_t)rank * n);
    for (uint32_t i = 0; i < rank; ++i)
        s.rows.insert(s.rows.end(), rows[i].begin(), rows[i].end());
    return s;
}

Subspace zero_subspace(const FieldPtr& field, uint32_t n) {
    Subspace s;
    s.field = field;
    s.n = n;
    s.r = 0;
    return s;
}

Subspace full_space(const FieldPtr& field, uint32_t n) {
    Subspace s;
    s.field = field;
    s.n = n;
    s.r = n;
    s.rows.assign((size_t)n * n, 0);
    for (uint32_t i = 0; i < n; ++i) s.rows[(size_t)i * n + i] = 1;
    return s;
}

std::vector<uint32_t> Subspace::pivot_columns() const {
    std::vector<uint32_t> pivots;
    pivots.reserve(r);
    for (uint32_t i = 0; i < r; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if (at(i, j) != 0) { pivots.push_back(j); break; }
    return pivots;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.r != b.r) return a.r < b.r;
    auto pa = a.pivot_columns(), pb = b.pivot_columns();
    if (pa != pb) return pa < pb;
    return a.rows < b.rows;
}

size_t SubspaceHash::operator()(const Subspace& s) const {
    size_t h = std::hash<uint32_t>()(s.n) * 31 + s.r;
    for (uint32_t v : s.rows) h = h * 1099511628211ull + v;
    return h;
}

uint32_t intersection_dim(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    return u.r + v.r - stacked_rank(u, v);
}

uint32_t subspace_distance(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    uint32_t sum_dim = stacked_rank(u, v);
    return 2 * sum_dim - u.r - v.r;
}

uint32_t injection_distance(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    uint32_t sum_dim = stacked_rank(u, v);
    return sum_dim - std::min(u.r, v.r);
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    check_same_ambient(u, v);
    // Zassenhaus: reduce [U|U; V|0]; rows with zero left half span U ∩ V
    // on the right half.
    const FieldSpec& f = *u.field;
    uint32_t n = u.n;
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(u.r + v.r);
    for (uint32_t i = 0; i < u.r; ++i) {
        std::vector<uint32_t> row(2 * n, 0);
        for (uint32_t j = 0; j < n; ++j) row[j] = row[n + j] = u.at(i, j);
        rows.push_back(std::move(row));
    }
    for (uint32_t i = 0; i < v.r; ++i) {
        std::vector<uint32_t> row(2 * n, 0);
        for (uint32_t j = 0; j < n; ++j) row[j] = v.at(i, j);
        rows.push_back(std::move(row));
    }
    uint32_t rank = rref_in_place(f, rows);
    std::vector<std::vector<uint32_t>> inter;
    for (uint32_t i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (uint32_t j = 0; j < n; ++j)
            if (rows[i][j] != 0) { left_zero = false; break; }
        if (left_zero)
            inter.emplace_back(rows[i].begin() + n, rows[i].end());
    }
    return canonicalize(u.field, n, std::move(inter));
}

Subspace orthogonal_complement(const Subspace& u) {
    const FieldSpec& f = *u.field;
    uint32_t n = u.n;
    // Basis is already RREF; read the null space off the pivot structure.
    auto pivots = u.pivot_columns();
    std::vector<bool> is_pivot(n, false);
    for (uint32_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<uint32_t>> null_rows;
    for (uint32_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<uint32_t> x(n, 0);
        x[j] = 1;
        for (uint32_t i = 0; i < u.r; ++i)
            x[pivots[i]] = f.neg(u.at(i, j));
        null_rows.push_back(std::move(x));
    }
    return canonicalize(u.field, n, std::move(null_rows));
}

Subspace puncture(const Subspace& v, const Subspace& w) {
    check_same_ambient(v, w);
    if (w.r != v.n - 1)
        throw WrongHyperplaneDimension("W must have dimension n-1");
    uint32_t n = v.n;
    if (v.r == 0) return zero_subspace(v.field, n - 1);
    Subspace inter = intersection(v, w);
    uint32_t keep = v.r - 1; // dim(V ∩ W) is r-1 or r
    auto wpivots = w.pivot_columns();
    std::vector<std::vector<uint32_t>> mapped;
    for (uint32_t i = 0; i < keep; ++i) {
        std::vector<uint32_t> y(n - 1);
        for (uint32_t j = 0; j + 1 < n; ++j) y[j] = inter.at(i, wpivots[j]);
        mapped.push_back(std::move(y));
    }
    return canonicalize(v.field, n - 1, std::move(mapped));
}

AmbientSpace::AmbientSpace(FieldPtr f, uint32_t n_, uint64_t limit)
    : field(std::move(f)), n(n_), enum_limit(limit) {
    if (n < 1 || n > 24)
        throw OutOfRange("ambient dimension must be in [1, 24] for enumeration");
}

void for_each_in_grassmannian(const AmbientSpace& space, uint32_t r,
                              const std::function<void(const Subspace&)>& fn) {
    uint32_t n = space.n;
    if (r > n) throw OutOfRange("subspace dimension exceeds ambient dimension");
    mpz_class count = gaussian_binomial(space.field->q(), n, r);
    if (count > space.enum_limit)
        throw EnumerationTooLarge("Grassmannian has " + count.get_str() +
                                  " elements, limit " +
                                  std::to_string(space.enum_limit));
    if (r == 0) {
        fn(zero_subspace(space.field, n));
        return;
    }
    uint64_t q = space.field->q();
    // Pivot-column sets in lexicographic order.
    std::vector<uint32_t> piv(r);
    for (uint32_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (uint32_t p : piv) is_pivot[p] = true;
        // Free positions, row-major.
        std::vector<std::pair<uint32_t, uint32_t>> free_pos;
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t j = piv[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        Subspace s;
        s.field = space.field;
        s.n = n;
        s.r = r;
        s.rows.assign((size_t)r * n, 0);
        for (uint32_t i = 0; i < r; ++i) s.rows[(size_t)i * n + piv[i]] = 1;

        std::vector<uint32_t> vals(free_pos.size(), 0);
        while (true) {
            for (size_t k = 0; k < free_pos.size(); ++k)
                s.rows[(size_t)free_pos[k].first * n + free_pos[k].second] = vals[k];
            fn(s);
            // Count up in base q, last position least significant.
            size_t k = free_pos.size();
            while (k > 0) {
                --k;
                if (++vals[k] < q) break;
                vals[k] = 0;
                if (k == 0) { k = free_pos.size() + 1; break; }
            }
            if (free_pos.empty() || k > free_pos.size()) break;
        }

        // Next pivot combination.
        int i = (int)r - 1;
        while (i >= 0 && piv[i] == n - r + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (uint32_t j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Subspace> enumerate_grassmannian(const AmbientSpace& space, uint32_t r) {
    std::vector<Subspace> out;
    for_each_in_grassmannian(space, r, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

std::vector<Subspace> enumerate_projective_space(const AmbientSpace& space) {
    mpz_class count = projective_space_size(space.field->q(), space.n);
    if (count > space.enum_limit)
        throw EnumerationTooLarge("projective space has " + count.get_str() +
                                  " elements, limit " +
                                  std::to_string(space.enum_limit));
    std::vector<Subspace> out;
    for (uint32_t r = 0; r <= space.n; ++r)
        for_each_in_grassmannian(space, r, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

} // namespace ssc
