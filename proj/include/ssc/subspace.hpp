#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ssc/field.hpp"

namespace ssc {

/// A point of the projective space E(q,n): a subspace of GF(q)^n held in its
/// unique reduced-row-echelon canonical form. Equality, ordering and hashing
/// are all on the canonical matrix, so two Subspaces compare equal iff they
/// are the same subspace.
struct Subspace {
    FieldPtr field;
    uint32_t n = 0;
    uint32_t r = 0;
    std::vector<uint32_t> rows; // r*n encoded elements, row-major, RREF

    uint32_t at(uint32_t i, uint32_t j) const { return rows[(size_t)i * n + j]; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field.get() == b.field.get() && a.n == b.n && a.r == b.r &&
               a.rows == b.rows;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    /// Total order: dimension, then pivot-column set, then entries; used for
    /// deterministic tie-breaking downstream.
    friend bool operator<(const Subspace& a, const Subspace& b);

    std::vector<uint32_t> pivot_columns() const;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const;
};

/// RREF of an arbitrary matrix (rows of encoded elements); returns the
/// reduced matrix in place and the rank.
uint32_t rref_in_place(const FieldSpec& f, std::vector<std::vector<uint32_t>>& rows);

/// Canonical subspace spanned by the given rows (each of length n).
Subspace canonicalize(const FieldPtr& field, uint32_t n,
                      std::vector<std::vector<uint32_t>> rows);

/// The zero subspace {0} of GF(q)^n.
Subspace zero_subspace(const FieldPtr& field, uint32_t n);
/// The full space GF(q)^n.
Subspace full_space(const FieldPtr& field, uint32_t n);

uint32_t intersection_dim(const Subspace& u, const Subspace& v);
/// d_S(U,V) = dim(U+V) - dim(U∩V).
uint32_t subspace_distance(const Subspace& u, const Subspace& v);
/// d_I(U,V) = max(dim U, dim V) - dim(U∩V).
uint32_t injection_distance(const Subspace& u, const Subspace& v);

/// Basis of U ∩ V (canonical form).
Subspace intersection(const Subspace& u, const Subspace& v);
/// Null space of U's basis under the standard dot product.
Subspace orthogonal_complement(const Subspace& u);

/// Puncturing map H_W: E(q,n) -> E(q,n-1) for a hyperplane W (dim n-1).
/// Takes the first r-1 rows of RREF(V ∩ W) and re-coordinatizes them with
/// respect to W's RREF basis. {0} maps to {0}.
Subspace puncture(const Subspace& v, const Subspace& w);

struct AmbientSpace {
    FieldPtr field;
    uint32_t n = 0;
    uint64_t enum_limit = 100000000; // refuse enumerations beyond this count

    AmbientSpace(FieldPtr f, uint32_t n_, uint64_t limit = 100000000);
};

/// Streams each r-dimensional subspace exactly once, in lexicographic order
/// of (pivot-column set, free-entry values counting up in base q).
void for_each_in_grassmannian(const AmbientSpace& space, uint32_t r,
                              const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_grassmannian(const AmbientSpace& space, uint32_t r);
/// All of E(q,n), dimension 0 upward.
std::vector<Subspace> enumerate_projective_space(const AmbientSpace& space);

} // namespace ssc
