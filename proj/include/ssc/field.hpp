#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

/// Exact arithmetic in GF(p^m). Elements are encoded as integers in [0, q):
/// the base-p digits of the value (low-to-high) are the coefficients of the
/// polynomial-basis representation. FieldSpec instances are immutable and
/// shared; elements carry the field identity.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    /// Builds GF(p^m) with the deterministically chosen modulus: the
    /// lexicographically smallest monic irreducible of degree m over GF(p)
    /// (constant coefficient varies fastest).
    static std::shared_ptr<const FieldSpec> make(uint32_t p, uint32_t m);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }
    /// Monic modulus, coefficients low-to-high, size m+1 (top coefficient 1).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    /// a^e for e >= 0.
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// Frobenius power a^(p^i).
    uint32_t frobenius(uint32_t a, uint32_t i) const;

    /// Base-p digits of the value, low-to-high (length m).
    std::vector<uint32_t> coeffs(uint32_t a) const;
    uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

    /// Serialization: base-p digit string, low-to-high ("11" = x+1 in GF(4)).
    std::string to_string(uint32_t a) const;
    uint32_t from_string(const std::string& s) const;

    bool same(const FieldSpec& other) const { return this == &other; }

private:
    FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    uint32_t p_, m_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    // Fast paths for small fields.
    std::vector<uint32_t> mul_table_; // q*q entries when q <= kTableLimit
    std::vector<uint32_t> inv_table_; // q entries when q <= kTableLimit
    static constexpr uint64_t kTableLimit = 1024;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Factors a prime power q = p^m and returns GF(q); throws NotPrime when q
/// is not a prime power.
FieldPtr field_from_order(uint64_t q);

/// A field element bound to its field; cross-field use is a hard error.
struct FieldElement {
    FieldPtr field;
    uint32_t value = 0;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field.get() == b.field.get() && a.value == b.value;
    }
};

enum class ArithKind { add, mul, inv, frobenius };

/// Uniform entry point for the four element operations. For `inv` and
/// `frobenius`, b is ignored; `frob_power` is the i of a^(p^i).
FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         ArithKind kind, uint32_t frob_power = 1);

/// GF(q^e) built as polynomials over an arbitrary FieldSpec, for the
/// linearized-polynomial evaluation behind lifted MRD codes. Elements are
/// coefficient vectors over the base field, low-to-high, length e.
class ExtField {
public:
    ExtField(FieldPtr base, uint32_t extension_degree);

    using Elt = std::vector<uint32_t>;

    const FieldPtr& base() const { return base_; }
    uint32_t degree() const { return e_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Elt zero() const { return Elt(e_, 0); }
    Elt one() const;
    /// Polynomial-basis element x^k, k < e.
    Elt basis_element(uint32_t k) const;

    Elt add(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt scalar_mul(uint32_t c, const Elt& a) const;
    /// a^(q^i), the Frobenius of the base field size applied i times.
    Elt frobenius_q(const Elt& a, uint32_t i) const;

    bool is_zero(const Elt& a) const;

private:
    Elt pow_u64(const Elt& a, uint64_t e) const;

    FieldPtr base_;
    uint32_t e_;
    std::vector<uint32_t> modulus_; // monic, coeffs low-to-high, size e_+1
};

} // namespace ssc
