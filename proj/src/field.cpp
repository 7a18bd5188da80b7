#include "ssc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ssc {
namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p), coefficients low-to-high, trailing zeros trimmed.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& b, uint32_t p) {
    // b monic-normalizable, nonzero
    uint32_t lead = b.back();
    uint32_t lead_inv = 1;
    for (uint32_t x = 1; x < p; ++x)
        if (x * lead % p == 1) { lead_inv = x; break; }
    while (a.size() >= b.size()) {
        uint32_t c = (uint64_t)a.back() * lead_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t v = (a[shift + i] + (uint64_t)p * p - (uint64_t)c * b[i]) % p;
            a[shift + i] = (uint32_t)v;
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

bool divides(const PPoly& d, const PPoly& f, uint32_t p) {
    PPoly r = pmod(f, d, p);
    return r.empty();
}

// Exhaustive trial division by every monic polynomial of degree 1..m/2.
bool irreducible_over_prime(const PPoly& f, uint32_t m, uint32_t p) {
    for (uint32_t deg = 1; 2 * deg <= m; ++deg) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < deg; ++i) count *= p;
        for (uint64_t k = 0; k < count; ++k) {
            PPoly d(deg + 1, 0);
            uint64_t t = k;
            for (uint32_t i = 0; i < deg; ++i) { d[i] = (uint32_t)(t % p); t /= p; }
            d[deg] = 1;
            if (divides(d, f, p)) return false;
        }
    }
    return true;
}

} // namespace

std::shared_ptr<const FieldSpec> FieldSpec::make(uint32_t p, uint32_t m) {
    // One shared instance per (p,m): the modulus choice is deterministic,
    // and pointer identity then coincides with field equality everywhere
    // (element tags, subspace comparisons, code-file round trips).
    static std::mutex cache_mutex;
    static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const FieldSpec>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({p, m});
        if (it != cache.end()) return it->second;
    }
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw DegreeZero("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1ull << 20)) throw FieldTooLarge("p^m exceeds 2^20");
    }

    std::vector<uint32_t> modulus;
    if (m == 1) {
        modulus = {0, 1}; // x; arithmetic is plain mod p
    } else {
        // Lexicographically smallest monic irreducible: scan the lower
        // coefficients as a base-p counter, constant term fastest.
        uint64_t limit = q; // p^m choices of lower coefficients
        for (uint64_t k = 0; k < limit; ++k) {
            PPoly f(m + 1, 0);
            uint64_t t = k;
            for (uint32_t i = 0; i < m; ++i) { f[i] = (uint32_t)(t % p); t /= p; }
            f[m] = 1;
            if (irreducible_over_prime(f, m, p)) { modulus = f; break; }
        }
    }
    auto field = std::shared_ptr<const FieldSpec>(new FieldSpec(p, m, std::move(modulus)));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::make_pair(p, m), std::move(field)).first->second;
}

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint32_t i = 0; i < m; ++i) q_ *= p;
    if (q_ <= kTableLimit) {
        mul_table_.resize(q_ * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = a; b < q_; ++b) {
                uint32_t v = mul_slow(a, b);
                mul_table_[a * q_ + b] = v;
                mul_table_[b * q_ + a] = v;
            }
        inv_table_.assign(q_, 0);
        for (uint32_t a = 1; a < q_; ++a)
            for (uint32_t b = 1; b < q_; ++b)
                if (mul_table_[a * q_ + b] == 1) { inv_table_[a] = b; break; }
    }
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_; b /= p_; mult *= p_;
    }
    return out;
}

uint32_t FieldSpec::neg(uint32_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_; mult *= p_;
    }
    return out;
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldSpec::mul_slow(uint32_t a, uint32_t b) const {
    if (m_ == 1) return (uint32_t)((uint64_t)a * b % p_);
    std::vector<uint32_t> da = coeffs(a), db = coeffs(b);
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (uint32_t)((prod[i + j] + (uint64_t)da[i] * db[j]) % p_);
    }
    // Reduce mod the monic modulus of degree m.
    for (int k = (int)prod.size() - 1; k >= (int)m_; --k) {
        uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint64_t v = (prod[k - m_ + i] + (uint64_t)p_ * p_ -
                          (uint64_t)c * modulus_[i]) % p_;
            prod[k - m_ + i] = (uint32_t)v;
        }
    }
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) { out += prod[i] * mult; mult *= p_; }
    return out;
}

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[(uint64_t)a * q_ + b];
    return mul_slow(a, b);
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
    uint32_t out = 1, base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

uint32_t FieldSpec::frobenius(uint32_t a, uint32_t i) const {
    uint32_t out = a;
    for (uint32_t k = 0; k < i; ++k) out = pow(out, p_);
    return out;
}

std::vector<uint32_t> FieldSpec::coeffs(uint32_t a) const {
    std::vector<uint32_t> c(m_);
    for (uint32_t i = 0; i < m_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
}

uint32_t FieldSpec::from_coeffs(const std::vector<uint32_t>& c) const {
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_ && i < c.size(); ++i) {
        out += (c[i] % p_) * mult;
        mult *= p_;
    }
    return out;
}

std::string FieldSpec::to_string(uint32_t a) const {
    // Base-p digits low-to-high; for p > 10 single digits are ambiguous,
    // so they are written in decimal separated by dots.
    std::string s;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = a % p_;
        a /= p_;
        if (p_ > 10 && i) s += '.';
        s += std::to_string(d);
    }
    return s;
}

uint32_t FieldSpec::from_string(const std::string& s) const {
    uint32_t out = 0, mult = 1;
    if (p_ > 10) {
        uint32_t digits = 0;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t dot = s.find('.', pos);
            std::string part = s.substr(pos, dot == std::string::npos ? dot : dot - pos);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("invalid field element digit");
            unsigned long d = std::stoul(part);
            if (d >= p_) throw ParseError("field element digit out of range");
            out += (uint32_t)d * mult;
            mult *= p_;
            ++digits;
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
        if (digits != m_) throw ParseError("element digit string has wrong length");
        return out;
    }
    if (s.size() != m_) throw ParseError("element digit string has wrong length");
    for (char ch : s) {
        if (ch < '0' || ch >= (char)('0' + p_))
            throw ParseError("invalid field element digit");
        out += (uint32_t)(ch - '0') * mult;
        mult *= p_;
    }
    return out;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         ArithKind kind, uint32_t frob_power) {
    const FieldSpec* f = a.field.get();
    if (!f) throw FieldMismatch("element without field");
    switch (kind) {
    case ArithKind::add:
        if (b.field.get() != f) throw FieldMismatch("add across fields");
        return {a.field, f->add(a.value, b.value)};
    case ArithKind::mul:
        if (b.field.get() != f) throw FieldMismatch("mul across fields");
        return {a.field, f->mul(a.value, b.value)};
    case ArithKind::inv:
        return {a.field, f->inv(a.value)};
    case ArithKind::frobenius:
        return {a.field, f->frobenius(a.value, frob_power)};
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// ExtField

namespace {

using EPoly = std::vector<uint32_t>; // coeffs over the base field, low-to-high

void etrim(EPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

EPoly emod(EPoly a, const EPoly& b, const FieldSpec& f) {
    uint32_t lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        uint32_t c = f.mul(a.back(), lead_inv);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        etrim(a);
        if (a.empty()) break;
    }
    return a;
}

bool edivides(const EPoly& d, const EPoly& poly, const FieldSpec& f) {
    return emod(poly, d, f).empty();
}

bool irreducible_over(const EPoly& poly, uint32_t e, const FieldSpec& f) {
    uint64_t q = f.q();
    for (uint32_t deg = 1; 2 * deg <= e; ++deg) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < deg; ++i) count *= q;
        for (uint64_t k = 0; k < count; ++k) {
            EPoly d(deg + 1, 0);
            uint64_t t = k;
            for (uint32_t i = 0; i < deg; ++i) { d[i] = (uint32_t)(t % q); t /= q; }
            d[deg] = 1;
            if (edivides(d, poly, f)) return false;
        }
    }
    return true;
}

} // namespace

ExtField::ExtField(FieldPtr base, uint32_t extension_degree)
    : base_(std::move(base)), e_(extension_degree) {
    if (e_ < 1) throw DegreeZero("extension degree must be >= 1");
    uint64_t q = base_->q();
    if (e_ == 1) {
        modulus_ = {0, 1};
        return;
    }
    uint64_t limit = 1;
    for (uint32_t i = 0; i < e_; ++i) limit *= q;
    for (uint64_t k = 0; k < limit; ++k) {
        EPoly f(e_ + 1, 0);
        uint64_t t = k;
        for (uint32_t i = 0; i < e_; ++i) { f[i] = (uint32_t)(t % q); t /= q; }
        f[e_] = 1;
        if (irreducible_over(f, e_, *base_)) { modulus_ = f; return; }
    }
    throw Error("no irreducible polynomial found"); // cannot happen
}

ExtField::Elt ExtField::one() const {
    Elt a(e_, 0);
    a[0] = 1;
    return a;
}

ExtField::Elt ExtField::basis_element(uint32_t k) const {
    if (k >= e_) throw OutOfRange("basis index beyond extension degree");
    Elt a(e_, 0);
    a[k] = 1;
    return a;
}

ExtField::Elt ExtField::add(const Elt& a, const Elt& b) const {
    Elt out(e_);
    for (uint32_t i = 0; i < e_; ++i) out[i] = base_->add(a[i], b[i]);
    return out;
}

ExtField::Elt ExtField::mul(const Elt& a, const Elt& b) const {
    const FieldSpec& f = *base_;
    std::vector<uint32_t> prod(2 * e_ - 1, 0);
    for (uint32_t i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < e_; ++j)
            prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
    for (int k = (int)prod.size() - 1; k >= (int)e_; --k) {
        uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (uint32_t i = 0; i < e_; ++i)
            prod[k - e_ + i] = f.sub(prod[k - e_ + i], f.mul(c, modulus_[i]));
    }
    prod.resize(e_);
    return prod;
}

ExtField::Elt ExtField::scalar_mul(uint32_t c, const Elt& a) const {
    Elt out(e_);
    for (uint32_t i = 0; i < e_; ++i) out[i] = base_->mul(c, a[i]);
    return out;
}

ExtField::Elt ExtField::pow_u64(const Elt& a, uint64_t e) const {
    Elt out = one(), b = a;
    while (e) {
        if (e & 1) out = mul(out, b);
        b = mul(b, b);
        e >>= 1;
    }
    return out;
}

ExtField::Elt ExtField::frobenius_q(const Elt& a, uint32_t i) const {
    Elt out = a;
    for (uint32_t k = 0; k < i; ++k) out = pow_u64(out, base_->q());
    return out;
}

bool ExtField::is_zero(const Elt& a) const {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

FieldPtr field_from_order(uint64_t q) {
    if (q < 2) throw NotPrime("field order must be at least 2");
    uint64_t p = 0;
    for (uint64_t c = 2; c * c <= q; ++c)
        if (q % c == 0) { p = c; break; }
    if (p == 0) p = q; // q itself is prime
    uint32_t m = 0;
    uint64_t v = q;
    while (v % p == 0) { v /= p; ++m; }
    if (v != 1)
        throw NotPrime("field order " + std::to_string(q) + " is not a prime power");
    return FieldSpec::make((uint32_t)p, m);
}

} // namespace ssc
