#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "ssc/errors.hpp"

namespace ssc {

/// Outward-rounded real interval over MPFR. Every operation rounds the low
/// endpoint down and the high endpoint up, so containment of the true value
/// is preserved and a passing comparison against an exact integer is a proof.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 256);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval from_ui(unsigned long v, mpfr_prec_t prec = 256);
    static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec = 256);
    static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec = 256);

    mpfr_prec_t precision() const { return prec_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const; // o must not contain 0

    Interval inverse() const;   // 1/x, x not containing 0
    Interval log() const;       // natural log, lo > 0
    Interval exp() const;
    /// x^e for x with lo > 0 and exact rational exponent e.
    Interval pow(const mpq_class& e) const;

    /// Certified comparisons against exact values: true only when provable.
    bool certainly_le(const mpz_class& v) const;  // hi <= v
    bool certainly_ge(const mpz_class& v) const;  // lo >= v
    bool certainly_lt(const Interval& o) const;   // hi < o.lo
    bool certainly_le(const Interval& o) const;   // hi <= o.lo

    /// Conservative integer envelopes: floor_hi >= floor(true value),
    /// ceil_hi >= ceil(true value).
    mpz_class floor_hi() const;
    mpz_class ceil_hi() const;

    double lo_d() const;
    double hi_d() const;
    double width_d() const;
    /// Midpoint as a decimal string with the given number of digits.
    std::string midpoint_str(unsigned digits) const;

    bool overlaps(const Interval& o) const;
    bool contains(const mpq_class& v) const;

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

/// q^e with exact integer q >= 2 and exact rational exponent e.
Interval pow_q(const mpz_class& q, const mpq_class& e, mpfr_prec_t prec = 256);

/// log base q of an exact positive integer, as an interval.
Interval log_q(const mpz_class& value, unsigned long q, mpfr_prec_t prec = 256);

} // namespace ssc
