#include "ssc/interval.hpp"

#include <utility>

namespace ssc {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_ui(unsigned long v, mpfr_prec_t prec) {
    Interval x(prec);
    mpfr_set_ui(x.lo_, v, MPFR_RNDD);
    mpfr_set_ui(x.hi_, v, MPFR_RNDU);
    return x;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    Interval x(prec);
    mpfr_set_z(x.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(x.hi_, v.get_mpz_t(), MPFR_RNDU);
    return x;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    Interval x(prec);
    mpfr_set_q(x.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x.hi_, v.get_mpq_t(), MPFR_RNDU);
    return x;
}

Interval Interval::operator+(const Interval& o) const {
    Interval x(prec_);
    mpfr_add(x.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(x.hi_, hi_, o.hi_, MPFR_RNDU);
    return x;
}

Interval Interval::operator-(const Interval& o) const {
    Interval x(prec_);
    mpfr_sub(x.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(x.hi_, hi_, o.lo_, MPFR_RNDU);
    return x;
}

Interval Interval::operator*(const Interval& o) const {
    // Four-corner product with directed rounding.
    Interval x(prec_);
    mpfr_t c[4];
    for (auto& t : c) mpfr_init2(t, prec_);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_set(x.lo_, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; ++i)
        if (mpfr_cmp(c[i], x.lo_) < 0) mpfr_set(x.lo_, c[i], MPFR_RNDD);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_set(x.hi_, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; ++i)
        if (mpfr_cmp(c[i], x.hi_) > 0) mpfr_set(x.hi_, c[i], MPFR_RNDU);
    for (auto& t : c) mpfr_clear(t);
    return x;
}

Interval Interval::inverse() const {
    if (mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0)
        throw OutOfRange("interval inverse through zero");
    Interval x(prec_);
    mpfr_ui_div(x.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(x.hi_, 1, lo_, MPFR_RNDU);
    return x;
}

Interval Interval::operator/(const Interval& o) const { return *this * o.inverse(); }

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw OutOfRange("log of non-positive interval");
    Interval x(prec_);
    mpfr_log(x.lo_, lo_, MPFR_RNDD);
    mpfr_log(x.hi_, hi_, MPFR_RNDU);
    return x;
}

Interval Interval::exp() const {
    Interval x(prec_);
    mpfr_exp(x.lo_, lo_, MPFR_RNDD);
    mpfr_exp(x.hi_, hi_, MPFR_RNDU);
    return x;
}

Interval Interval::pow(const mpq_class& e) const {
    Interval le = log();
    Interval ei = Interval::from_mpq(e, prec_);
    return (le * ei).exp();
}

bool Interval::certainly_le(const mpz_class& v) const {
    return mpfr_cmp_z(hi_, v.get_mpz_t()) <= 0;
}

bool Interval::certainly_ge(const mpz_class& v) const {
    return mpfr_cmp_z(lo_, v.get_mpz_t()) >= 0;
}

bool Interval::certainly_lt(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Interval::certainly_le(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) <= 0;
}

mpz_class Interval::floor_hi() const {
    mpfr_t f;
    mpfr_init2(f, prec_);
    mpfr_floor(f, hi_);
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), f, MPFR_RNDU);
    mpfr_clear(f);
    return out;
}

mpz_class Interval::ceil_hi() const {
    mpfr_t f;
    mpfr_init2(f, prec_);
    mpfr_ceil(f, hi_);
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), f, MPFR_RNDU);
    mpfr_clear(f);
    return out;
}

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

std::string Interval::midpoint_str(unsigned digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", (int)digits, mid);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(mid);
    return out;
}

bool Interval::overlaps(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) >= 0 && mpfr_cmp(o.hi_, lo_) >= 0;
}

bool Interval::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

Interval pow_q(const mpz_class& q, const mpq_class& e, mpfr_prec_t prec) {
    if (q < 2) throw OutOfRange("pow_q requires q >= 2");
    // Integer exponents stay exact.
    if (e.get_den() == 1 && e.get_num() >= 0 &&
        mpz_fits_ulong_p(e.get_num().get_mpz_t())) {
        mpz_class v;
        mpz_pow_ui(v.get_mpz_t(), q.get_mpz_t(), e.get_num().get_ui());
        return Interval::from_mpz(v, prec);
    }
    return Interval::from_mpz(q, prec).pow(e);
}

Interval log_q(const mpz_class& value, unsigned long q, mpfr_prec_t prec) {
    if (value <= 0) throw OutOfRange("log of non-positive value");
    Interval v = Interval::from_mpz(value, prec);
    Interval base = Interval::from_ui(q, prec);
    return v.log() / base.log();
}

} // namespace ssc
