#include "ssc/qcombinatorics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace ssc {

namespace {

std::mutex g_binom_mutex;
// Full row [n 0]_q .. [n n]_q per (q,n); write-once, shared thereafter.
std::map<std::pair<unsigned long, uint32_t>, std::vector<BigCount>> g_binom_rows;

const std::vector<BigCount>& binom_row(unsigned long q, uint32_t n) {
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    auto key = std::make_pair(q, n);
    auto it = g_binom_rows.find(key);
    if (it != g_binom_rows.end()) return it->second;

    // q-Pascal: [n r] = [n-1 r-1] + q^r [n-1 r], built row by row.
    std::vector<BigCount> row{BigCount(1)};
    mpz_class qz(q);
    for (uint32_t m = 1; m <= n; ++m) {
        std::vector<BigCount> next(m + 1);
        next[0] = 1;
        mpz_class qpow = 1;
        for (uint32_t r = 1; r < m; ++r) {
            qpow *= qz;
            next[r] = row[r - 1] + qpow * row[r];
        }
        next[m] = 1;
        row = std::move(next);
    }
    return g_binom_rows.emplace(key, std::move(row)).first->second;
}

mpz_class pow_z(unsigned long q, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), q, e);
    return out;
}

void check_q(unsigned long q) {
    if (q < 2) throw OutOfRange("field size must be at least 2");
}

mpfr_prec_t prec_for_digits(unsigned digits) {
    if (digits == 0 || digits > 100)
        throw PrecisionUnsupported("precision must be between 1 and 100 digits");
    return (mpfr_prec_t)(digits * 4 + 64);
}

} // namespace

BigCount gaussian_binomial(unsigned long q, uint32_t n, int64_t r) {
    check_q(q);
    if (r < 0 || r > (int64_t)n) return 0;
    return binom_row(q, n)[(size_t)r];
}

BigCount projective_space_size(unsigned long q, uint32_t n) {
    check_q(q);
    const auto& row = binom_row(q, n);
    BigCount total = 0;
    for (const auto& v : row) total += v;
    return total;
}

BigCount n_subspace(unsigned long q, uint32_t n, uint32_t r, uint32_t s, uint32_t d) {
    check_q(q);
    if (r > n || s > n) throw OutOfRange("dimensions exceed ambient space");
    int64_t twice_u = (int64_t)r + d - s;
    if (twice_u < 0 || twice_u % 2 != 0) return 0;
    int64_t u = twice_u / 2;
    if (u > (int64_t)d) return 0; // exponent u(d-u) would go negative
    BigCount a = gaussian_binomial(q, r, u);
    BigCount b = gaussian_binomial(q, n - r, (int64_t)d - u);
    if (a == 0 || b == 0) return 0;
    return pow_z(q, (unsigned long)(u * ((int64_t)d - u))) * a * b;
}

BigCount n_injection(unsigned long q, uint32_t n, uint32_t r, uint32_t s, uint32_t d) {
    check_q(q);
    if (r > n || s > n) throw OutOfRange("dimensions exceed ambient space");
    int64_t diff = (int64_t)r - s;
    if (diff < 0) diff = -diff;
    int64_t ds = 2 * (int64_t)d - diff;
    if (ds < 0) return 0; // d < |r-s| is unreachable
    return n_subspace(q, n, r, s, (uint32_t)ds);
}

BigCount ball_volume(unsigned long q, uint32_t n, uint32_t r, uint32_t t, Metric metric) {
    check_q(q);
    if (r > n) throw OutOfRange("dimension exceeds ambient space");
    BigCount total = 0;
    for (uint32_t d = 0; d <= t; ++d)
        for (uint32_t s = 0; s <= n; ++s)
            total += metric == Metric::subspace ? n_subspace(q, n, r, s, d)
                                                : n_injection(q, n, r, s, d);
    return total;
}

mpq_class g_exponent(uint32_t n, uint32_t r, uint32_t t) {
    uint32_t half = n / 2;
    if (r > half || t > half)
        throw OutOfRange("g(r,t) requires r and t at most floor(n/2)");
    int64_t N = n, R = r, T = t;
    // Branch tests kept in integers: t <= (n-2r)/3  <=>  3t <= n-2r, etc.
    if (3 * T <= N - 2 * R) return mpq_class(T * (N - R - T));
    if (3 * T <= N + 4 * R) {
        mpq_class a(( N - 2 * R) * (N - 2 * R), 12);
        mpq_class b(T * (2 * N - T), 4);
        mpq_class out = a + b;
        out.canonicalize();
        return out;
    }
    return mpq_class((T - R) * (N - T + R));
}

std::string ConstantEstimate::method_name() const {
    switch (method) {
        case ConstantMethod::euler_product: return "euler_product";
        case ConstantMethod::pentagonal: return "pentagonal";
        case ConstantMethod::partition_series: return "partition_series";
        case ConstantMethod::theta_series: return "theta_series";
    }
    return "?";
}

namespace {

// Euler product to j = J; the omitted factors lie in [1 - q^{-J}/(q-1), 1].
ConstantEstimate kq_euler(unsigned long q, unsigned digits, mpfr_prec_t prec) {
    double lq = std::log2((double)q);
    unsigned J = (unsigned)std::ceil((digits + 8) * 3.33 / lq) + 2;
    mpq_class prod = 1;
    mpq_class qinv(1, (long)q);
    mpq_class qpow = 1;
    for (unsigned j = 1; j <= J; ++j) {
        qpow *= qinv;
        prod *= (1 - qpow);
        prod.canonicalize();
    }
    // qpow is now q^{-J}; tail factor lower bound 1 - q^{-J}/(q-1).
    mpq_class tail_lo = 1 - qpow / (mpq_class)(q - 1);
    Interval lo = Interval::from_mpq(prod * tail_lo, prec);
    Interval hi = Interval::from_mpq(prod, prec);
    Interval enc(prec);
    mpfr_set(enc.lo_mut(), lo.lo(), MPFR_RNDD);
    mpfr_set(enc.hi_mut(), hi.hi(), MPFR_RNDU);
    return {enc, ConstantMethod::euler_product, J};
}

// Pentagonal-number series: K_q = 1 + sum_{k>=1} (-1)^k (q^{-k(3k-1)/2} + q^{-k(3k+1)/2}).
// The paired terms decrease strictly, so consecutive partial sums bracket K_q.
ConstantEstimate kq_pentagonal(unsigned long q, unsigned digits, mpfr_prec_t prec) {
    mpq_class s = 1;
    mpq_class prev = s;
    unsigned k = 0;
    mpz_class qz(q);
    while (true) {
        ++k;
        mpz_class e1 = mpz_class(k) * (3 * (long)k - 1) / 2;
        mpz_class e2 = mpz_class(k) * (3 * (long)k + 1) / 2;
        mpz_class d1, d2;
        mpz_pow_ui(d1.get_mpz_t(), qz.get_mpz_t(), e1.get_ui());
        mpz_pow_ui(d2.get_mpz_t(), qz.get_mpz_t(), e2.get_ui());
        mpq_class term = mpq_class(1, d1) + mpq_class(1, d2);
        term.canonicalize();
        prev = s;
        if (k % 2 == 1) s -= term; else s += term;
        s.canonicalize();
        // Stop once the bracket is tighter than the target precision.
        mpq_class width = prev > s ? prev - s : s - prev;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits + 5);
        if (width * scale < 1) break;
        if (k > 1000) break;
    }
    mpq_class lo = std::min(s, prev), hi = std::max(s, prev);
    Interval li = Interval::from_mpq(lo, prec);
    Interval hi_i = Interval::from_mpq(hi, prec);
    Interval enc(prec);
    mpfr_set(enc.lo_mut(), li.lo(), MPFR_RNDD);
    mpfr_set(enc.hi_mut(), hi_i.hi(), MPFR_RNDU);
    return {enc, ConstantMethod::pentagonal, k};
}

// 1/K_q = sum_k p(k) q^{-k}, partition numbers by Euler's recurrence; the
// tail is bounded with p(k) < exp(pi sqrt(2k/3)) and a geometric majorant.
ConstantEstimate kq_partition(unsigned long q, unsigned digits, mpfr_prec_t prec) {
    double lq = std::log2((double)q);
    unsigned K = (unsigned)std::ceil((digits + 8) * 3.33 / lq) + 40;
    if (K < 80) K = 80;
    std::vector<mpz_class> p(K + 2);
    p[0] = 1;
    for (unsigned k = 1; k <= K + 1; ++k) {
        mpz_class v = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2;
            long g2 = j * (3 * j + 1) / 2;
            if (g1 > (long)k) break;
            mpz_class c = p[k - g1];
            if (g2 <= (long)k) c += p[k - g2];
            if (j % 2 == 1) v += c; else v -= c;
        }
        p[k] = v;
    }
    mpq_class s = 0;
    mpz_class qz(q), qk = 1;
    for (unsigned k = 0; k <= K; ++k) {
        s += mpq_class(p[k], qk);
        qk *= qz;
    }
    s.canonicalize();
    // Tail: sum_{k>K} p(k) q^{-k} <= T(K+1) / (1 - rho) with
    // T(k) = exp(pi sqrt(2k/3)) q^{-k} and ratio rho = exp(pi sqrt(2/3) /
    // (2 sqrt(K+1))) / q, valid because sqrt(k+1)-sqrt(k) <= 1/(2 sqrt(k)).
    Interval pi_i(prec);
    mpfr_const_pi(pi_i.lo_mut(), MPFR_RNDD);
    mpfr_const_pi(pi_i.hi_mut(), MPFR_RNDU);
    Interval two_thirds = Interval::from_mpq(mpq_class(2, 3), prec);
    Interval arg = two_thirds * Interval::from_ui(K + 1, prec);
    Interval sqrt_arg = arg.pow(mpq_class(1, 2));
    Interval t_first = (pi_i * sqrt_arg).exp() / Interval::from_mpz(qk, prec); // qk = q^{K+1}
    Interval half_over_sqrt =
        two_thirds.pow(mpq_class(1, 2)) / (Interval::from_ui(2, prec) *
                                           Interval::from_ui(K + 1, prec).pow(mpq_class(1, 2)));
    Interval rho = (pi_i * half_over_sqrt).exp() / Interval::from_ui(q, prec);
    if (!rho.certainly_lt(Interval::from_ui(1, prec)))
        throw PrecisionUnsupported("partition-series tail bound failed to converge");
    Interval tail = t_first / (Interval::from_ui(1, prec) - rho);
    Interval inv_lo = Interval::from_mpq(s, prec);
    Interval inv_hi = inv_lo + tail;
    Interval inv(prec);
    mpfr_set(inv.lo_mut(), inv_lo.lo(), MPFR_RNDD);
    mpfr_set(inv.hi_mut(), inv_hi.hi(), MPFR_RNDU);
    return {inv.inverse(), ConstantMethod::partition_series, K};
}

} // namespace

ConstantEstimate kq_constant(unsigned long q, unsigned digits, ConstantMethod method) {
    check_q(q);
    mpfr_prec_t prec = prec_for_digits(digits);
    switch (method) {
        case ConstantMethod::euler_product: return kq_euler(q, digits, prec);
        case ConstantMethod::pentagonal: return kq_pentagonal(q, digits, prec);
        case ConstantMethod::partition_series: return kq_partition(q, digits, prec);
        case ConstantMethod::theta_series:
            throw OutOfRange("theta_series is not a method for K_q");
    }
    throw OutOfRange("unknown constant method");
}

ConstantEstimate theta_constant(unsigned long q, unsigned digits) {
    check_q(q);
    mpfr_prec_t prec = prec_for_digits(digits);
    double lq = std::log2((double)q);
    unsigned N = (unsigned)std::ceil(std::sqrt((digits + 8) * 3.33 / lq)) + 2;
    mpq_class s = 0;
    mpz_class qz(q);
    for (unsigned k = 0; k <= N; ++k) {
        mpz_class d;
        mpz_pow_ui(d.get_mpz_t(), qz.get_mpz_t(), (unsigned long)k * k);
        s += mpq_class(1, d);
    }
    s.canonicalize();
    // Tail sum_{k>N} q^{-k^2} <= q^{-(N+1)^2} * q/(q-1) (consecutive
    // exponents grow by at least 2N+3, so the ratio is at most 1/q).
    mpz_class d;
    mpz_pow_ui(d.get_mpz_t(), qz.get_mpz_t(), (unsigned long)(N + 1) * (N + 1));
    mpq_class tail = mpq_class(q, 1) / (mpq_class((long)q - 1, 1) * mpq_class(d, 1));
    tail.canonicalize();
    Interval lo = Interval::from_mpq(s, prec);
    Interval hi = Interval::from_mpq(s + tail, prec);
    Interval enc(prec);
    mpfr_set(enc.lo_mut(), lo.lo(), MPFR_RNDD);
    mpfr_set(enc.hi_mut(), hi.hi(), MPFR_RNDU);
    return {enc, ConstantMethod::theta_series, N};
}

Interval theta_power(unsigned long q, const mpq_class& e, mpfr_prec_t prec) {
    check_q(q);
    if (e <= 0) throw OutOfRange("theta_power requires a positive exponent");
    // theta(q^e) = sum_k q^{-e k^2}; stop when the geometric tail bound
    // q^{-e (N+1)^2} / (1 - q^{-e}) is provably below 2^-(prec/2).
    Interval one = Interval::from_ui(1, prec);
    Interval qe_inv = pow_q(q, -e, prec);
    Interval geo = one / (one - qe_inv);
    Interval sum = one; // k = 0 term
    Interval eps = Interval::from_mpq(mpq_class(1), prec);
    mpfr_div_2ui(eps.lo_mut(), eps.lo(), (unsigned long)(prec / 2), MPFR_RNDD);
    mpfr_div_2ui(eps.hi_mut(), eps.hi(), (unsigned long)(prec / 2), MPFR_RNDU);
    unsigned k = 0;
    Interval tail(prec);
    while (true) {
        ++k;
        mpq_class ex = -e * mpq_class((long)k * k);
        sum = sum + pow_q(q, ex, prec);
        mpq_class next = -e * mpq_class(((long)k + 1) * ((long)k + 1));
        tail = pow_q(q, next, prec) * geo;
        if (tail.certainly_lt(eps) || k > 200) break;
    }
    Interval out(prec);
    mpfr_set(out.lo_mut(), sum.lo(), MPFR_RNDD);
    Interval hi = sum + tail;
    mpfr_set(out.hi_mut(), hi.hi(), MPFR_RNDU);
    return out;
}

Interval kq_interval(unsigned long q, mpfr_prec_t prec) {
    unsigned digits = (unsigned)std::min<mpfr_prec_t>(100, prec / 4);
    if (digits < 10) digits = 10;
    return kq_constant(q, digits, ConstantMethod::euler_product).value;
}

Interval theta_interval(unsigned long q, mpfr_prec_t prec) {
    unsigned digits = (unsigned)std::min<mpfr_prec_t>(100, prec / 4);
    if (digits < 10) digits = 10;
    return theta_constant(q, digits).value;
}

} // namespace ssc
