#include "zhardy/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

// Euler–Maclaurin continuation of zeta(s) at s = 1/2 + it:
//   zeta(s) = sum_{n<N} n^{-s} + N^{-s}/2 + N^{1-s}/(s-1)
//             + sum_{k>=1} B_{2k}/(2k)! * (s)_{2k-1} * N^{1-s-2k},
// remainder after M terms bounded by |T_{M+1}| * |s+2M+1| / (sigma+2M+1).
// N is chosen so t/(2 pi N) <= ~0.35, giving geometric-like tail decay.
// Bernoulli coefficients enter only through B_{2k}/(2k)! = (-1)^{k+1} *
// 2 zeta(2k) / (2pi)^{2k}, evaluated with mpfr_zeta_ui (no tables).
//
// theta(t) comes from Stirling's series for log Gamma(z), z = 1/4 + it/2,
// shifted right until |z+J| is large enough for the series; principal logs
// throughout (everything stays in Re > 0, where log Gamma's principal
// branch is the continuous one, matching theta(0) = 0).

namespace zhardy {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Minimal RAII wrapper; all arithmetic goes through raw mpfr calls on .x.
struct Mp {
    mpfr_t x;
    explicit Mp(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
    ~Mp() { mpfr_clear(x); }
};

mpfr_prec_t prec_for(int digits, double t) {
    // Guard bits: rounding in ~N-term sums plus the phase magnitude t*log N,
    // which sin/cos must resolve before reduction.
    const double phase_bits = t > 2.0 ? std::log2(t * std::max(1.0, std::log(t))) : 1.0;
    return static_cast<mpfr_prec_t>((digits + 8) * 3.3219280948873623 + 32.0 + phase_bits);
}

// Per-thread scratch: a pool of (re, im) values for the multiplicative
// main-sum table plus the smallest-prime-factor sieve. Reused across calls
// with the same precision so mpfr init/clear cost amortizes away.
struct Workspace {
    mpfr_prec_t prec = 0;
    std::vector<__mpfr_struct> re, im;  // 1-based table of n^{-s}
    std::vector<std::uint32_t> spf;
    std::uint64_t cap = 0;

    void ensure(mpfr_prec_t p, std::uint64_t n) {
        if (p != prec) {
            release();
            prec = p;
        }
        if (n <= cap) return;
        const std::uint64_t old = re.size();
        re.resize(n + 1);
        im.resize(n + 1);
        for (std::uint64_t i = old; i <= n; ++i) {
            mpfr_init2(&re[i], prec);
            mpfr_init2(&im[i], prec);
        }
        spf.resize(n + 1);
        // smallest prime factor sieve
        for (std::uint64_t i = 0; i <= n; ++i) spf[i] = 0;
        for (std::uint64_t i = 2; i <= n; ++i) {
            if (spf[i] == 0) {
                for (std::uint64_t j = i; j <= n; j += i)
                    if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
            }
        }
        cap = n;
    }
    void release() {
        for (std::size_t i = 0; i < re.size(); ++i) {
            mpfr_clear(&re[i]);
            mpfr_clear(&im[i]);
        }
        re.clear();
        im.clear();
        spf.clear();
        cap = 0;
    }
    ~Workspace() { release(); }
};

Workspace& workspace() {
    thread_local Workspace ws;
    return ws;
}

// Bytes for one table entry at precision p (two mpfr values + struct overhead).
std::uint64_t entry_bytes(mpfr_prec_t p) {
    return 2 * (sizeof(__mpfr_struct) + static_cast<std::uint64_t>((p + 63) / 64) * 8 + 16);
}

constexpr std::uint64_t kTableBudget = 512ull << 20;  // per-thread main-sum table cap

// zeta(1/2 + it) for t >= 0 into (zre, zim); returns the achieved remainder bound.
double em_zeta_half(double t, int digits, mpfr_prec_t prec, mpfr_t zre, mpfr_t zim) {
    const std::uint64_t nmin = static_cast<std::uint64_t>(3 * digits + 16);
    std::uint64_t N = std::max<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(0.27 * t)), nmin);
    if (N > (1ull << 33))
        throw ResourceError("z_oracle: t too large for the Euler–Maclaurin budget", N * 16);
    const double eps = std::pow(10.0, -(digits + 2));

    const bool use_table = N * entry_bytes(prec) <= kTableBudget;
    Workspace& ws = workspace();
    if (use_table) ws.ensure(prec, N);

    Mp tm(prec), lg(prec), ang(prec), sn(prec), cs(prec), rs(prec), u(prec), v(prec);
    Mp sum_re(prec), sum_im(prec);
    mpfr_set_zero(sum_re.x, 1);
    mpfr_set_zero(sum_im.x, 1);
    mpfr_set_d(tm.x, t, MPFR_RNDN);

    // Main sum over n < N: n^{-s} = n^{-1/2} e^{-i t log n}, built
    // multiplicatively (primes direct, composites by one complex multiply).
    auto direct_term = [&](std::uint64_t n, mpfr_ptr out_re, mpfr_ptr out_im) {
        mpfr_log_ui(lg.x, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_mul(ang.x, lg.x, tm.x, MPFR_RNDN);
        mpfr_sin_cos(sn.x, cs.x, ang.x, MPFR_RNDN);
        mpfr_set_ui(u.x, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_rec_sqrt(rs.x, u.x, MPFR_RNDN);
        mpfr_mul(out_re, rs.x, cs.x, MPFR_RNDN);
        mpfr_mul(out_im, rs.x, sn.x, MPFR_RNDN);
        mpfr_neg(out_im, out_im, MPFR_RNDN);
    };

    mpfr_add_ui(sum_re.x, sum_re.x, 1, MPFR_RNDN);  // n = 1 term
    if (use_table) {
        mpfr_set_ui(&ws.re[1], 1, MPFR_RNDN);
        mpfr_set_zero(&ws.im[1], 1);
        for (std::uint64_t n = 2; n < N; ++n) {
            const std::uint64_t p = ws.spf[n];
            if (p == n) {
                direct_term(n, &ws.re[n], &ws.im[n]);
            } else {
                const std::uint64_t m = n / p;
                // (a+bi)(c+di)
                mpfr_mul(u.x, &ws.re[p], &ws.re[m], MPFR_RNDN);
                mpfr_mul(v.x, &ws.im[p], &ws.im[m], MPFR_RNDN);
                mpfr_sub(u.x, u.x, v.x, MPFR_RNDN);
                mpfr_mul(v.x, &ws.re[p], &ws.im[m], MPFR_RNDN);
                mpfr_fma(v.x, &ws.im[p], &ws.re[m], v.x, MPFR_RNDN);
                mpfr_set(&ws.re[n], u.x, MPFR_RNDN);
                mpfr_set(&ws.im[n], v.x, MPFR_RNDN);
            }
            mpfr_add(sum_re.x, sum_re.x, &ws.re[n], MPFR_RNDN);
            mpfr_add(sum_im.x, sum_im.x, &ws.im[n], MPFR_RNDN);
        }
    } else {
        Mp tr(prec), ti(prec);
        for (std::uint64_t n = 2; n < N; ++n) {
            direct_term(n, tr.x, ti.x);
            mpfr_add(sum_re.x, sum_re.x, tr.x, MPFR_RNDN);
            mpfr_add(sum_im.x, sum_im.x, ti.x, MPFR_RNDN);
        }
    }

    // N-dependent pieces share cos/sin(t log N) and N^{-1/2}.
    Mp lgN(prec), snN(prec), csN(prec), rsN(prec);
    mpfr_log_ui(lgN.x, static_cast<unsigned long>(N), MPFR_RNDN);
    mpfr_mul(ang.x, lgN.x, tm.x, MPFR_RNDN);
    mpfr_sin_cos(snN.x, csN.x, ang.x, MPFR_RNDN);
    mpfr_set_ui(u.x, static_cast<unsigned long>(N), MPFR_RNDN);
    mpfr_rec_sqrt(rsN.x, u.x, MPFR_RNDN);

    // + N^{-s}/2
    mpfr_mul(u.x, rsN.x, csN.x, MPFR_RNDN);
    mpfr_div_ui(u.x, u.x, 2, MPFR_RNDN);
    mpfr_add(sum_re.x, sum_re.x, u.x, MPFR_RNDN);
    mpfr_mul(u.x, rsN.x, snN.x, MPFR_RNDN);
    mpfr_div_ui(u.x, u.x, 2, MPFR_RNDN);
    mpfr_sub(sum_im.x, sum_im.x, u.x, MPFR_RNDN);

    // + N^{1-s}/(s-1): N^{1-s} = sqrt(N) (cos - i sin), s-1 = -1/2 + it.
    Mp ar(prec), ai(prec), den(prec);
    mpfr_sqrt_ui(v.x, static_cast<unsigned long>(N), MPFR_RNDN);
    mpfr_mul(ar.x, v.x, csN.x, MPFR_RNDN);
    mpfr_mul(ai.x, v.x, snN.x, MPFR_RNDN);
    mpfr_neg(ai.x, ai.x, MPFR_RNDN);
    // denom = 1/4 + t^2
    mpfr_mul(den.x, tm.x, tm.x, MPFR_RNDN);
    mpfr_add_d(den.x, den.x, 0.25, MPFR_RNDN);
    // (ar + i ai)/(-1/2 + i t) = ((ar,ai) * (-1/2 - i t)) / den
    mpfr_mul_d(u.x, ar.x, -0.5, MPFR_RNDN);
    mpfr_fma(u.x, ai.x, tm.x, u.x, MPFR_RNDN);  // -ar/2 + ai*t
    mpfr_div(u.x, u.x, den.x, MPFR_RNDN);
    mpfr_add(sum_re.x, sum_re.x, u.x, MPFR_RNDN);
    mpfr_mul_d(v.x, ai.x, -0.5, MPFR_RNDN);
    mpfr_mul(ang.x, ar.x, tm.x, MPFR_RNDN);
    mpfr_sub(v.x, v.x, ang.x, MPFR_RNDN);  // -ai/2 - ar*t
    mpfr_div(v.x, v.x, den.x, MPFR_RNDN);
    mpfr_add(sum_im.x, sum_im.x, v.x, MPFR_RNDN);

    // Correction terms. Pochhammer (s)_{2k-1} by recurrence; N-power by *N^{-2}.
    Mp pr(prec), pi_(prec);  // pochhammer, complex
    mpfr_set_d(pr.x, 0.5, MPFR_RNDN);
    mpfr_set(pi_.x, tm.x, MPFR_RNDN);
    Mp qr(prec), qi(prec);  // N^{-s-1} then *= N^{-2}
    mpfr_mul(u.x, rsN.x, rsN.x, MPFR_RNDN);  // 1/N
    mpfr_mul(v.x, u.x, rsN.x, MPFR_RNDN);    // N^{-3/2}
    mpfr_mul(qr.x, v.x, csN.x, MPFR_RNDN);
    mpfr_mul(qi.x, v.x, snN.x, MPFR_RNDN);
    mpfr_neg(qi.x, qi.x, MPFR_RNDN);
    Mp n2(prec);
    mpfr_mul(n2.x, u.x, u.x, MPFR_RNDN);  // N^{-2}
    Mp coef(prec), tp(prec), zk(prec);
    mpfr_const_pi(tp.x, MPFR_RNDN);
    mpfr_mul_ui(tp.x, tp.x, 2, MPFR_RNDN);
    mpfr_mul(tp.x, tp.x, tp.x, MPFR_RNDN);  // (2pi)^2, maintained as (2pi)^{2k}
    Mp tw(prec);
    mpfr_set(tw.x, tp.x, MPFR_RNDN);
    Mp tr2(prec), ti2(prec), mag(prec);
    double prev_mag = HUGE_VAL;
    double achieved = HUGE_VAL;
    const int kmax = 400;
    for (int k = 1; k <= kmax; ++k) {
        if (k > 1) {
            // pochhammer *= (s+2k-3)(s+2k-2)
            for (int j = 2 * k - 3; j <= 2 * k - 2; ++j) {
                const double re_add = 0.5 + j;
                mpfr_mul_d(u.x, pr.x, re_add, MPFR_RNDN);
                mpfr_mul(v.x, pi_.x, tm.x, MPFR_RNDN);
                mpfr_sub(u.x, u.x, v.x, MPFR_RNDN);
                mpfr_mul_d(v.x, pi_.x, re_add, MPFR_RNDN);
                mpfr_fma(v.x, pr.x, tm.x, v.x, MPFR_RNDN);
                mpfr_set(pr.x, u.x, MPFR_RNDN);
                mpfr_set(pi_.x, v.x, MPFR_RNDN);
            }
            mpfr_mul(qr.x, qr.x, n2.x, MPFR_RNDN);
            mpfr_mul(qi.x, qi.x, n2.x, MPFR_RNDN);
            mpfr_mul(tw.x, tw.x, tp.x, MPFR_RNDN);
        }
        // coef = (-1)^{k+1} * 2 zeta(2k) / (2pi)^{2k}
        mpfr_zeta_ui(zk.x, static_cast<unsigned long>(2 * k), MPFR_RNDN);
        mpfr_mul_ui(coef.x, zk.x, 2, MPFR_RNDN);
        mpfr_div(coef.x, coef.x, tw.x, MPFR_RNDN);
        if (k % 2 == 0) mpfr_neg(coef.x, coef.x, MPFR_RNDN);
        // term = coef * (pr,pi) * (qr,qi)
        mpfr_mul(tr2.x, pr.x, qr.x, MPFR_RNDN);
        mpfr_mul(u.x, pi_.x, qi.x, MPFR_RNDN);
        mpfr_sub(tr2.x, tr2.x, u.x, MPFR_RNDN);
        mpfr_mul(ti2.x, pr.x, qi.x, MPFR_RNDN);
        mpfr_fma(ti2.x, pi_.x, qr.x, ti2.x, MPFR_RNDN);
        mpfr_mul(tr2.x, tr2.x, coef.x, MPFR_RNDN);
        mpfr_mul(ti2.x, ti2.x, coef.x, MPFR_RNDN);
        // |term| and the remainder bound |T_k| * |s+2k-1| / (1/2 + 2k-1)
        mpfr_hypot(mag.x, tr2.x, ti2.x, MPFR_RNDN);
        const double m = mpfr_get_d(mag.x, MPFR_RNDN);
        const double sig = 0.5 + (2 * k - 1);
        const double factor = std::sqrt(sig * sig + t * t) / sig;
        if (m * factor < eps) {
            achieved = m * factor;
            break;  // remainder covered without adding T_k
        }
        if (k > 6 && m > prev_mag)
            throw std::runtime_error("z_oracle: Euler–Maclaurin tail not contracting");
        prev_mag = m;
        mpfr_add(sum_re.x, sum_re.x, tr2.x, MPFR_RNDN);
        mpfr_add(sum_im.x, sum_im.x, ti2.x, MPFR_RNDN);
        if (k == kmax)
            throw std::runtime_error("z_oracle: Euler–Maclaurin tail did not converge");
    }
    mpfr_set(zre, sum_re.x, MPFR_RNDN);
    mpfr_set(zim, sum_im.x, MPFR_RNDN);
    return achieved;
}

// log Gamma(z), z = x + iy with x > 0, into (lre, lim); principal branch.
void stirling_loggamma(double x, double y, int digits, mpfr_prec_t prec, mpfr_t lre,
                       mpfr_t lim) {
    const double L = std::max(12.0, 0.53 * digits + 8.0);
    const double r0 = std::hypot(x, y);
    const unsigned long J = r0 >= L ? 0 : static_cast<unsigned long>(std::ceil(L - x));

    Mp wr(prec), wi(prec), u(prec), v(prec), a(prec), b(prec);
    mpfr_set_d(wr.x, x, MPFR_RNDN);
    mpfr_add_ui(wr.x, wr.x, J, MPFR_RNDN);
    mpfr_set_d(wi.x, y, MPFR_RNDN);

    // log w (principal): 0.5 log(wr^2+wi^2) + i atan2(wi, wr)
    auto clog = [&](mpfr_ptr re_in, mpfr_ptr im_in, mpfr_ptr re_out, mpfr_ptr im_out) {
        mpfr_mul(u.x, re_in, re_in, MPFR_RNDN);
        mpfr_fma(u.x, im_in, im_in, u.x, MPFR_RNDN);
        mpfr_log(u.x, u.x, MPFR_RNDN);
        mpfr_div_ui(re_out, u.x, 2, MPFR_RNDN);
        mpfr_atan2(im_out, im_in, re_in, MPFR_RNDN);
    };

    Mp lr(prec), li(prec);
    clog(wr.x, wi.x, lr.x, li.x);

    // (w - 1/2) log w - w + (1/2) log(2 pi)
    Mp rr(prec), ri(prec);
    mpfr_sub_d(u.x, wr.x, 0.5, MPFR_RNDN);
    mpfr_mul(rr.x, u.x, lr.x, MPFR_RNDN);
    mpfr_mul(v.x, wi.x, li.x, MPFR_RNDN);
    mpfr_sub(rr.x, rr.x, v.x, MPFR_RNDN);
    mpfr_mul(ri.x, u.x, li.x, MPFR_RNDN);
    mpfr_fma(ri.x, wi.x, lr.x, ri.x, MPFR_RNDN);
    mpfr_sub(rr.x, rr.x, wr.x, MPFR_RNDN);
    mpfr_sub(ri.x, ri.x, wi.x, MPFR_RNDN);
    mpfr_const_pi(u.x, MPFR_RNDN);
    mpfr_mul_ui(u.x, u.x, 2, MPFR_RNDN);
    mpfr_log(u.x, u.x, MPFR_RNDN);
    mpfr_div_ui(u.x, u.x, 2, MPFR_RNDN);
    mpfr_add(rr.x, rr.x, u.x, MPFR_RNDN);

    // + sum_j B_{2j} / ((2j)(2j-1) w^{2j-1}), B_{2j} via zeta(2j).
    // winv = 1/w; p = w^{-(2j-1)} maintained by p *= winv^2.
    Mp den(prec), vr(prec), vi(prec), p2r(prec), p2i(prec), pr(prec), pi_(prec);
    mpfr_mul(den.x, wr.x, wr.x, MPFR_RNDN);
    mpfr_fma(den.x, wi.x, wi.x, den.x, MPFR_RNDN);
    mpfr_div(vr.x, wr.x, den.x, MPFR_RNDN);
    mpfr_div(vi.x, wi.x, den.x, MPFR_RNDN);
    mpfr_neg(vi.x, vi.x, MPFR_RNDN);
    mpfr_set(pr.x, vr.x, MPFR_RNDN);
    mpfr_set(pi_.x, vi.x, MPFR_RNDN);
    // winv^2
    mpfr_mul(p2r.x, vr.x, vr.x, MPFR_RNDN);
    mpfr_mul(u.x, vi.x, vi.x, MPFR_RNDN);
    mpfr_sub(p2r.x, p2r.x, u.x, MPFR_RNDN);
    mpfr_mul(p2i.x, vr.x, vi.x, MPFR_RNDN);
    mpfr_mul_ui(p2i.x, p2i.x, 2, MPFR_RNDN);

    Mp tp(prec), tw(prec), zj(prec), fac(prec), coef(prec);
    mpfr_const_pi(tp.x, MPFR_RNDN);
    mpfr_mul_ui(tp.x, tp.x, 2, MPFR_RNDN);
    mpfr_mul(tp.x, tp.x, tp.x, MPFR_RNDN);  // (2pi)^2
    mpfr_set(tw.x, tp.x, MPFR_RNDN);
    const double eps = std::pow(10.0, -(digits + 4));
    double prev = HUGE_VAL;
    for (int j = 1; j <= 300; ++j) {
        if (j > 1) {
            // p *= winv^2
            mpfr_mul(u.x, pr.x, p2r.x, MPFR_RNDN);
            mpfr_mul(v.x, pi_.x, p2i.x, MPFR_RNDN);
            mpfr_sub(u.x, u.x, v.x, MPFR_RNDN);
            mpfr_mul(v.x, pr.x, p2i.x, MPFR_RNDN);
            mpfr_fma(v.x, pi_.x, p2r.x, v.x, MPFR_RNDN);
            mpfr_set(pr.x, u.x, MPFR_RNDN);
            mpfr_set(pi_.x, v.x, MPFR_RNDN);
            mpfr_mul(tw.x, tw.x, tp.x, MPFR_RNDN);
        }
        // B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2pi)^{2j}
        mpfr_zeta_ui(zj.x, static_cast<unsigned long>(2 * j), MPFR_RNDN);
        mpfr_fac_ui(fac.x, static_cast<unsigned long>(2 * j), MPFR_RNDN);
        mpfr_mul(coef.x, zj.x, fac.x, MPFR_RNDN);
        mpfr_mul_ui(coef.x, coef.x, 2, MPFR_RNDN);
        mpfr_div(coef.x, coef.x, tw.x, MPFR_RNDN);
        if (j % 2 == 0) mpfr_neg(coef.x, coef.x, MPFR_RNDN);
        mpfr_div_ui(coef.x, coef.x, static_cast<unsigned long>(2 * j), MPFR_RNDN);
        mpfr_div_ui(coef.x, coef.x, static_cast<unsigned long>(2 * j - 1), MPFR_RNDN);
        mpfr_mul(a.x, coef.x, pr.x, MPFR_RNDN);
        mpfr_mul(b.x, coef.x, pi_.x, MPFR_RNDN);
        mpfr_hypot(u.x, a.x, b.x, MPFR_RNDN);
        const double m = mpfr_get_d(u.x, MPFR_RNDN);
        if (m > prev) break;  // asymptotic series: stop at smallest term
        mpfr_add(rr.x, rr.x, a.x, MPFR_RNDN);
        mpfr_add(ri.x, ri.x, b.x, MPFR_RNDN);
        if (m < eps) break;
        prev = m;
    }

    // - sum_{i=0}^{J-1} log(z + i)
    Mp zr(prec), zi(prec), cr(prec), ci(prec);
    mpfr_set_d(zi.x, y, MPFR_RNDN);
    for (unsigned long i = 0; i < J; ++i) {
        mpfr_set_d(zr.x, x, MPFR_RNDN);
        mpfr_add_ui(zr.x, zr.x, i, MPFR_RNDN);
        clog(zr.x, zi.x, cr.x, ci.x);
        mpfr_sub(rr.x, rr.x, cr.x, MPFR_RNDN);
        mpfr_sub(ri.x, ri.x, ci.x, MPFR_RNDN);
    }
    mpfr_set(lre, rr.x, MPFR_RNDN);
    mpfr_set(lim, ri.x, MPFR_RNDN);
}

// theta(|t|) in mpfr: Im log Gamma(1/4 + i|t|/2) - (|t|/2) log pi.
void theta_mpfr(double t_abs, int digits, mpfr_prec_t prec, mpfr_t out) {
    Mp lre(prec), lim(prec), u(prec);
    stirling_loggamma(0.25, 0.5 * t_abs, digits, prec, lre.x, lim.x);
    mpfr_const_pi(u.x, MPFR_RNDN);
    mpfr_log(u.x, u.x, MPFR_RNDN);
    mpfr_mul_d(u.x, u.x, 0.5 * t_abs, MPFR_RNDN);
    mpfr_sub(out, lim.x, u.x, MPFR_RNDN);
}

void check_digits(int digits) {
    if (digits < 1 || digits > 50)
        throw std::domain_error("oracle: digits must be in [1, 50]");
}

}  // namespace

OracleDiag z_oracle_diag(double t, int digits) {
    check_digits(digits);
    const double a = std::abs(t);
    const mpfr_prec_t prec = prec_for(digits, a);
    Mp zre(prec), zim(prec), th(prec), sn(prec), cs(prec), u(prec), v(prec);
    mpfr_set_zero(zre.x, 1);
    mpfr_set_zero(zim.x, 1);
    const double tail = em_zeta_half(a, digits, prec, zre.x, zim.x);
    theta_mpfr(a, digits, prec, th.x);
    mpfr_sin_cos(sn.x, cs.x, th.x, MPFR_RNDN);
    // Z = Re[(cos + i sin)(zre + i zim)] = cos*zre - sin*zim
    mpfr_mul(u.x, cs.x, zre.x, MPFR_RNDN);
    mpfr_mul(v.x, sn.x, zim.x, MPFR_RNDN);
    mpfr_sub(u.x, u.x, v.x, MPFR_RNDN);
    OracleDiag d;
    d.value = mpfr_get_d(u.x, MPFR_RNDN);
    mpfr_mul(u.x, cs.x, zim.x, MPFR_RNDN);
    mpfr_fma(u.x, sn.x, zre.x, u.x, MPFR_RNDN);
    d.imag_mag = std::abs(mpfr_get_d(u.x, MPFR_RNDN));
    d.tail_bound = tail;
    return d;
}

ZValue z_oracle(double t, int digits) {
    const OracleDiag d = z_oracle_diag(t, digits);
    const double err = std::pow(10.0, -digits) * std::max(1.0, std::abs(d.value));
    return {d.value, err, Method::Oracle};
}

ZetaValue zeta_half_oracle(double t, int digits) {
    check_digits(digits);
    const double a = std::abs(t);
    const mpfr_prec_t prec = prec_for(digits, a);
    Mp zre(prec), zim(prec);
    mpfr_set_zero(zre.x, 1);
    mpfr_set_zero(zim.x, 1);
    em_zeta_half(a, digits, prec, zre.x, zim.x);
    std::complex<double> z{mpfr_get_d(zre.x, MPFR_RNDN), mpfr_get_d(zim.x, MPFR_RNDN)};
    if (t < 0.0) z = std::conj(z);
    const double err = std::pow(10.0, -digits) * std::max(1.0, std::abs(z));
    return {z, err, Method::Oracle};
}

double theta_oracle(double t, int digits) {
    check_digits(digits);
    if (t == 0.0) return 0.0;
    const double a = std::abs(t);
    const mpfr_prec_t prec = prec_for(digits, a);
    Mp th(prec);
    theta_mpfr(a, digits, prec, th.x);
    const double v = mpfr_get_d(th.x, MPFR_RNDN);
    return t < 0.0 ? -v : v;
}

}  // namespace zhardy
