#include "kdvd/airy.hpp"

#include <cmath>
#include <vector>

#include "kdvd/errors.hpp"

namespace kdvd {

namespace {

// ---------------------------------------------------------------------------
// Minimal double-double arithmetic (~31 significant digits), enough to pay
// for the e^{2|z|^{3/2}/3} cancellation of the Maclaurin series up to |z| = 9.
// ---------------------------------------------------------------------------

struct dd {
    double hi = 0.0, lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul_d(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div_d(dd a, double b) {
    double q1 = a.hi / b;
    dd p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo) + a.lo;
    double q2 = r / b;
    return quick_two_sum(q1, q2);
}

// Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3), split into
// hi/lo pairs so the series assembly stays at double-double accuracy.
const dd kAi0 = {0.3550280538878172, 2.05233632436212e-17};
const dd kAip0 = {0.2588194037928068, -2.522243111610832e-17};

// ---------------------------------------------------------------------------
// Maclaurin series, |z| <= 9. The four standard series
//   f  = sum 3^k (1/3)_k z^{3k} /(3k)!        g  = sum 3^k (2/3)_k z^{3k+1}/(3k+1)!
//   f' = sum 3^k (1/3)_k z^{3k-1}/(3k-1)!     g' = sum 3^k (2/3)_k z^{3k}  /(3k)!
// with Ai = Ai(0) f - |Ai'(0)| g and likewise for the derivative.
// ---------------------------------------------------------------------------

struct SeriesResult {
    double value, derivative, err;
};

SeriesResult airy_series(double z) {
    dd z2 = two_prod(z, z);
    dd z3 = dd_mul_d(z2, z);

    dd f = {1.0, 0.0}, tf = {1.0, 0.0};
    dd g = {z, 0.0}, tg = {z, 0.0};
    dd fp = {0.0, 0.0}, tfp = {1.0, 0.0}; // f' term seeded at k=1 below
    dd gp = {1.0, 0.0}, tgp = {1.0, 0.0};

    // f' = z^2/2 + ...
    tfp = dd_div_d(z2, 2.0);
    fp = tfp;

    double magf = 1.0, magg = std::abs(z);
    for (int k = 0; k < 200; ++k) {
        tf = dd_div_d(dd_mul(tf, z3), (3.0 * k + 2.0) * (3.0 * k + 3.0));
        tg = dd_div_d(dd_mul(tg, z3), (3.0 * k + 3.0) * (3.0 * k + 4.0));
        tgp = dd_div_d(dd_mul(tgp, z3), (3.0 * k + 1.0) * (3.0 * k + 3.0));
        if (k >= 1) tfp = dd_div_d(dd_mul(tfp, z3), (3.0 * k) * (3.0 * k + 2.0));
        f = dd_add(f, tf);
        g = dd_add(g, tg);
        gp = dd_add(gp, tgp);
        if (k >= 1) fp = dd_add(fp, tfp);
        magf = std::max(magf, std::abs(tf.hi));
        magg = std::max(magg, std::abs(tg.hi));
        double scale = std::max({std::abs(f.hi), std::abs(g.hi), 1.0});
        if (std::abs(tf.hi) < 1e-40 * scale && std::abs(tg.hi) < 1e-40 * scale) break;
    }

    dd ai = dd_add(dd_mul(kAi0, f), dd_mul_d(dd_mul(kAip0, g), -1.0));
    dd aip = dd_add(dd_mul(kAi0, fp), dd_mul_d(dd_mul(kAip0, gp), -1.0));

    // Residual cancellation error ~ (iterations) * eps_dd * (largest term),
    // plus the final rounding to double.
    double err = 1e-29 * std::max(magf, magg) + 4e-16 * (std::abs(ai.hi) + std::abs(aip.hi)) + 1e-300;
    return {ai.hi, aip.hi, err};
}

// ---------------------------------------------------------------------------
// Asymptotic expansions, |z| > 9 (DLMF 9.7). Coefficients
//   u_0 = 1,  u_{k+1} = u_k (3k+5/2)(3k+3/2)(3k+1/2) / (54 (k+1)(k+1/2))
//   v_k = (6k+1)/(1-6k) u_k
// summed to the smallest term (well below 1e-16 relative for zeta >= 18).
// ---------------------------------------------------------------------------

struct UVTables {
    std::vector<double> u, v;
    UVTables() {
        u.resize(64);
        v.resize(64);
        u[0] = 1.0;
        v[0] = 1.0;
        for (int k = 0; k + 1 < 64; ++k) {
            double r = (3.0 * k + 2.5) * (3.0 * k + 1.5) * (3.0 * k + 0.5) /
                       (54.0 * (k + 1.0) * (k + 0.5));
            u[k + 1] = u[k] * r;
            v[k + 1] = (6.0 * (k + 1) + 1.0) / (1.0 - 6.0 * (k + 1)) * u[k + 1];
        }
    }
};

const UVTables& uv() {
    static const UVTables t;
    return t;
}

// sum_{k>=0} (-1)^k c_k / zeta^k, truncated at the smallest term; returns the
// magnitude of the first omitted term through *omitted.
double alt_sum(const std::vector<double>& c, double zeta, double* omitted) {
    double s = 0.0, prev = HUGE_VAL, sgn = 1.0, p = 1.0;
    std::size_t k = 0;
    for (; k < c.size(); ++k) {
        double t = c[k] * p;
        if (std::abs(t) > prev) break;
        s += sgn * t;
        prev = std::abs(t);
        sgn = -sgn;
        p /= zeta;
        if (prev < 1e-20 * std::abs(s)) {
            ++k;
            break;
        }
    }
    *omitted = (k < c.size()) ? std::abs(c[k] / std::pow(zeta, static_cast<double>(k))) : prev;
    return s;
}

// sum_{k>=0} (-1)^k c_{2k+start} / zeta^{2k+start}
double alt_sum_stride2(const std::vector<double>& c, double zeta, int start, double* omitted) {
    double s = 0.0, prev = HUGE_VAL, sgn = 1.0;
    std::size_t idx = start;
    for (; idx < c.size(); idx += 2) {
        double t = c[idx] / std::pow(zeta, static_cast<double>(idx));
        if (std::abs(t) > prev) break;
        s += sgn * t;
        prev = std::abs(t);
        sgn = -sgn;
        if (prev < 1e-20 * std::abs(s)) {
            idx += 2;
            break;
        }
    }
    *omitted = (idx < c.size()) ? std::abs(c[idx] / std::pow(zeta, static_cast<double>(idx))) : prev;
    return s;
}

SeriesResult airy_asymptotic(double z) {
    const double sqrt_pi = std::sqrt(M_PI);
    if (z > 0) {
        double zeta = 2.0 / 3.0 * z * std::sqrt(z);
        double om_u = 0.0, om_v = 0.0;
        double su = alt_sum(uv().u, zeta, &om_u);
        double sv = alt_sum(uv().v, zeta, &om_v);
        double pre = std::exp(-zeta) / (2.0 * sqrt_pi * std::pow(z, 0.25));
        double ai = pre * su;
        double aip = -std::pow(z, 0.25) * std::exp(-zeta) / (2.0 * sqrt_pi) * sv;
        double err = pre * (om_u + om_v * z) + 4e-16 * (std::abs(ai) + std::abs(aip)) + 1e-300;
        return {ai, aip, err};
    }
    double w = -z;
    double zeta = 2.0 / 3.0 * w * std::sqrt(w);
    double o1, o2, o3, o4;
    double P = alt_sum_stride2(uv().u, zeta, 0, &o1);
    double Q = alt_sum_stride2(uv().u, zeta, 1, &o2);
    double R = alt_sum_stride2(uv().v, zeta, 0, &o3);
    double S = alt_sum_stride2(uv().v, zeta, 1, &o4);
    double cz = std::cos(zeta - M_PI / 4.0);
    double sz = std::sin(zeta - M_PI / 4.0);
    double w4 = std::pow(w, 0.25);
    double ai = (cz * P + sz * Q) / (sqrt_pi * w4);
    double aip = (sz * R - cz * S) * w4 / sqrt_pi;
    // omitted terms plus the phase rounding eps*zeta on the oscillatory side
    double env = 1.0 / (sqrt_pi * w4);
    double err = env * (o1 + o2) + w4 / sqrt_pi * (o3 + o4) +
                 1.2e-16 * zeta * (env + w4 / sqrt_pi) + 4e-16 * (std::abs(ai) + std::abs(aip));
    return {ai, aip, err};
}

constexpr double kSeriesRadius = 9.0;
constexpr double kMaxArgument = 1000.0;

} // namespace

AiryEvaluation airy_ai(double z) {
    if (!std::isfinite(z) || std::abs(z) > kMaxArgument)
        throw range_error("airy_ai: argument out of documented range |z| <= 1000");
    SeriesResult r = (std::abs(z) <= kSeriesRadius) ? airy_series(z) : airy_asymptotic(z);
    return {z, r.value, r.derivative, r.err};
}

AiryExtremum find_airy_max() {
    // dense scan
    const double lo = -20.0, hi = 5.0, step = 1e-3;
    double best_x = lo, best = -1.0;
    for (double x = lo; x <= hi; x += step) {
        double a = std::abs(airy_ai(x).value);
        if (a > best) {
            best = a;
            best_x = x;
        }
    }
    // golden-section refinement of |Ai| on [best_x - step, best_x + step]
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = best_x - step, b = best_x + step;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = std::abs(airy_ai(c).value), fd = std::abs(airy_ai(d).value);
    while (b - a > 1e-12) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = std::abs(airy_ai(c).value);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = std::abs(airy_ai(d).value);
        }
    }
    double x0 = 0.5 * (a + b);
    // Value-based golden section stalls at |x - x0| ~ sqrt(eps) on the flat
    // quadratic top; polish the critical point with Newton on Ai', using the
    // defining ODE Ai'' = x Ai for the second derivative.
    for (int i = 0; i < 4; ++i) {
        AiryEvaluation e = airy_ai(x0);
        double second = x0 * e.value;
        if (second == 0.0) break;
        x0 -= e.derivative / second;
    }
    AiryExtremum ext;
    ext.x0 = x0;
    ext.ai_max = std::abs(airy_ai(x0).value);
    ext.sharp_constant = 2.0 * ext.ai_max * ext.ai_max;
    return ext;
}

DecayEnvelopes verify_decay_envelopes(double x_min, double x_max, int samples) {
    if (!(x_min < x_max)) throw parameter_error("verify_decay_envelopes: x_min < x_max required");
    if (samples < 100) throw parameter_error("verify_decay_envelopes: samples >= 100 required");
    DecayEnvelopes env;
    const double step = (x_max - x_min) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        double x = x_min + step * i;
        AiryEvaluation e = airy_ai(x);
        double wplus = std::pow(1.0 + std::abs(x), 0.25);
        env.c_ai = std::max(env.c_ai, std::abs(e.value) * wplus);
        env.c_ai_prime = std::max(env.c_ai_prime, std::abs(e.derivative) / wplus);
    }
    return env;
}

} // namespace kdvd
