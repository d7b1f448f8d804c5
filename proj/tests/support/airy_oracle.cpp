#include "airy_oracle.hpp"

#include <cmath>
#include <vector>

namespace kdvd_tests {

namespace {

// 32-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr int kGL = 32;
struct GLTable {
    double x[kGL], w[kGL];
    GLTable() {
        // Newton iteration on Legendre P_32
        for (int i = 0; i < kGL / 2; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (kGL + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= kGL; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = kGL * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= kGL; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = kGL * (t * p1 - p0) / (t * t - 1.0);
            x[i] = -t;
            x[kGL - 1 - i] = t;
            w[i] = w[kGL - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};
const GLTable gl;

double phase(double xi, double z) { return xi * xi * xi / 3.0 + z * xi; }

double cell(double a, double b, double z, bool deriv) {
    double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < kGL; ++i) {
        double xi = mid + rad * gl.x[i];
        double f = deriv ? -xi * std::sin(phase(xi, z)) : std::cos(phase(xi, z));
        s += gl.w[i] * f;
    }
    return rad * s;
}

// xi with phase(xi) = target on the monotone branch [lo, hi]
double solve_phase(double target, double z, double lo, double hi) {
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
        double mid = 0.5 * (lo + hi);
        (phase(mid, z) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double oracle(double z, bool deriv) {
    double start = 0.0, ph0 = 0.0;
    if (z < 0.0) {
        start = std::sqrt(-z); // stationary point of the phase
        ph0 = phase(start, z);
    }
    // first zero of the trig factor past the stationary region:
    // cos vanishes at pi/2 + k pi, sin at k pi
    const double off = deriv ? 0.0 : M_PI / 2.0;
    double t0 = off + std::ceil((ph0 - off) / M_PI) * M_PI;
    while (t0 <= ph0) t0 += M_PI;
    double hi = start + 1.0;
    while (phase(hi, z) < t0) hi *= 2.0;
    double a = solve_phase(t0, z, start, hi);

    // head [0, a]: panels short enough that the phase varies by <= ~2
    double head = 0.0, lo = 0.0;
    while (lo < a) {
        double freq = std::max(std::abs(lo * lo + z), 1.0);
        double step = std::min({a - lo, 0.5, 3.0 / std::sqrt(freq)});
        while (std::abs(phase(lo + step, z) - phase(lo, z)) > 2.0 && step > 1e-12) step *= 0.5;
        head += cell(lo, lo + step, z, deriv);
        lo += step;
    }

    // alternating half-oscillation cells, accelerated
    const int nterms = 40;
    std::vector<double> b(nterms);
    double t = t0, x_lo = a, sign0 = 0.0;
    for (int k = 0; k < nterms; ++k) {
        t += M_PI;
        double h2 = x_lo + 1.0;
        while (phase(h2, z) < t) h2 *= 2.0;
        double x_hi = solve_phase(t, z, x_lo, h2);
        double v = cell(x_lo, x_hi, z, deriv);
        if (k == 0) sign0 = v >= 0.0 ? 1.0 : -1.0;
        b[k] = std::abs(v);
        x_lo = x_hi;
    }
    double tail = sign0 * sumalt(b.data(), nterms);
    return (head + tail) / M_PI;
}

} // namespace

double sumalt(const double* b, int n) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double bb = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = bb - c;
        s += c * b[k];
        bb = (k + n) * (k - n) * bb / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

double airy_oracle_value(double z) { return oracle(z, false); }
double airy_oracle_derivative(double z) { return oracle(z, true); }

} // namespace kdvd_tests
