#include "kdvd/hilbert.hpp"

#include <cmath>

namespace kdvd {

namespace {

GridFunction multiplier_hilbert(const GridFunction& f) {
    const double nyquist = f.spec.xi(-f.spec.n_points / 2);
    return apply_multiplier(f, [nyquist](double xi) -> cplx {
        if (xi == 0.0 || xi == nyquist) return {0.0, 0.0};
        return {0.0, xi > 0.0 ? -1.0 : 1.0}; // -i sgn(xi)
    });
}

// Discrete PV sum (1/pi) h sum_{j != k} f_j / (x_k - x_j), evaluated as a
// zero-padded convolution with the kernel 1/(pi m h).
GridFunction pv_hilbert(const GridFunction& f) {
    const int n = f.size();
    const int big = 2 * n;
    const double h = f.spec.spacing();
    std::vector<cplx> a(big), w(big);
    for (int j = 0; j < n; ++j) a[j] = f.values[j];
    for (int m = 1; m < n; ++m) {
        w[m] = cplx(1.0 / (M_PI * m * h), 0.0);
        w[big - m] = cplx(-1.0 / (M_PI * m * h), 0.0);
    }
    std::vector<cplx> conv = circular_convolution(a, w, h);
    GridFunction out(f.spec);
    for (int k = 0; k < n; ++k) out.values[k] = conv[k];
    return out;
}

} // namespace

double WeightFamily::omega(double y) const { return 1.0 / std::sqrt(1.0 + std::abs(center - y)); }
double WeightFamily::omega_inverse(double y) const { return std::sqrt(1.0 + std::abs(center - y)); }

GridFunction hilbert_transform(const GridFunction& f, HilbertMethod method) {
    f.validate();
    return method == HilbertMethod::multiplier ? multiplier_hilbert(f) : pv_hilbert(f);
}

GridFunction line_hilbert_transform(const GridFunction& f, int pad_factor) {
    f.validate();
    if (pad_factor < 2 || (pad_factor & (pad_factor - 1)) != 0)
        throw parameter_error("line_hilbert_transform: pad_factor must be a power of two >= 2");
    const int n = f.size();
    const int big = n * pad_factor;
    GridSpec big_spec(f.spec.half_width * pad_factor, big);
    GridFunction fb(big_spec);
    const int off = (big - n) / 2; // same physical x positions, centered
    for (int j = 0; j < n; ++j) fb.values[off + j] = f.values[j];
    GridFunction hb = multiplier_hilbert(fb);
    GridFunction out(f.spec);
    for (int j = 0; j < n; ++j) out.values[j] = hb.values[off + j];
    return out;
}

EstimateReport verify_isometry(const GridFunction& f) {
    f.validate();
    GridFunction hf = hilbert_transform(f, HilbertMethod::multiplier);
    // mean-free, Nyquist-free part
    const int n = f.spec.n_points;
    const double nyquist = f.spec.xi(-n / 2);
    GridFunction f0 = apply_multiplier(f, [nyquist](double xi) -> cplx {
        if (xi == 0.0 || xi == nyquist) return {0.0, 0.0};
        return {1.0, 0.0};
    });
    double d = norm_l2(f0);
    EstimateReport r = EstimateReport::make("hilbert_isometry", norm_l2(hf), d, 1.0, 0.0);
    if (d == 0.0 || d < 1e-14 * norm_l2(f)) {
        r.metadata["degenerate"] = "zero mean-free part";
        r.ratio = 0.0;
        r.passes = false;
    }
    return r;
}

double weighted_bound_ratio(const GridFunction& f, const WeightFamily& w) {
    f.validate();
    GridFunction hf = hilbert_transform(f, HilbertMethod::multiplier);
    double num = 0.0, den = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        double wi = w.omega_inverse(f.spec.x(j));
        num += std::norm(hf.values[j]) * wi;
        den += std::norm(f.values[j]) * wi;
    }
    if (den <= 0.0) throw degenerate_input_error("weighted_bound_ratio: zero weighted mass");
    return num / den;
}

} // namespace kdvd
