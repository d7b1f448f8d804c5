#include "kdvd/propagator.hpp"

#include <algorithm>
#include <cmath>

#include "kdvd/airy.hpp"

namespace kdvd {

namespace {

constexpr double kKernelWindow = 80.0;   // kernel argument cutoff
constexpr double kTaperPeriods = 4.0;    // oscillations averaged at the cutoff
constexpr double kTailFractionWarn = 1e-6;

// Kernel of e^{i t xi^3} for t > 0, with the averaged-truncation taper.
// K(u) = s^{-1} Ai(u/s), s = (3t)^{1/3}, tapered to zero linearly on the
// oscillatory side over the last kTaperPeriods periods before |u/s| = 80.
struct KdvKernel {
    double s;
    double taper_hi = kKernelWindow;
    double taper_lo;
    KdvKernel(double t) : s(std::cbrt(3.0 * t)) {
        double period = 2.0 * M_PI / std::sqrt(kKernelWindow);
        taper_lo = kKernelWindow - kTaperPeriods * period;
    }
    double operator()(double u) const {
        double a = u / s;
        if (std::abs(a) > kKernelWindow) return 0.0;
        double k = airy_ai(a).value / s;
        if (a < -taper_lo) k *= (taper_hi - std::abs(a)) / (taper_hi - taper_lo);
        return k;
    }
};

// Index range [lo, hi] of samples that matter: |f| above 1e-18 of its max.
// Omitted samples contribute below 1e-16 of the result.
std::pair<int, int> support_window(const GridFunction& f) {
    double mx = 0.0;
    for (const cplx& v : f.values) mx = std::max(mx, std::abs(v));
    const double thresh = 1e-18 * mx;
    int lo = 0, hi = f.size() - 1;
    while (lo < hi && std::abs(f.values[lo]) <= thresh) ++lo;
    while (hi > lo && std::abs(f.values[hi]) <= thresh) --hi;
    return {lo, hi};
}

GridFunction conv_kdv_positive_t(const GridFunction& f, double t) {
    const KdvKernel kernel(t);
    const double h = f.spec.spacing();
    auto [lo, hi] = support_window(f);
    const int m_max = static_cast<int>(std::ceil(kKernelWindow * kernel.s / h));
    // kernel table by offset, reused across output points
    std::vector<double> ktab(2 * m_max + 1);
    for (int m = -m_max; m <= m_max; ++m) ktab[m + m_max] = kernel(m * h);
    GridFunction out(f.spec);
    const int n = f.size();
    for (int j = 0; j < n; ++j) {
        int a = std::max(lo, j - m_max), b = std::min(hi, j + m_max);
        cplx acc(0.0, 0.0);
        for (int k = a; k <= b; ++k) acc += ktab[j - k + m_max] * f.values[k];
        out.values[j] = h * acc;
    }
    return out;
}

GridFunction conj_of(const GridFunction& f) {
    GridFunction g(f.spec);
    for (int j = 0; j < f.size(); ++j) g.values[j] = std::conj(f.values[j]);
    return g;
}

} // namespace

GridFunction kdv_group(const GridFunction& f, const PropagatorParams& params) {
    f.validate();
    if (params.method == PropagatorMethod::spectral) {
        const double t = params.t;
        return apply_multiplier(f, [t](double xi) {
            return std::polar(1.0, t * xi * xi * xi);
        });
    }
    if (params.t == 0.0)
        throw parameter_error("kdv_group: airy_convolution requires t != 0 (kernel scale is (3t)^{1/3})");
    if (params.t > 0.0) return conv_kdv_positive_t(f, params.t);
    // U(-t) f = conj( U(t) conj(f) ), single kernel code path
    GridFunction g = conv_kdv_positive_t(conj_of(f), -params.t);
    return conj_of(g);
}

GridFunction schrodinger_group(const GridFunction& f, double t) {
    f.validate();
    return apply_multiplier(f, [t](double xi) { return std::polar(1.0, t * xi * xi); });
}

JResult j_operator(const GridFunction& f, double t, GroupKind group) {
    f.validate();
    auto backward = [&](const GridFunction& g) {
        if (group == GroupKind::kdv)
            return kdv_group(g, {-t, PropagatorMethod::spectral});
        return schrodinger_group(g, -t);
    };
    auto forward = [&](const GridFunction& g) {
        if (group == GroupKind::kdv)
            return kdv_group(g, {t, PropagatorMethod::spectral});
        return schrodinger_group(g, t);
    };
    JResult result;
    GridFunction mid = backward(f);
    BoundaryMassReport bm = boundary_mass(mid);
    if (bm.tail_fraction > kTailFractionWarn) {
        result.warnings.push_back(
            {"truncation", "boundary mass after U(-t): tail_fraction = " + std::to_string(bm.tail_fraction)});
    }
    result.value = forward(multiply_by_x(mid));
    return result;
}

std::vector<cplx> kdv_group_at_points(const GridFunction& f, double t,
                                      const std::vector<double>& points) {
    f.validate();
    if (t == 0.0) throw parameter_error("kdv_group_at_points: t != 0 required");
    const bool neg = t < 0.0;
    const KdvKernel kernel(neg ? -t : t);
    const double h = f.spec.spacing();
    auto [lo, hi] = support_window(f);
    std::vector<cplx> out;
    out.reserve(points.size());
    for (double x : points) {
        cplx acc(0.0, 0.0);
        for (int k = lo; k <= hi; ++k) {
            double kv = kernel(x - f.spec.x(k));
            if (kv != 0.0) acc += kv * (neg ? std::conj(f.values[k]) : f.values[k]);
        }
        acc *= h;
        out.push_back(neg ? std::conj(acc) : acc);
    }
    return out;
}

} // namespace kdvd
