#include "kdvd/family.hpp"

#include <cmath>

#include "kdvd/estimates.hpp"

namespace kdvd {

double Rng::uniform(double a, double b) {
    double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(0.0, 1.0), u2 = uniform(0.0, 1.0);
    while (u1 <= 1e-300) u1 = uniform(0.0, 1.0);
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

namespace {

void add_gaussians(std::vector<FamilyMember>& out) {
    for (double w : {0.25, 1.0, 4.0}) {
        out.push_back({"gaussian_w" + std::to_string(w).substr(0, 4),
                       [w](double x) { return cplx(std::exp(-x * x / (2.0 * w * w)), 0.0); },
                       6.5 / w});
    }
}

void add_bumps(std::vector<FamilyMember>& out) {
    SmoothBump b = bump_function();
    for (double c : {-6.0, 0.0, 5.0}) {
        out.push_back({"bump_c" + std::to_string(static_cast<int>(c)),
                       [b, c](double x) { return cplx(b(x - c), 0.0); }, 16.0});
    }
}

void add_random(std::vector<FamilyMember>& out, std::uint64_t seed) {
    for (int i = 0; i < 3; ++i) {
        Rng rng(seed + 1000 * static_cast<std::uint64_t>(i));
        std::vector<double> ks;
        std::vector<cplx> cs;
        for (int m = 0; m < 8; ++m) {
            ks.push_back(rng.uniform(0.2, 2.0));
            cs.push_back(cplx(rng.gaussian(), rng.gaussian()));
        }
        out.push_back({"random_bandlimited_" + std::to_string(i),
                       [ks, cs](double x) {
                           cplx s(0.0, 0.0);
                           for (std::size_t m = 0; m < ks.size(); ++m)
                               s += cs[m] * std::polar(1.0, ks[m] * x);
                           return cplx(s.real(), 0.0) * std::exp(-x * x / 200.0);
                       },
                       3.0});
    }
}

void add_modulated(std::vector<FamilyMember>& out) {
    for (double k : {0.5, 1.0, 1.5}) {
        out.push_back({"modulated_k" + std::to_string(k).substr(0, 3),
                       [k](double x) { return std::polar(std::exp(-x * x), k * x); }, k + 6.5});
    }
}

} // namespace

std::vector<FamilyMember> standard_family(TestFamilyKind kind, std::uint64_t seed) {
    std::vector<FamilyMember> out;
    switch (kind) {
        case TestFamilyKind::gaussians: add_gaussians(out); break;
        case TestFamilyKind::bumps: add_bumps(out); break;
        case TestFamilyKind::random_bandlimited: add_random(out, seed); break;
        case TestFamilyKind::modulated: add_modulated(out); break;
        case TestFamilyKind::all:
            add_gaussians(out);
            add_bumps(out);
            add_random(out, seed);
            add_modulated(out);
            break;
    }
    return out;
}

double smoothed_exponential(double x, double delta) {
    auto Phi = [](double u) { return 0.5 * std::erfc(-u / std::sqrt(2.0)); };
    double d2 = delta * delta;
    return std::exp(d2 / 2.0) *
           (std::exp(-x) * Phi((x - d2) / delta) + std::exp(x) * (1.0 - Phi((x + d2) / delta)));
}

GridSpec propagation_grid(double bandwidth, double t, double x_margin) {
    double L = x_margin + 3.45 * std::abs(t) * bandwidth * bandwidth;
    // resolve both the input band and the chirped output oscillations
    double h = std::min(0.03, 2.4 / bandwidth);
    int N = 16;
    while (2.0 * L / N > h && N < (1 << 22)) N *= 2;
    return GridSpec(L, N);
}

} // namespace kdvd
