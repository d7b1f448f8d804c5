#include "kdvd/estimates.hpp"

#include <cmath>

#include "kdvd/airy.hpp"
#include "kdvd/propagator.hpp"

namespace kdvd {

namespace {

double glue(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

constexpr double kFlat = 1.6, kZero = 1.9;

// Iterate grid nodes inside supp psi_j = { 0.8*2^j < |x| < 1.9*2^j },
// calling fn(node_index, psi_j(x)).
template <typename Fn>
void for_shell_nodes(const GridSpec& spec, int j, Fn&& fn) {
    const double scale = std::ldexp(1.0, j); // 2^j
    const double r_in = 0.8 * scale, r_out = kZero * scale;
    const double h = spec.spacing();
    const int n = spec.n_points;
    auto run = [&](double lo, double hi) {
        int a = std::max(0, static_cast<int>(std::ceil((lo + spec.half_width) / h)));
        int b = std::min(n - 1, static_cast<int>(std::floor((hi + spec.half_width) / h)));
        for (int idx = a; idx <= b; ++idx) {
            double p = dyadic_psi(spec.x(idx) / scale);
            if (p != 0.0) fn(idx, p);
        }
    };
    run(-r_out, -r_in);
    run(r_in, r_out);
}

GridFunction u_kdv(const GridFunction& f, double t) {
    return kdv_group(f, {t, PropagatorMethod::spectral});
}

void require_nonzero(double v, const char* what) {
    if (!(v > 0.0)) throw degenerate_input_error(std::string("degenerate input: ") + what);
}

void require_positive_t(double t) {
    if (!(t > 0.0)) throw parameter_error("estimate check requires t > 0");
}

} // namespace

double SmoothBump::operator()(double x) const {
    double a = std::abs(x);
    if (a <= kFlat) return 1.0;
    if (a >= kZero) return 0.0;
    double s = (a - kFlat) / (kZero - kFlat);
    double up = glue(1.0 - s), down = glue(s);
    return up / (up + down);
}

SmoothBump bump_function() { return {}; }

double dyadic_psi(double u) {
    SmoothBump b;
    return b(u) - b(2.0 * u);
}

DyadicDecomposition dyadic_decompose(const GridFunction& f, int j_min, int j_max) {
    f.validate();
    if (j_min > j_max) throw parameter_error("dyadic_decompose: empty shell range");
    const GridSpec& spec = f.spec;
    const double h = spec.spacing();
    DyadicDecomposition dec;
    dec.j_min = j_min;
    dec.j_max = j_max;

    std::vector<double> coverage(spec.n_points, 0.0);
    for (int j = j_min; j <= j_max; ++j) {
        GridFunction piece(spec);
        bool nonzero = false;
        double l2 = 0.0;
        const double bound = std::ldexp(2.0, j); // 2^{j+1}
        for_shell_nodes(spec, j, [&](int idx, double p) {
            coverage[idx] += p;
            cplx v = p * f.values[idx];
            piece.values[idx] = v;
            l2 += std::norm(v);
            if (v != cplx(0.0, 0.0)) nonzero = true;
            if (p > 1e-14 && std::abs(spec.x(idx)) > bound)
                throw std::logic_error("dyadic shell bound |x psi_j| <= 2^{j+1} psi_j violated");
        });
        if (nonzero) {
            dec.shell.push_back(j);
            dec.piece_l2.push_back(std::sqrt(h * l2));
            dec.pieces.push_back(std::move(piece));
        }
    }
    double resid = 0.0;
    for (int idx = 0; idx < spec.n_points; ++idx) {
        if (std::abs(spec.x(idx)) < 0.5 * h) continue; // the x = 0 node
        double r = 1.0 - coverage[idx];
        resid += r * r * std::norm(f.values[idx]);
    }
    dec.truncation_l2 = std::sqrt(h * resid);
    double total = norm_l2(f);
    if (total > 0.0 && dec.truncation_l2 > 1e-6 * total)
        dec.warnings.push_back({"truncation", "dyadic range misses " +
                                                   std::to_string(dec.truncation_l2 / total) +
                                                   " relative L2 mass"});
    return dec;
}

double dyadic_weighted_sum(const GridFunction& f, int j_min, int j_max) {
    f.validate();
    if (j_min > j_max) throw parameter_error("dyadic_weighted_sum: empty shell range");
    const double h = f.spec.spacing();
    double total = 0.0;
    for (int j = j_min; j <= j_max; ++j) {
        double l2 = 0.0;
        for_shell_nodes(f.spec, j, [&](int idx, double p) { l2 += std::norm(p * f.values[idx]); });
        total += std::exp2(0.5 * j) * std::sqrt(h * l2);
    }
    return total;
}

double linfty_sharp_constant() {
    static const double c = [] {
        AiryExtremum ext = find_airy_max();
        double kmax = std::pow(3.0, -1.0 / 3.0) * ext.ai_max;
        return 2.0 * M_PI * kmax * kmax;
    }();
    return c;
}

EstimateReport check_linfty_estimate(const GridFunction& phi, double t) {
    require_positive_t(t);
    double l2 = norm_l2(phi), xl2 = weighted_norm_x(phi);
    require_nonzero(l2, "phi = 0");
    require_nonzero(xl2, "x phi = 0");
    GridFunction u = u_kdv(phi, t);
    double lhs = norm_linf(u).value;
    EstimateReport r = EstimateReport::make("linfty", lhs * lhs, std::pow(t, -2.0 / 3.0) * l2 * xl2,
                                            linfty_sharp_constant(), t);
    r.metadata["tail_fraction"] = format_double(boundary_mass(u).tail_fraction);
    return r;
}

std::pair<EstimateReport, EstimateReport> check_j_form_estimates(const GridFunction& phi,
                                                                 const GridFunction& psi, double t) {
    require_positive_t(t);
    double phi_l2 = norm_l2(phi), psi_l2 = norm_l2(psi);
    require_nonzero(phi_l2, "phi = 0");
    require_nonzero(psi_l2, "psi = 0");

    JResult jphi = j_operator(phi, t, GroupKind::kdv);
    JResult jpsi = j_operator(psi, t, GroupKind::kdv);
    double jphi_l2 = norm_l2(jphi.value), jpsi_l2 = norm_l2(jpsi.value);

    double lhs3 = norm_linf(phi).value;
    EstimateReport r3 = EstimateReport::make(
        "jform_linfty", lhs3 * lhs3, std::pow(t, -2.0 / 3.0) * phi_l2 * jphi_l2,
        linfty_sharp_constant(), t);

    GridFunction psix = spectral_derivative(psi);
    GridFunction prod(phi.spec);
    for (int i = 0; i < phi.size(); ++i) prod.values[i] = phi.values[i] * psix.values[i];
    EstimateReport r4 = EstimateReport::make(
        "jform_bilinear", norm_linf(prod).value,
        (phi_l2 * jpsi_l2 + psi_l2 * jphi_l2) / t, std::nullopt, t);
    for (const Warning& w : jphi.warnings) r3.metadata["warning"] = w.message;
    for (const Warning& w : jpsi.warnings) r4.metadata["warning"] = w.message;
    return {r3, r4};
}

EstimateReport check_bilinear_estimate(const GridFunction& phi, const GridFunction& psi, double t,
                                       BilinearVariant variant) {
    require_positive_t(t);
    double phi_l2 = norm_l2(phi), psi_l2 = norm_l2(psi);
    double xphi = weighted_norm_x(phi), xpsi = weighted_norm_x(psi);
    require_nonzero(phi_l2, "phi = 0");
    require_nonzero(psi_l2, "psi = 0");

    GridFunction uphi = u_kdv(phi, t);
    GridFunction arg = psi;
    if (variant == BilinearVariant::proof)
        for (cplx& v : arg.values) v = std::conj(v);
    GridFunction upsi = u_kdv(arg, variant == BilinearVariant::proof ? t : -t);
    GridFunction dpsi = spectral_derivative(upsi);
    GridFunction prod(phi.spec);
    for (int i = 0; i < phi.size(); ++i) prod.values[i] = uphi.values[i] * dpsi.values[i];

    EstimateReport r = EstimateReport::make(
        variant == BilinearVariant::statement ? "bilinear_statement" : "bilinear_proof",
        norm_linf(prod).value, (phi_l2 * xpsi + psi_l2 * xphi) / t, std::nullopt, t);
    return r;
}

EstimateReport check_besov_decay(const GridFunction& phi, double t, int j_min, int j_max) {
    require_positive_t(t);
    double l2 = norm_l2(phi);
    require_nonzero(l2, "phi = 0");
    GridFunction back = u_kdv(phi, -t);
    double nt = dyadic_weighted_sum(back, j_min, j_max);
    require_nonzero(nt, "N_t norm = 0");
    EstimateReport r = EstimateReport::make("besov_decay", norm_linf(phi).value,
                                            std::pow(t, -1.0 / 3.0) * nt, std::nullopt, t);
    r.metadata["j_min"] = std::to_string(j_min);
    r.metadata["j_max"] = std::to_string(j_max);
    return r;
}

EstimateReport check_schrodinger_estimate(const GridFunction& psi, double t) {
    require_positive_t(t);
    double l2 = norm_l2(psi);
    require_nonzero(l2, "psi = 0");
    JResult j = j_operator(psi, t, GroupKind::schrodinger);
    double jl2 = norm_l2(j.value);
    require_nonzero(jl2, "J psi = 0");
    double lhs = norm_linf(psi).value;
    EstimateReport r =
        EstimateReport::make("schrodinger", lhs * lhs, l2 * jl2 / (4.0 * t), 2.0, t);
    for (const Warning& w : j.warnings) r.metadata["warning"] = w.message;
    return r;
}

EstimateReport check_landau_inequality(const GridFunction& phi) {
    double l2 = norm_l2(phi);
    require_nonzero(l2, "phi = 0");
    GridFunction d = spectral_derivative(phi);
    double dl2 = norm_l2(d);
    require_nonzero(dl2, "phi' = 0");
    double lhs = norm_linf(phi).value;
    return EstimateReport::make("landau", lhs * lhs, l2 * dl2, 1.0, 0.0);
}

} // namespace kdvd
