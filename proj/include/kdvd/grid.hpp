#ifndef KDVD_GRID_HPP
#define KDVD_GRID_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "kdvd/errors.hpp"

namespace kdvd {

using cplx = std::complex<double>;

/// Uniform periodic grid on [-L, L) with N = 2^m points.
///
/// Conventions used throughout the library:
///   nodes        x_j  = -L + j*h,  h = 2L/N,  j = 0..N-1
///   frequencies  xi_k = pi*k/L,    k = -N/2..N/2-1
///
/// Fourier normalization (fixed once, Parseval-exact):
///   forward:  fhat(xi_k) = h * sum_j f(x_j) e^{-i xi_k x_j}
///   inverse:  f(x_j)     = (1/2L) * sum_k fhat(xi_k) e^{+i xi_k x_j}
/// so that  h*sum|f|^2 = (dxi/2pi)*sum|fhat|^2  with dxi = pi/L.
struct GridSpec {
    double half_width = 0.0; // L
    int n_points = 0;        // N, power of two, >= 16

    GridSpec() = default;
    GridSpec(double L, int N);

    double spacing() const { return 2.0 * half_width / n_points; }
    double x(int j) const { return -half_width + spacing() * j; }
    /// Frequency for natural index k in [-N/2, N/2).
    double xi(int k) const { return M_PI * k / half_width; }
    /// Index of the grid node nearest to x (clamped).
    int nearest_index(double x) const;

    bool operator==(const GridSpec&) const = default;
};

/// Complex samples of a function on a GridSpec; the universal carrier for
/// inputs, propagated states and spectra.
struct GridFunction {
    GridSpec spec;
    std::vector<cplx> values;

    GridFunction() = default;
    explicit GridFunction(const GridSpec& s) : spec(s), values(s.n_points) {}

    int size() const { return static_cast<int>(values.size()); }
    void validate() const; // length and finiteness

    /// Sample a scalar function on the grid.
    static GridFunction sample(const GridSpec& s, const std::function<cplx(double)>& f);
    static GridFunction sample_real(const GridSpec& s, const std::function<double(double)>& f);
};

struct BoundaryMassReport {
    double total_l2 = 0.0;    // integral of |f|^2 over the whole grid
    double tail_l2 = 0.0;     // integral of |f|^2 over the outer 10% on each side
    double tail_fraction = 0.0;
};

/// Spectrum in natural frequency order: result.values[m] = fhat(xi_k), k = m - N/2.
GridFunction forward_transform(const GridFunction& f);
/// Inverse of forward_transform (round-trips to ~1e-15 relative).
GridFunction inverse_transform(const GridFunction& fhat);

/// Apply a Fourier multiplier m(xi): f -> invFT( m(xi) * FT f ).
GridFunction apply_multiplier(const GridFunction& f, const std::function<cplx(double)>& m);

/// Spectral derivative (multiplier i*xi, Nyquist mode zeroed).
GridFunction spectral_derivative(const GridFunction& f);

double norm_l2(const GridFunction& f);
/// L2 norm of the spectrum under the library normalization,
/// sqrt( (dxi/2pi) * sum |fhat|^2 ); equals norm_l2 of the physical function.
double norm_l2_of_spectrum(const GridFunction& fhat);

struct LinfResult {
    double value = 0.0;
    double argmax_x = 0.0; // smallest x attaining the max
};
LinfResult norm_linf(const GridFunction& f);

/// || x f(x) ||_L2
double weighted_norm_x(const GridFunction& f);

BoundaryMassReport boundary_mass(const GridFunction& f);

GridFunction multiply_by_x(const GridFunction& f);

/// Riemann-sum circular convolution: out_j = h * sum_k a_k * w_{(j-k) mod N},
/// with w indexed by raw offset (w[m] is the kernel at offset +m*h, negative
/// offsets wrap to the top of the array).
std::vector<cplx> circular_convolution(const std::vector<cplx>& a, const std::vector<cplx>& w,
                                       double h);

/// CSV serialization: header "x,re,im", 17 significant digits, plus a JSON
/// sidecar <path>.json holding {"L":..., "N":...}. Round-trips exactly.
void save_csv(const GridFunction& f, const std::string& path);
GridFunction load_csv(const std::string& path);

} // namespace kdvd

#endif
