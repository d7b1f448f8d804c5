#ifndef KDVD_HILBERT_HPP
#define KDVD_HILBERT_HPP

#include "kdvd/grid.hpp"
#include "kdvd/report.hpp"

namespace kdvd {

enum class HilbertMethod { multiplier, principal_value };

/// Weight family from the A2 step of the bilinear proof:
/// omega_x(y) = (1+|x-y|)^{-1/2}; weighted integrals use its reciprocal.
struct WeightFamily {
    double center = 0.0;
    double omega(double y) const;         // in (0, 1], equals 1 at y = center
    double omega_inverse(double y) const; // sqrt(1+|x-y|)
};

/// Discrete Hilbert transform.
///
/// multiplier:       spectrum times -i*sgn(xi), sgn(0) = 0, Nyquist zeroed.
///                   Exactly isometric on the complement of those two modes.
/// principal_value:  (1/pi) h * sum_{j != k} f(x_j)/(x_k - x_j), self term
///                   omitted (odd stencil). Low-order; cross-check only.
GridFunction hilbert_transform(const GridFunction& f, HilbertMethod method);

/// Line-faithful evaluation for slowly decaying inputs: embeds the grid in a
/// pad_factor-times larger zero-padded box before applying the multiplier,
/// which removes the O(y/L^2) periodization of the conjugate function; what
/// remains is the tail-truncation error O(y/L^3). pad_factor must be a power
/// of two >= 2.
GridFunction line_hilbert_transform(const GridFunction& f, int pad_factor);

/// ||Hf|| / ||f0|| with f0 the mean-free, Nyquist-free part of f; ratio 1 to
/// 1e-10. Degenerate (f0 = 0) inputs are flagged in metadata with passes=false.
EstimateReport verify_isometry(const GridFunction& f);

/// (integral |Hf|^2 w^{-1}) / (integral |f|^2 w^{-1}) for w = omega_center.
double weighted_bound_ratio(const GridFunction& f, const WeightFamily& w);

} // namespace kdvd

#endif
