#ifndef KDVD_PROPAGATOR_HPP
#define KDVD_PROPAGATOR_HPP

#include <vector>

#include "kdvd/grid.hpp"

namespace kdvd {

enum class PropagatorMethod { spectral, airy_convolution };
enum class GroupKind { kdv, schrodinger };

struct PropagatorParams {
    double t = 0.0;
    PropagatorMethod method = PropagatorMethod::spectral;
};

/// Linear KdV group U(t): spectrum times e^{i t xi^3}, i.e. the solution of
/// v_t + v_xxx = 0. The physical-space form of the same group is
///   (U(t) f)(x) = (3t)^{-1/3} integral Ai((x-y)/(3t)^{1/3}) f(y) dy,
/// which the airy_convolution method realizes by direct quadrature with the
/// kernel window |x-y|/(3t)^{1/3} <= 80 and a linear taper over the last 4
/// oscillation periods of the kernel (plain truncation of the |u|^{-1/4}
/// oscillatory tail rings; averaged truncation converges).
/// Negative t with the convolution method is handled by the conjugation
/// symmetry U(-t) f = conj(U(t) conj(f)).
GridFunction kdv_group(const GridFunction& f, const PropagatorParams& params);

/// Free Schrodinger group: spectrum times e^{i t xi^2}.
GridFunction schrodinger_group(const GridFunction& f, double t);

/// J(t) f = U(t) ( x . U(-t) f ) by composition, for either group.
/// On the Fourier side (kdv) this equals multiplication by x minus 3t d_xx.
struct JResult {
    GridFunction value;
    std::vector<Warning> warnings; // truncation warning when U(-t)f leaks
};
JResult j_operator(const GridFunction& f, double t, GroupKind group);

/// Kernel-quadrature evaluation of (U(t) f)(x) at selected points only
/// (the physical-space route without any periodic wrap; used where the
/// dispersed solution would not fit any affordable periodic box).
std::vector<cplx> kdv_group_at_points(const GridFunction& f, double t,
                                      const std::vector<double>& points);

} // namespace kdvd

#endif
