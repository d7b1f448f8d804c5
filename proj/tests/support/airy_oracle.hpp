#ifndef KDVD_TESTS_AIRY_ORACLE_HPP
#define KDVD_TESTS_AIRY_ORACLE_HPP

// Independent quadrature oracle for the Airy function, built directly from
// the oscillatory-integral definition
//     Ai(z)  = (1/pi) int_0^inf cos(xi^3/3 + z xi) dxi
//     Ai'(z) = (1/pi) int_0^inf -xi sin(xi^3/3 + z xi) dxi.
// The integral is split at the zeros of the trigonometric factor into
// half-oscillation cells (past the stationary point sqrt(-z) for z < 0);
// the head is integrated by composite Gauss-Legendre panels and the
// alternating cell series is accelerated with the Cohen-Rodriguez
// Villegas-Zagier scheme. Absolute accuracy ~1e-14 on [-60, 60].
//
// Deliberately independent of the library's series/asymptotic evaluator:
// only <cmath> arithmetic, no kdvd headers.

namespace kdvd_tests {

double airy_oracle_value(double z);
double airy_oracle_derivative(double z);

/// Accelerated sum of sum_k (-1)^k b_k for b_k decaying smoothly (CVZ).
double sumalt(const double* b, int n);

} // namespace kdvd_tests

#endif
