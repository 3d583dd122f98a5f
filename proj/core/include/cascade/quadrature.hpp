#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace cascade {

/// Adaptive quadrature on [a, b] to absolute tolerance. Throws
/// std::runtime_error when the tolerance cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

/// Integrates piecewise-smooth functions by splitting at known breakpoints.
/// Breakpoints outside (a, b) are ignored.
double integrate_segments(const std::function<double(double)>& f, double a, double b,
                          const std::vector<double>& breakpoints, double abs_tol = 1e-10);

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, double abs_tol = 1e-10);

/// Asymptotic tail integral of r^(-q) * cos(omega*r + phase) over [R, inf),
/// by repeated integration by parts. Requires omega > 0, q > 0 and
/// q*(q+1) < (omega*R)^2 (choose R of order 32/omega or larger).
double power_oscillatory_tail(double q, double omega, double phase, double R,
                              double abs_tol = 1e-12);

/// Angular kernel of the d-dimensional Fourier transform of a radial
/// function: integral over R^d of g(|k|) e^{2 pi i k.z} dk equals the
/// integral over rho in (0, inf) of g(rho) * radial_kernel(d, rho, |z|).
double radial_kernel(int dim, double rho, double z);

} // namespace cascade
