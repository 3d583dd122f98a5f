#pragma once

#include "cascade/forcing.hpp"

#include <array>
#include <complex>
#include <functional>
#include <optional>

namespace cascade {

/// Radial function with finite support, evaluated as fn on
/// [support_lo, support_hi] and zero outside.
struct RadialFunction {
    std::function<double(double)> fn;
    double support_lo = 0.0;
    double support_hi = 0.0;
};

/// Parameters of the closed-form prediction layer. The forcing spectral
/// density is the indicator `density` unless `custom_density` is set, in
/// which case the quadrature route is used throughout.
struct AnalyticParams {
    int dim = 1;
    double hurst = 1.0 / 3;
    double speed = 1.0;
    double cutoff = 1.0;
    double viscosity = 0.0;
    RadialDensity density;
    std::optional<RadialFunction> custom_density;

    double power() const { return 2.0 * hurst + dim; }
    /// Coefficient of |k|^3 in the viscous attenuation exponent.
    double viscous_rate() const;
    /// Upper edge of the density support.
    double density_top() const;
    void validate() const;
};

/// Tail integral (1/c) * int_r^inf s^(2H+d) * psi(s) ds. Closed form for the
/// indicator density, adaptive quadrature otherwise. Nonnegative and
/// non-increasing in r.
double tail_moment(const AnalyticParams& params, double r);

/// Same with the viscous weight exp(viscous_rate * s^3) in the integrand;
/// equals tail_moment when viscosity is zero.
double tail_moment_viscous(const AnalyticParams& params, double r);

/// tail_moment at zero; also its value at the cutoff when the density
/// vanishes below the cutoff.
double plateau_constant(const AnalyticParams& params);

/// Spectral window factor: tail_moment(cutoff) - tail_moment(r) inside the
/// populated region r < c*t + cutoff, tail_moment(r - c*t) - tail_moment(r)
/// beyond it. Continuous at the seam. Accepts t = infinity.
double window_factor(const AnalyticParams& params, double t, double r);
double window_factor_viscous(const AnalyticParams& params, double t, double r);

/// Predicted per-mode spectral density
/// r^-(2H+d) * exp(-viscous_rate * r^3) * window_factor_viscous(t, r);
/// zero for r <= cutoff.
double spectrum_density(const AnalyticParams& params, double t, double r);

using KVec = std::array<double, 3>;
using SpectralProfile = std::function<std::complex<double>(const KVec&)>;

/// Exact solution operator of the unforced equation: shifts spectral mass
/// outward by c*t with the amplitude factor ((|k|-ct)/|k|)^(H+d-1/2), cut off
/// below |k| = c*t + cutoff. Includes the viscous attenuation accumulated
/// along the characteristic; at viscosity zero this is the pure transport
/// form. Satisfies the semigroup law.
SpectralProfile semigroup_apply(const AnalyticParams& params, SpectralProfile initial, double t);

/// Mild solution at time t for a smooth time-dependent spectral forcing:
/// integral over s in [0, t] of the semigroup applied to forcing(s), one
/// adaptive quadrature per wave vector.
std::complex<double> duhamel_reference(
    const AnalyticParams& params,
    const std::function<std::complex<double>(double, const KVec&)>& forcing, double t,
    const KVec& k, double abs_tol = 1e-11);

/// Finite-time two-point covariance: the d-dimensional Fourier transform of
/// the predicted spectral density at separation z, reduced to one radial
/// quadrature (cosine / Bessel-J0 / spherical-sinc kernel).
double covariance_at_time(const AnalyticParams& params, double t, double z,
                          double abs_tol = 1e-10);

/// Limiting covariance for hurst in (0, 1); rejects other values (the limit
/// is only a measure there - use tested_limiting_covariance).
double limiting_covariance(const AnalyticParams& params, double z, double abs_tol = 1e-10);

/// Variance of the limiting increment u(x + l) - u(x), hurst in (0, 1).
double increment_variance(const AnalyticParams& params, double l, double abs_tol = 1e-10);

/// Limiting covariance tested against radial spectral profiles g1, g2
/// (valid for all hurst in [-d/2, 1)).
double tested_limiting_covariance(const AnalyticParams& params, const RadialFunction& g1,
                                  const RadialFunction& g2, double abs_tol = 1e-10);

/// Reference model with complex-valued solution: closed-form one-point
/// variance t * C_f(0) and two-point covariance
/// (exp(2*pi*i*c*t*z) - 1) / (2*pi*i*c*z) * C_f(z), with the z -> 0 limit
/// t * C_f(0).
double complex_model_variance(double t, const std::function<double(double)>& correlation);
std::complex<double> complex_model_covariance(double t, double z, double speed,
                                              const std::function<double(double)>& correlation);

/// Principal-value integral int_0^inf C_f(z) * (G(z) - G(-z)) / z dz with
/// G(z) = int g1(z + y) g2(y) dy, evaluated in the symmetric-difference form
/// (no singularity at zero). `half_width` bounds the supports of all three
/// callables.
double principal_value_term(const std::function<double(double)>& correlation,
                            const std::function<double(double)>& g1,
                            const std::function<double(double)>& g2, double half_width,
                            double abs_tol = 1e-9);

} // namespace cascade
