#pragma once

#include "cascade/field.hpp"

namespace cascade {

/// Physical parameters of the spectral transport dynamics.
struct OperatorParams {
    double speed = 1.0;      ///< cascade speed c (wavenumber per unit time), > 0
    double hurst = 1.0 / 3;  ///< Hurst exponent H, in [-d/2, 1)
    double viscosity = 0.0;  ///< nu >= 0
    double cutoff = 1.0;     ///< kappa > 0; modes with |k| <= cutoff are pinned to zero

    void validate(int dim) const;
};

/// d/dk_j via back-and-forth DFTs: DFT[-2*pi*i * x_tilde_j * DFT^-1[u]].
/// Exact for fields whose physical-space support avoids the Nyquist mode.
SpectralField spectral_derivative(const SpectralField& field, int axis,
                                  const SpectralTransform& fft);

/// Transport term in divergence form:
/// c * sum_j d/dk_j( (k_j/|k|) * u ), with the multiplier set to 0 at k = 0,
/// followed by the low-mode projection. Expects u to vanish on |k| <= cutoff.
SpectralField apply_transport(const SpectralField& field, const OperatorParams& params,
                              const SpectralTransform& fft);

/// Damping term: pointwise multiplication by
/// c*(H + 1/2)/|k| + (2*pi)^2 * nu * |k|^2, with the multiplier 0 at k = 0.
SpectralField apply_damping(const SpectralField& field, const OperatorParams& params);
void apply_damping_into(const SpectralField& field, const OperatorParams& params,
                        SpectralField& out);

} // namespace cascade
