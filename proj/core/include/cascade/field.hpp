#pragma once

#include "cascade/fft.hpp"
#include "cascade/grid.hpp"

#include <complex>
#include <vector>

namespace cascade {

/// Spectral coefficients on the DFT grid, one complex value per grid index.
///
/// The solver maintains two invariants on the fields it evolves: Hermitian
/// symmetry u[-k] == conj(u[k]) (so the physical field is real), and u[k] == 0
/// for |k| <= cutoff.
struct SpectralField {
    GridPtr grid;
    std::vector<std::complex<double>> data;

    SpectralField() = default;
    explicit SpectralField(GridPtr g) : grid(std::move(g)), data(grid->size(), {0.0, 0.0}) {}
    SpectralField(GridPtr g, std::vector<std::complex<double>> values);

    std::size_t size() const { return data.size(); }
    std::complex<double>& operator[](std::size_t i) { return data[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return data[i]; }
};

/// Unnormalized forward DFT of a real physical array.
SpectralField dft_forward(const GridPtr& grid, const std::vector<double>& physical,
                          const SpectralTransform& fft);
/// Inverse DFT (with the 1/N^d factor), returning the real part of the
/// physical field. Use dft_inverse_complex when the imaginary part matters.
std::vector<double> dft_inverse(const SpectralField& field, const SpectralTransform& fft);
std::vector<std::complex<double>> dft_inverse_complex(const SpectralField& field,
                                                      const SpectralTransform& fft);

/// Symmetrizes via u[k] <- (u[k] + conj(u[-k])) / 2. Idempotent and
/// self-adjoint; self-paired modes (k = 0 and Nyquist combinations) become
/// real.
void enforce_hermitian_inplace(SpectralField& field);
SpectralField enforce_hermitian(SpectralField field);

/// Maximum of |u[k] - conj(u[-k])| over the grid.
double hermitian_defect(const SpectralField& field);

/// Zeroes all modes with |k| <= cutoff. Idempotent.
void project_low_modes_inplace(SpectralField& field, double cutoff);
SpectralField project_low_modes(SpectralField field, double cutoff);

/// Maximum of |u[k]| over modes with |k| <= cutoff.
double low_mode_residual(const SpectralField& field, double cutoff);

/// sigma_u^2 = sum_k |u[k]|^2 * dk. A single dk factor regardless of
/// dimension; this matches the estimator used throughout the statistics
/// layer, and is deliberately not "corrected" to dk^d.
double l2_norm(const SpectralField& field);

bool all_finite(const SpectralField& field);

} // namespace cascade
