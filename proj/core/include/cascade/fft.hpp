#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace cascade {

/// Complex-to-complex DFT for one grid shape, backed by FFTW.
///
/// Convention: forward is the unnormalized sum over grid points of
/// u[x] * exp(-2*pi*i * k.x / N) per axis; inverse carries the 1/N^d factor,
/// so inverse(forward(u)) == u to machine precision.
///
/// Not thread-safe; use one transform per thread. Plan creation takes a
/// process-wide lock (the FFTW planner is not reentrant).
class SpectralTransform {
public:
    SpectralTransform(int dim, int points);
    ~SpectralTransform();

    SpectralTransform(const SpectralTransform&) = delete;
    SpectralTransform& operator=(const SpectralTransform&) = delete;

    std::size_t size() const { return size_; }

    void forward(const std::complex<double>* in, std::complex<double>* out) const;
    void inverse(const std::complex<double>* in, std::complex<double>* out) const;

    std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in) const;
    std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::size_t size_;
};

} // namespace cascade
