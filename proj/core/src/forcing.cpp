#include "cascade/forcing.hpp"

#include "cascade/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace cascade {

void ForcingSpec::validate(const WavenumberGrid& grid, double cutoff) const {
    if (!(cutoff < k_lo)) throw std::invalid_argument("forcing: annulus must lie above the cutoff");
    if (!(k_lo <= k_hi)) throw std::invalid_argument("forcing: k_lo must not exceed k_hi");
    if (!(k_hi <= grid.k_max())) throw std::invalid_argument("forcing: annulus exceeds k_max");
    if (!(amplitude > 0.0)) throw std::invalid_argument("forcing: amplitude must be positive");
}

SpectralField sample_forcing(const GridPtr& grid, const ForcingSpec& spec, std::uint64_t step,
                             const SpectralTransform& fft) {
    const std::uint64_t key = counter_rng::stream_key(spec.seed, step);
    const double weight =
        spec.amplitude * std::pow(grid->dx(), 0.5 * grid->dim());

    std::vector<std::complex<double>> noise(grid->size());
    for (std::size_t i = 0; i < noise.size(); ++i)
        noise[i] = weight * counter_rng::normal_at(key, i);

    SpectralField out(grid);
    fft.forward(noise.data(), out.data.data());

    // Band filter applied after the DFT.
    const auto& mod = grid->k_modulus();
    for (std::size_t i = 0; i < out.data.size(); ++i)
        if (mod[i] < spec.k_lo || mod[i] > spec.k_hi) out.data[i] = {0.0, 0.0};
    return out;
}

RadialDensity effective_density(const WavenumberGrid& grid, const ForcingSpec& spec) {
    RadialDensity density;
    density.k_lo = spec.k_lo;
    density.k_hi = spec.k_hi;
    density.amplitude =
        spec.amplitude * spec.amplitude * std::pow(grid.box_length(), grid.dim());
    return density;
}

} // namespace cascade
