#include "cascade/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace cascade {

namespace {
constexpr double two_pi = 6.283185307179586476925287;
}

void OperatorParams::validate(int dim) const {
    if (!(speed > 0.0)) throw std::invalid_argument("operators: speed must be positive");
    if (!(cutoff > 0.0)) throw std::invalid_argument("operators: cutoff must be positive");
    if (viscosity < 0.0) throw std::invalid_argument("operators: viscosity must be nonnegative");
    if (hurst < -0.5 * dim || hurst >= 1.0)
        throw std::invalid_argument("operators: hurst must lie in [-dim/2, 1)");
}

SpectralField spectral_derivative(const SpectralField& field, int axis,
                                  const SpectralTransform& fft) {
    const auto& grid = *field.grid;
    if (axis < 0 || axis >= grid.dim()) throw std::invalid_argument("spectral_derivative: bad axis");

    auto physical = fft.inverse(field.data);
    const auto n = static_cast<std::size_t>(grid.points());
    // Stride of `axis` in the row-major layout (axis 0 slowest).
    std::size_t stride = 1;
    for (int a = grid.dim() - 1; a > axis; --a) stride *= n;

    for (std::size_t i = 0; i < physical.size(); ++i) {
        const auto axis_index = static_cast<int>((i / stride) % n);
        const double x = grid.x_tilde(axis_index);
        physical[i] *= std::complex<double>(0.0, -two_pi * x);
    }

    SpectralField out(field.grid);
    fft.forward(physical.data(), out.data.data());
    return out;
}

SpectralField apply_transport(const SpectralField& field, const OperatorParams& params,
                              const SpectralTransform& fft) {
    const auto& grid = *field.grid;
    const auto n = static_cast<std::size_t>(grid.points());
    SpectralField result(field.grid);
    SpectralField weighted(field.grid);

    for (int axis = 0; axis < grid.dim(); ++axis) {
        std::size_t stride = 1;
        for (int a = grid.dim() - 1; a > axis; --a) stride *= n;
        for (std::size_t i = 0; i < field.data.size(); ++i) {
            const double mod = grid.k_modulus(i);
            if (mod == 0.0) {
                weighted.data[i] = {0.0, 0.0};
                continue;
            }
            const double kj = grid.k_axis(static_cast<int>((i / stride) % n));
            weighted.data[i] = (kj / mod) * field.data[i];
        }
        const auto derivative = spectral_derivative(weighted, axis, fft);
        for (std::size_t i = 0; i < result.data.size(); ++i)
            result.data[i] += derivative.data[i];
    }

    for (auto& z : result.data) z *= params.speed;
    project_low_modes_inplace(result, params.cutoff);
    return result;
}

void apply_damping_into(const SpectralField& field, const OperatorParams& params,
                        SpectralField& out) {
    const auto& mod = field.grid->k_modulus();
    out.grid = field.grid;
    out.data.resize(field.data.size());
    const double visc = two_pi * two_pi * params.viscosity;
    const double drag = params.speed * (params.hurst + 0.5);
    for (std::size_t i = 0; i < field.data.size(); ++i) {
        const double m = mod[i];
        const double mult = (m == 0.0) ? 0.0 : drag / m + visc * m * m;
        out.data[i] = mult * field.data[i];
    }
}

SpectralField apply_damping(const SpectralField& field, const OperatorParams& params) {
    SpectralField out(field.grid);
    apply_damping_into(field, params, out);
    return out;
}

} // namespace cascade
