#include "cascade/field.hpp"

#include <cmath>
#include <stdexcept>

namespace cascade {

SpectralField::SpectralField(GridPtr g, std::vector<std::complex<double>> values)
    : grid(std::move(g)), data(std::move(values)) {
    if (data.size() != grid->size()) throw std::invalid_argument("field: shape mismatch");
}

SpectralField dft_forward(const GridPtr& grid, const std::vector<double>& physical,
                          const SpectralTransform& fft) {
    if (physical.size() != grid->size()) throw std::invalid_argument("dft_forward: shape mismatch");
    std::vector<std::complex<double>> tmp(physical.size());
    for (std::size_t i = 0; i < physical.size(); ++i) tmp[i] = physical[i];
    SpectralField out(grid);
    fft.forward(tmp.data(), out.data.data());
    return out;
}

std::vector<double> dft_inverse(const SpectralField& field, const SpectralTransform& fft) {
    const auto tmp = fft.inverse(field.data);
    std::vector<double> out(tmp.size());
    for (std::size_t i = 0; i < tmp.size(); ++i) out[i] = tmp[i].real();
    return out;
}

std::vector<std::complex<double>> dft_inverse_complex(const SpectralField& field,
                                                      const SpectralTransform& fft) {
    return fft.inverse(field.data);
}

void enforce_hermitian_inplace(SpectralField& field) {
    const auto& grid = *field.grid;
    auto& v = field.data;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t j = grid.negated_index(i);
        if (j < i) continue;
        if (j == i) {
            v[i] = std::complex<double>(v[i].real(), 0.0);
            continue;
        }
        const auto a = v[i];
        const auto b = v[j];
        v[i] = 0.5 * (a + std::conj(b));
        v[j] = 0.5 * (b + std::conj(a));
    }
}

SpectralField enforce_hermitian(SpectralField field) {
    enforce_hermitian_inplace(field);
    return field;
}

double hermitian_defect(const SpectralField& field) {
    const auto& grid = *field.grid;
    double worst = 0.0;
    for (std::size_t i = 0; i < field.data.size(); ++i) {
        const std::size_t j = grid.negated_index(i);
        const double d = std::abs(field.data[i] - std::conj(field.data[j]));
        if (d > worst) worst = d;
    }
    return worst;
}

void project_low_modes_inplace(SpectralField& field, double cutoff) {
    const auto& mod = field.grid->k_modulus();
    for (std::size_t i = 0; i < field.data.size(); ++i)
        if (mod[i] <= cutoff) field.data[i] = {0.0, 0.0};
}

SpectralField project_low_modes(SpectralField field, double cutoff) {
    project_low_modes_inplace(field, cutoff);
    return field;
}

double low_mode_residual(const SpectralField& field, double cutoff) {
    const auto& mod = field.grid->k_modulus();
    double worst = 0.0;
    for (std::size_t i = 0; i < field.data.size(); ++i)
        if (mod[i] <= cutoff) worst = std::max(worst, std::abs(field.data[i]));
    return worst;
}

double l2_norm(const SpectralField& field) {
    double sum = 0.0;
    for (const auto& z : field.data) sum += std::norm(z);
    return sum * field.grid->dk();
}

bool all_finite(const SpectralField& field) {
    for (const auto& z : field.data)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

} // namespace cascade
