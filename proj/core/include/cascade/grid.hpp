#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace cascade {

/// Discrete wavenumber/physical grid for a cubic periodic box.
///
/// Wave vectors follow the DFT ordering [0, 1, ..., N/2, -N/2+1, ..., -1] * dk
/// per axis, with dk = 1/box_length. The modified position arrays used by the
/// spectral derivative are [0, 1, ..., N/2-1, 0, -N/2+1, ..., -1] * dx: the
/// Nyquist entry is forced to zero so the derivative respects parity.
class WavenumberGrid {
public:
    WavenumberGrid(int dim, int points, double box_length);

    int dim() const { return dim_; }
    int points() const { return points_; }
    double box_length() const { return box_length_; }
    double dk() const { return dk_; }
    double dx() const { return dx_; }
    double k_max() const { return (points_ / 2) * dk_; }
    std::size_t size() const { return size_; }

    /// Signed wavenumber along one axis for a per-axis index in [0, N).
    double k_axis(int axis_index) const { return k_axis_[static_cast<std::size_t>(axis_index)]; }
    /// Nyquist-zeroed signed position along one axis.
    double x_tilde(int axis_index) const { return x_tilde_[static_cast<std::size_t>(axis_index)]; }

    /// Per-axis indices of a linear grid index (row-major, axis 0 slowest).
    std::array<int, 3> axis_indices(std::size_t linear) const;
    std::size_t linear_index(const std::array<int, 3>& idx) const;

    /// Full wave vector (unused axes zero).
    std::array<double, 3> k_vector(std::size_t linear) const;

    double k_modulus(std::size_t linear) const { return k_modulus_[linear]; }
    const std::vector<double>& k_modulus() const { return k_modulus_; }

    int shell_id(std::size_t linear) const { return shell_id_[linear]; }
    int shell_count() const { return shell_count_; }
    const std::vector<std::size_t>& shell_members(int shell) const;
    /// Number of grid points in a shell (0 for empty shells).
    std::size_t shell_population(int shell) const;

    /// Linear index of -k (per-axis negation modulo N).
    std::size_t negated_index(std::size_t linear) const { return negated_[linear]; }

private:
    int dim_;
    int points_;
    double box_length_;
    double dk_;
    double dx_;
    std::size_t size_;
    std::vector<double> k_axis_;
    std::vector<double> x_tilde_;
    std::vector<double> k_modulus_;
    std::vector<int> shell_id_;
    std::vector<std::size_t> negated_;
    int shell_count_;
    std::vector<std::vector<std::size_t>> shells_;
};

using GridPtr = std::shared_ptr<const WavenumberGrid>;

/// Builds the grid. Rejects non-power-of-two N (N >= 4) and dim outside {1,2,3}.
GridPtr build_grid(int dim, int points, double box_length = 1.0);

} // namespace cascade
