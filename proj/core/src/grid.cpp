#include "cascade/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace cascade {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

WavenumberGrid::WavenumberGrid(int dim, int points, double box_length)
    : dim_(dim), points_(points), box_length_(box_length) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("grid: dim must be 1, 2 or 3");
    if (!is_power_of_two(points) || points < 4)
        throw std::invalid_argument("grid: points must be a power of two >= 4");
    if (!(box_length > 0.0))
        throw std::invalid_argument("grid: box_length must be positive");

    dk_ = 1.0 / box_length_;
    dx_ = box_length_ / points_;

    const int n = points_;
    k_axis_.resize(static_cast<std::size_t>(n));
    x_tilde_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int signed_i = (i <= n / 2) ? i : i - n;
        k_axis_[static_cast<std::size_t>(i)] = signed_i * dk_;
        // Position array keeps the signed index except at Nyquist, which is 0.
        x_tilde_[static_cast<std::size_t>(i)] = (i == n / 2) ? 0.0 : signed_i * dx_;
    }

    size_ = 1;
    for (int a = 0; a < dim_; ++a) size_ *= static_cast<std::size_t>(n);

    k_modulus_.resize(size_);
    shell_id_.resize(size_);
    negated_.resize(size_);

    int max_shell = 0;
    for (std::size_t lin = 0; lin < size_; ++lin) {
        const auto idx = axis_indices(lin);
        double sq = 0.0;
        std::array<int, 3> neg{0, 0, 0};
        for (int a = 0; a < dim_; ++a) {
            const double ka = k_axis_[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
            sq += ka * ka;
            neg[static_cast<std::size_t>(a)] = (n - idx[static_cast<std::size_t>(a)]) % n;
        }
        k_modulus_[lin] = std::sqrt(sq);
        const int s = static_cast<int>(std::lround(k_modulus_[lin] / dk_));
        shell_id_[lin] = s;
        if (s > max_shell) max_shell = s;
        negated_[lin] = linear_index(neg);
    }

    shell_count_ = max_shell + 1;
    shells_.resize(static_cast<std::size_t>(shell_count_));
    for (std::size_t lin = 0; lin < size_; ++lin)
        shells_[static_cast<std::size_t>(shell_id_[lin])].push_back(lin);
}

std::array<int, 3> WavenumberGrid::axis_indices(std::size_t linear) const {
    std::array<int, 3> idx{0, 0, 0};
    const auto n = static_cast<std::size_t>(points_);
    for (int a = dim_ - 1; a >= 0; --a) {
        idx[static_cast<std::size_t>(a)] = static_cast<int>(linear % n);
        linear /= n;
    }
    return idx;
}

std::size_t WavenumberGrid::linear_index(const std::array<int, 3>& idx) const {
    const auto n = static_cast<std::size_t>(points_);
    std::size_t lin = 0;
    for (int a = 0; a < dim_; ++a)
        lin = lin * n + static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
    return lin;
}

std::array<double, 3> WavenumberGrid::k_vector(std::size_t linear) const {
    const auto idx = axis_indices(linear);
    std::array<double, 3> k{0.0, 0.0, 0.0};
    for (int a = 0; a < dim_; ++a)
        k[static_cast<std::size_t>(a)] = k_axis_[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
    return k;
}

const std::vector<std::size_t>& WavenumberGrid::shell_members(int shell) const {
    if (shell < 0 || shell >= shell_count_) {
        static const std::vector<std::size_t> empty;
        return empty;
    }
    return shells_[static_cast<std::size_t>(shell)];
}

std::size_t WavenumberGrid::shell_population(int shell) const {
    return shell_members(shell).size();
}

GridPtr build_grid(int dim, int points, double box_length) {
    return std::make_shared<const WavenumberGrid>(dim, points, box_length);
}

} // namespace cascade
