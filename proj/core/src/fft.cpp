#include "cascade/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace cascade {

namespace {
std::mutex planner_mutex;
}

struct SpectralTransform::Impl {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    mutable std::vector<std::complex<double>> scratch_in;
    mutable std::vector<std::complex<double>> scratch_out;
};

SpectralTransform::SpectralTransform(int dim, int points) : impl_(std::make_unique<Impl>()) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("fft: dim must be 1, 2 or 3");
    size_ = 1;
    int shape[3];
    for (int a = 0; a < dim; ++a) {
        shape[a] = points;
        size_ *= static_cast<std::size_t>(points);
    }
    impl_->scratch_in.resize(size_);
    impl_->scratch_out.resize(size_);
    auto* in = reinterpret_cast<fftw_complex*>(impl_->scratch_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(impl_->scratch_out.data());

    // FFTW_UNALIGNED lets the plans run on any caller buffer via execute_dft.
    std::lock_guard<std::mutex> lock(planner_mutex);
    impl_->fwd = fftw_plan_dft(dim, shape, in, out, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    impl_->bwd = fftw_plan_dft(dim, shape, in, out, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!impl_->fwd || !impl_->bwd) throw std::runtime_error("fft: plan creation failed");
}

SpectralTransform::~SpectralTransform() {
    std::lock_guard<std::mutex> lock(planner_mutex);
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
}

void SpectralTransform::forward(const std::complex<double>* in, std::complex<double>* out) const {
    const std::complex<double>* src = in;
    if (in == out) {
        impl_->scratch_in.assign(in, in + size_);
        src = impl_->scratch_in.data();
    }
    fftw_execute_dft(impl_->fwd,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(src)),
                     reinterpret_cast<fftw_complex*>(out));
}

void SpectralTransform::inverse(const std::complex<double>* in, std::complex<double>* out) const {
    const std::complex<double>* src = in;
    if (in == out) {
        impl_->scratch_in.assign(in, in + size_);
        src = impl_->scratch_in.data();
    }
    fftw_execute_dft(impl_->bwd,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(src)),
                     reinterpret_cast<fftw_complex*>(out));
    const double norm = 1.0 / static_cast<double>(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] *= norm;
}

std::vector<std::complex<double>> SpectralTransform::forward(
    const std::vector<std::complex<double>>& in) const {
    if (in.size() != size_) throw std::invalid_argument("fft: shape mismatch");
    std::vector<std::complex<double>> out(size_);
    forward(in.data(), out.data());
    return out;
}

std::vector<std::complex<double>> SpectralTransform::inverse(
    const std::vector<std::complex<double>>& in) const {
    if (in.size() != size_) throw std::invalid_argument("fft: shape mismatch");
    std::vector<std::complex<double>> out(size_);
    inverse(in.data(), out.data());
    return out;
}

} // namespace cascade
