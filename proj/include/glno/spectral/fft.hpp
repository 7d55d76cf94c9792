#pragma once

#include <complex>
#include <span>
#include <vector>

namespace glno::spectral {

/// Real-to-complex forward DFT (FFTW, unnormalized):
///   out[k] = sum_j in[j] e^{-2 pi i k j / K},  k = 0 .. K/2.
/// Plans are cached per size and creation is serialized; execution on
/// caller-owned buffers is thread-safe.
std::vector<std::complex<double>> fft_real_forward(std::span<const double> in);

/// Complex-to-complex DFT with e^{+2 pi i k j / K} kernel (unnormalized).
/// This is the adjoint of the forward real transform extended to C^K.
std::vector<std::complex<double>> fft_complex_backward(
    std::span<const std::complex<double>> in);

} // namespace glno::spectral
