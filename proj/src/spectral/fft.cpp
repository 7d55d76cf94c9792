#include "glno/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "glno/util/error.hpp"

namespace glno::spectral {

namespace {

// FFTW planner state is global; plan creation must be serialized. Executing
// a cached plan on fresh buffers via the new-array interface is thread-safe.
std::mutex g_plan_mutex;

fftw_plan r2c_plan(int n, double* in, fftw_complex* out) {
    static std::map<int, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        // FFTW_UNALIGNED: cached plans get re-executed on arbitrary buffers.
        fftw_plan p = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE | FFTW_UNALIGNED);
        it = cache.emplace(n, p).first;
    }
    return it->second;
}

fftw_plan c2c_backward_plan(int n, fftw_complex* in, fftw_complex* out) {
    static std::map<int, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        fftw_plan p = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        it = cache.emplace(n, p).first;
    }
    return it->second;
}

} // namespace

std::vector<std::complex<double>> fft_real_forward(std::span<const double> in) {
    const int n = static_cast<int>(in.size());
    require(n >= 1, "fft: empty input");
    std::vector<double> buf(in.begin(), in.end());
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n / 2 + 1));
    fftw_plan p = r2c_plan(n, buf.data(), reinterpret_cast<fftw_complex*>(out.data()));
    fftw_execute_dft_r2c(p, buf.data(), reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

std::vector<std::complex<double>> fft_complex_backward(
    std::span<const std::complex<double>> in) {
    const int n = static_cast<int>(in.size());
    require(n >= 1, "fft: empty input");
    std::vector<std::complex<double>> buf(in.begin(), in.end());
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    fftw_plan p = c2c_backward_plan(n, reinterpret_cast<fftw_complex*>(buf.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()));
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

} // namespace glno::spectral
