#include "glno/spectral/decompose.hpp"

#include <cmath>

#include "glno/spectral/fft.hpp"

namespace glno::spectral {

std::vector<int> retained_bins(int modes_per_sigma) {
    require(modes_per_sigma >= 1, "decompose: modes_per_sigma must be >= 1");
    std::vector<int> bins;
    bins.reserve(2 * static_cast<std::size_t>(modes_per_sigma) - 1);
    bins.push_back(0);
    for (int k = 1; k < modes_per_sigma; ++k) {
        bins.push_back(k);
        bins.push_back(-k);
    }
    return bins;
}

SpectralDecomposition decompose_uniform(std::span<const double> samples,
                                        double domain_length,
                                        std::span<const double> sigmas,
                                        int modes_per_sigma) {
    const int n = static_cast<int>(samples.size());
    require(domain_length > 0.0, "decompose: domain length must be positive");
    require(!sigmas.empty(), "decompose: empty sigma list");
    require(n >= 2 * modes_per_sigma, "decompose: need K >= 2*modes_per_sigma, got K = ",
            n, ", modes_per_sigma = ", modes_per_sigma);
    for (double v : samples)
        require(std::isfinite(v), "decompose: non-finite sample");

    const double dt = domain_length / n;
    const std::vector<int> bins = retained_bins(modes_per_sigma);

    SpectralDecomposition out;
    out.domain_length = domain_length;
    out.coords.reserve(sigmas.size() * bins.size());
    out.coeffs.reserve(sigmas.size() * bins.size());

    std::vector<double> weighted(static_cast<std::size_t>(n));
    for (double sigma : sigmas) {
        require(std::isfinite(sigma), "decompose: non-finite sigma");
        require(std::abs(sigma) * domain_length <= kMaxExponent,
                "decompose: |sigma|*T exceeds exponent guard");
        for (int j = 0; j < n; ++j)
            weighted[static_cast<std::size_t>(j)] =
                std::exp(-sigma * dt * j) * samples[static_cast<std::size_t>(j)];

        const auto spectrum = fft_real_forward(weighted); // c_k, k = 0..K/2
        for (int k : bins) {
            const auto c = spectrum[static_cast<std::size_t>(std::abs(k))];
            // alpha(+k) = conj(c_k)/K; alpha(-k) = c_k/K (exact conjugate pair).
            const Complex alpha = (k >= 0 ? std::conj(c) : c) / static_cast<double>(n);
            out.coords.push_back({sigma, 2.0 * M_PI * k / domain_length});
            out.coeffs.push_back(alpha);
        }
    }
    return out;
}

} // namespace glno::spectral
