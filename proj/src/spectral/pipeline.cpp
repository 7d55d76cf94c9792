#include "glno/spectral/pipeline.hpp"

#include "glno/spectral/decompose.hpp"
#include "glno/spectral/product.hpp"
#include "glno/spectral/reconstruct.hpp"

namespace glno::spectral {

std::vector<double> generalized_forward_1d(std::span<const double> samples,
                                           double domain_length,
                                           std::span<const double> sigmas,
                                           int modes_per_sigma,
                                           const PoleResidueKernel& kernel) {
    const auto decomp = decompose_uniform(samples, domain_length, sigmas, modes_per_sigma);
    const auto prod = pole_residue_product(decomp, kernel);
    std::vector<double> grid(samples.size());
    const double dt = domain_length / static_cast<double>(samples.size());
    for (std::size_t j = 0; j < grid.size(); ++j) grid[j] = dt * static_cast<double>(j);
    return reconstruct_time(prod, grid);
}

std::vector<double> lno_forward(std::span<const double> samples, double domain_length,
                                int modes_per_sigma, const PoleResidueKernel& kernel) {
    const double zero_sigma[1] = {0.0};
    return generalized_forward_1d(samples, domain_length, zero_sigma, modes_per_sigma, kernel);
}

} // namespace glno::spectral
