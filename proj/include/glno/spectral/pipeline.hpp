#pragma once

#include <span>

#include "glno/spectral/types.hpp"

namespace glno::spectral {

/// Generalized 1-D forward path: decompose (per-sigma weighted FFT) ->
/// pole-residue product -> time reconstruction on the sample grid
/// t_j = j * T / K. Output length equals the input length.
std::vector<double> generalized_forward_1d(std::span<const double> samples,
                                           double domain_length,
                                           std::span<const double> sigmas,
                                           int modes_per_sigma,
                                           const PoleResidueKernel& kernel);

/// Classic path (pure Fourier decomposition): exactly the generalized path
/// with sigmas = [0].
std::vector<double> lno_forward(std::span<const double> samples, double domain_length,
                                int modes_per_sigma, const PoleResidueKernel& kernel);

} // namespace glno::spectral
