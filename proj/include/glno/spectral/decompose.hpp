#pragma once

#include <span>

#include "glno/spectral/types.hpp"

namespace glno::spectral {

/// Retained DFT bin indices for one decay rate: the modes_per_sigma lowest
/// |k| bins in conjugate pairs, ordered 0, +1, -1, +2, -2, ...
/// (2*modes_per_sigma - 1 bins in total).
std::vector<int> retained_bins(int modes_per_sigma);

/// Generalized Laplace decomposition of K uniform samples on [0, T)
/// (samples[j] = f(j*T/K)). For each decay rate sigma the samples are
/// weighted by e^{-sigma t_j}, transformed with an FFT, and the retained
/// bins are kept with coefficients
///   alpha(sigma, omega_k) = (1/K) sum_j e^{-sigma t_j} f(t_j) e^{+i omega_k t_j},
/// omega_k = 2 pi k / T. The +i analysis kernel pairs with the e^{-z t}
/// synthesis basis so that identity residues reproduce the signal.
/// For sigma = 0 this is the plain DFT coefficient set.
SpectralDecomposition decompose_uniform(std::span<const double> samples,
                                        double domain_length,
                                        std::span<const double> sigmas,
                                        int modes_per_sigma);

} // namespace glno::spectral
