#pragma once

#include "glno/spectral/types.hpp"

namespace glno::spectral {

/// Partial-fraction residues of G(s) = F(s) * K(s):
///   transient[n] = beta_n * sum_i alpha_i / (mu_n + z_i)   (pole at mu_n)
///   steady[i]    = alpha_i * sum_n beta_n / (-z_i - mu_n)  (pole at -z_i)
/// Throws, naming the offending (n, i) pair, when a kernel pole collides
/// with an input pole: |mu_n + z_i| <= kPoleSeparation.
SpectralProduct pole_residue_product(const SpectralDecomposition& f,
                                     const PoleResidueKernel& kernel);

} // namespace glno::spectral
