#pragma once

#include <span>

#include "glno/spectral/types.hpp"

namespace glno::spectral {

/// Inverse Laplace reconstruction on a time grid:
///   g(t) = Re( sum_n transient_n e^{mu_n t} + sum_i steady_i e^{-z_i t} ).
/// Grid points must satisfy the exponent guard for every pole.
/// OpenMP-parallel over grid points; output is independent of thread count
/// (each point is an independently accumulated sum in fixed term order).
std::vector<double> reconstruct_time(const SpectralProduct& prod,
                                     std::span<const double> grid);

/// Pre-truncation complex reconstruction (used to check that conjugate
/// symmetric inputs produce negligible imaginary parts).
std::vector<Complex> reconstruct_time_complex(const SpectralProduct& prod,
                                              std::span<const double> grid);

namespace serial_ref {
/// Serial reference for reconstruct_time: identical math, plain loops.
/// Kept for equivalence tests and the kernel benchmark.
std::vector<double> reconstruct_time(const SpectralProduct& prod,
                                     std::span<const double> grid);
} // namespace serial_ref

} // namespace glno::spectral
