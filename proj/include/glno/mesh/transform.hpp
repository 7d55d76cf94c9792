#pragma once

#include "glno/mesh/fields.hpp"
#include "glno/mesh/spectrum.hpp"
#include "glno/spectral/types.hpp"

namespace glno::mesh {

using spectral::Complex;

/// One geometric basis entry: coordinate z_i = sigma_i + i omega_{k_i} with
/// omega taken from the spectrum's eigenfrequency at mode_index.
struct GeometricEntry {
    double sigma = 0.0;
    int mode_index = 0;
};

/// Coefficients of f against the geometric basis exp(-sigma_i P) phi_{k_i}.
struct GeometricDecomposition {
    std::vector<GeometricEntry> entries;
    Eigen::VectorXd coeffs; // alpha_i, real

    int count() const { return static_cast<int>(entries.size()); }
};

/// alpha_i = < exp(-sigma_i P) f, phi_{k_i} >_mu. Throws when
/// |sigma_i| * max(P) exceeds the exponent guard or a mode index is out of
/// range. OpenMP-parallel over entries.
GeometricDecomposition geometric_decompose(const ScalarField& f,
                                           const ManifoldSpectrum& spectrum,
                                           const ScalarField& p,
                                           std::span<const GeometricEntry> entries);

/// Gaussian projection of a continuous pole onto the discrete spectrum:
///   field(x) = exp(Re(mu) P(x)) * sum_k w_k phi_k(x),
///   w_k = Gauss(Im(mu) - omega_k), Gauss(x) = exp(-x^2/(2 Sigma^2)) / (sqrt(2 pi) Sigma).
/// Weights are unnormalized by default; `renormalize` divides by Gauss(0)
/// so the resonant weight is exactly one.
ScalarField inverse_pole_field(Complex mu, const ManifoldSpectrum& spectrum,
                               const ScalarField& p, double sigma_width,
                               bool renormalize = false);

/// Final reconstruction on the manifold:
///   g(x) = sum_i Re(steady_i) exp(-sigma_i P) phi_{k_i}(x)
///        + sum_n Re(transient_n * inverse_pole_field(mu_n, ...)).
struct GeometricResidues {
    std::vector<GeometricEntry> steady_entries;
    std::vector<Complex> steady; // complex residues, basis entry order
    std::vector<Complex> transient_poles;
    std::vector<Complex> transient;
};

ScalarField geometric_reconstruct(const GeometricResidues& residues,
                                  const ManifoldSpectrum& spectrum, const ScalarField& p,
                                  double sigma_width, bool renormalize = false);

namespace serial_ref {
/// Serial references for the transform kernels, kept for equivalence tests.
GeometricDecomposition geometric_decompose(const ScalarField& f,
                                           const ManifoldSpectrum& spectrum,
                                           const ScalarField& p,
                                           std::span<const GeometricEntry> entries);
ScalarField geometric_reconstruct(const GeometricResidues& residues,
                                  const ManifoldSpectrum& spectrum, const ScalarField& p,
                                  double sigma_width, bool renormalize = false);
} // namespace serial_ref

} // namespace glno::mesh
