#pragma once

#include <cstdint>

#include "glno/mesh/laplacian.hpp"

namespace glno::mesh {

struct SpectrumOptions {
    double tol = 1e-8;        // residual: ||S phi - lambda M phi|| <= tol * max(||S phi||, floor)
    int max_iterations = 400; // outer Rayleigh-Ritz sweeps
    std::uint64_t seed = 0x5eed5eedULL; // starting subspace
    int power_steps = 2;      // shift-inverted applications per sweep
};

/// Mass-orthonormal eigenpairs of the generalized problem S phi = lambda M phi,
/// eigenvalues ascending. Eigenfrequencies are sqrt(max(lambda, 0)).
struct ManifoldSpectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::VectorXd eigenfrequencies;
    Eigen::MatrixXd eigenfunctions; // V x k, Phi^T diag(mass) Phi = I
    MassMatrix mass;

    int count() const { return static_cast<int>(eigenvalues.size()); }

    /// Mean spacing of consecutive eigenfrequencies (default Gaussian width).
    double mean_frequency_spacing() const;
};

/// k algebraically smallest eigenpairs via shift-inverted block subspace
/// iteration with Rayleigh-Ritz extraction (dense solve below 256 vertices).
/// The lumped mass reduces the problem to standard form B = M^{-1/2} S M^{-1/2}.
/// Deterministic for a fixed options.seed. Throws on non-convergence,
/// reporting the achieved residual.
ManifoldSpectrum compute_spectrum(const Eigen::SparseMatrix<double>& stiffness,
                                  const MassMatrix& mass, int k,
                                  const SpectrumOptions& opts = {});

/// Convenience: build_laplacian + compute_spectrum.
ManifoldSpectrum compute_spectrum(const TriangleMesh& mesh, int k,
                                  const SpectrumOptions& opts = {});

} // namespace glno::mesh
