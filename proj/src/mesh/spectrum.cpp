#include "glno/mesh/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include "glno/util/error.hpp"
#include "glno/util/rng.hpp"

namespace glno::mesh {

double ManifoldSpectrum::mean_frequency_spacing() const {
    const int k = count();
    if (k < 2) return 1.0;
    return (eigenfrequencies[k - 1] - eigenfrequencies[0]) / static_cast<double>(k - 1);
}

namespace {

// Fix sign so the entry of largest magnitude is positive (ties: lowest index).
void fix_signs(Eigen::MatrixXd& phi) {
    for (Eigen::Index c = 0; c < phi.cols(); ++c) {
        Eigen::Index imax = 0;
        double amax = -1.0;
        for (Eigen::Index r = 0; r < phi.rows(); ++r) {
            const double a = std::abs(phi(r, c));
            if (a > amax) {
                amax = a;
                imax = r;
            }
        }
        if (phi(imax, c) < 0.0) phi.col(c) = -phi.col(c);
    }
}

ManifoldSpectrum finalize(const Eigen::VectorXd& lambda, const Eigen::MatrixXd& y,
                          const Eigen::VectorXd& inv_sqrt_mass, const MassMatrix& mass) {
    ManifoldSpectrum out;
    out.eigenvalues = lambda;
    out.eigenfrequencies = lambda.cwiseMax(0.0).cwiseSqrt();
    out.eigenfunctions = inv_sqrt_mass.asDiagonal() * y;
    fix_signs(out.eigenfunctions);
    out.mass = mass;
    return out;
}

} // namespace

ManifoldSpectrum compute_spectrum(const Eigen::SparseMatrix<double>& stiffness,
                                  const MassMatrix& mass, int k,
                                  const SpectrumOptions& opts) {
    const int nv = static_cast<int>(stiffness.rows());
    require(stiffness.cols() == nv, "spectrum: stiffness not square");
    require(mass.diag.size() == nv, "spectrum: mass size mismatch");
    require(k >= 1 && k < nv, "spectrum: need 1 <= k < V, got k = ", k, ", V = ", nv);
    require((mass.diag.array() > 0.0).all(), "spectrum: non-positive mass entry");

    // Standard form B = M^{-1/2} S M^{-1/2}; y-orthonormality gives
    // mass-orthonormal phi = M^{-1/2} y.
    const Eigen::VectorXd inv_sqrt = mass.diag.cwiseSqrt().cwiseInverse();
    Eigen::SparseMatrix<double> b = inv_sqrt.asDiagonal() * stiffness * inv_sqrt.asDiagonal();
    b.makeCompressed();

    const double diag_scale = b.diagonal().cwiseAbs().mean();
    const double res_floor = 1e-12 * std::max(diag_scale, 1.0);

    if (nv <= 256) {
        // Small problems: dense, exact, no iteration.
        Eigen::MatrixXd bd(b);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(bd);
        require(es.info() == Eigen::Success, "spectrum: dense eigensolver failed");
        return finalize(es.eigenvalues().head(k), es.eigenvectors().leftCols(k), inv_sqrt,
                        mass);
    }

    // Shift-inverted block subspace iteration. The small positive shift makes
    // B + tau I safely factorizable while keeping the smallest eigenvalues
    // strongly dominant under inversion.
    const double tau = std::max(1e-8, 1e-3 * diag_scale);
    Eigen::SparseMatrix<double> shifted = b;
    for (int v = 0; v < nv; ++v) shifted.coeffRef(v, v) += tau;
    shifted.makeCompressed();
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(shifted);
    require(solver.info() == Eigen::Success, "spectrum: LDLT factorization failed");

    const int p = std::min(nv - 1, k + std::max(8, k / 2));
    Rng rng(opts.seed);
    Eigen::MatrixXd x(nv, p);
    for (int c = 0; c < p; ++c)
        for (int r = 0; r < nv; ++r) x(r, c) = rng.uniform(-1.0, 1.0);

    Eigen::VectorXd ritz;
    double worst_res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opts.max_iterations; ++it) {
        for (int s = 0; s < std::max(1, opts.power_steps); ++s) x = solver.solve(x);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
        const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(nv, p);
        const Eigen::MatrixXd bq = b * q;
        const Eigen::MatrixXd h = q.transpose() * bq;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (h + h.transpose()));
        require(es.info() == Eigen::Success, "spectrum: Rayleigh-Ritz eigensolver failed");
        x = q * es.eigenvectors();
        ritz = es.eigenvalues();

        const Eigen::MatrixXd bx = bq * es.eigenvectors();
        worst_res = 0.0;
        bool ok = true;
        for (int c = 0; c < k; ++c) {
            const double rnorm = (bx.col(c) - ritz[c] * x.col(c)).norm();
            const double denom = std::max(bx.col(c).norm(), res_floor);
            worst_res = std::max(worst_res, rnorm / denom);
            if (rnorm > opts.tol * denom) ok = false;
        }
        if (ok) return finalize(ritz.head(k), x.leftCols(k), inv_sqrt, mass);
    }
    fail("spectrum: no convergence after ", opts.max_iterations,
         " iterations; achieved residual ", worst_res, " (tol ", opts.tol, ")");
}

ManifoldSpectrum compute_spectrum(const TriangleMesh& mesh, int k,
                                  const SpectrumOptions& opts) {
    const auto lap = build_laplacian(mesh);
    return compute_spectrum(lap.stiffness, lap.mass, k, opts);
}

} // namespace glno::mesh
