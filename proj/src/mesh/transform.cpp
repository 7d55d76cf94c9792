#include "glno/mesh/transform.hpp"

#include <cmath>

namespace glno::mesh {

namespace {

void check_entries(const ManifoldSpectrum& spectrum, const ScalarField& p,
                   std::span<const GeometricEntry> entries) {
    const double pmax = p.size() > 0 ? p.cwiseAbs().maxCoeff() : 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        require(entries[i].mode_index >= 0 && entries[i].mode_index < spectrum.count(),
                "geometric transform: mode index out of range at entry ", i);
        require(std::abs(entries[i].sigma) * pmax <= spectral::kMaxExponent,
                "geometric transform: |sigma|*max(P) exceeds exponent guard at entry ", i);
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            require(entries[i].sigma != entries[j].sigma ||
                        entries[i].mode_index != entries[j].mode_index,
                    "geometric transform: duplicate (sigma, mode) entry at ", i, ", ", j);
    }
}

double decompose_entry(const ScalarField& f, const ManifoldSpectrum& spectrum,
                       const ScalarField& p, const GeometricEntry& e) {
    const auto& phi = spectrum.eigenfunctions;
    double acc = 0.0;
    for (Eigen::Index v = 0; v < f.size(); ++v)
        acc += std::exp(-e.sigma * p[v]) * f[v] * phi(v, e.mode_index) *
               spectrum.mass.diag[v];
    return acc;
}

} // namespace

GeometricDecomposition geometric_decompose(const ScalarField& f,
                                           const ManifoldSpectrum& spectrum,
                                           const ScalarField& p,
                                           std::span<const GeometricEntry> entries) {
    require(f.size() == spectrum.eigenfunctions.rows() && f.size() == p.size(),
            "geometric_decompose: field/spectrum size mismatch");
    check_entries(spectrum, p, entries);
    GeometricDecomposition out;
    out.entries.assign(entries.begin(), entries.end());
    out.coeffs.resize(static_cast<Eigen::Index>(entries.size()));
    const std::int64_t m = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i)
        out.coeffs[static_cast<Eigen::Index>(i)] =
            decompose_entry(f, spectrum, p, entries[static_cast<std::size_t>(i)]);
    return out;
}

ScalarField inverse_pole_field(Complex mu, const ManifoldSpectrum& spectrum,
                               const ScalarField& p, double sigma_width,
                               bool renormalize) {
    require(sigma_width > 0.0, "inverse_pole_field: Sigma must be positive, got ",
            sigma_width);
    const double pmax = p.size() > 0 ? p.cwiseAbs().maxCoeff() : 0.0;
    require(std::abs(mu.real()) * pmax <= spectral::kMaxExponent,
            "inverse_pole_field: |Re(mu)|*max(P) exceeds exponent guard");

    const int k = spectrum.count();
    Eigen::VectorXd weights(k);
    const double gauss0 = 1.0 / (std::sqrt(2.0 * M_PI) * sigma_width);
    for (int j = 0; j < k; ++j) {
        const double d = mu.imag() - spectrum.eigenfrequencies[j];
        weights[j] = gauss0 * std::exp(-d * d / (2.0 * sigma_width * sigma_width));
    }
    if (renormalize) weights /= gauss0;

    ScalarField blend = spectrum.eigenfunctions * weights;
    const std::int64_t nv = static_cast<std::int64_t>(p.size());
    ScalarField out(nv);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < nv; ++v)
        out[static_cast<Eigen::Index>(v)] = std::exp(mu.real() * p[static_cast<Eigen::Index>(v)]) *
                                            blend[static_cast<Eigen::Index>(v)];
    return out;
}

ScalarField geometric_reconstruct(const GeometricResidues& residues,
                                  const ManifoldSpectrum& spectrum, const ScalarField& p,
                                  double sigma_width, bool renormalize) {
    require(residues.steady_entries.size() == residues.steady.size(),
            "geometric_reconstruct: steady entries/residues length mismatch");
    require(residues.transient_poles.size() == residues.transient.size(),
            "geometric_reconstruct: transient poles/residues length mismatch");
    check_entries(spectrum, p, residues.steady_entries);

    const std::int64_t nv = static_cast<std::int64_t>(p.size());
    ScalarField out = ScalarField::Zero(nv);

    // Steady part: real basis fields, so only Re(residue) contributes.
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < nv; ++v) {
        double acc = 0.0;
        for (std::size_t i = 0; i < residues.steady_entries.size(); ++i) {
            const auto& e = residues.steady_entries[i];
            acc += residues.steady[i].real() *
                   std::exp(-e.sigma * p[static_cast<Eigen::Index>(v)]) *
                   spectrum.eigenfunctions(static_cast<Eigen::Index>(v), e.mode_index);
        }
        out[static_cast<Eigen::Index>(v)] = acc;
    }

    for (std::size_t n = 0; n < residues.transient_poles.size(); ++n) {
        const ScalarField field = inverse_pole_field(residues.transient_poles[n], spectrum,
                                                     p, sigma_width, renormalize);
        out += residues.transient[n].real() * field;
    }
    return out;
}

namespace serial_ref {

GeometricDecomposition geometric_decompose(const ScalarField& f,
                                           const ManifoldSpectrum& spectrum,
                                           const ScalarField& p,
                                           std::span<const GeometricEntry> entries) {
    require(f.size() == spectrum.eigenfunctions.rows() && f.size() == p.size(),
            "geometric_decompose: field/spectrum size mismatch");
    check_entries(spectrum, p, entries);
    GeometricDecomposition out;
    out.entries.assign(entries.begin(), entries.end());
    out.coeffs.resize(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.coeffs[static_cast<Eigen::Index>(i)] = decompose_entry(f, spectrum, p, entries[i]);
    return out;
}

ScalarField geometric_reconstruct(const GeometricResidues& residues,
                                  const ManifoldSpectrum& spectrum, const ScalarField& p,
                                  double sigma_width, bool renormalize) {
    require(residues.steady_entries.size() == residues.steady.size(),
            "geometric_reconstruct: steady entries/residues length mismatch");
    require(residues.transient_poles.size() == residues.transient.size(),
            "geometric_reconstruct: transient poles/residues length mismatch");
    check_entries(spectrum, p, residues.steady_entries);

    const Eigen::Index nv = p.size();
    ScalarField out = ScalarField::Zero(nv);
    for (Eigen::Index v = 0; v < nv; ++v) {
        double acc = 0.0;
        for (std::size_t i = 0; i < residues.steady_entries.size(); ++i) {
            const auto& e = residues.steady_entries[i];
            acc += residues.steady[i].real() * std::exp(-e.sigma * p[v]) *
                   spectrum.eigenfunctions(v, e.mode_index);
        }
        out[v] = acc;
    }
    const double gauss0 = 1.0 / (std::sqrt(2.0 * M_PI) * sigma_width);
    for (std::size_t n = 0; n < residues.transient_poles.size(); ++n) {
        const Complex mu = residues.transient_poles[n];
        for (Eigen::Index v = 0; v < nv; ++v) {
            double blend = 0.0;
            for (int j = 0; j < spectrum.count(); ++j) {
                const double d = mu.imag() - spectrum.eigenfrequencies[j];
                double w = gauss0 * std::exp(-d * d / (2.0 * sigma_width * sigma_width));
                if (renormalize) w /= gauss0;
                blend += w * spectrum.eigenfunctions(v, j);
            }
            out[v] += residues.transient[n].real() * std::exp(mu.real() * p[v]) * blend;
        }
    }
    return out;
}

} // namespace serial_ref

} // namespace glno::mesh
