#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "glno/util/error.hpp"

namespace glno::spectral {

using Complex = std::complex<double>;

/// Minimum separation (complex modulus) below which two spectral points are
/// treated as colliding poles. Far above f64 noise, far below any trained
/// pole spacing.
inline constexpr double kPoleSeparation = 1e-8;

/// Exponent magnitude guard; exp() past this is reported as an error instead
/// of silently overflowing (f64 exp limit is ~709).
inline constexpr double kMaxExponent = 700.0;

/// Spectral coordinate z = sigma + i*omega of the generalized basis
/// e^{-z x}: sigma is the decay rate, omega the angular frequency.
struct SpectralCoordinate {
    double sigma = 0.0;
    double omega = 0.0;

    Complex value() const { return {sigma, omega}; }

    bool operator==(const SpectralCoordinate&) const = default;
};

/// Kernel in pole-residue form K(s) = sum_n residues[n] / (s - poles[n]).
struct PoleResidueKernel {
    std::vector<Complex> poles;
    std::vector<Complex> residues;

    int count() const { return static_cast<int>(poles.size()); }

    /// Checks pairwise pole separation and (optionally) Re(pole) <= 0.
    void validate(bool require_stable = false) const;

    Complex evaluate(Complex s) const;
};

/// Input decomposition f(t) ~= sum_i coeffs[i] * e^{-coords[i] t} over [0, T].
struct SpectralDecomposition {
    std::vector<SpectralCoordinate> coords;
    std::vector<Complex> coeffs;
    double domain_length = 0.0;

    int count() const { return static_cast<int>(coords.size()); }

    void validate() const;
};

/// Result of the kernel action in the Laplace domain, split into residues
/// anchored at the input coordinates (steady) and at the kernel poles
/// (transient).
struct SpectralProduct {
    struct SteadyTerm {
        SpectralCoordinate coord; // contribution residue * e^{-coord t}
        Complex residue;
    };
    struct TransientTerm {
        Complex pole; // contribution residue * e^{pole t}
        Complex residue;
    };

    std::vector<SteadyTerm> steady;
    std::vector<TransientTerm> transient;
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace glno::spectral
