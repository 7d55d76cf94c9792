#pragma once

#include "glno/spectral/types.hpp"

namespace glno::spectral {

/// Generalized Laplace basis e^{-z x} = e^{-sigma x} (cos(omega x) - i sin(omega x)).
/// Throws when |sigma * x| exceeds the exponent guard.
inline Complex evaluate_basis(SpectralCoordinate z, double x) {
    require(std::isfinite(x), "evaluate_basis: x not finite");
    const double e = z.sigma * x;
    require(std::abs(e) <= kMaxExponent, "evaluate_basis: exponent overflow |sigma*x| = ",
            std::abs(e));
    const double a = std::exp(-e);
    return {a * std::cos(z.omega * x), -a * std::sin(z.omega * x)};
}

/// Laplace transform of the basis: L{e^{-z t}}(s) = 1 / (s + z).
/// Throws on pole collision |s + z| <= kPoleSeparation.
inline Complex laplace_of_basis(SpectralCoordinate z, Complex s) {
    const Complex d = s + z.value();
    require(std::abs(d) > kPoleSeparation, "laplace_of_basis: pole collision at s = -z");
    return 1.0 / d;
}

/// F(s) = sum_i coeffs[i] / (s + coords[i]); empty decomposition gives 0.
Complex eval_decomposition(const SpectralDecomposition& f, Complex s);

} // namespace glno::spectral
