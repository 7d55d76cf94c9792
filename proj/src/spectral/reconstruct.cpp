#include "glno/spectral/reconstruct.hpp"

#include <cmath>

namespace glno::spectral {

namespace {

void check_exponents(const SpectralProduct& prod, std::span<const double> grid) {
    double tmax = 0.0;
    for (double t : grid) {
        require(std::isfinite(t), "reconstruct: non-finite grid point");
        tmax = std::max(tmax, std::abs(t));
    }
    for (const auto& tr : prod.transient)
        require(std::abs(tr.pole.real()) * tmax <= kMaxExponent,
                "reconstruct: transient exponent overflow, |Re(mu)|*T = ",
                std::abs(tr.pole.real()) * tmax);
    for (const auto& st : prod.steady)
        require(std::abs(st.coord.sigma) * tmax <= kMaxExponent,
                "reconstruct: steady exponent overflow, |sigma|*T = ",
                std::abs(st.coord.sigma) * tmax);
}

inline Complex point_value(const SpectralProduct& prod, double t) {
    Complex acc{0.0, 0.0};
    for (const auto& tr : prod.transient) {
        const double a = std::exp(tr.pole.real() * t);
        const double ph = tr.pole.imag() * t;
        acc += tr.residue * Complex{a * std::cos(ph), a * std::sin(ph)};
    }
    for (const auto& st : prod.steady) {
        const double a = std::exp(-st.coord.sigma * t);
        const double ph = st.coord.omega * t;
        acc += st.residue * Complex{a * std::cos(ph), -a * std::sin(ph)};
    }
    return acc;
}

} // namespace

std::vector<double> reconstruct_time(const SpectralProduct& prod,
                                     std::span<const double> grid) {
    check_exponents(prod, grid);
    std::vector<double> out(grid.size());
    const std::int64_t n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        out[static_cast<std::size_t>(j)] =
            point_value(prod, grid[static_cast<std::size_t>(j)]).real();
    return out;
}

std::vector<Complex> reconstruct_time_complex(const SpectralProduct& prod,
                                              std::span<const double> grid) {
    check_exponents(prod, grid);
    std::vector<Complex> out(grid.size());
    const std::int64_t n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        out[static_cast<std::size_t>(j)] = point_value(prod, grid[static_cast<std::size_t>(j)]);
    return out;
}

namespace serial_ref {

std::vector<double> reconstruct_time(const SpectralProduct& prod,
                                     std::span<const double> grid) {
    check_exponents(prod, grid);
    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        Complex acc{0.0, 0.0};
        for (const auto& tr : prod.transient) {
            const double a = std::exp(tr.pole.real() * grid[j]);
            const double ph = tr.pole.imag() * grid[j];
            acc += tr.residue * Complex{a * std::cos(ph), a * std::sin(ph)};
        }
        for (const auto& st : prod.steady) {
            const double a = std::exp(-st.coord.sigma * grid[j]);
            const double ph = st.coord.omega * grid[j];
            acc += st.residue * Complex{a * std::cos(ph), -a * std::sin(ph)};
        }
        out[j] = acc.real();
    }
    return out;
}

} // namespace serial_ref

} // namespace glno::spectral
