#include "glno/spectral/product.hpp"

#include "glno/spectral/basis.hpp"

namespace glno::spectral {

void PoleResidueKernel::validate(bool require_stable) const {
    require(poles.size() == residues.size(), "kernel: poles/residues length mismatch");
    for (std::size_t n = 0; n < poles.size(); ++n) {
        require(is_finite(poles[n]) && is_finite(residues[n]),
                "kernel: non-finite pole or residue at n = ", n);
        if (require_stable)
            require(poles[n].real() <= 0.0, "kernel: unstable pole Re(mu) > 0 at n = ", n);
        for (std::size_t m = n + 1; m < poles.size(); ++m)
            require(std::abs(poles[n] - poles[m]) > kPoleSeparation,
                    "kernel: poles ", n, " and ", m, " closer than pole separation");
    }
}

Complex PoleResidueKernel::evaluate(Complex s) const {
    Complex acc{0.0, 0.0};
    for (std::size_t n = 0; n < poles.size(); ++n) {
        const Complex d = s - poles[n];
        require(std::abs(d) > kPoleSeparation, "kernel: evaluation at pole n = ", n);
        acc += residues[n] / d;
    }
    return acc;
}

void SpectralDecomposition::validate() const {
    require(coords.size() == coeffs.size(), "decomposition: coords/coeffs length mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        require(std::isfinite(coords[i].sigma) && std::isfinite(coords[i].omega),
                "decomposition: non-finite coordinate at i = ", i);
        require(is_finite(coeffs[i]), "decomposition: non-finite coefficient at i = ", i);
        for (std::size_t j = i + 1; j < coords.size(); ++j)
            require(std::abs(coords[i].value() - coords[j].value()) > 0.0,
                    "decomposition: duplicate coordinates at i = ", i, ", j = ", j);
    }
}

Complex eval_decomposition(const SpectralDecomposition& f, Complex s) {
    Complex acc{0.0, 0.0};
    for (int i = 0; i < f.count(); ++i)
        acc += f.coeffs[static_cast<std::size_t>(i)] *
               laplace_of_basis(f.coords[static_cast<std::size_t>(i)], s);
    return acc;
}

SpectralProduct pole_residue_product(const SpectralDecomposition& f,
                                     const PoleResidueKernel& kernel) {
    const int m = f.count();
    const int n = kernel.count();

    // Collision guard up front so the error names the offending pair.
    for (int in = 0; in < n; ++in)
        for (int ii = 0; ii < m; ++ii)
            require(std::abs(kernel.poles[static_cast<std::size_t>(in)] +
                             f.coords[static_cast<std::size_t>(ii)].value()) > kPoleSeparation,
                    "pole_residue_product: kernel pole n = ", in,
                    " collides with input pole at -z_i, i = ", ii);

    SpectralProduct out;
    out.transient.reserve(static_cast<std::size_t>(n));
    out.steady.reserve(static_cast<std::size_t>(m));

    for (int in = 0; in < n; ++in) {
        const Complex mu = kernel.poles[static_cast<std::size_t>(in)];
        Complex acc{0.0, 0.0};
        for (int ii = 0; ii < m; ++ii)
            acc += f.coeffs[static_cast<std::size_t>(ii)] /
                   (mu + f.coords[static_cast<std::size_t>(ii)].value());
        out.transient.push_back({mu, kernel.residues[static_cast<std::size_t>(in)] * acc});
    }
    for (int ii = 0; ii < m; ++ii) {
        const Complex z = f.coords[static_cast<std::size_t>(ii)].value();
        Complex acc{0.0, 0.0};
        for (int in = 0; in < n; ++in)
            acc += kernel.residues[static_cast<std::size_t>(in)] /
                   (-z - kernel.poles[static_cast<std::size_t>(in)]);
        out.steady.push_back(
            {f.coords[static_cast<std::size_t>(ii)], f.coeffs[static_cast<std::size_t>(ii)] * acc});
    }
    return out;
}

} // namespace glno::spectral
