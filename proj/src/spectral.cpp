#include "entrogeo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace entrogeo {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v)) fail(errc::non_finite, "spectrum value is not finite");
    std::stable_sort(values_.begin(), values_.end(), std::greater<double>());
}

Spectrum Spectrum::state(std::vector<double> values, double tol) {
    if (values.empty()) fail(errc::empty_spectrum, "state spectrum must be nonempty");
    double sum = 0.0;
    for (double v : values) {
        if (v < -tol)
            fail(errc::negative_weight, "spectrum value " + std::to_string(v) + " below -tol");
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol) fail(errc::sum_not_one, "spectrum sums to " + std::to_string(sum));
    for (double& v : values)
        if (v < 0.0) v = 0.0;
    return Spectrum(std::move(values));
}

double Spectrum::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

EigenDecomposition::EigenDecomposition(Spectrum spectrum, std::size_t dim,
                                       std::vector<std::complex<double>> basis)
    : spectrum_(std::move(spectrum)), dim_(dim), basis_(std::move(basis)) {
    if (spectrum_.size() != dim_ || basis_.size() != dim_ * dim_)
        fail(errc::dimension_mismatch, "eigendecomposition pieces disagree in size");
}

namespace {

std::complex<double> recombined_entry(const EigenDecomposition& ed,
                                      const std::vector<double>& values, std::size_t i,
                                      std::size_t j) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < ed.dim(); ++k)
        acc += values[k] * ed.basis(i, k) * std::conj(ed.basis(j, k));
    return acc;
}

}  // namespace

HermitianMatrix EigenDecomposition::reconstruct() const {
    return synthesize(*this, spectrum_.values());
}

double EigenDecomposition::reconstruction_residual(const HermitianMatrix& original) const {
    if (original.dim() != dim_)
        fail(errc::dimension_mismatch, "residual against a matrix of different dimension");
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const std::complex<double> delta =
                original.at(i, j) - recombined_entry(*this, spectrum_.values(), i, j);
            worst = std::max(worst, std::abs(delta));
        }
    return worst;
}

double EigenDecomposition::orthonormality_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            std::complex<double> acc = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) acc += std::conj(basis(k, i)) * basis(k, j);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

HermitianMatrix synthesize(const EigenDecomposition& ed, const std::vector<double>& values) {
    if (values.size() != ed.dim())
        fail(errc::dimension_mismatch, "synthesize with wrong number of values");
    const std::size_t d = ed.dim();
    std::vector<double> re(d * d, 0.0), im(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::complex<double> z = recombined_entry(ed, values, i, j);
            re[i * d + j] = z.real();
            im[i * d + j] = z.imag();
        }
    return HermitianMatrix::hermitized(d, std::move(re), std::move(im));
}

namespace {

double offdiag_frobenius(const std::vector<std::complex<double>>& a, std::size_t d) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j) acc += std::norm(a[i * d + j]);
    return std::sqrt(acc);
}

double full_frobenius(const std::vector<std::complex<double>>& a, std::size_t d) {
    double acc = 0.0;
    for (std::size_t k = 0; k < d * d; ++k) acc += std::norm(a[k]);
    return std::sqrt(acc);
}

}  // namespace

EigenDecomposition eigen_hermitian(const HermitianMatrix& h, const JacobiOptions& opts) {
    const std::size_t d = h.dim();
    std::vector<std::complex<double>> a(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i * d + j] = h.at(i, j);

    std::vector<std::complex<double>> q(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) q[i * d + i] = 1.0;

    const double stop = opts.tol * std::max(1.0, full_frobenius(a, d));
    bool converged = offdiag_frobenius(a, d) <= stop;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t r = p + 1; r < d; ++r) {
                const std::complex<double> beta = a[p * d + r];
                const double mag = std::abs(beta);
                if (mag == 0.0) continue;
                const std::complex<double> phase = beta / mag;
                const double app = a[p * d + p].real();
                const double arr = a[r * d + r].real();
                const double theta = (arr - app) / (2.0 * mag);
                const double sign = theta < 0.0 ? -1.0 : 1.0;
                // Smaller-magnitude root of t^2 - 2 theta t - 1 = 0; it
                // zeroes the pivot while spreading the two diagonals apart.
                const double t = std::isfinite(theta)
                                     ? -sign / (std::abs(theta) + std::hypot(theta, 1.0))
                                     : 0.0;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rotation in the (p, r) plane: U_pp = U_rr = c,
                // U_pr = -s e^{i phi}, U_rp = s e^{-i phi}. Diagonal moves
                // by exactly +-t|beta| and the pivot is zeroed outright.
                a[p * d + p] = app + t * mag;
                a[r * d + r] = arr - t * mag;
                a[p * d + r] = 0.0;
                a[r * d + p] = 0.0;
                for (std::size_t k = 0; k < d; ++k) {
                    if (k == p || k == r) continue;
                    const std::complex<double> akp = a[k * d + p];
                    const std::complex<double> akr = a[k * d + r];
                    a[k * d + p] = c * akp + s * std::conj(phase) * akr;
                    a[k * d + r] = -s * phase * akp + c * akr;
                    a[p * d + k] = std::conj(a[k * d + p]);
                    a[r * d + k] = std::conj(a[k * d + r]);
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const std::complex<double> qkp = q[k * d + p];
                    const std::complex<double> qkr = q[k * d + r];
                    q[k * d + p] = c * qkp + s * std::conj(phase) * qkr;
                    q[k * d + r] = -s * phase * qkp + c * qkr;
                }
            }
        }
        converged = offdiag_frobenius(a, d) <= stop;
    }
    if (!converged)
        fail(errc::no_convergence,
             "Jacobi sweeps exhausted at dimension " + std::to_string(d));

    std::vector<double> lam(d);
    for (std::size_t i = 0; i < d; ++i) lam[i] = a[i * d + i].real();
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return lam[i] > lam[j]; });

    std::vector<double> sorted(d);
    std::vector<std::complex<double>> basis(d * d);
    for (std::size_t c = 0; c < d; ++c) {
        sorted[c] = lam[order[c]];
        for (std::size_t rr = 0; rr < d; ++rr) basis[rr * d + c] = q[rr * d + order[c]];
    }
    return EigenDecomposition(Spectrum(std::move(sorted)), d, std::move(basis));
}

Spectrum spectrum_of(const DiscreteDistribution& w, double tol) {
    return Spectrum::state(w.weights().entries(), tol);
}

Spectrum spectrum_of(const DensityOperator& rho, double tol) {
    return Spectrum::state(eigen_hermitian(rho.matrix()).spectrum().values(), tol);
}

}  // namespace entrogeo
