#include "entrogeo/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "entrogeo/spectral.hpp"

namespace entrogeo {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::non_finite: return "NonFinite";
        case errc::negative_weight: return "NegativeWeight";
        case errc::sum_not_one: return "SumNotOne";
        case errc::not_hermitian: return "NotHermitian";
        case errc::trace_not_one: return "TraceNotOne";
        case errc::not_positive: return "NotPositive";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::kind_mismatch: return "KindMismatch";
        case errc::no_convergence: return "NoConvergence";
        case errc::empty_spectrum: return "EmptySpectrum";
        case errc::output_not_distribution: return "OutputNotDistribution";
        case errc::not_contractive: return "NotContractive";
        case errc::bad_argument: return "BadArgument";
        case errc::io_failure: return "IoFailure";
    }
    return "UnknownError";
}

RealSequence::RealSequence(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) fail(errc::bad_argument, "sequence must have at least one entry");
    for (double x : entries_)
        if (!std::isfinite(x)) fail(errc::non_finite, "sequence entry is not finite");
}

DiscreteDistribution::DiscreteDistribution(RealSequence weights, double tol)
    : weights_(std::move(weights)) {
    double sum = 0.0;
    for (std::size_t i = 0; i < weights_.dim(); ++i) {
        if (weights_[i] < -tol)
            fail(errc::negative_weight,
                 "weight " + std::to_string(weights_[i]) + " at index " + std::to_string(i));
        sum += weights_[i];
    }
    if (std::abs(sum - 1.0) > tol)
        fail(errc::sum_not_one, "weights sum to " + std::to_string(sum));
}

DiscreteDistribution DiscreteDistribution::unchecked(RealSequence weights) {
    return DiscreteDistribution(std::move(weights), unchecked_tag{});
}

DiscreteDistribution make_distribution(std::vector<double> raw, double tol) {
    return DiscreteDistribution(RealSequence(std::move(raw)), tol);
}

HermitianMatrix::HermitianMatrix(const std::vector<std::vector<double>>& re,
                                 const std::vector<std::vector<double>>& im, double tol) {
    const std::size_t d = re.size();
    if (d == 0) fail(errc::not_hermitian, "matrix is empty");
    if (im.size() != d) fail(errc::not_hermitian, "re and im planes differ in size");
    for (std::size_t i = 0; i < d; ++i)
        if (re[i].size() != d || im[i].size() != d)
            fail(errc::not_hermitian, "matrix is not square");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!std::isfinite(re[i][j]) || !std::isfinite(im[i][j]))
                fail(errc::non_finite, "matrix entry is not finite");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            if (std::abs(re[i][j] - re[j][i]) > tol || std::abs(im[i][j] + im[j][i]) > tol)
                fail(errc::not_hermitian, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") is not the conjugate of its mirror");
    // Store with the upper triangle authoritative so the matrix is exactly
    // Hermitian from here on.
    dim_ = d;
    re_.assign(d * d, 0.0);
    im_.assign(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        re_[i * d + i] = re[i][i];
        for (std::size_t j = i + 1; j < d; ++j) {
            re_[i * d + j] = re[i][j];
            re_[j * d + i] = re[i][j];
            im_[i * d + j] = im[i][j];
            im_[j * d + i] = -im[i][j];
        }
    }
}

HermitianMatrix HermitianMatrix::hermitized(std::size_t dim, std::vector<double> re,
                                            std::vector<double> im) {
    HermitianMatrix m;
    m.dim_ = dim;
    m.re_.assign(dim * dim, 0.0);
    m.im_.assign(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        m.re_[i * dim + i] = re[i * dim + i];
        for (std::size_t j = i + 1; j < dim; ++j) {
            const double r = 0.5 * (re[i * dim + j] + re[j * dim + i]);
            const double s = 0.5 * (im[i * dim + j] - im[j * dim + i]);
            m.re_[i * dim + j] = r;
            m.re_[j * dim + i] = r;
            m.im_[i * dim + j] = s;
            m.im_[j * dim + i] = -s;
        }
    }
    return m;
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += re(i, i);
    return t;
}

DensityOperator::DensityOperator(HermitianMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    const double tr = matrix_.trace();
    if (std::abs(tr - 1.0) > tol) fail(errc::trace_not_one, "trace is " + std::to_string(tr));
    const Spectrum spec = eigen_hermitian(matrix_).spectrum();
    const double lo = spec.values().back();
    if (lo < -tol) fail(errc::not_positive, "smallest eigenvalue is " + std::to_string(lo));
}

DensityOperator DensityOperator::unchecked(HermitianMatrix matrix) {
    return DensityOperator(std::move(matrix), unchecked_tag{});
}

DensityOperator make_density(const std::vector<std::vector<double>>& re,
                             const std::vector<std::vector<double>>& im, double tol) {
    return DensityOperator(HermitianMatrix(re, im, tol), tol);
}

double norm_one(const RealSequence& a) {
    double s = 0.0;
    for (double x : a.entries()) s += std::abs(x);
    return s;
}

double norm_one(const HermitianMatrix& a) {
    const EigenDecomposition ed = eigen_hermitian(a);
    double s = 0.0;
    for (double v : ed.spectrum().values()) s += std::abs(v);
    return s;
}

double norm_inf(const RealSequence& a) {
    double m = 0.0;
    for (double x : a.entries()) m = std::max(m, std::abs(x));
    return m;
}

double norm_inf(const HermitianMatrix& a) {
    const EigenDecomposition ed = eigen_hermitian(a);
    double m = 0.0;
    for (double v : ed.spectrum().values()) m = std::max(m, std::abs(v));
    return m;
}

double pairing(const RealSequence& a, const RealSequence& b) {
    if (a.dim() != b.dim())
        fail(errc::dimension_mismatch,
             "pairing of dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double pairing(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim())
        fail(errc::dimension_mismatch,
             "pairing of dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    // tr(ab) = sum_ij a_ij conj(b_ij); the imaginary parts cancel in
    // conjugate pairs, so only the real accumulation is formed.
    double s = 0.0;
    const std::size_t n = a.dim() * a.dim();
    for (std::size_t k = 0; k < n; ++k)
        s += a.re_plane()[k] * b.re_plane()[k] + a.im_plane()[k] * b.im_plane()[k];
    return s;
}

JordanParts<DiscreteDistribution> jordan_decompose(const RealSequence& a, double tol) {
    const std::size_t d = a.dim();
    std::vector<double> pos(d, 0.0), neg(d, 0.0);
    double alpha_plus = 0.0, alpha_minus = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] >= 0.0) {
            pos[i] = a[i];
            alpha_plus += a[i];
        } else {
            neg[i] = -a[i];
            alpha_minus += -a[i];
        }
    }
    JordanParts<DiscreteDistribution> parts;
    parts.alpha_plus = alpha_plus;
    parts.alpha_minus = alpha_minus;
    if (alpha_plus > 0.0) {
        for (double& x : pos) x /= alpha_plus;
        parts.omega_plus = DiscreteDistribution(RealSequence(std::move(pos)), tol);
    } else {
        parts.alpha_plus = 0.0;
    }
    if (alpha_minus > 0.0) {
        for (double& x : neg) x /= alpha_minus;
        parts.omega_minus = DiscreteDistribution(RealSequence(std::move(neg)), tol);
    } else {
        parts.alpha_minus = 0.0;
    }
    return parts;
}

JordanParts<DensityOperator> jordan_decompose(const HermitianMatrix& a, double tol) {
    const EigenDecomposition ed = eigen_hermitian(a);
    const std::vector<double>& lam = ed.spectrum().values();
    const std::size_t d = a.dim();
    // Eigenvalues in [-tol, tol] count as positive: deterministic
    // tie-breaking at zero.
    std::vector<double> pos(d, 0.0), neg(d, 0.0);
    double alpha_plus = 0.0, alpha_minus = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        if (lam[i] >= -tol) {
            pos[i] = lam[i];
            alpha_plus += lam[i];
        } else {
            neg[i] = -lam[i];
            alpha_minus += -lam[i];
        }
    }
    JordanParts<DensityOperator> parts;
    if (alpha_plus > 0.0) {
        parts.alpha_plus = alpha_plus;
        for (double& x : pos) x /= alpha_plus;
        parts.omega_plus = DensityOperator::unchecked(synthesize(ed, pos));
    }
    if (alpha_minus > 0.0) {
        parts.alpha_minus = alpha_minus;
        for (double& x : neg) x /= alpha_minus;
        parts.omega_minus = DensityOperator::unchecked(synthesize(ed, neg));
    }
    return parts;
}

}  // namespace entrogeo
