#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "entrogeo/errors.hpp"

namespace entrogeo {

// Finite real vector; element of the paired sequence spaces (sum-of-abs
// norm on one side, max-abs norm on the other).
class RealSequence {
  public:
    explicit RealSequence(std::vector<double> entries);

    std::size_t dim() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const noexcept { return entries_; }

  private:
    std::vector<double> entries_;
};

// Discrete probability distribution: nonnegative weights that sum to 1.
// Validation only; weights are never renormalized on the caller's behalf.
class DiscreteDistribution {
  public:
    DiscreteDistribution(RealSequence weights, double tol = default_tol);

    // Caller guarantees the invariants (used by operations that preserve
    // them exactly, e.g. block averaging).
    static DiscreteDistribution unchecked(RealSequence weights);

    std::size_t dim() const noexcept { return weights_.dim(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const RealSequence& weights() const noexcept { return weights_; }

  private:
    struct unchecked_tag {};
    DiscreteDistribution(RealSequence weights, unchecked_tag) : weights_(std::move(weights)) {}
    RealSequence weights_;
};

// Hermitian matrix stored as separate real/imaginary planes (row-major).
// The validating constructor checks A(i,j) == conj(A(j,i)) within tol and
// then mirrors the upper triangle so the stored matrix is exactly Hermitian.
class HermitianMatrix {
  public:
    HermitianMatrix(const std::vector<std::vector<double>>& re,
                    const std::vector<std::vector<double>>& im,
                    double tol = default_tol);

    // Hermitian part (A + A*)/2 of arbitrary planes; trusted internal builder.
    static HermitianMatrix hermitized(std::size_t dim, std::vector<double> re, std::vector<double> im);

    std::size_t dim() const noexcept { return dim_; }
    double re(std::size_t i, std::size_t j) const { return re_[i * dim_ + j]; }
    double im(std::size_t i, std::size_t j) const { return im_[i * dim_ + j]; }
    std::complex<double> at(std::size_t i, std::size_t j) const { return {re(i, j), im(i, j)}; }
    double trace() const;

    const std::vector<double>& re_plane() const noexcept { return re_; }
    const std::vector<double>& im_plane() const noexcept { return im_; }

  private:
    HermitianMatrix() = default;
    std::size_t dim_ = 0;
    std::vector<double> re_, im_;
};

// Positive-semidefinite Hermitian matrix with unit trace.
class DensityOperator {
  public:
    DensityOperator(HermitianMatrix matrix, double tol = default_tol);

    static DensityOperator unchecked(HermitianMatrix matrix);

    std::size_t dim() const noexcept { return matrix_.dim(); }
    const HermitianMatrix& matrix() const noexcept { return matrix_; }

  private:
    struct unchecked_tag {};
    DensityOperator(HermitianMatrix matrix, unchecked_tag) : matrix_(std::move(matrix)) {}
    HermitianMatrix matrix_;
};

DiscreteDistribution make_distribution(std::vector<double> raw, double tol = default_tol);
DensityOperator make_density(const std::vector<std::vector<double>>& re,
                             const std::vector<std::vector<double>>& im,
                             double tol = default_tol);

// Sum-of-abs norm for sequences, trace norm (sum of |eigenvalues|) for
// Hermitian matrices.
double norm_one(const RealSequence& a);
double norm_one(const HermitianMatrix& a);

// Max-abs norm for sequences, operator norm (max |eigenvalue|) for
// Hermitian matrices.
double norm_inf(const RealSequence& a);
double norm_inf(const HermitianMatrix& a);

// <a, b> = sum a_i b_i for sequences, tr(ab) for Hermitian matrices (real
// by Hermiticity).
double pairing(const RealSequence& a, const RealSequence& b);
double pairing(const HermitianMatrix& a, const HermitianMatrix& b);

// Split a = alpha_plus * omega_plus - alpha_minus * omega_minus into
// nonnegative multiples of states, with alpha_plus + alpha_minus equal to
// norm_one(a). A part with no mass is absent and its alpha is 0.
template <class StateT>
struct JordanParts {
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    std::optional<StateT> omega_plus;
    std::optional<StateT> omega_minus;
};

// Entrywise split for sequences.
JordanParts<DiscreteDistribution> jordan_decompose(const RealSequence& a, double tol = default_tol);

// Spectral split for matrices. Eigenvalues in [-tol, tol] go to the
// positive part, so a density operator decomposes as itself with
// alpha_plus = 1 regardless of rounding fuzz in its zero eigenvalues.
JordanParts<DensityOperator> jordan_decompose(const HermitianMatrix& a, double tol = default_tol);

}  // namespace entrogeo
