#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "entrogeo/states.hpp"

namespace entrogeo {

// Non-increasing list of eigenvalues or weights.
class Spectrum {
  public:
    // Stable-sorts non-increasing (ties keep original order); entries must
    // be finite. An empty list is representable but not a state.
    explicit Spectrum(std::vector<double> values);

    // State spectrum: every value >= -tol, sum within tol of 1. Values in
    // [-tol, 0) are clamped to 0; nothing is rescaled.
    static Spectrum state(std::vector<double> values, double tol = default_tol);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double max_value() const { return values_.front(); }
    double sum() const;

  private:
    std::vector<double> values_;
};

struct JacobiOptions {
    // Stop once the off-diagonal Frobenius mass is below
    // tol * max(1, ||A||_F).
    double tol = 1e-12;
    int max_sweeps = 64;
};

// Result of diagonalizing a Hermitian matrix: A = Q diag(spectrum) Q*,
// columns of Q orthonormal, spectrum sorted non-increasing.
class EigenDecomposition {
  public:
    EigenDecomposition(Spectrum spectrum, std::size_t dim, std::vector<std::complex<double>> basis);

    const Spectrum& spectrum() const noexcept { return spectrum_; }
    std::size_t dim() const noexcept { return dim_; }
    std::complex<double> basis(std::size_t row, std::size_t col) const { return basis_[row * dim_ + col]; }
    const std::vector<std::complex<double>>& basis_data() const noexcept { return basis_; }

    HermitianMatrix reconstruct() const;
    // Max-abs entry of A - Q diag(spectrum) Q*.
    double reconstruction_residual(const HermitianMatrix& original) const;
    // Max-abs entry of Q*Q - I.
    double orthonormality_error() const;

  private:
    Spectrum spectrum_;
    std::size_t dim_;
    std::vector<std::complex<double>> basis_;
};

// Cyclic Jacobi diagonalization with complex rotations. Deterministic for
// identical input; throws errc::no_convergence if the off-diagonal mass is
// still above tolerance after max_sweeps sweeps.
EigenDecomposition eigen_hermitian(const HermitianMatrix& h, const JacobiOptions& opts = {});

// Q diag(values) Q* for a replacement set of eigenvalues.
HermitianMatrix synthesize(const EigenDecomposition& ed, const std::vector<double>& values);

// The weight/eigenvalue spectrum of a state, clamped per Spectrum::state.
Spectrum spectrum_of(const DiscreteDistribution& w, double tol = default_tol);
Spectrum spectrum_of(const DensityOperator& rho, double tol = default_tol);

}  // namespace entrogeo
