#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entrogeo/entropy.hpp"
#include "entrogeo/profile.hpp"
#include "entrogeo/states.hpp"

namespace entrogeo {

// Induced-norm slack accepted when certifying a map as contractive in both
// norms.
inline constexpr double contractive_tol = 1e-12;

// Dense linear map on sequences, acting by matrix-vector product.
class SequenceMap {
  public:
    explicit SequenceMap(const std::vector<std::vector<double>>& rows);

    std::size_t dim() const noexcept { return dim_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    const std::vector<double>& entries() const noexcept { return entries_; }

  private:
    std::size_t dim_ = 0;
    std::vector<double> entries_;
};

// Disjoint nonempty index sets covering {0, ..., n-1}. Sequences constant
// on the blocks form the subspace whose conditional expectation is block
// averaging.
class Partition {
  public:
    explicit Partition(std::vector<std::vector<std::size_t>> blocks);

    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    std::size_t dim() const noexcept { return dim_; }

  private:
    std::vector<std::vector<std::size_t>> blocks_;
    std::size_t dim_ = 0;
};

// Contiguous index ranges covering {0, ..., d-1}, given by their sizes.
// Projecting onto the block-diagonal subalgebra erases all entries outside
// the blocks; all-singleton blocks erase every off-diagonal entry.
class BlockStructure {
  public:
    explicit BlockStructure(std::vector<std::size_t> sizes);

    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    std::size_t dim() const noexcept { return dim_; }
    // Block index containing a given matrix index.
    std::size_t block_of(std::size_t index) const;

  private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
};

// Outcome of one before/after comparison. verdict is true iff the entropy
// did not drop by more than 1e-9 AND the region shrank (boundary of the
// image pointwise below the boundary of the source).
struct MonotonicityReport {
    double entropy_before = 0.0;
    double entropy_after = 0.0;
    bool region_shrank = false;
    bool verdict = false;
};

// Exact induced operator norms: max abs column sum (1-norm to 1-norm) and
// max abs row sum (inf-norm to inf-norm).
double induced_norm_1(const SequenceMap& t);
double induced_norm_inf(const SequenceMap& t);

// T * w, validated as a distribution; throws errc::output_not_distribution
// if T does not preserve the simplex on this input.
DiscreteDistribution apply_map(const SequenceMap& t, const DiscreteDistribution& w,
                               double tol = default_tol);

// Convex combination of k uniformly random permutation matrices with a
// random convex weight vector; both induced norms are 1 up to rounding.
// Deterministic given seed.
SequenceMap random_doubly_stochastic(std::size_t n, std::size_t k, std::uint64_t seed);

// Erase all entries outside the diagonal blocks. Always yields a valid
// density operator (trace untouched, positivity preserved).
DensityOperator pinch(const DensityOperator& rho, const BlockStructure& b);

// Conditional expectation onto block-constant sequences: block averaging.
// The output matches w against every block-constant sequence.
DiscreteDistribution cond_exp_partition(const DiscreteDistribution& w, const Partition& p);

// The same projections on arbitrary elements (not only states); both are
// self-adjoint, idempotent, and non-increasing in both norms.
RealSequence project_partition(const RealSequence& a, const Partition& p);
HermitianMatrix project_blocks(const HermitianMatrix& a, const BlockStructure& b);

// Apply the transform, certify applicability, and compare entropy and
// region before vs after. A SequenceMap must be contractive in both
// induced norms (errc::not_contractive otherwise).
MonotonicityReport monotonicity_report(const SequenceMap& t, const DiscreteDistribution& w);
MonotonicityReport monotonicity_report(const Partition& p, const DiscreteDistribution& w);
MonotonicityReport monotonicity_report(const BlockStructure& b, const DensityOperator& rho);

}  // namespace entrogeo
