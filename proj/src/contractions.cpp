#include "entrogeo/contractions.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "entrogeo/rng.hpp"
#include "entrogeo/spectral.hpp"

namespace entrogeo {

SequenceMap::SequenceMap(const std::vector<std::vector<double>>& rows) : dim_(rows.size()) {
    if (dim_ == 0) fail(errc::bad_argument, "map must have at least one row");
    entries_.reserve(dim_ * dim_);
    for (const std::vector<double>& row : rows) {
        if (row.size() != dim_) fail(errc::bad_argument, "map must be square");
        for (double x : row) {
            if (!std::isfinite(x)) fail(errc::non_finite, "map entry is not finite");
            entries_.push_back(x);
        }
    }
}

Partition::Partition(std::vector<std::vector<std::size_t>> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) fail(errc::bad_argument, "partition must have at least one block");
    std::size_t total = 0;
    for (const std::vector<std::size_t>& block : blocks_) {
        if (block.empty()) fail(errc::bad_argument, "partition blocks must be nonempty");
        total += block.size();
    }
    std::vector<bool> seen(total, false);
    for (const std::vector<std::size_t>& block : blocks_)
        for (std::size_t idx : block) {
            if (idx >= total)
                fail(errc::bad_argument, "partition index " + std::to_string(idx) + " out of range");
            if (seen[idx])
                fail(errc::bad_argument, "partition index " + std::to_string(idx) + " repeated");
            seen[idx] = true;
        }
    dim_ = total;
}

BlockStructure::BlockStructure(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) fail(errc::bad_argument, "block structure must have at least one block");
    offsets_.reserve(sizes_.size());
    for (std::size_t s : sizes_) {
        if (s == 0) fail(errc::bad_argument, "blocks must be nonempty");
        offsets_.push_back(dim_);
        dim_ += s;
    }
}

std::size_t BlockStructure::block_of(std::size_t index) const {
    if (index >= dim_) fail(errc::bad_argument, "index beyond the block structure");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

double induced_norm_1(const SequenceMap& t) {
    const std::size_t n = t.dim();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += std::abs(t.at(i, j));
        worst = std::max(worst, col);
    }
    return worst;
}

double induced_norm_inf(const SequenceMap& t) {
    const std::size_t n = t.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(t.at(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

DiscreteDistribution apply_map(const SequenceMap& t, const DiscreteDistribution& w, double tol) {
    const std::size_t n = t.dim();
    if (w.dim() != n) fail(errc::dimension_mismatch, "map and distribution dimensions differ");
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += t.at(i, j) * w[j];
        out[i] = acc;
    }
    try {
        return DiscreteDistribution(RealSequence(std::move(out)), tol);
    } catch (const error&) {
        fail(errc::output_not_distribution, "map output leaves the simplex");
    }
}

SequenceMap random_doubly_stochastic(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n == 0 || k == 0) fail(errc::bad_argument, "need n >= 1 and k >= 1");
    Rng rng(seed);
    // Exponential spacings normalized to a uniform point of the simplex.
    std::vector<double> weights(k);
    double total = 0.0;
    for (double& w : weights) {
        w = rng.exponential();
        total += w;
    }
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t c = 0; c < k; ++c) {
        const double w = weights[c] / total;
        const std::vector<std::size_t> perm = rng.permutation(n);
        for (std::size_t i = 0; i < n; ++i) rows[i][perm[i]] += w;
    }
    return SequenceMap(rows);
}

DensityOperator pinch(const DensityOperator& rho, const BlockStructure& b) {
    if (rho.dim() != b.dim()) fail(errc::dimension_mismatch, "density and blocks dimensions differ");
    return DensityOperator::unchecked(project_blocks(rho.matrix(), b));
}

DiscreteDistribution cond_exp_partition(const DiscreteDistribution& w, const Partition& p) {
    if (w.dim() != p.dim()) fail(errc::dimension_mismatch, "distribution and partition differ");
    return DiscreteDistribution::unchecked(project_partition(w.weights(), p));
}

RealSequence project_partition(const RealSequence& a, const Partition& p) {
    if (a.dim() != p.dim()) fail(errc::dimension_mismatch, "sequence and partition differ");
    std::vector<double> out(a.dim(), 0.0);
    for (const std::vector<std::size_t>& block : p.blocks()) {
        double acc = 0.0;
        for (std::size_t idx : block) acc += a[idx];
        const double mean = acc / static_cast<double>(block.size());
        for (std::size_t idx : block) out[idx] = mean;
    }
    return RealSequence(std::move(out));
}

HermitianMatrix project_blocks(const HermitianMatrix& a, const BlockStructure& b) {
    if (a.dim() != b.dim()) fail(errc::dimension_mismatch, "matrix and blocks dimensions differ");
    const std::size_t d = a.dim();
    std::vector<double> re(d * d, 0.0), im(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t bi = b.block_of(i);
        for (std::size_t j = 0; j < d; ++j) {
            if (b.block_of(j) != bi) continue;
            re[i * d + j] = a.re(i, j);
            im[i * d + j] = a.im(i, j);
        }
    }
    return HermitianMatrix::hermitized(d, std::move(re), std::move(im));
}

namespace {

MonotonicityReport compare_states(const Spectrum& before, const Spectrum& after) {
    MonotonicityReport rep;
    rep.entropy_before = entropy_direct(before).nats;
    rep.entropy_after = entropy_direct(after).nats;
    rep.region_shrank = profile_dominates(build_profile(before), build_profile(after));
    rep.verdict = rep.entropy_after >= rep.entropy_before - 1e-9 && rep.region_shrank;
    return rep;
}

}  // namespace

MonotonicityReport monotonicity_report(const SequenceMap& t, const DiscreteDistribution& w) {
    const double n1 = induced_norm_1(t);
    const double ninf = induced_norm_inf(t);
    if (n1 > 1.0 + contractive_tol || ninf > 1.0 + contractive_tol)
        fail(errc::not_contractive, "induced norms " + std::to_string(n1) + " and " +
                                        std::to_string(ninf) + " exceed 1");
    return compare_states(spectrum_of(w), spectrum_of(apply_map(t, w)));
}

MonotonicityReport monotonicity_report(const Partition& p, const DiscreteDistribution& w) {
    return compare_states(spectrum_of(w), spectrum_of(cond_exp_partition(w, p)));
}

MonotonicityReport monotonicity_report(const BlockStructure& b, const DensityOperator& rho) {
    return compare_states(spectrum_of(rho), spectrum_of(pinch(rho, b)));
}

}  // namespace entrogeo
