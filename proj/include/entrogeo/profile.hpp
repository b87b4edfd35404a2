#pragma once

#include <cstddef>
#include <vector>

#include "entrogeo/spectral.hpp"

namespace entrogeo {

struct Breakpoint {
    double r1 = 0.0;
    double rinf = 0.0;
};

// Piecewise-linear boundary of the ball-separation region U(omega) in the
// (r1, rinf) quadrant. Breakpoints run from (0, max weight) down to
// (total mass, 0) with r1 strictly increasing and rinf strictly
// decreasing; segment k carries the count n_k of weights lying strictly
// above its rinf range, so along it dr1 = n_k * (-drinf). Multiplicities
// strictly increase from segment to segment.
class EntropyProfile {
  public:
    EntropyProfile(std::vector<Breakpoint> breakpoints, std::vector<int> multiplicities);

    const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<int>& multiplicities() const noexcept { return multiplicities_; }
    std::size_t segment_count() const noexcept { return multiplicities_.size(); }

    // Boundary value at the given rinf by linear interpolation (exact for
    // this family); 0 beyond the largest breakpoint.
    double value_at(double rinf) const;

    double max_rinf() const { return breakpoints_.front().rinf; }
    double total_mass() const { return breakpoints_.back().r1; }

  private:
    std::vector<Breakpoint> breakpoints_;
    std::vector<int> multiplicities_;
};

// Slack allowed when comparing two profiles pointwise.
inline constexpr double profile_dominance_tol = 1e-12;

// F(rinf) = sum_i max(0, w_i - rinf): the mass of the spectrum above the
// level. This is the r1 coordinate of the region boundary at that rinf.
double eval_F(const Spectrum& s, double rinf);

// Exact boundary representation of a state spectrum: one breakpoint per
// distinct positive value plus the (total mass, 0) endpoint.
EntropyProfile build_profile(const Spectrum& s);

// Membership in U(omega): r1 == 0 or r1 < eval_F(s, rinf). Boundary
// points with positive r1 are out; no tolerance is applied.
bool in_region(const Spectrum& s, double r1, double rinf);

// True iff the boundary of a lies above the boundary of b, i.e.
// a.value_at(r) >= b.value_at(r) - profile_dominance_tol on the merged
// breakpoint set; equivalently U(b) is contained in U(a).
bool profile_dominates(const EntropyProfile& a, const EntropyProfile& b);

}  // namespace entrogeo
