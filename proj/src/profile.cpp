#include "entrogeo/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace entrogeo {

EntropyProfile::EntropyProfile(std::vector<Breakpoint> breakpoints, std::vector<int> multiplicities)
    : breakpoints_(std::move(breakpoints)), multiplicities_(std::move(multiplicities)) {
    if (breakpoints_.size() < 2) fail(errc::bad_argument, "profile needs at least two breakpoints");
    if (multiplicities_.size() + 1 != breakpoints_.size())
        fail(errc::bad_argument, "profile needs one multiplicity per segment");
    if (breakpoints_.front().r1 != 0.0)
        fail(errc::bad_argument, "profile must start at r1 = 0");
    if (breakpoints_.back().rinf != 0.0)
        fail(errc::bad_argument, "profile must end at rinf = 0");
    for (const Breakpoint& bp : breakpoints_)
        if (!std::isfinite(bp.r1) || !std::isfinite(bp.rinf) || bp.r1 < 0.0 || bp.rinf < 0.0)
            fail(errc::bad_argument, "profile breakpoints must be finite and nonnegative");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (breakpoints_[i].r1 <= breakpoints_[i - 1].r1 ||
            breakpoints_[i].rinf >= breakpoints_[i - 1].rinf)
            fail(errc::bad_argument, "profile breakpoints must move strictly down and right");
    for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
        if (multiplicities_[i] <= 0)
            fail(errc::bad_argument, "segment multiplicities must be positive");
        if (i > 0 && multiplicities_[i] <= multiplicities_[i - 1])
            fail(errc::bad_argument, "segment multiplicities must strictly increase");
    }
}

double EntropyProfile::value_at(double rinf) const {
    if (!std::isfinite(rinf)) fail(errc::bad_argument, "profile evaluated at non-finite rinf");
    if (rinf >= breakpoints_.front().rinf) return 0.0;
    if (rinf <= 0.0) return breakpoints_.back().r1;
    const auto it = std::lower_bound(
        breakpoints_.begin(), breakpoints_.end(), rinf,
        [](const Breakpoint& bp, double x) { return bp.rinf > x; });
    if (it->rinf == rinf) return it->r1;
    const Breakpoint& hi = *(it - 1);
    const Breakpoint& lo = *it;
    const double t = (hi.rinf - rinf) / (hi.rinf - lo.rinf);
    return hi.r1 + t * (lo.r1 - hi.r1);
}

double eval_F(const Spectrum& s, double rinf) {
    if (!std::isfinite(rinf) || rinf < 0.0) fail(errc::bad_argument, "rinf must be nonnegative");
    double acc = 0.0;
    for (double w : s.values()) {
        if (w <= rinf) break;  // sorted non-increasing, rest contribute 0
        acc += w - rinf;
    }
    return acc;
}

EntropyProfile build_profile(const Spectrum& s) {
    if (s.empty()) fail(errc::empty_spectrum, "profile of an empty spectrum");
    const std::vector<double>& v = s.values();
    if (v.front() <= 0.0) fail(errc::empty_spectrum, "profile needs positive mass");

    // Levels: each distinct positive value, then 0. The breakpoint at a
    // level pairs it with the mass above it; the segment down to that
    // level covers all values above it.
    std::vector<Breakpoint> bps{{0.0, v.front()}};
    std::vector<int> muls;
    std::size_t i = 0;
    while (i < v.size() && v[i] > 0.0) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        const double next_level = (j < v.size() && v[j] > 0.0) ? v[j] : 0.0;
        const double r1 = eval_F(s, next_level);
        // Levels so close that the mass between them rounds away produce
        // no breakpoint of their own; keep the lower level.
        while (bps.size() > 1 && r1 <= bps.back().r1) {
            bps.pop_back();
            muls.pop_back();
        }
        bps.push_back({r1, next_level});
        muls.push_back(static_cast<int>(j));
        i = j;
    }
    return EntropyProfile(std::move(bps), std::move(muls));
}

bool in_region(const Spectrum& s, double r1, double rinf) {
    if (!std::isfinite(r1) || r1 < 0.0) fail(errc::bad_argument, "r1 must be nonnegative");
    const double f = eval_F(s, rinf);
    return r1 == 0.0 || r1 < f;
}

bool profile_dominates(const EntropyProfile& a, const EntropyProfile& b) {
    std::vector<double> levels;
    levels.reserve(a.breakpoints().size() + b.breakpoints().size());
    for (const Breakpoint& bp : a.breakpoints()) levels.push_back(bp.rinf);
    for (const Breakpoint& bp : b.breakpoints()) levels.push_back(bp.rinf);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    // Both boundaries are piecewise linear with kinks only at their own
    // breakpoints, so comparing on the merged set decides the whole curve.
    for (double r : levels)
        if (a.value_at(r) < b.value_at(r) - profile_dominance_tol) return false;
    return true;
}

}  // namespace entrogeo
