#include "entrogeo/entropy.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace entrogeo {

namespace {

// x ln x extended by 0 at x = 0.
double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

EntropyValue entropy_direct(const Spectrum& s) {
    if (s.empty()) fail(errc::empty_spectrum, "entropy of an empty spectrum");
    double acc = 0.0;
    for (double w : s.values()) acc += xlnx(w);
    return EntropyValue{-acc + 0.0};  // +0.0 keeps a point mass from printing as -0
}

EntropyValue entropy_boundary(const EntropyProfile& p) {
    const std::vector<Breakpoint>& bp = p.breakpoints();
    const std::vector<int>& n = p.multiplicities();
    double acc = 0.0;
    for (std::size_t k = 0; k < n.size(); ++k) {
        const Breakpoint& upper = bp[k];
        const Breakpoint& lower = bp[k + 1];
        acc += n[k] * (xlnx(lower.rinf) - xlnx(upper.rinf)) + (lower.r1 - upper.r1);
    }
    return EntropyValue{acc - 1.0};
}

EntropyValue entropy_quadrature(const EntropyProfile& p, std::int64_t steps) {
    if (steps < 2) fail(errc::bad_argument, "quadrature needs at least 2 steps");
    const std::vector<Breakpoint>& bp = p.breakpoints();
    const std::vector<int>& n = p.multiplicities();
    // integral accumulates the oriented boundary integral of ln(rinf) dr1,
    // r1 running from 0 to the total mass.
    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
        const Breakpoint& upper = bp[k];
        const Breakpoint& lower = bp[k + 1];
        const double span = lower.r1 - upper.r1;
        const double h = span / static_cast<double>(steps);
        double acc = 0.5 * (std::log(upper.rinf) + std::log(lower.rinf));
        for (std::int64_t j = 1; j < steps; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(steps);
            const double rinf = upper.rinf + t * (lower.rinf - upper.rinf);
            acc += std::log(rinf);
        }
        integral += acc * h;
    }
    // Final segment reaches rinf = 0 where the integrand diverges; with
    // dr1 = -n drinf the exact value is n * (v ln v - v) for the segment's
    // starting level v.
    {
        const double v = bp[n.size() - 1].rinf;
        integral += n.back() * (xlnx(v) - v);
    }
    return EntropyValue{-integral - 1.0};
}

}  // namespace entrogeo
