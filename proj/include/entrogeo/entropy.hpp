#pragma once

#include <cstdint>

#include "entrogeo/profile.hpp"

namespace entrogeo {

// Entropy in natural-log units.
struct EntropyValue {
    double nats = 0.0;
};

// -sum w_i ln(w_i) with 0 ln 0 := 0 (terms <= 0 contribute nothing).
EntropyValue entropy_direct(const Spectrum& s);

// Closed-form boundary integral: each segment between breakpoints
// (r1', upper) and (r1'', lower) contributes
//     n * (lower ln lower - upper ln upper) + (r1'' - r1'),
// the segments sum to entropy + 1 (r1 spans total 1), and 1 is subtracted.
// Agrees with entropy_direct to ~1e-13 -- the boundary of the separation
// region encodes the entropy.
EntropyValue entropy_boundary(const EntropyProfile& p);

// Independent numeric evaluation of the same boundary integral: composite
// trapezoid in r1 with `steps` intervals on every segment except the last;
// the last segment (rinf -> 0, integrable log singularity) uses the exact
// antiderivative r ln r - r. Converges to entropy_boundary as steps grows.
EntropyValue entropy_quadrature(const EntropyProfile& p, std::int64_t steps);

}  // namespace entrogeo
