#include <doctest.h>

#include <cmath>
#include <vector>

#include "entrogeo/entropy.hpp"
#include "entrogeo/profile.hpp"
#include "entrogeo/rng.hpp"
#include "entrogeo/spectral.hpp"
#include "testutil.hpp"

namespace {

entrogeo::Spectrum state_spectrum(std::vector<double> values) {
    return entrogeo::Spectrum::state(std::move(values));
}

double boundary_of(const entrogeo::Spectrum& s) {
    return entrogeo::entropy_boundary(entrogeo::build_profile(s)).nats;
}

}  // namespace

TEST_CASE("entropy anchors: point mass, uniform, and a dyadic three-weight state") {
    const entrogeo::Spectrum point = state_spectrum({1.0, 0.0, 0.0});
    CHECK(entrogeo::entropy_direct(point).nats == 0.0);
    CHECK(boundary_of(point) == 0.0);

    const entrogeo::Spectrum uniform4 = state_spectrum({0.25, 0.25, 0.25, 0.25});
    CHECK(entrogeo::entropy_direct(uniform4).nats ==
          doctest::Approx(std::log(4.0)).epsilon(1e-13));
    CHECK(boundary_of(uniform4) == doctest::Approx(std::log(4.0)).epsilon(1e-13));

    const entrogeo::Spectrum dyadic = state_spectrum({0.5, 0.25, 0.25});
    CHECK(entrogeo::entropy_direct(dyadic).nats ==
          doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-13));
    CHECK(boundary_of(dyadic) == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("boundary integral telescopes to the direct formula") {
    entrogeo::Rng rng(401);
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + rng.below(200);
        const entrogeo::Spectrum s =
            entrogeo::Spectrum::state(testutil::random_simplex(d, rng));
        worst = std::max(worst, std::abs(boundary_of(s) - entrogeo::entropy_direct(s).nats));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + rng.below(32);
        const entrogeo::Spectrum s = entrogeo::spectrum_of(testutil::random_density(d, rng));
        worst = std::max(worst, std::abs(boundary_of(s) - entrogeo::entropy_direct(s).nats));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("entropy stays within [0, ln d] with equality at the extremes") {
    entrogeo::Rng rng(402);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + rng.below(100);
        const entrogeo::Spectrum s =
            entrogeo::Spectrum::state(testutil::random_simplex(d, rng));
        const double h = entrogeo::entropy_direct(s).nats;
        CHECK(h >= -1e-9);
        CHECK(h <= std::log(static_cast<double>(d)) + 1e-9);
    }
    std::vector<double> uniform(16, 1.0 / 16.0);
    CHECK(entrogeo::entropy_direct(state_spectrum(std::move(uniform))).nats ==
          doctest::Approx(std::log(16.0)).epsilon(1e-13));
}

TEST_CASE("quadrature on a single-segment profile is exact for any step count") {
    const entrogeo::EntropyProfile point = entrogeo::build_profile(state_spectrum({1.0}));
    for (std::int64_t steps : {std::int64_t{2}, std::int64_t{7}, std::int64_t{100000}})
        CHECK(entrogeo::entropy_quadrature(point, steps).nats == 0.0);

    const entrogeo::EntropyProfile uniform2 = entrogeo::build_profile(state_spectrum({0.5, 0.5}));
    CHECK(entrogeo::entropy_quadrature(uniform2, 100000).nats ==
          doctest::Approx(std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("quadrature approaches the closed form on a two-segment profile") {
    const entrogeo::EntropyProfile p = entrogeo::build_profile(state_spectrum({0.5, 0.25, 0.25}));
    const double target = entrogeo::entropy_boundary(p).nats;
    CHECK(std::abs(entrogeo::entropy_quadrature(p, 100000).nats - target) <= 1e-6);
    CHECK(std::abs(entrogeo::entropy_quadrature(p, 100000).nats - 1.5 * std::log(2.0)) <= 1e-6);
}

TEST_CASE("quadrature error shrinks as steps double") {
    const entrogeo::EntropyProfile p = entrogeo::build_profile(state_spectrum({0.6, 0.3, 0.1}));
    const double target = entrogeo::entropy_boundary(p).nats;
    double prev = std::abs(entrogeo::entropy_quadrature(p, 1000).nats - target);
    for (std::int64_t steps = 2000; steps <= 1024000; steps *= 2) {
        const double err = std::abs(entrogeo::entropy_quadrature(p, steps).nats - target);
        CHECK(err <= prev + 1e-13);
        prev = err;
    }
}

TEST_CASE("entropy is invariant under permutations and unitary conjugation") {
    entrogeo::Rng rng(403);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + rng.below(60);
        const std::vector<double> w = testutil::random_simplex(d, rng);
        std::vector<double> shuffled = w;
        const std::vector<std::size_t> perm = rng.permutation(d);
        for (std::size_t i = 0; i < d; ++i) shuffled[i] = w[perm[i]];
        CHECK(entrogeo::entropy_direct(entrogeo::Spectrum::state(std::vector<double>(w))).nats ==
              entrogeo::entropy_direct(entrogeo::Spectrum::state(std::move(shuffled))).nats);
    }
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t d = 1 + rng.below(8);
        const entrogeo::DensityOperator rho = testutil::random_density(d, rng);
        const entrogeo::DensityOperator moved = testutil::conjugate_by_random_unitary(rho, rng);
        const double h1 = entrogeo::entropy_direct(entrogeo::spectrum_of(rho)).nats;
        const double h2 = entrogeo::entropy_direct(entrogeo::spectrum_of(moved)).nats;
        CHECK(std::abs(h1 - h2) <= 1e-9);
    }
}

TEST_CASE("quadrature rejects step counts below two") {
    const entrogeo::EntropyProfile p = entrogeo::build_profile(state_spectrum({0.5, 0.5}));
    CHECK(testutil::fails_with(entrogeo::errc::bad_argument,
                               [&] { entrogeo::entropy_quadrature(p, 0); }));
    CHECK(testutil::fails_with(entrogeo::errc::bad_argument,
                               [&] { entrogeo::entropy_quadrature(p, 1); }));
}
