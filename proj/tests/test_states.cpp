#include <doctest.h>

#include <cmath>
#include <vector>

#include "entrogeo/rng.hpp"
#include "entrogeo/states.hpp"
#include "testutil.hpp"

using entrogeo::errc;
using testutil::fails_with;

TEST_CASE("distribution validation accepts exact simplex points") {
    CHECK_NOTHROW(entrogeo::make_distribution({0.5, 0.25, 0.25}, 1e-12));
    CHECK_NOTHROW(entrogeo::make_distribution({1.0}, 1e-12));
}

TEST_CASE("distribution validation rejects bad weight vectors") {
    CHECK(fails_with(errc::sum_not_one, [] { entrogeo::make_distribution({0.5, 0.6}, 1e-12); }));
    CHECK(fails_with(errc::negative_weight, [] { entrogeo::make_distribution({1.5, -0.5}); }));
    CHECK(fails_with(errc::non_finite, [] {
        entrogeo::make_distribution({std::nan(""), 1.0});
    }));
    CHECK(fails_with(errc::bad_argument, [] { entrogeo::make_distribution({}); }));
}

TEST_CASE("density validation accepts pure and maximally mixed states") {
    CHECK_NOTHROW(entrogeo::make_density({{0.5, 0.5}, {0.5, 0.5}}, {{0.0, 0.0}, {0.0, 0.0}}));
    CHECK_NOTHROW(entrogeo::make_density({{0.5, 0.0}, {0.0, 0.5}}, {{0.0, 0.0}, {0.0, 0.0}}));
}

TEST_CASE("density validation rejects indefinite, non-unit-trace and non-Hermitian input") {
    CHECK(fails_with(errc::not_positive, [] {
        entrogeo::make_density({{0.5, 0.9}, {0.9, 0.5}}, {{0.0, 0.0}, {0.0, 0.0}});
    }));
    CHECK(fails_with(errc::trace_not_one, [] {
        entrogeo::make_density({{1.0, 0.0}, {0.0, 1.0}}, {{0.0, 0.0}, {0.0, 0.0}});
    }));
    CHECK(fails_with(errc::not_hermitian, [] {
        entrogeo::make_density({{0.5, 0.2}, {0.4, 0.5}}, {{0.0, 0.0}, {0.0, 0.0}});
    }));
    CHECK(fails_with(errc::not_hermitian, [] {
        entrogeo::make_density({{0.5, 0.0}, {0.0, 0.5}}, {{0.1, 0.0}, {0.0, 0.0}});
    }));
}

TEST_CASE("hermitian storage mirrors the upper triangle exactly") {
    const entrogeo::HermitianMatrix h({{1.0, 0.25}, {0.25 + 5e-10, -1.0}},
                                      {{0.0, 0.5}, {-0.5 + 5e-10, 0.0}});
    CHECK(h.re(1, 0) == h.re(0, 1));
    CHECK(h.im(1, 0) == -h.im(0, 1));
    CHECK(h.im(0, 0) == 0.0);
    CHECK(h.im(1, 1) == 0.0);
}

TEST_CASE("norms match closed-form values") {
    CHECK(entrogeo::norm_one(entrogeo::RealSequence({1.0, -1.0})) == 2.0);
    CHECK(entrogeo::norm_inf(entrogeo::RealSequence({0.5, 0.25, 0.25})) == 0.5);
    CHECK(entrogeo::norm_inf(entrogeo::RealSequence({0.25, 0.25, 0.25, 0.25})) == 0.25);

    const entrogeo::HermitianMatrix flip({{0.0, 1.0}, {1.0, 0.0}}, {{0.0, 0.0}, {0.0, 0.0}});
    CHECK(entrogeo::norm_one(flip) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(entrogeo::norm_inf(flip) == doctest::Approx(1.0).epsilon(1e-12));

    const entrogeo::DensityOperator pure =
        entrogeo::make_density({{0.5, 0.5}, {0.5, 0.5}}, {{0.0, 0.0}, {0.0, 0.0}});
    CHECK(entrogeo::norm_one(pure.matrix()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pairing matches closed-form values") {
    CHECK(entrogeo::pairing(entrogeo::RealSequence({1.0, 0.0}), entrogeo::RealSequence({0.0, 1.0})) ==
          0.0);
    CHECK(entrogeo::pairing(entrogeo::RealSequence({0.5, 0.5}), entrogeo::RealSequence({1.0, 1.0})) ==
          1.0);
    const entrogeo::HermitianMatrix half({{0.5, 0.0}, {0.0, 0.5}}, {{0.0, 0.0}, {0.0, 0.0}});
    CHECK(entrogeo::pairing(half, half) == 0.5);
}

TEST_CASE("pairing respects the norm duality bound on random pairs") {
    entrogeo::Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + rng.below(20);
        const entrogeo::RealSequence a = testutil::random_sequence(d, rng);
        const entrogeo::RealSequence b = testutil::random_sequence(d, rng);
        CHECK(std::abs(entrogeo::pairing(a, b)) <=
              entrogeo::norm_inf(a) * entrogeo::norm_one(b) + 1e-9);
    }
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 1 + rng.below(10);
        const entrogeo::HermitianMatrix a = testutil::random_hermitian(d, rng);
        const entrogeo::HermitianMatrix b = testutil::random_hermitian(d, rng);
        CHECK(std::abs(entrogeo::pairing(a, b)) <=
              entrogeo::norm_inf(a) * entrogeo::norm_one(b) + 1e-9);
    }
}

TEST_CASE("norms are absolutely homogeneous and satisfy the triangle inequality") {
    entrogeo::Rng rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 1 + rng.below(16);
        const entrogeo::RealSequence a = testutil::random_sequence(d, rng);
        const entrogeo::RealSequence b = testutil::random_sequence(d, rng);
        const double c = rng.uniform(-3.0, 3.0);
        const entrogeo::RealSequence scaled = testutil::combine(a, b, c, 0.0);
        CHECK(entrogeo::norm_one(scaled) ==
              doctest::Approx(std::abs(c) * entrogeo::norm_one(a)).epsilon(1e-12));
        CHECK(entrogeo::norm_inf(scaled) ==
              doctest::Approx(std::abs(c) * entrogeo::norm_inf(a)).epsilon(1e-12));
        const entrogeo::RealSequence sum = testutil::combine(a, b, 1.0, 1.0);
        CHECK(entrogeo::norm_one(sum) <= entrogeo::norm_one(a) + entrogeo::norm_one(b) + 1e-9);
        CHECK(entrogeo::norm_inf(sum) <= entrogeo::norm_inf(a) + entrogeo::norm_inf(b) + 1e-9);
    }
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + rng.below(8);
        const entrogeo::HermitianMatrix a = testutil::random_hermitian(d, rng);
        const entrogeo::HermitianMatrix b = testutil::random_hermitian(d, rng);
        const double c = rng.uniform(-3.0, 3.0);
        const entrogeo::HermitianMatrix scaled = testutil::combine(a, b, c, 0.0);
        CHECK(entrogeo::norm_one(scaled) ==
              doctest::Approx(std::abs(c) * entrogeo::norm_one(a)).epsilon(1e-9));
        const entrogeo::HermitianMatrix sum = testutil::combine(a, b, 1.0, 1.0);
        CHECK(entrogeo::norm_one(sum) <= entrogeo::norm_one(a) + entrogeo::norm_one(b) + 1e-9);
        CHECK(entrogeo::norm_inf(sum) <= entrogeo::norm_inf(a) + entrogeo::norm_inf(b) + 1e-9);
    }
}

TEST_CASE("jordan decomposition splits a signed sequence into weighted states") {
    const auto parts = entrogeo::jordan_decompose(entrogeo::RealSequence({0.5, -0.5}));
    CHECK(parts.alpha_plus == 0.5);
    CHECK(parts.alpha_minus == 0.5);
    REQUIRE(parts.omega_plus.has_value());
    REQUIRE(parts.omega_minus.has_value());
    CHECK((*parts.omega_plus)[0] == 1.0);
    CHECK((*parts.omega_plus)[1] == 0.0);
    CHECK((*parts.omega_minus)[0] == 0.0);
    CHECK((*parts.omega_minus)[1] == 1.0);
}

TEST_CASE("jordan decomposition of a state is the state itself") {
    const entrogeo::HermitianMatrix diag({{0.5, 0.0}, {0.0, 0.5}}, {{0.0, 0.0}, {0.0, 0.0}});
    const auto parts = entrogeo::jordan_decompose(diag);
    CHECK(parts.alpha_plus == 1.0);
    CHECK(parts.alpha_minus == 0.0);
    REQUIRE(parts.omega_plus.has_value());
    CHECK_FALSE(parts.omega_minus.has_value());
    CHECK(testutil::max_entry_diff(parts.omega_plus->matrix(), diag) <= 1e-12);
}

TEST_CASE("jordan decomposition of the zero element has no parts") {
    const auto seq_parts = entrogeo::jordan_decompose(entrogeo::RealSequence({0.0, 0.0, 0.0}));
    CHECK(seq_parts.alpha_plus == 0.0);
    CHECK(seq_parts.alpha_minus == 0.0);
    CHECK_FALSE(seq_parts.omega_plus.has_value());
    CHECK_FALSE(seq_parts.omega_minus.has_value());

    const entrogeo::HermitianMatrix zero({{0.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.0, 0.0}});
    const auto mat_parts = entrogeo::jordan_decompose(zero);
    CHECK(mat_parts.alpha_plus == 0.0);
    CHECK(mat_parts.alpha_minus == 0.0);
    CHECK_FALSE(mat_parts.omega_plus.has_value());
    CHECK_FALSE(mat_parts.omega_minus.has_value());
}

TEST_CASE("jordan decomposition reconstructs and carries the full trace norm") {
    entrogeo::Rng rng(103);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 1 + rng.below(24);
        const entrogeo::RealSequence a = testutil::random_sequence(d, rng);
        const auto parts = entrogeo::jordan_decompose(a);
        CHECK(parts.alpha_plus + parts.alpha_minus ==
              doctest::Approx(entrogeo::norm_one(a)).epsilon(1e-9));
        std::vector<double> rebuilt(d, 0.0);
        if (parts.omega_plus)
            for (std::size_t i = 0; i < d; ++i) rebuilt[i] += parts.alpha_plus * (*parts.omega_plus)[i];
        if (parts.omega_minus)
            for (std::size_t i = 0; i < d; ++i)
                rebuilt[i] -= parts.alpha_minus * (*parts.omega_minus)[i];
        for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(rebuilt[i] - a[i]) <= 1e-9);
    }
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + rng.below(10);
        const entrogeo::HermitianMatrix a = testutil::random_hermitian(d, rng);
        const auto parts = entrogeo::jordan_decompose(a);
        CHECK(parts.alpha_plus + parts.alpha_minus ==
              doctest::Approx(entrogeo::norm_one(a)).epsilon(1e-9));
        std::vector<double> re(d * d, 0.0), im(d * d, 0.0);
        const auto accumulate = [&](const entrogeo::DensityOperator& part, double alpha) {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    re[i * d + j] += alpha * part.matrix().re(i, j);
                    im[i * d + j] += alpha * part.matrix().im(i, j);
                }
        };
        if (parts.omega_plus) accumulate(*parts.omega_plus, parts.alpha_plus);
        if (parts.omega_minus) accumulate(*parts.omega_minus, -parts.alpha_minus);
        const entrogeo::HermitianMatrix rebuilt =
            entrogeo::HermitianMatrix::hermitized(d, std::move(re), std::move(im));
        CHECK(testutil::max_entry_diff(rebuilt, a) <= 1e-9);
    }
}
