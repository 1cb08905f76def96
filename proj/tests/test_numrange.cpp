#include <doctest.h>

#include <cmath>
#include <numbers>

#include "numrad/classify.hpp"
#include "numrad/generators.hpp"
#include "numrad/matrix_functions.hpp"
#include "numrad/numerical_range.hpp"
#include "support/helpers.hpp"
#include "support/oracle2x2.hpp"

using namespace numrad;

TEST_CASE("support_value on fixed matrices") {
    const ComplexMatrix eye = ComplexMatrix::identity(3);
    for (double theta : {0.0, 0.7, 2.0, 4.5}) {
        CHECK(support_value(eye, theta).value.contains(std::cos(theta)));
    }

    const SupportSample j0 = support_value(testsup::jordan2(), 0.0);
    CHECK(j0.value.contains(0.5));

    CHECK(support_value(testsup::diag_1_i(), 0.0).value.contains(1.0));
}

TEST_CASE("support witness produces a numerical-range point at the support line") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const ComplexMatrix a = generate({OperatorClass::General, 6, seed, 1.0});
        for (double theta : {0.0, 1.0, 3.0}) {
            const SupportSample s = support_value(a, theta);
            const cplx z = quadratic_form(a, s.witness);
            const double projected = std::cos(theta) * z.real() - std::sin(theta) * z.imag();
            CHECK(std::abs(projected - s.value.mid()) <= pad_for(a));
        }
    }
}

TEST_CASE("numerical_radius short-circuits the zero matrix") {
    const RadiusBracket b = numerical_radius(ComplexMatrix(4, 4), 1e-10);
    CHECK(b.enclosure.lo() == 0.0);
    CHECK(b.enclosure.hi() <= pad_for(ComplexMatrix(4, 4)));
    CHECK(b.converged);
    CHECK(b.angles_used == 0);
}

TEST_CASE("numerical_radius of the Jordan block matches the dense-grid oracle") {
    const ComplexMatrix j = testsup::jordan2();
    const RadiusBracket b = numerical_radius(j, 1e-8);
    CHECK(b.converged);
    CHECK(b.enclosure.width() <= 1e-8);
    CHECK(b.enclosure.contains(0.5));  // analytic: sup |cos t sin t| = 1/2

    const double grid = oracle::radius_grid_2x2(j);
    CHECK(b.enclosure.lo() - 1e-12 <= grid);
    CHECK(grid <= b.enclosure.hi() + 1e-12);
}

TEST_CASE("numerical_radius on a normal matrix hits the top eigenvalue modulus") {
    const RadiusBracket b = numerical_radius(testsup::diag_1_i(), 1e-9);
    CHECK(b.converged);
    CHECK(b.enclosure.contains(1.0));
}

TEST_CASE("numerical_radius input validation") {
    CHECK_THROWS_AS(numerical_radius(ComplexMatrix(2, 3), 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(numerical_radius(ComplexMatrix::identity(2), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(numerical_radius(ComplexMatrix::identity(2), -1.0), std::invalid_argument);
}

TEST_CASE("refinement is monotone: lo never drops, hi never grows") {
    for (std::uint64_t seed : {5u, 6u}) {
        const ComplexMatrix a = generate({OperatorClass::General, 5, seed, 1.0});
        std::vector<RefinementRound> trace;
        numerical_radius(a, 1e-9 * std::max(1.0, a.frobenius_norm()), &trace);
        REQUIRE(trace.size() >= 2);
        for (std::size_t k = 1; k < trace.size(); ++k) {
            CHECK(trace[k].lo >= trace[k - 1].lo);
            CHECK(trace[k].hi <= trace[k - 1].hi);
            CHECK(trace[k].angles == 2 * trace[k - 1].angles);
        }
    }
}

TEST_CASE("bracket endpoints are scale equivariant") {
    const ComplexMatrix a = generate({OperatorClass::General, 4, 77, 1.0});
    const double tol = 1e-7 * std::max(1.0, a.frobenius_norm());
    const RadiusBracket base = numerical_radius(a, tol);

    SUBCASE("positive real scaling") {
        const double c = 2.5;
        const RadiusBracket scaled = numerical_radius(a * cplx(c, 0.0), c * tol);
        const double tau = 4.0 * tol * c;
        CHECK(std::abs(scaled.enclosure.lo() - c * base.enclosure.lo()) <= tau);
        CHECK(std::abs(scaled.enclosure.hi() - c * base.enclosure.hi()) <= tau);
    }
    SUBCASE("unimodular scaling") {
        const cplx u = std::polar(1.0, 1.2);
        const RadiusBracket rotated = numerical_radius(a * u, tol);
        const double tau = 4.0 * tol;
        CHECK(std::abs(rotated.enclosure.lo() - base.enclosure.lo()) <= tau);
        CHECK(std::abs(rotated.enclosure.hi() - base.enclosure.hi()) <= tau);
    }
}

TEST_CASE("normal operators collapse omega to the operator norm") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const ComplexMatrix a = generate({OperatorClass::Normal, 6, 300 + seed, 1.0});
        REQUIRE(classify(a).contains(OperatorClass::Normal));
        const RadiusBracket b = numerical_radius(a, 1e-7 * std::max(1.0, a.frobenius_norm()));
        const Interval norm = op_norm(a);
        const double allowance = std::max(b.enclosure.width(), pad_for(a));
        CHECK(std::abs(b.enclosure.mid() - norm.mid()) <= allowance);
    }
}

TEST_CASE("fov_boundary on fixed shapes") {
    const FovBoundary eye = fov_boundary(ComplexMatrix::identity(2), 16);
    for (const cplx& z : eye.points) {
        CHECK(std::abs(z - cplx(1.0, 0.0)) <= 1e-12);
    }

    const ComplexMatrix sym{{1.0, 0.0}, {0.0, -1.0}};
    for (const cplx& z : fov_boundary(sym, 32).points) {
        CHECK(std::abs(z.imag()) <= 1e-12);
        CHECK(z.real() >= -1.0 - 1e-12);
        CHECK(z.real() <= 1.0 + 1e-12);
    }

    // W(J) is the closed disk of radius 1/2 about 0.
    for (const cplx& z : fov_boundary(testsup::jordan2(), 48).points) {
        CHECK(std::abs(std::abs(z) - 0.5) <= 1e-8);
    }

    CHECK_THROWS_AS(fov_boundary(ComplexMatrix::identity(2), 2), std::invalid_argument);
}

TEST_CASE("fov points never exceed the radius bracket") {
    for (std::uint64_t seed : {11u, 12u}) {
        const ComplexMatrix a = generate({OperatorClass::General, 5, seed, 1.0});
        const RadiusBracket b = numerical_radius(a, 1e-8 * std::max(1.0, a.frobenius_norm()));
        for (const cplx& z : fov_boundary(a, 24).points) {
            CHECK(std::abs(z) <= b.enclosure.hi() + pad_for(a));
        }
    }
}

TEST_CASE("rayleigh_sample_sup basics") {
    CHECK(rayleigh_sample_sup(ComplexMatrix(3, 3), 10, 1) == 0.0);

    const double on_identity = rayleigh_sample_sup(ComplexMatrix::identity(4), 25, 7);
    CHECK(std::abs(on_identity - 1.0) <= 1e-12);

    const double on_jordan = rayleigh_sample_sup(testsup::jordan2(), 10000, 42);
    CHECK(on_jordan <= 0.5 + 1e-12);
    CHECK(on_jordan >= 0.45);

    CHECK_THROWS_AS(rayleigh_sample_sup(ComplexMatrix::identity(2), 0, 1), std::invalid_argument);
}

TEST_CASE("rayleigh samples stay below the bracket upper endpoint") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const ComplexMatrix a = generate({OperatorClass::General, 6, 600 + seed, 1.0});
        const RadiusBracket b = numerical_radius(a, 1e-6 * std::max(1.0, a.frobenius_norm()));
        const double sampled = rayleigh_sample_sup(a, 200, seed);
        CHECK(sampled <= b.enclosure.hi() + 1e-10);
    }
}

TEST_CASE("2x2 brackets enclose the dense-grid oracle") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ComplexMatrix a = generate({OperatorClass::General, 2, 7000 + seed, 1.0});
        const RadiusBracket b = numerical_radius(a);
        const double grid = oracle::radius_grid_2x2(a, 20000);
        const double tau = 1e-8 * std::max(1.0, a.frobenius_norm());
        CHECK(b.enclosure.lo() - tau <= grid);
        CHECK(grid <= b.enclosure.hi() + tau);
    }
}
