#include <doctest.h>

#include <cmath>
#include <numbers>

#include "s2op/spaces.hpp"
#include "s2op/verify.hpp"

using namespace s2op;

TEST_CASE("series norms apply the per-space diagonal weights") {
    CHECK(seriesNorm(SpaceTag::s2(), CoefficientSeries{0.0, 1.0}).value == doctest::Approx(1.0));
    CHECK(seriesNorm(SpaceTag::s2(), CoefficientSeries{0.0, 0.0, 1.0}).value ==
          doctest::Approx(2.0));
    CHECK(seriesNorm(SpaceTag::hardy(), CoefficientSeries{3.0, 4.0}).value ==
          doctest::Approx(5.0));
    CHECK(seriesNorm(SpaceTag::dirichlet(), CoefficientSeries{0.0, 0.0, 1.0}).value ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK(seriesNorm(SpaceTag::bergman(0.0), CoefficientSeries{0.0, 0.0, 1.0}).value ==
          doctest::Approx(std::sqrt(0.5)));
    CHECK_THROWS_AS(seriesNorm(SpaceTag::bergman(-1.0), CoefficientSeries{1.0}), Error);
}

TEST_CASE("inner product matches the norms and monomial orthogonality") {
    CHECK(innerProduct(SpaceTag::s2(), CoefficientSeries{0.0, 1.0}, CoefficientSeries{0.0, 1.0}) ==
          Complex(1.0, 0.0));
    CHECK(innerProduct(SpaceTag::s2(), CoefficientSeries{1.0, 0.0}, CoefficientSeries{0.0, 1.0}) ==
          Complex(0.0, 0.0));
    CHECK(innerProduct(SpaceTag::hardy(), CoefficientSeries{1.0, 2.0}, CoefficientSeries{1.0, 1.0}) ==
          Complex(3.0, 0.0));

    const std::uint64_t seed = subSeed(7, "spaces-ip");
    for (int trial = 0; trial < 50; ++trial) {
        const CoefficientSeries f = randomPolynomial(seed, trial, 10, 1.0);
        const double viaNorm = seriesNorm(SpaceTag::s2(), f).value;
        const Complex viaIp = innerProduct(SpaceTag::s2(), f, f);
        CHECK(viaIp.imag() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(viaIp.real() == doctest::Approx(viaNorm * viaNorm).epsilon(1e-12));
    }
}

TEST_CASE("sup-norm sampling hits the known maxima") {
    CHECK(supNormEstimate(CoefficientSeries{Complex(3.0, -4.0)}, 8) == doctest::Approx(5.0));
    CHECK(supNormEstimate(CoefficientSeries{0.0, 1.0}, 64) == doctest::Approx(1.0));
    CHECK(supNormEstimate(CoefficientSeries{1.0, 1.0}, 256) ==
          doctest::Approx(2.0).epsilon(1e-3));
    CHECK_THROWS_AS(supNormEstimate(CoefficientSeries{1.0}, 4), Error);
}

TEST_CASE("boundary quadrature equals the Hardy series norm on polynomials") {
    CHECK(hardyNormQuadrature(CoefficientSeries{1.0}, 8) == doctest::Approx(1.0));
    CHECK(hardyNormQuadrature(CoefficientSeries{3.0, 4.0}, 16) ==
          doctest::Approx(5.0).epsilon(1e-10));
    CHECK(hardyNormQuadrature(CoefficientSeries{0.0, 0.0, 1.0}, 16) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(hardyNormQuadrature(CoefficientSeries{0.0, 0.0, 1.0}, 4), Error);

    const std::uint64_t seed = subSeed(7, "spaces-quadrature");
    for (int trial = 0; trial < 50; ++trial) {
        const CoefficientSeries f = randomPolynomial(seed, trial, 14, 1.0);
        const double series = seriesNorm(SpaceTag::hardy(), f).value;
        const double quad = hardyNormQuadrature(f, 2 * f.budget() + 1);
        CHECK(quad == doctest::Approx(series).epsilon(1e-10));
    }
}

TEST_CASE("kernel values take their closed forms") {
    CHECK(kernelValue(SpaceTag::hardy(), Complex(0.0, 0.0), Complex(0.3, 0.2), 0) ==
          Complex(1.0, 0.0));
    CHECK(kernelValue(SpaceTag::s2(), Complex(0.0, 0.0), Complex(0.3, 0.2), 50) ==
          Complex(1.0, 0.0));
    CHECK(kernelValue(SpaceTag::hardy(), Complex(0.5, 0.0), Complex(0.5, 0.0), 0).real() ==
          doctest::Approx(4.0 / 3.0));
    CHECK_THROWS_AS(kernelValue(SpaceTag::hardy(), Complex(1.0, 0.0), Complex(0.0, 0.0), 0),
                    Error);

    // Dirichlet closed form against its own series expansion.
    const Complex w(0.4, 0.3), z(0.5, -0.2);
    const Complex viaSeries = evaluate(kernelSeries(SpaceTag::dirichlet(), w, 200), z);
    const Complex closed = kernelValue(SpaceTag::dirichlet(), w, z, 0);
    CHECK(std::abs(viaSeries - closed) < 1e-12);
}

TEST_CASE("kernel norms match the closed forms and the partial-sum oracle") {
    CHECK(kernelNormSquared(SpaceTag::s2(), Complex(0.0, 0.0), 10) == doctest::Approx(1.0));
    CHECK(kernelNormSquared(SpaceTag::hardy(), Complex(0.5, 0.0), 0) ==
          doctest::Approx(4.0 / 3.0));
    CHECK(kernelNormSquared(SpaceTag::dirichlet(), Complex(0.5, 0.0), 0) ==
          doctest::Approx(1.0 + std::log(4.0 / 3.0)));
    CHECK(kernelNormSquared(SpaceTag::bergman(1.0), Complex(0.5, 0.0), 0) ==
          doctest::Approx(std::pow(0.75, -3.0)));

    // Partial sums 1 + sum 0.25^n / n^2 accumulated until stagnation.
    double oracle = 1.0;
    double term;
    double power = 1.0;
    int n = 0;
    do {
        ++n;
        power *= 0.25;
        term = power / (static_cast<double>(n) * n);
        oracle += term;
    } while (term > 1e-18);
    const double value = kernelNormSquared(SpaceTag::s2(), Complex(0.5, 0.0), 60);
    CHECK(value == doctest::Approx(oracle).epsilon(1e-13));
    CHECK(value == doctest::Approx(1.267653).epsilon(1e-5));
}

TEST_CASE("s2KernelBudget certifies the stated tail bound") {
    for (double radius : {0.1, 0.5, 0.9, 0.99}) {
        const Complex w(radius, 0.0);
        const int budget = s2KernelBudget(w, 1e-12);
        const double r2 = radius * radius;
        CHECK(std::pow(r2, budget) / (static_cast<double>(budget) * budget * (1.0 - r2)) < 1e-12);
        // stagnation check: doubling the budget moves the value below tolerance
        const double value = kernelNormSquared(SpaceTag::s2(), w, budget);
        const double refined = kernelNormSquared(SpaceTag::s2(), w, 2 * budget);
        CHECK(std::abs(refined - value) < 1e-12);
    }
}

TEST_CASE("reproducing property holds for the diagonal-solve kernels") {
    const std::uint64_t seed = subSeed(7, "spaces-reproducing");
    const SpaceTag spaces[] = {SpaceTag::hardy(), SpaceTag::bergman(0.5), SpaceTag::dirichlet(),
                               SpaceTag::s2()};
    for (int trial = 0; trial < 80; ++trial) {
        Rng rng(seed, trial);
        const CoefficientSeries f = randomPolynomial(seed, trial, 12, 1.0);
        const Complex w =
            std::polar(0.9 * rng.uniform01(), 2.0 * std::numbers::pi * rng.uniform01());
        const SpaceTag& space = spaces[trial % 4];
        // the kernel only needs to cover deg f for the pairing to be exact
        const CoefficientSeries kernel = kernelSeries(space, w, f.budget());
        const Complex reproduced = innerProduct(space, f, kernel);
        CHECK(std::abs(reproduced - evaluate(f, w)) <= 1e-9);
    }
}

TEST_CASE("containment chain of the four series norms") {
    const std::uint64_t seed = subSeed(7, "spaces-chain");
    for (int trial = 0; trial < 100; ++trial) {
        const CoefficientSeries f = randomPolynomial(seed, trial, 16, 2.0);
        const double bergman = seriesNorm(SpaceTag::bergman(0.0), f).value;
        const double hardy = seriesNorm(SpaceTag::hardy(), f).value;
        const double dirichlet = seriesNorm(SpaceTag::dirichlet(), f).value;
        const double s2 = seriesNorm(SpaceTag::s2(), f).value;
        CHECK(bergman <= hardy);
        CHECK(hardy <= dirichlet);
        CHECK(dirichlet <= s2);
    }
}

TEST_CASE("S^2 norm identity against the derivative Hardy norm") {
    const std::uint64_t seed = subSeed(7, "spaces-identity");
    for (int trial = 0; trial < 100; ++trial) {
        const CoefficientSeries f = randomPolynomial(seed, trial, 20, 1.0);
        const double lhs = std::pow(seriesNorm(SpaceTag::s2(), f).value, 2);
        const double derivative = seriesNorm(SpaceTag::hardy(), differentiate(f)).value;
        const double rhs = std::norm(f[0]) + derivative * derivative;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, lhs));
    }
}

TEST_CASE("sup-norm estimate obeys the S^2 embedding constant") {
    const double constant = std::numbers::pi * std::sqrt(3.0) / 3.0;
    CHECK(constant == doctest::Approx(1.813799).epsilon(1e-6));
    const std::uint64_t seed = subSeed(7, "spaces-embedding");
    for (int trial = 0; trial < 100; ++trial) {
        const CoefficientSeries f = randomPolynomial(seed, trial, 20, 1.0);
        CHECK(supNormEstimate(f, 4096) <=
              constant * seriesNorm(SpaceTag::s2(), f).value + 1e-9);
    }
}

TEST_CASE("S^2 kernel norm stays below the Hardy kernel norm") {
    for (double radius : {0.0, 0.25, 0.5, 0.75, 0.9, 0.99}) {
        const Complex w = std::polar(radius, 0.7);
        const int budget = s2KernelBudget(w, 1e-12);
        CHECK(kernelNormSquared(SpaceTag::s2(), w, budget) <= 1.0 / (1.0 - radius * radius));
    }
}
