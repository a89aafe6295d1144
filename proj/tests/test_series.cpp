#include <doctest.h>

#include <cmath>
#include <numbers>

#include "s2op/series.hpp"
#include "s2op/verify.hpp"

using namespace s2op;

namespace {

double maxCoeffDistance(const CoefficientSeries& a, const CoefficientSeries& b) {
    double worst = 0.0;
    for (int n = 0; n <= std::max(a.budget(), b.budget()); ++n) {
        worst = std::max(worst, std::abs(a[n] - b[n]));
    }
    return worst;
}

double maxCoeffMagnitude(const CoefficientSeries& f) {
    double worst = 0.0;
    for (int n = 0; n <= f.budget(); ++n) {
        worst = std::max(worst, std::abs(f[n]));
    }
    return worst;
}

}  // namespace

TEST_CASE("linearCombination pads, scales and cancels") {
    const CoefficientSeries cancel =
        linearCombination(1.0, CoefficientSeries{1.0, 1.0}, -1.0, CoefficientSeries{1.0, 1.0});
    CHECK(cancel.budget() == 1);
    CHECK(cancel[0] == Complex(0.0, 0.0));
    CHECK(cancel[1] == Complex(0.0, 0.0));

    const CoefficientSeries scaled =
        linearCombination(2.0, CoefficientSeries{0.0, 1.0}, 0.0, CoefficientSeries{5.0});
    CHECK(scaled[0] == Complex(0.0, 0.0));
    CHECK(scaled[1] == Complex(2.0, 0.0));

    const CoefficientSeries padded =
        linearCombination(1.0, CoefficientSeries{1.0}, 1.0, CoefficientSeries{0.0, 0.0, 3.0});
    CHECK(padded.budget() == 2);
    CHECK(padded[0] == Complex(1.0, 0.0));
    CHECK(padded[1] == Complex(0.0, 0.0));
    CHECK(padded[2] == Complex(3.0, 0.0));
}

TEST_CASE("multiply is the truncated Cauchy product") {
    const CoefficientSeries difference =
        multiply(CoefficientSeries{1.0, 1.0}, CoefficientSeries{1.0, -1.0}, 2);
    CHECK(difference[0] == Complex(1.0, 0.0));
    CHECK(difference[1] == Complex(0.0, 0.0));
    CHECK(difference[2] == Complex(-1.0, 0.0));

    const CoefficientSeries g{2.0, Complex(0.0, 1.0), -3.0};
    const CoefficientSeries identity = multiply(CoefficientSeries{1.0}, g, 1);
    CHECK(identity.budget() == 1);
    CHECK(identity[0] == g[0]);
    CHECK(identity[1] == g[1]);

    const CoefficientSeries zSquared =
        multiply(CoefficientSeries{0.0, 1.0}, CoefficientSeries{0.0, 1.0}, 3);
    CHECK(zSquared.budget() == 3);
    CHECK(zSquared[2] == Complex(1.0, 0.0));
    CHECK(zSquared[3] == Complex(0.0, 0.0));
}

TEST_CASE("differentiate shifts and scales coefficients") {
    const CoefficientSeries d = differentiate(CoefficientSeries{1.0, 2.0, 3.0});
    CHECK(d.budget() == 1);
    CHECK(d[0] == Complex(2.0, 0.0));
    CHECK(d[1] == Complex(6.0, 0.0));

    const CoefficientSeries constant = differentiate(CoefficientSeries{5.0});
    CHECK(constant.budget() == 0);
    CHECK(constant[0] == Complex(0.0, 0.0));

    const CoefficientSeries cube = differentiate(CoefficientSeries{0.0, 0.0, 0.0, 1.0});
    CHECK(cube[2] == Complex(3.0, 0.0));
}

TEST_CASE("evaluate is plain polynomial evaluation") {
    CHECK(evaluate(CoefficientSeries{1.0, 1.0, 1.0}, Complex(0.0, 0.0)) == Complex(1.0, 0.0));
    CHECK(evaluate(CoefficientSeries{1.0, 1.0, 1.0}, Complex(1.0, 0.0)) == Complex(3.0, 0.0));
    CHECK(evaluate(CoefficientSeries{0.0, 1.0}, Complex(0.0, 1.0)) == Complex(0.0, 1.0));
}

TEST_CASE("reciprocal reproduces the classic geometric series") {
    const CoefficientSeries geometric = reciprocal(CoefficientSeries{1.0, -1.0}, 4);
    for (int n = 0; n <= 4; ++n) {
        CHECK(geometric[n] == Complex(1.0, 0.0));
    }

    const CoefficientSeries half = reciprocal(CoefficientSeries{2.0}, 2);
    CHECK(half[0] == Complex(0.5, 0.0));
    CHECK(half[1] == Complex(0.0, 0.0));
    CHECK(half[2] == Complex(0.0, 0.0));

    const CoefficientSeries alternating = reciprocal(CoefficientSeries{1.0, 1.0}, 3);
    CHECK(alternating[0] == Complex(1.0, 0.0));
    CHECK(alternating[1] == Complex(-1.0, 0.0));
    CHECK(alternating[2] == Complex(1.0, 0.0));
    CHECK(alternating[3] == Complex(-1.0, 0.0));

    CHECK_THROWS_AS(reciprocal(CoefficientSeries{0.0, 1.0}, 3), Error);
}

TEST_CASE("divideByLinear performs synthetic division") {
    const LinearDivision factored = divideByLinear(CoefficientSeries{-1.0, 0.0, 1.0}, 1.0);
    CHECK(factored.quotient.budget() == 1);
    CHECK(factored.quotient[0] == Complex(1.0, 0.0));
    CHECK(factored.quotient[1] == Complex(1.0, 0.0));
    CHECK(factored.remainder == Complex(0.0, 0.0));

    const LinearDivision constant = divideByLinear(CoefficientSeries{1.0}, 0.5);
    CHECK(constant.quotient.budget() == 0);
    CHECK(constant.quotient[0] == Complex(0.0, 0.0));
    CHECK(constant.remainder == Complex(1.0, 0.0));

    const LinearDivision monomial = divideByLinear(CoefficientSeries{0.0, 0.0, 1.0}, 0.0);
    CHECK(monomial.quotient[0] == Complex(0.0, 0.0));
    CHECK(monomial.quotient[1] == Complex(1.0, 0.0));
    CHECK(monomial.remainder == Complex(0.0, 0.0));
}

TEST_CASE("mobiusTaylor expands the automorphism") {
    const CoefficientSeries flip = mobiusTaylor(DiskAutomorphism(Complex(0.0, 0.0), 0.0), 3);
    CHECK(flip[0] == Complex(0.0, 0.0));
    CHECK(flip[1] == Complex(-1.0, 0.0));
    CHECK(flip[2] == Complex(0.0, 0.0));
    CHECK(flip[3] == Complex(0.0, 0.0));

    // Oracle: expand (a - z) * sum (a z)^k by direct convolution for a = 0.5.
    const CoefficientSeries half = mobiusTaylor(DiskAutomorphism(Complex(0.5, 0.0), 0.0), 2);
    CHECK(half[0].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(half[1].real() == doctest::Approx(-0.75).epsilon(1e-15));
    CHECK(half[2].real() == doctest::Approx(-0.375).epsilon(1e-15));

    const CoefficientSeries rotated =
        mobiusTaylor(DiskAutomorphism(Complex(0.0, 0.0), std::numbers::pi), 1);
    CHECK(std::abs(rotated[0]) < 1e-15);
    CHECK(std::abs(rotated[1] - Complex(1.0, 0.0)) < 1e-15);

    CHECK_THROWS_AS(DiskAutomorphism(Complex(1.0, 0.0), 0.0), Error);
}

TEST_CASE("composeWithAutomorphism matches direct expansions") {
    const DiskAutomorphism phi(Complex(0.4, 0.1), 0.7);
    const CoefficientSeries phiSeries = mobiusTaylor(phi, 12);
    const CoefficientSeries viaCompose =
        composeWithAutomorphism(CoefficientSeries{0.0, 1.0}, phi, 12);
    CHECK(maxCoeffDistance(viaCompose, phiSeries) < 1e-15);

    const CoefficientSeries constant =
        composeWithAutomorphism(CoefficientSeries{Complex(2.0, -1.0)}, phi, 4);
    CHECK(constant[0] == Complex(2.0, -1.0));
    for (int n = 1; n <= 4; ++n) CHECK(constant[n] == Complex(0.0, 0.0));

    // (z^2) o phi for phi(z) = z (a = 0, theta = pi); oracle: phi series squared.
    const DiskAutomorphism identity(Complex(0.0, 0.0), std::numbers::pi);
    const CoefficientSeries squared =
        composeWithAutomorphism(CoefficientSeries{0.0, 0.0, 1.0}, identity, 2);
    const CoefficientSeries oracle = multiply(mobiusTaylor(identity, 2), mobiusTaylor(identity, 2), 2);
    CHECK(maxCoeffDistance(squared, oracle) < 1e-15);
    CHECK(std::abs(squared[2] - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("division round trip reproduces the dividend") {
    const std::uint64_t seed = subSeed(2024, "series-roundtrip");
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng(seed, trial);
        const CoefficientSeries f = randomPolynomial(seed, trial, 12, 1.0);
        const Complex w = std::polar(0.95 * rng.uniform01(), 2.0 * std::numbers::pi * rng.uniform01());
        const LinearDivision division = divideByLinear(f, w);
        const CoefficientSeries rebuilt = linearCombination(
            1.0, multiply(CoefficientSeries{-w, Complex(1.0, 0.0)}, division.quotient, f.budget()),
            1.0, CoefficientSeries::constant(division.remainder));
        CHECK(maxCoeffDistance(rebuilt, f) <= 1e-12 * std::max(1.0, maxCoeffMagnitude(f)));
    }
}

TEST_CASE("reciprocal residual stays tiny on well-conditioned symbols") {
    const std::uint64_t seed = subSeed(2024, "series-reciprocal");
    const CoefficientSeries one = CoefficientSeries::constant(1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng(seed, trial);
        Eigen::VectorXcd coeffs(9);
        for (int n = 0; n < 9; ++n) {
            coeffs[n] = Complex(rng.uniformSigned(2.0), rng.uniformSigned(2.0));
        }
        if (std::abs(coeffs[0]) < 1.0) coeffs[0] += Complex(2.0, 0.0);
        const CoefficientSeries f{std::move(coeffs)};
        const CoefficientSeries inverse = reciprocal(f, 8);
        const CoefficientSeries residual =
            linearCombination(1.0, multiply(f, inverse, 8), -1.0, one);
        CHECK(maxCoeffMagnitude(residual) <= 1e-10);
    }
}

TEST_CASE("composition agrees with pointwise evaluation") {
    const std::uint64_t seed = subSeed(2024, "series-compose");
    const DiskAutomorphism automorphisms[] = {
        DiskAutomorphism(Complex(0.0, 0.0), 0.0),
        DiskAutomorphism(Complex(0.3, 0.0), 1.1),
        DiskAutomorphism(Complex(0.2, -0.4), std::numbers::pi / 5.0),
    };
    for (int trial = 0; trial < 60; ++trial) {
        Rng rng(seed, trial);
        const CoefficientSeries f = randomPolynomial(seed, trial, 8, 1.0);
        const DiskAutomorphism& phi = automorphisms[trial % 3];
        const CoefficientSeries composed = composeWithAutomorphism(f, phi, 60);
        // |a|^M < 1e-14 holds for every listed automorphism at M = 80.
        const CoefficientSeries phiSeries = mobiusTaylor(phi, 80);
        for (int k = 0; k < 4; ++k) {
            const Complex z = std::polar(0.5 * rng.uniform01(), 2.0 * std::numbers::pi * rng.uniform01());
            const Complex direct = evaluate(f, evaluate(phiSeries, z));
            CHECK(std::abs(evaluate(composed, z) - direct) <= 1e-9);
        }
    }
}

TEST_CASE("self-inverse automorphisms compose to the identity") {
    const std::uint64_t seed = subSeed(2024, "series-involution");
    const Complex points[] = {Complex(0.0, 0.0), Complex(0.3, 0.0), Complex(0.2, -0.45)};
    for (int trial = 0; trial < 60; ++trial) {
        const CoefficientSeries f = randomPolynomial(seed, trial, 5, 1.0);
        const DiskAutomorphism phi(points[trial % 3], 0.0);
        const CoefficientSeries once = composeWithAutomorphism(f, phi, 100);
        const CoefficientSeries twice = composeWithAutomorphism(once, phi, 100);
        CHECK(maxCoeffDistance(twice.truncated(f.budget()), f) <= 1e-9);
        // beyond deg f only truncation dust may remain
        for (int n = f.budget() + 1; n <= twice.budget(); ++n) {
            CHECK(std::abs(twice[n]) <= 1e-9);
        }
    }
}

TEST_CASE("zero detection uses the S^2 mass") {
    CHECK(isIdenticallyZero(CoefficientSeries::zero(5)));
    CHECK(isIdenticallyZero(CoefficientSeries{1e-11}));
    CHECK_FALSE(isIdenticallyZero(CoefficientSeries{1e-9}));
    CHECK_FALSE(isIdenticallyZero(CoefficientSeries{0.0, 1e-9}));
}

TEST_CASE("truncated pads or cuts without touching retained coefficients") {
    const CoefficientSeries f{1.0, 2.0, 3.0};
    const CoefficientSeries cut = f.truncated(1);
    CHECK(cut.budget() == 1);
    CHECK(cut[1] == Complex(2.0, 0.0));
    const CoefficientSeries padded = f.truncated(5);
    CHECK(padded.budget() == 5);
    CHECK(padded[2] == Complex(3.0, 0.0));
    CHECK(padded[5] == Complex(0.0, 0.0));
}
