#include "s2op/operators.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace s2op {

namespace {

/// Monomial coefficients through degree N -> coordinates in the orthonormal
/// basis e_0 = 1, e_n = z^n / n: the z^j coefficient picks up a factor j.
Eigen::VectorXcd basisCoordinates(const CoefficientSeries& f, int N) {
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(N + 1);
    for (int j = 0; j <= std::min(N, f.budget()); ++j) {
        x[j] = (j == 0) ? f[j] : static_cast<double>(j) * f[j];
    }
    return x;
}

void requireSectionSize(int N) {
    if (N < 1) {
        throw Error(ErrorCode::InvalidInput, "section size needs N >= 1");
    }
}

}  // namespace

FiniteSectionMatrix multiplierMatrix(const CoefficientSeries& psi, int N) {
    requireSectionSize(N);
    if (psi.budget() < N) {
        throw Error(ErrorCode::BudgetTooSmall,
                    "multiplier section needs psi budget >= N; pad the symbol first");
    }
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    A(0, 0) = psi[0];
    for (int m = 1; m <= N; ++m) {
        A(m, 0) = static_cast<double>(m) * psi[m];
    }
    for (int n = 1; n <= N; ++n) {
        for (int m = n; m <= N; ++m) {
            A(m, n) = (static_cast<double>(m) / n) * psi[m - n];
        }
    }
    return {std::move(A), N};
}

FiniteSectionMatrix weightedCompositionMatrix(const CoefficientSeries& psi,
                                              const DiskAutomorphism& phi, int N) {
    requireSectionSize(N);
    const CoefficientSeries phiSeries = mobiusTaylor(phi, N);
    Eigen::MatrixXcd A(N + 1, N + 1);
    CoefficientSeries phiPower = CoefficientSeries::constant(Complex(1.0, 0.0), N);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) phiPower = multiply(phiPower, phiSeries, N);
        const CoefficientSeries column = multiply(psi, phiPower, N);  // psi * phi^n
        A.col(n) = basisCoordinates(column, N) / static_cast<double>(std::max(n, 1));
    }
    return {std::move(A), N};
}

double sectionNorm(const FiniteSectionMatrix& A, double tol, int maxIter) {
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "sectionNorm needs tol > 0");
    }
    const Eigen::Index dim = A.entries.rows();
    const Eigen::MatrixXcd gram = A.entries.adjoint() * A.entries;
    Eigen::VectorXcd v = Eigen::VectorXcd::Constant(dim, Complex(1.0, 0.0));
    v /= std::sqrt(static_cast<double>(dim));
    double rayleigh = 0.0;
    double previous = -1.0;
    for (int iter = 1; iter <= maxIter; ++iter) {
        const Eigen::VectorXcd w = gram * v;
        rayleigh = v.dot(w).real();
        if (iter > 1 && std::abs(rayleigh - previous) <= tol * std::max(rayleigh, 1e-300)) {
            return std::sqrt(std::max(rayleigh, 0.0));
        }
        previous = rayleigh;
        const double norm = w.norm();
        if (norm == 0.0) {
            return 0.0;  // A^H A annihilates the iterate: zero section
        }
        v = w / norm;
    }
    throw NonConvergedError(std::sqrt(std::max(rayleigh, 0.0)), maxIter,
                            "power iteration hit maxIter before the Rayleigh quotient settled");
}

namespace {

OperatorNormEstimate checkedEstimate(double lowerBound, double paperLower, double paperUpper,
                                     int N, double checkTol, const char* what) {
    if (lowerBound < paperLower - checkTol || lowerBound > paperUpper + checkTol) {
        std::ostringstream msg;
        msg << what << " sandwich violated: " << paperLower << " - " << checkTol
            << " <= " << lowerBound << " <= " << paperUpper << " + " << checkTol;
        throw Error(ErrorCode::BoundViolation, msg.str());
    }
    return {lowerBound, paperLower, paperUpper, N};
}

}  // namespace

OperatorNormEstimate mopNormBounds(const CoefficientSeries& psi, int N, int supSamples,
                                   double checkTol) {
    const double s2Norm = seriesNorm(SpaceTag::s2(), psi).value;
    const double lowerBound = sectionNorm(multiplierMatrix(psi, N));
    const double paperLower = std::max(s2Norm, supNormEstimate(psi, supSamples));
    const double paperUpper =
        std::sqrt(1.0 + 4.0 * std::numbers::pi * std::numbers::pi / 3.0) * s2Norm;
    return checkedEstimate(lowerBound, paperLower, paperUpper, N, checkTol, "multiplier norm");
}

OperatorNormEstimate wcoNormBounds(const CoefficientSeries& psi, const DiskAutomorphism& phi,
                                   int N, double checkTol) {
    const double s2Norm = seriesNorm(SpaceTag::s2(), psi).value;
    const double lowerBound = sectionNorm(weightedCompositionMatrix(psi, phi, N));
    const double phi0 = std::abs(phi.a());
    const double paperUpper = std::sqrt((1.0 + 8.0 * std::numbers::pi * std::numbers::pi / 3.0) *
                                        (1.0 + phi0) / (1.0 - phi0)) *
                              s2Norm;
    return checkedEstimate(lowerBound, s2Norm, paperUpper, N, checkTol, "weighted composition norm");
}

double isometryDefect(const CoefficientSeries& psi) {
    const double norm = seriesNorm(SpaceTag::s2(), psi).value;
    double shifted = std::norm(psi[0]);  // || z psi' + psi ||_{H^2}^2
    for (int n = 1; n <= psi.budget(); ++n) {
        const double np1 = static_cast<double>(n + 1);
        shifted += np1 * np1 * std::norm(psi[n]);
    }
    return std::max(std::abs(norm - 1.0), std::abs(shifted - 1.0));
}

std::vector<double> compactnessDiagnostic(const CoefficientSeries& psi, int N) {
    requireSectionSize(N);
    if (psi.budget() < 2 * N) {
        throw Error(ErrorCode::BudgetTooSmall,
                    "compactness diagnostic needs psi budget >= 2N; pad the symbol first");
    }
    std::vector<double> values;
    values.reserve(N);
    for (int n = 1; n <= N; ++n) {
        Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(n + 1);
        basis[n] = Complex(1.0 / n, 0.0);
        const CoefficientSeries en{std::move(basis)};
        values.push_back(seriesNorm(SpaceTag::s2(), multiply(psi, en, 2 * N)).value);
    }
    return values;
}

std::vector<Complex> pointSpectrum(const CoefficientSeries& psi, double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "pointSpectrum needs tol > 0");
    }
    double tailMass = 0.0;
    for (int n = 1; n <= psi.budget(); ++n) {
        tailMass += static_cast<double>(n) * static_cast<double>(n) * std::norm(psi[n]);
    }
    if (tailMass < tol * tol) {
        return {psi[0]};
    }
    return {};
}

const char* membershipVerdictName(MembershipVerdict verdict) {
    switch (verdict) {
        case MembershipVerdict::Inside: return "Inside";
        case MembershipVerdict::Outside: return "Outside";
        case MembershipVerdict::Uncertain: return "Uncertain";
    }
    return "Uncertain";
}

SpectrumReport spectrumSample(const CoefficientSeries& psi, int radialSteps, int angularSteps) {
    if (radialSteps < 1 || angularSteps < 8) {
        throw Error(ErrorCode::InvalidInput,
                    "spectrum sampling needs radialSteps >= 1 and angularSteps >= 8");
    }
    SpectrumReport report;
    report.imageSamples.reserve(static_cast<size_t>(radialSteps + 1) * angularSteps);
    for (int j = 0; j <= radialSteps; ++j) {
        const double r = static_cast<double>(j) / radialSteps;
        for (int k = 0; k < angularSteps; ++k) {
            const double angle = 2.0 * std::numbers::pi * k / angularSteps;
            report.imageSamples.push_back(evaluate(psi, std::polar(r, angle)));
        }
    }
    return report;
}

double defaultMembershipMargin(const CoefficientSeries& psi, int angularSteps) {
    const double derivativeSup = supNormEstimate(differentiate(psi), 2048);
    const double margin = derivativeSup * 2.0 * std::numbers::pi / angularSteps;
    return std::max(margin, 1e-12);
}

MembershipQuery spectrumMembership(const CoefficientSeries& psi, Complex lambda, double epsIn,
                                   int budget) {
    if (!(epsIn > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "membership margin needs epsIn > 0");
    }
    constexpr int kRadial = 64;
    constexpr int kAngular = 512;
    double c = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= kRadial; ++j) {
        const double r = static_cast<double>(j) / kRadial;
        for (int k = 0; k < kAngular; ++k) {
            const double angle = 2.0 * std::numbers::pi * k / kAngular;
            c = std::min(c, std::abs(evaluate(psi, std::polar(r, angle)) - lambda));
        }
    }
    MembershipQuery query;
    query.lambda = lambda;
    query.certificate.c = c;
    if (c <= epsIn) {
        query.verdict = MembershipVerdict::Inside;
        return query;
    }
    // c > 0, so psi(0) != lambda and the reciprocal series exists.
    const CoefficientSeries shifted = linearCombination(
        Complex(1.0, 0.0), psi, Complex(-1.0, 0.0), CoefficientSeries::constant(lambda));
    const CoefficientSeries inverse = reciprocal(shifted, budget);
    const CoefficientSeries product = multiply(shifted, inverse, budget);
    const CoefficientSeries defect =
        linearCombination(Complex(1.0, 0.0), product, Complex(-1.0, 0.0),
                          CoefficientSeries::constant(Complex(1.0, 0.0)));
    const double s2Norm = seriesNorm(SpaceTag::s2(), psi).value;
    query.certificate.resolventNormBound = 1.0 / (c * c) + (s2Norm * s2Norm) / (c * c * c * c);
    query.certificate.residual = seriesNorm(SpaceTag::s2(), defect).value;
    query.verdict = (query.certificate.residual < 1e-8) ? MembershipVerdict::Outside
                                                        : MembershipVerdict::Uncertain;
    return query;
}

}  // namespace s2op
