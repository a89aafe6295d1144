#include "s2op/spaces.hpp"

#include <cmath>
#include <numbers>

namespace s2op {

namespace {

void requireInsideDisk(Complex w) {
    if (!(std::abs(w) < 1.0)) {
        throw Error(ErrorCode::OutsideDisk, "kernel point needs |w| < 1");
    }
}

void requireBeta(const SpaceTag& space) {
    if (space.kind == SpaceKind::Bergman && !(space.beta > -1.0)) {
        throw Error(ErrorCode::InvalidBeta, "Bergman weight needs beta > -1");
    }
}

}  // namespace

std::string SpaceTag::name() const {
    switch (kind) {
        case SpaceKind::Hardy: return "hardy";
        case SpaceKind::Bergman: return "bergman";
        case SpaceKind::Dirichlet: return "dirichlet";
        case SpaceKind::S2: return "s2";
    }
    return "unknown";
}

double coefficientWeight(const SpaceTag& space, int n) {
    requireBeta(space);
    if (n == 0) return 1.0;
    const double nd = static_cast<double>(n);
    switch (space.kind) {
        case SpaceKind::Hardy: return 1.0;
        case SpaceKind::Bergman: return std::pow(nd, -(space.beta + 1.0));
        case SpaceKind::Dirichlet: return nd;
        case SpaceKind::S2: return nd * nd;
    }
    return 1.0;
}

NormReport seriesNorm(const SpaceTag& space, const CoefficientSeries& f) {
    requireBeta(space);
    double sum = 0.0;
    for (int n = 0; n <= f.budget(); ++n) {
        sum += coefficientWeight(space, n) * std::norm(f[n]);
    }
    return {space, std::sqrt(sum), f.budget()};
}

Complex innerProduct(const SpaceTag& space, const CoefficientSeries& f,
                     const CoefficientSeries& g) {
    requireBeta(space);
    Complex sum(0.0, 0.0);
    const int top = std::min(f.budget(), g.budget());
    for (int n = 0; n <= top; ++n) {
        sum += coefficientWeight(space, n) * f[n] * std::conj(g[n]);
    }
    return sum;
}

double supNormEstimate(const CoefficientSeries& f, int samples) {
    if (samples < 8) {
        throw Error(ErrorCode::InsufficientSamples, "sup-norm sampling needs samples >= 8");
    }
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / samples;
        best = std::max(best, std::abs(evaluate(f, std::polar(1.0, angle))));
    }
    return best;
}

double hardyNormQuadrature(const CoefficientSeries& f, int samples) {
    if (samples <= 2 * f.budget()) {
        throw Error(ErrorCode::InsufficientSamples,
                    "boundary quadrature needs samples > 2 * budget");
    }
    double sum = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / samples;
        sum += std::norm(evaluate(f, std::polar(1.0, angle)));
    }
    return std::sqrt(sum / samples);
}

Complex kernelValue(const SpaceTag& space, Complex w, Complex z, int budget) {
    requireInsideDisk(w);
    requireBeta(space);
    const Complex cross = std::conj(w) * z;
    switch (space.kind) {
        case SpaceKind::Hardy:
            return 1.0 / (1.0 - cross);
        case SpaceKind::Bergman:
            return std::pow(1.0 - cross, Complex(-(space.beta + 2.0), 0.0));
        case SpaceKind::Dirichlet:
            // 1 - cross stays in the right half plane for |w||z| < 1, so the
            // principal branch is unambiguous.
            return 1.0 + std::log(1.0 / (1.0 - cross));
        case SpaceKind::S2: {
            Complex sum(1.0, 0.0);
            Complex power(1.0, 0.0);
            for (int n = 1; n <= budget; ++n) {
                power *= cross;
                sum += power / static_cast<double>(n * n);
            }
            return sum;
        }
    }
    return Complex(0.0, 0.0);
}

double kernelNormSquared(const SpaceTag& space, Complex w, int budget) {
    requireInsideDisk(w);
    requireBeta(space);
    const double r2 = std::norm(w);
    switch (space.kind) {
        case SpaceKind::Hardy:
            return 1.0 / (1.0 - r2);
        case SpaceKind::Bergman:
            return std::pow(1.0 - r2, -(space.beta + 2.0));
        case SpaceKind::Dirichlet:
            return 1.0 + std::log(1.0 / (1.0 - r2));
        case SpaceKind::S2: {
            double sum = 1.0;
            double power = 1.0;
            for (int n = 1; n <= budget; ++n) {
                power *= r2;
                sum += power / static_cast<double>(n) / static_cast<double>(n);
            }
            return sum;
        }
    }
    return 0.0;
}

CoefficientSeries kernelSeries(const SpaceTag& space, Complex w, int budget) {
    requireInsideDisk(w);
    requireBeta(space);
    budget = std::max(budget, 0);
    Eigen::VectorXcd out(budget + 1);
    out[0] = Complex(1.0, 0.0);
    Complex power(1.0, 0.0);  // conj(w)^n
    for (int n = 1; n <= budget; ++n) {
        power *= std::conj(w);
        out[n] = power / coefficientWeight(space, n);
    }
    return CoefficientSeries(std::move(out));
}

int s2KernelBudget(Complex w, double tailTol) {
    requireInsideDisk(w);
    const double r2 = std::norm(w);
    if (r2 == 0.0) return 1;
    int budget = 1;
    // Tail sum_{n>N} |w|^{2n}/n^2 <= |w|^{2N} / (N^2 (1 - |w|^2)).
    while (std::pow(r2, budget) / (static_cast<double>(budget) * budget * (1.0 - r2)) >= tailTol) {
        ++budget;
        if (budget > 2000000) {
            throw Error(ErrorCode::BudgetTooSmall, "kernel tail tolerance unreachable");
        }
    }
    return budget;
}

}  // namespace s2op
