#pragma once

#include <string>

#include "s2op/series.hpp"

namespace s2op {

enum class SpaceKind { Hardy, Bergman, Dirichlet, S2 };

/// Tag for one of the four coefficient-weighted spaces. Bergman carries its
/// weight parameter beta (> -1); the other kinds ignore it.
struct SpaceTag {
    SpaceKind kind = SpaceKind::S2;
    double beta = 0.0;

    static SpaceTag hardy() { return {SpaceKind::Hardy, 0.0}; }
    static SpaceTag bergman(double beta) { return {SpaceKind::Bergman, beta}; }
    static SpaceTag dirichlet() { return {SpaceKind::Dirichlet, 0.0}; }
    static SpaceTag s2() { return {SpaceKind::S2, 0.0}; }

    std::string name() const;
};

struct NormReport {
    SpaceTag space;
    double value = 0.0;
    int budget = 0;
};

/// Diagonal coefficient weight w_n of the space's series inner product:
/// 1 at n = 0 for every space; for n >= 1 Hardy: 1, Bergman: n^{-(beta+1)},
/// Dirichlet: n, S^2: n^2. Throws InvalidBeta when beta <= -1.
double coefficientWeight(const SpaceTag& space, int n);

/// sqrt( sum_n w_n |f[n]|^2 ) over the retained coefficients.
NormReport seriesNorm(const SpaceTag& space, const CoefficientSeries& f);

/// sum_n w_n f[n] conj(g[n]); innerProduct(s, f, f) = seriesNorm(s, f)^2.
Complex innerProduct(const SpaceTag& space, const CoefficientSeries& f,
                     const CoefficientSeries& g);

/// max_k |f(e^{2 pi i k / samples})|. A lower estimate of the sup norm that
/// converges from below as samples grows (the maximum modulus lives on the
/// boundary). Requires samples >= 8.
double supNormEstimate(const CoefficientSeries& f, int samples);

/// Hardy norm via the boundary mean of |f|^2 at r = 1, which the trapezoid
/// rule computes exactly for polynomials once samples > 2 * budget
/// (InsufficientSamples otherwise).
double hardyNormQuadrature(const CoefficientSeries& f, int samples);

/// Reproducing kernel K_w evaluated at z. Closed forms for Hardy, Bergman,
/// Dirichlet; for S^2 the partial sum 1 + sum_{n=1..budget} (conj(w) z)^n / n^2.
/// Throws OutsideDisk when |w| >= 1.
Complex kernelValue(const SpaceTag& space, Complex w, Complex z, int budget);

/// ||K_w||^2. Hardy: 1/(1-|w|^2); Bergman: (1-|w|^2)^{-(beta+2)};
/// Dirichlet: 1 + log(1/(1-|w|^2)); S^2: 1 + sum_{n=1..budget} |w|^{2n}/n^2.
double kernelNormSquared(const SpaceTag& space, Complex w, int budget);

/// Coefficient series of the kernel that reproduces point evaluation for the
/// space's series inner product: k_0 = 1, k_n = conj(w)^n / w_n. For Hardy,
/// Dirichlet and S^2 these are the Taylor coefficients of the closed forms
/// above; for Bergman they differ from the closed form by the usual
/// equivalent-norm constants, and it is this diagonal solve that makes
/// <f, kernelSeries> = f(w) hold for the implemented inner product.
CoefficientSeries kernelSeries(const SpaceTag& space, Complex w, int budget);

/// Smallest budget N with |w|^{2N} / (N^2 (1 - |w|^2)) < tailTol, which
/// dominates the dropped S^2 kernel tail sum_{n>N} |w|^{2n} / n^2.
int s2KernelBudget(Complex w, double tailTol);

}  // namespace s2op
