#pragma once

#include <vector>

#include "s2op/spaces.hpp"

namespace s2op {

/// Compression of an operator to span{e_0, ..., e_N} in the fixed
/// orthonormal S^2 basis e_0 = 1, e_n = z^n / n (n >= 1). Column n holds the
/// basis coordinates of P_N (T e_n), so the Euclidean column norm is the S^2
/// norm of the compressed image. In this basis a multiplier acts as a
/// lower-triangular matrix with closed-form entries.
struct FiniteSectionMatrix {
    Eigen::MatrixXcd entries;  // (N+1) x (N+1)
    int sectionSize = 0;       // N
};

/// Section of M_psi. With psi = sum b_k z^k: entry(0,0) = b_0,
/// entry(m,0) = m b_m, entry(m,n) = (m/n) b_{m-n} for m >= n >= 1, zero
/// above the diagonal. Requires N >= 1 and psi.budget() >= N so no needed
/// coefficient is missing (BudgetTooSmall otherwise); pad the symbol with
/// CoefficientSeries::truncated when it is a genuine polynomial.
FiniteSectionMatrix multiplierMatrix(const CoefficientSeries& psi, int N);

/// Section of W_{psi,phi}: column n is psi * (e_n o phi) expanded through
/// degree N and rescaled into basis coordinates. Exact through degree N for
/// any psi budget (missing coefficients read as zero).
FiniteSectionMatrix weightedCompositionMatrix(const CoefficientSeries& psi,
                                              const DiskAutomorphism& phi, int N);

/// Largest singular value by power iteration on A^H A with the
/// deterministic all-ones start vector; stops when successive Rayleigh
/// quotients agree to a relative `tol`. Throws NonConvergedError (carrying
/// the last estimate) if maxIter is hit first.
double sectionNorm(const FiniteSectionMatrix& A, double tol = 1e-12, int maxIter = 100000);

struct OperatorNormEstimate {
    double lowerBound = 0.0;  // finite-section norm: certified lower bound
    double paperLower = 0.0;
    double paperUpper = 0.0;
    int sectionSize = 0;
};

/// Norm sandwich for M_psi:
///   max{ ||psi||_{S^2}, sup-sample of |psi| } <= ||M_psi|| <= sqrt(1 + 4 pi^2 / 3) ||psi||_{S^2}.
/// lowerBound is the section norm at size N. The sandwich
/// paperLower - checkTol <= lowerBound <= paperUpper + checkTol is asserted
/// (BoundViolation otherwise); it presumes N is large enough for the section
/// to carry the symbol, which psi.budget() >= N guarantees for polynomials.
OperatorNormEstimate mopNormBounds(const CoefficientSeries& psi, int N, int supSamples = 4096,
                                   double checkTol = 1e-9);

/// Norm sandwich for W_{psi,phi}:
///   ||psi||_{S^2} <= ||W|| <= sqrt( (1 + 8 pi^2 / 3) (1 + |phi(0)|) / (1 - |phi(0)|) ) ||psi||_{S^2}.
OperatorNormEstimate wcoNormBounds(const CoefficientSeries& psi, const DiskAutomorphism& phi,
                                   int N, double checkTol = 1e-9);

/// max( | ||psi||_{S^2} - 1 |, | T(psi) - 1 | ) with
/// T(psi) = |a_0|^2 + sum_{n>=1} (n+1)^2 |a_n|^2, the two exactness
/// identities an isometric multiplier satisfies on the test functions 1 and
/// z. Zero exactly for unimodular constants.
double isometryDefect(const CoefficientSeries& psi);

/// d_n = ||psi e_n||_{S^2} for n = 1..N, each computed at budget 2N.
/// Requires psi.budget() >= 2N (BudgetTooSmall) so no column is cut short.
/// Every d_n >= ||psi||_{H^2}, so the sequence stays away from zero for any
/// nonzero symbol; it vanishes identically only for psi = 0.
std::vector<double> compactnessDiagnostic(const CoefficientSeries& psi, int N);

/// {psi(0)} when the nonconstant S^2 mass sum_{n>=1} n^2 |a_n|^2 is below
/// tol^2, empty otherwise.
std::vector<Complex> pointSpectrum(const CoefficientSeries& psi, double tol);

enum class MembershipVerdict { Inside, Outside, Uncertain };

const char* membershipVerdictName(MembershipVerdict verdict);

struct MembershipCertificate {
    double c = 0.0;                    // min |psi - lambda| over the sample grid
    double resolventNormBound = 0.0;   // 1/c^2 + ||psi||_{S^2}^2 / c^4
    double residual = 0.0;             // S^2 norm of (psi - lambda) * g - 1
};

struct MembershipQuery {
    Complex lambda;
    MembershipVerdict verdict = MembershipVerdict::Uncertain;
    MembershipCertificate certificate;
};

struct SpectrumReport {
    std::vector<Complex> imageSamples;
    std::vector<MembershipQuery> queries;
};

/// Samples psi over the polar grid r_j = j / radialSteps (j = 0..radialSteps,
/// so r = 1 included), theta_k = 2 pi k / angularSteps. Requires
/// radialSteps >= 1, angularSteps >= 8.
SpectrumReport spectrumSample(const CoefficientSeries& psi, int radialSteps = 64,
                              int angularSteps = 512);

/// Classifies lambda against the image psi(closed disk). Computes
/// c = min |psi - lambda| over the default polar grid (boundary included).
/// c <= epsIn gives Inside. Otherwise builds g = 1/(psi - lambda) through
/// `budget` and certifies Outside with (c, 1/c^2 + ||psi||^2/c^4, residual)
/// when the reciprocal residual is below 1e-8, Uncertain otherwise.
MembershipQuery spectrumMembership(const CoefficientSeries& psi, Complex lambda, double epsIn,
                                   int budget);

/// Default Inside margin for spectrumMembership: the image moves at most
/// about |psi'| between neighbouring boundary samples, so the guard is
/// sup-sample of |psi'| times the angular step 2 pi / angularSteps.
double defaultMembershipMargin(const CoefficientSeries& psi, int angularSteps = 512);

}  // namespace s2op
