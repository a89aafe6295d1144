#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "s2op/operators.hpp"

namespace s2op {

/// Deterministic stream of 64-bit values: the splitmix64 finalizer applied
/// to an incrementing state. The starting state is itself a mix of (seed,
/// index), so distinct trials use disjoint, decorrelated streams. This
/// generator is part of the reports' stability contract: identical inputs
/// produce identical draws on every platform.
class Rng {
  public:
    Rng(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform in [-scale, scale].
    double uniformSigned(double scale);

    /// Exactly uniform over {0, ..., bound - 1} (rejection sampling).
    std::uint64_t uniformBelow(std::uint64_t bound);

    static std::uint64_t mix(std::uint64_t z);

  private:
    std::uint64_t state_;
};

/// FNV-1a over the id bytes, mixed with the run seed: the per-theorem
/// sub-seed, so each check draws an independent reproducible stream.
std::uint64_t subSeed(std::uint64_t seed, const std::string& theoremId);

struct TrialConfig {
    std::uint64_t seed = 42;
    int trials = 500;
    int maxDegree = 20;
    double coefficientScale = 1.0;
    double tolerance = 1e-9;
};

struct TrialFailure {
    std::string input;  // digest that reproduces the trial: theoremId/trial/seed
    double measured = 0.0;
    double bound = 0.0;
};

struct TheoremReport {
    std::string theoremId;
    int trials = 0;
    std::vector<TrialFailure> failures;
    /// max over all checked inequalities of (measured - bound): the tightest
    /// observed margin, negative when every trial passed with room.
    double maxSlack = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Degree uniform on {0..maxDegree}, coefficient real/imaginary parts
/// uniform on [-scale, scale], all drawn from Rng(seed, index).
CoefficientSeries randomPolynomial(std::uint64_t seed, std::uint64_t index, int maxDegree,
                                   double scale);

/// sup-sample(f, 4096) <= (pi sqrt(3) / 3) ||f||_{S^2} + tolerance.
TheoremReport checkSupNorm(const TrialConfig& config);

/// ||(fg)'||_{H^2} <= (2 pi sqrt(3) / 3) ||f||_{S^2} ||g||_{S^2} + tolerance,
/// the product taken at its exact degree so nothing is truncated away.
TheoremReport checkProductRule(const TrialConfig& config);

/// ||(f o phi)'||_{H^2}^2 <= ((1 + |phi(0)|) / (1 - |phi(0)|)) ||f||_{S^2}^2
/// + tolerance, per automorphism, with the composition budget chosen so the
/// dropped tail is below tolerance / 10 (see compositionBudget).
/// Automorphisms with |a| > 0.9 are skipped: the tail control degenerates.
/// Runs config.trials trials per automorphism.
TheoremReport checkCompositionBound(const TrialConfig& config,
                                    const std::vector<DiskAutomorphism>& automorphisms);

/// Budget B and certified tail bound for f o phi: on |z| = R in
/// (1, 1/|a|) the composition is bounded by M(R) = sum_k |f_k| W(R)^k with
/// W(R) = (|a| + R) / (1 - |a| R), so by the Cauchy estimates the dropped
/// derivative mass sum_{n>B} n^2 |c_n|^2 is at most
/// M(R)^2 (B+1)^2 x^{B+1} / (1 - x e^{2/(B+1)}) with x = R^{-2}. The budget
/// returned is the smallest power of two (>= 2 deg f) whose bound over a
/// small R grid is below tailTol.
struct CompositionBudget {
    int budget = 0;
    double tailBound = 0.0;
};
CompositionBudget compositionBudget(const CoefficientSeries& f, const DiskAutomorphism& phi,
                                    double tailTol);

/// 1 + sum |w|^{2n} / n^2 <= 1 / (1 - |w|^2) on a polar grid of kernel
/// points (default: 99 radii up to |w| = 0.99, 16 angles, plus w = 0).
TheoremReport checkKernelBound(const std::vector<Complex>& wGrid);
std::vector<Complex> defaultKernelGrid();

/// Section-norm sandwiches at N = 3 * maxDegree: one report for the
/// multiplier bounds, one for the weighted-composition bounds across the
/// given automorphisms.
std::vector<TheoremReport> checkNormSandwiches(const TrialConfig& config,
                                               const std::vector<DiskAutomorphism>& automorphisms);

/// Construct f = (z - w)^n g with g(w) away from zero, divide n times, and
/// demand tiny remainders plus recovery of g (first report); the second
/// report checks the evaluation side: f(w) = 0 and one division lands back
/// in the space with finite norm and exact reconstruction.
std::vector<TheoremReport> checkFactorization(const TrialConfig& config);

/// Zero defect for unimodular constants; defect >= 1e-4 for normalized
/// nonconstant symbols with tail mass >= 1e-3.
TheoremReport checkIsometry(const TrialConfig& config);

std::vector<DiskAutomorphism> defaultSandwichAutomorphisms();
std::vector<DiskAutomorphism> defaultCompositionAutomorphisms();

/// Every check above with sub-seeds derived from (config.seed, theoremId),
/// reports in a fixed order. All-pass is the harness exit criterion.
std::vector<TheoremReport> runAll(const TrialConfig& config);

}  // namespace s2op
