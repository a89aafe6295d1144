#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <utility>

#include "s2op/errors.hpp"

namespace s2op {

using Complex = std::complex<double>;

/// Truncated Taylor series of an analytic function on the unit disk.
///
/// coeffs()[n] is the z^n coefficient; budget() is the highest retained
/// degree. Every operation below is exact (in exact arithmetic) for all
/// coefficients of degree <= its output budget and silently drops higher
/// degrees. Values are immutable; all arithmetic goes through free
/// functions that return fresh series.
class CoefficientSeries {
  public:
    /// A series needs at least the constant coefficient.
    explicit CoefficientSeries(Eigen::VectorXcd coeffs);
    CoefficientSeries(std::initializer_list<Complex> coeffs);

    static CoefficientSeries zero(int budget = 0);
    static CoefficientSeries constant(Complex value, int budget = 0);

    int budget() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of z^n; degrees beyond the budget read as zero.
    Complex operator[](int n) const {
        return (n >= 0 && n <= budget()) ? coeffs_[n] : Complex(0.0, 0.0);
    }

    const Eigen::VectorXcd& coeffs() const { return coeffs_; }

    /// Same function re-truncated: cut above `budget`, zero-pad below it.
    CoefficientSeries truncated(int budget) const;

  private:
    Eigen::VectorXcd coeffs_;
};

/// Mobius self-map of the disk, z -> e^{i theta} (a - z) / (1 - conj(a) z).
/// Throws InvalidAutomorphism unless |a| < 1 strictly.
class DiskAutomorphism {
  public:
    DiskAutomorphism(Complex a, double theta);

    Complex a() const { return a_; }
    double theta() const { return theta_; }

    /// phi(0) = e^{i theta} a.
    Complex imageOfOrigin() const;

  private:
    Complex a_;
    double theta_;
};

/// Closed-form evaluation of phi at a point of the closed disk.
Complex applyAutomorphism(const DiskAutomorphism& phi, Complex z);

/// c1*f + c2*g, shorter input zero-padded; output budget = max of the two.
CoefficientSeries linearCombination(Complex c1, const CoefficientSeries& f, Complex c2,
                                    const CoefficientSeries& g);

/// Cauchy product truncated to `budget`.
CoefficientSeries multiply(const CoefficientSeries& f, const CoefficientSeries& g, int budget);

/// Derivative; output budget = input budget - 1 (the zero series for constants).
CoefficientSeries differentiate(const CoefficientSeries& f);

/// Horner evaluation of the truncated polynomial.
Complex evaluate(const CoefficientSeries& f, Complex z);

/// Taylor series of 1/f through `budget`, by the standard recurrence
/// g[0] = 1/f[0], g[n] = -(1/f[0]) * sum_{k=1..n} f[k] g[n-k].
/// Throws ZeroConstantTerm when f[0] = 0.
CoefficientSeries reciprocal(const CoefficientSeries& f, int budget);

struct LinearDivision {
    CoefficientSeries quotient;
    Complex remainder;  // equals f(w)
};

/// Synthetic division by (z - w): f(z) = (z - w) * quotient(z) + remainder,
/// identically as polynomials.
LinearDivision divideByLinear(const CoefficientSeries& f, Complex w);

/// Taylor coefficients of phi through `budget`: coefficient 0 is
/// e^{i theta} a, coefficient k >= 1 is -e^{i theta} (1 - |a|^2) conj(a)^{k-1}.
CoefficientSeries mobiusTaylor(const DiskAutomorphism& phi, int budget);

/// Taylor coefficients of f o phi through `budget`, by Horner-on-series:
/// acc <- f[k] + phi * acc from the top coefficient down, every product
/// truncated to `budget`. Because multiplication by a series never lowers
/// degrees, the result is the exact composition of the truncated polynomial
/// f with phi, truncated to `budget`.
CoefficientSeries composeWithAutomorphism(const CoefficientSeries& f, const DiskAutomorphism& phi,
                                          int budget);

/// True when |a_0|^2 + sum n^2 |a_n|^2 < 1e-20, i.e. the series carries no
/// S^2 mass at double precision.
bool isIdenticallyZero(const CoefficientSeries& f);

}  // namespace s2op
