#include "s2op/series.hpp"

#include <algorithm>
#include <cmath>

namespace s2op {

CoefficientSeries::CoefficientSeries(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) {
        throw Error(ErrorCode::InvalidInput, "a series needs at least one coefficient");
    }
}

CoefficientSeries::CoefficientSeries(std::initializer_list<Complex> coeffs)
    : CoefficientSeries(Eigen::Map<const Eigen::VectorXcd>(
          coeffs.begin(), static_cast<Eigen::Index>(coeffs.size()))) {}

CoefficientSeries CoefficientSeries::zero(int budget) {
    return CoefficientSeries(Eigen::VectorXcd::Zero(std::max(budget, 0) + 1));
}

CoefficientSeries CoefficientSeries::constant(Complex value, int budget) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(std::max(budget, 0) + 1);
    c[0] = value;
    return CoefficientSeries(std::move(c));
}

CoefficientSeries CoefficientSeries::truncated(int budget) const {
    budget = std::max(budget, 0);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(budget + 1);
    const int keep = std::min(budget, this->budget());
    c.head(keep + 1) = coeffs_.head(keep + 1);
    return CoefficientSeries(std::move(c));
}

DiskAutomorphism::DiskAutomorphism(Complex a, double theta) : a_(a), theta_(theta) {
    if (!(std::abs(a) < 1.0)) {
        throw Error(ErrorCode::InvalidAutomorphism, "automorphism parameter needs |a| < 1");
    }
}

Complex DiskAutomorphism::imageOfOrigin() const {
    return std::polar(1.0, theta_) * a_;
}

Complex applyAutomorphism(const DiskAutomorphism& phi, Complex z) {
    return std::polar(1.0, phi.theta()) * (phi.a() - z) / (1.0 - std::conj(phi.a()) * z);
}

CoefficientSeries linearCombination(Complex c1, const CoefficientSeries& f, Complex c2,
                                    const CoefficientSeries& g) {
    const int budget = std::max(f.budget(), g.budget());
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(budget + 1);
    out.head(f.budget() + 1) = c1 * f.coeffs();
    out.head(g.budget() + 1) += c2 * g.coeffs();
    return CoefficientSeries(std::move(out));
}

CoefficientSeries multiply(const CoefficientSeries& f, const CoefficientSeries& g, int budget) {
    budget = std::max(budget, 0);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(budget + 1);
    const int fTop = std::min(f.budget(), budget);
    for (int k = 0; k <= fTop; ++k) {
        const Complex fk = f[k];
        if (fk == Complex(0.0, 0.0)) continue;
        const int gTop = std::min(g.budget(), budget - k);
        out.segment(k, gTop + 1) += fk * g.coeffs().head(gTop + 1);
    }
    return CoefficientSeries(std::move(out));
}

CoefficientSeries differentiate(const CoefficientSeries& f) {
    if (f.budget() == 0) return CoefficientSeries::zero(0);
    Eigen::VectorXcd out(f.budget());
    for (int n = 0; n < f.budget(); ++n) {
        out[n] = static_cast<double>(n + 1) * f[n + 1];
    }
    return CoefficientSeries(std::move(out));
}

Complex evaluate(const CoefficientSeries& f, Complex z) {
    Complex acc = f[f.budget()];
    for (int n = f.budget() - 1; n >= 0; --n) {
        acc = f[n] + z * acc;
    }
    return acc;
}

CoefficientSeries reciprocal(const CoefficientSeries& f, int budget) {
    if (f[0] == Complex(0.0, 0.0)) {
        throw Error(ErrorCode::ZeroConstantTerm, "reciprocal series needs f(0) != 0");
    }
    budget = std::max(budget, 0);
    const Complex inv = 1.0 / f[0];
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(budget + 1);
    out[0] = inv;
    for (int n = 1; n <= budget; ++n) {
        Complex acc(0.0, 0.0);
        const int top = std::min(n, f.budget());
        for (int k = 1; k <= top; ++k) {
            acc += f[k] * out[n - k];
        }
        out[n] = -inv * acc;
    }
    return CoefficientSeries(std::move(out));
}

LinearDivision divideByLinear(const CoefficientSeries& f, Complex w) {
    const int d = f.budget();
    if (d == 0) {
        return {CoefficientSeries::zero(0), f[0]};
    }
    Eigen::VectorXcd q(d);
    q[d - 1] = f[d];
    for (int k = d - 1; k >= 1; --k) {
        q[k - 1] = f[k] + w * q[k];
    }
    const Complex remainder = f[0] + w * q[0];
    return {CoefficientSeries(std::move(q)), remainder};
}

CoefficientSeries mobiusTaylor(const DiskAutomorphism& phi, int budget) {
    budget = std::max(budget, 0);
    const Complex rotation = std::polar(1.0, phi.theta());
    const Complex a = phi.a();
    const Complex aConj = std::conj(a);
    Eigen::VectorXcd out(budget + 1);
    out[0] = rotation * a;
    Complex power(1.0, 0.0);  // conj(a)^{k-1}
    const double oneMinusA2 = 1.0 - std::norm(a);
    for (int k = 1; k <= budget; ++k) {
        out[k] = -rotation * oneMinusA2 * power;
        power *= aConj;
    }
    return CoefficientSeries(std::move(out));
}

CoefficientSeries composeWithAutomorphism(const CoefficientSeries& f, const DiskAutomorphism& phi,
                                          int budget) {
    budget = std::max(budget, 0);
    const CoefficientSeries phiSeries = mobiusTaylor(phi, budget);
    CoefficientSeries acc = CoefficientSeries::constant(f[f.budget()], budget);
    for (int k = f.budget() - 1; k >= 0; --k) {
        acc = multiply(phiSeries, acc, budget);
        acc = linearCombination(Complex(1.0, 0.0), acc, Complex(1.0, 0.0),
                                CoefficientSeries::constant(f[k], budget));
    }
    return acc;
}

bool isIdenticallyZero(const CoefficientSeries& f) {
    double mass = std::norm(f[0]);
    for (int n = 1; n <= f.budget(); ++n) {
        mass += static_cast<double>(n) * static_cast<double>(n) * std::norm(f[n]);
    }
    return mass < 1e-20;
}

}  // namespace s2op
