#pragma once

#include <vector>

#include "liouvep/params.hpp"
#include "liouvep/poly2.hpp"

namespace liouvep {

// norm * exp(-alpha*Q^2 - beta*r^2 - delta*i*Q*r), with norm stored through
// its square times pi, i.e. norm = sqrt(normSq)/sqrt(pi).  In the (Q, s)
// algebra the exponent reads -alpha*Q^2 + beta*s^2 - delta*Q*s.
struct GaussianEnvelope {
    Frame frame = Frame::KL;
    SurdReal alpha = SurdReal(1);
    SurdReal beta = SurdReal(1);
    SurdReal delta = SurdReal(0);
    SurdReal normSq = SurdReal(1); // pi * norm^2

    bool operator==(const GaussianEnvelope& o) const
    {
        return frame == o.frame && alpha == o.alpha && beta == o.beta &&
               delta == o.delta && normSq == o.normSq;
    }
    bool operator!=(const GaussianEnvelope& o) const { return !(*this == o); }

    std::complex<double> evalQR(std::complex<double> q, std::complex<double> r) const;
    std::complex<double> evalQS(std::complex<double> q, std::complex<double> s) const;
};

struct WeightedState {
    Poly2 poly;
    GaussianEnvelope env;

    bool isZero() const { return poly.isZero(); }
    WeightedState operator+(const WeightedState& o) const;
    WeightedState operator-(const WeightedState& o) const;
    WeightedState scaled(const Coeff& c) const { return {poly.scaled(c), env}; }

    std::complex<double> evalQR(std::complex<double> q, std::complex<double> r) const
    {
        return poly.evalQR(q, r) * env.evalQR(q, r);
    }
    std::complex<double> evalQS(std::complex<double> q, std::complex<double> s) const
    {
        return poly.evalQS(q, s) * env.evalQS(q, s);
    }
};

GaussianEnvelope klEnvelope(const Rational& b);
GaussianEnvelope clEnvelope();
GaussianEnvelope mklEnvelope(const MKLParams& p);
GaussianEnvelope hpzEnvelope();

WeightedState stationaryStateKL(const Rational& b);
WeightedState stationaryStateCL();
WeightedState stationaryStateMKL(const MKLParams& p);
WeightedState stationaryStateHPZ();

// tr rho = integral of rho(x, r=0) dx via closed-form Gaussian moments;
// exact in the surd field, the sqrt(pi) cancels against the norm.
Coeff traceIntegral(const WeightedState& state);

// True iff the (Q,s) polynomial has real coefficients, which is equivalent
// to hermiticity of the represented density function.
bool hasRealCoefficients(const Poly2& p);

enum class SliceAxis { diagonal, offDiagonal };

std::vector<std::pair<double, std::complex<double>>>
gridSlice(const WeightedState& state, SliceAxis axis, const std::vector<double>& points);

} // namespace liouvep
