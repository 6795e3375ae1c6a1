#include "liouvep/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace liouvep {

std::string frameName(Frame f)
{
    switch (f) {
    case Frame::KL: return "KL";
    case Frame::CL: return "CL";
    case Frame::MKL: return "mKL";
    case Frame::HPZ: return "HPZ";
    }
    return "?";
}

std::complex<double> GaussianEnvelope::evalQR(std::complex<double> q,
                                              std::complex<double> r) const
{
    double norm = std::sqrt(normSq.toDouble() / std::numbers::pi);
    std::complex<double> i(0, 1);
    return norm * std::exp(-alpha.toDouble() * q * q - beta.toDouble() * r * r -
                           delta.toDouble() * i * q * r);
}

std::complex<double> GaussianEnvelope::evalQS(std::complex<double> q,
                                              std::complex<double> s) const
{
    double norm = std::sqrt(normSq.toDouble() / std::numbers::pi);
    return norm * std::exp(-alpha.toDouble() * q * q + beta.toDouble() * s * s -
                           delta.toDouble() * q * s);
}

WeightedState WeightedState::operator+(const WeightedState& o) const
{
    if (poly.isZero())
        return o;
    if (o.poly.isZero())
        return *this;
    if (env != o.env)
        throw std::invalid_argument("WeightedState: envelope mismatch in linear combination");
    return {poly + o.poly, env};
}

WeightedState WeightedState::operator-(const WeightedState& o) const
{
    return *this + o.scaled(Coeff(-1));
}

GaussianEnvelope klEnvelope(const Rational& b)
{
    if (b <= 0)
        throw std::invalid_argument("klEnvelope: b must be positive");
    GaussianEnvelope e;
    e.frame = Frame::KL;
    e.alpha = SurdReal(Rational(1) / (2 * b));
    e.beta = SurdReal(b / 2);
    e.delta = SurdReal(0);
    e.normSq = SurdReal(Rational(1) / (2 * b));
    return e;
}

GaussianEnvelope clEnvelope()
{
    GaussianEnvelope e;
    e.frame = Frame::CL;
    return e;
}

GaussianEnvelope mklEnvelope(const MKLParams& p)
{
    if (p.gamma <= 0 || p.omega0 <= 0)
        throw std::invalid_argument("mklEnvelope: need positive omega0 and gamma");
    Rational omega1sq = p.omega0 * p.omega0 - p.h1 * p.h1 / 4;
    Rational gsq4 = p.gamma * p.gamma / 4;
    Rational d = p.omega0 * (p.omega0 - p.h1 / 2) + gsq4;
    if (d == 0)
        throw std::invalid_argument("mklEnvelope: singular parameters");
    GaussianEnvelope e;
    e.frame = Frame::MKL;
    e.alpha = SurdReal((omega1sq + gsq4) / d);
    e.beta = SurdReal((p.omega0 * p.omega0 + gsq4) / d);
    e.delta = SurdReal(p.gamma * p.h1 / (2 * d));
    e.normSq = e.alpha;
    return e;
}

GaussianEnvelope hpzEnvelope()
{
    GaussianEnvelope e;
    e.frame = Frame::HPZ;
    return e;
}

WeightedState stationaryStateKL(const Rational& b)
{
    return {Poly2(1), klEnvelope(b)};
}

WeightedState stationaryStateCL()
{
    return {Poly2(1), clEnvelope()};
}

WeightedState stationaryStateMKL(const MKLParams& p)
{
    return {Poly2(1), mklEnvelope(p)};
}

WeightedState stationaryStateHPZ()
{
    return {Poly2(1), hpzEnvelope()};
}

Coeff traceIntegral(const WeightedState& state)
{
    // integral of Q^a exp(-alpha Q^2) dQ = sqrt(pi/alpha) (a-1)!! / (2 alpha)^(a/2)
    // for even a, zero for odd a; the sqrt(pi) cancels against the norm.
    Coeff alpha(state.env.alpha);
    Coeff sum;
    for (const auto& [k, c] : state.poly.terms()) {
        if (k.second != 0 || k.first % 2 != 0)
            continue;
        Coeff moment(Rational(doubleFactorial(k.first - 1), 1));
        Coeff denom(1);
        for (int i = 0; i < k.first / 2; ++i)
            denom *= Coeff(2) * alpha;
        sum += c * moment / denom;
    }
    SurdReal ratio = state.env.normSq / state.env.alpha;
    if (!ratio.isRational())
        throw std::domain_error("traceIntegral: normSq/alpha not rational");
    return sum * Coeff::sqrtOfRational(ratio.asRational());
}

bool hasRealCoefficients(const Poly2& p)
{
    for (const auto& [k, c] : p.terms())
        if (!c.isReal())
            return false;
    return true;
}

std::vector<std::pair<double, std::complex<double>>>
gridSlice(const WeightedState& state, SliceAxis axis, const std::vector<double>& points)
{
    std::vector<std::pair<double, std::complex<double>>> out;
    out.reserve(points.size());
    for (double x : points) {
        std::complex<double> v = axis == SliceAxis::diagonal ? state.evalQR(x, 0.0)
                                                             : state.evalQR(0.0, x);
        out.emplace_back(x, v);
    }
    return out;
}

} // namespace liouvep
