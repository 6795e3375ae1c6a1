#include "liouvep/diffop.hpp"

#include <algorithm>
#include <stdexcept>

namespace liouvep {

namespace {

bool sameShape(const DiffOpTerm& a, const DiffOpTerm& b)
{
    return a.qPow == b.qPow && a.sPow == b.sPow && a.dQOrd == b.dQOrd &&
           a.dSOrd == b.dSOrd;
}

bool shapeLess(const DiffOpTerm& a, const DiffOpTerm& b)
{
    return std::tie(a.qPow, a.sPow, a.dQOrd, a.dSOrd) <
           std::tie(b.qPow, b.sPow, b.dQOrd, b.dSOrd);
}

} // namespace

void DiffOp::canonicalize()
{
    std::sort(terms_.begin(), terms_.end(), shapeLess);
    std::vector<DiffOpTerm> merged;
    for (const auto& t : terms_) {
        if (!merged.empty() && sameShape(merged.back(), t))
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const DiffOpTerm& t) { return t.coeff.isZero(); });
    terms_ = std::move(merged);
}

DiffOp& DiffOp::addTerm(const Coeff& c, int qPow, int sPow, int dQOrd, int dSOrd)
{
    terms_.push_back({c, qPow, sPow, dQOrd, dSOrd});
    canonicalize();
    return *this;
}

DiffOp DiffOp::operator+(const DiffOp& o) const
{
    if (frame_ != o.frame_)
        throw std::invalid_argument("DiffOp: frame mismatch in sum");
    DiffOp r = *this;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.canonicalize();
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const
{
    return *this + o.scaled(Coeff(-1));
}

DiffOp DiffOp::scaled(const Coeff& c) const
{
    DiffOp r(frame_);
    if (c.isZero())
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        t.coeff *= c;
    return r;
}

bool DiffOp::operator==(const DiffOp& o) const
{
    if (frame_ != o.frame_ || terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (!sameShape(terms_[i], o.terms_[i]) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

WeightedState DiffOp::apply(const WeightedState& state) const
{
    if (frame_ != state.env.frame)
        throw std::invalid_argument("DiffOp::apply: operator and state frames differ");
    const Coeff alpha(state.env.alpha), beta(state.env.beta), delta(state.env.delta);
    // exponent E = -alpha Q^2 + beta s^2 - delta Q s
    const Poly2 dE_dS = Poly2::monomial(0, 1, Coeff(2) * beta) -
                        Poly2::monomial(1, 0, delta);
    const Poly2 dE_dQ = Poly2::monomial(1, 0, Coeff(-2) * alpha) -
                        Poly2::monomial(0, 1, delta);
    Poly2 out;
    for (const auto& t : terms_) {
        Poly2 p = state.poly;
        for (int i = 0; i < t.dSOrd; ++i)
            p = p.diff(Poly2::Var::S) + p * dE_dS;
        for (int i = 0; i < t.dQOrd; ++i)
            p = p.diff(Poly2::Var::Q) + p * dE_dQ;
        out += p * Poly2::monomial(t.qPow, t.sPow, t.coeff);
    }
    return {out, state.env};
}

DiffOp DiffOp::rescaled(const Coeff& fq, const Coeff& fs, Frame newFrame) const
{
    DiffOp r(newFrame);
    for (const auto& t : terms_) {
        Coeff scale = t.coeff;
        for (int i = 0; i < t.qPow; ++i)
            scale *= fq;
        for (int i = 0; i < t.sPow; ++i)
            scale *= fs;
        for (int i = 0; i < t.dQOrd; ++i)
            scale /= fq;
        for (int i = 0; i < t.dSOrd; ++i)
            scale /= fs;
        r.terms_.push_back({scale, t.qPow, t.sPow, t.dQOrd, t.dSOrd});
    }
    r.canonicalize();
    return r;
}

DiffOp buildGenerator(Generator g)
{
    const Rational half(1, 2);
    DiffOp op(Frame::KL);
    switch (g) {
    case Generator::iL0:
        op.addTerm(Coeff(half), 0, 0, 1, 1).addTerm(Coeff(half), 1, 1, 0, 0);
        break;
    case Generator::iM1:
        op.addTerm(Coeff(-half), 0, 0, 1, 1).addTerm(Coeff(half), 1, 1, 0, 0);
        break;
    case Generator::iM2:
        op.addTerm(Coeff(-half), 1, 0, 1, 0)
            .addTerm(Coeff(-half), 0, 0, 0, 0)
            .addTerm(Coeff(-half), 0, 1, 0, 1);
        break;
    case Generator::O0MinusHalf:
        op.addTerm(Coeff(-half), 1, 0, 1, 0)
            .addTerm(Coeff(-half), 0, 0, 0, 0)
            .addTerm(Coeff(half), 0, 1, 0, 1);
        break;
    case Generator::OPlus:
        op.addTerm(Coeff(Rational(1, 4)), 0, 0, 2, 0)
            .addTerm(Coeff(Rational(1, 4)), 0, 2, 0, 0);
        break;
    case Generator::L1Plus:
        op.addTerm(Coeff(Rational(-1, 4)), 0, 0, 2, 0)
            .addTerm(Coeff(Rational(1, 4)), 0, 2, 0, 0);
        break;
    case Generator::L2Plus:
        op.addTerm(Coeff(-half), 0, 1, 1, 0);
        break;
    }
    return op;
}

DiffOp klLiouvillian(const KLParams& p)
{
    return klUnitaryPart(p.omega) + klDissipativePart(p.gamma, p.b);
}

DiffOp klUnitaryPart(const Rational& omega)
{
    DiffOp op(Frame::KL);
    op.addTerm(Coeff(omega), 0, 0, 1, 1).addTerm(Coeff(omega), 1, 1, 0, 0);
    return op;
}

DiffOp klDissipativePart(const Rational& gamma, const Rational& b)
{
    DiffOp op(Frame::KL);
    Rational g2 = gamma / 2;
    op.addTerm(Coeff(-g2), 1, 0, 1, 0)
        .addTerm(Coeff(-g2), 0, 0, 0, 0)
        .addTerm(Coeff(g2), 0, 1, 0, 1)
        .addTerm(Coeff(-b * g2), 0, 0, 2, 0)
        .addTerm(Coeff(-b * g2), 0, 2, 0, 0);
    return op;
}

DiffOp genericLiouvillian(const GenericParams& p)
{
    return buildGenerator(Generator::iL0).scaled(Coeff(2 * p.omega0)) +
           buildGenerator(Generator::iM1).scaled(Coeff(p.h1)) +
           buildGenerator(Generator::iM2).scaled(Coeff(p.h2)) +
           buildGenerator(Generator::O0MinusHalf).scaled(Coeff(p.gamma)) +
           buildGenerator(Generator::OPlus).scaled(Coeff(p.g0)) +
           buildGenerator(Generator::L1Plus).scaled(Coeff(p.g1)) +
           buildGenerator(Generator::L2Plus).scaled(Coeff(p.g2));
}

DiffOp clLiouvillian(const CLParams& p)
{
    DiffOp op(Frame::CL);
    op.addTerm(Coeff(p.omega0 / 2), 0, 0, 1, 1)
        .addTerm(Coeff(2 * p.omega0), 1, 1, 0, 0)
        .addTerm(Coeff(p.gamma), 0, 1, 0, 1)
        .addTerm(Coeff(-2 * p.gamma), 0, 2, 0, 0);
    return op;
}

DiffOp clLiouvillianEP(const Rational& omega0)
{
    return clLiouvillian(CLParams::atEP(omega0));
}

DiffOp mklLiouvillian(const MKLParams& p)
{
    DiffOp op(Frame::MKL);
    Rational g2 = p.gamma / 2;
    op.addTerm(Coeff((p.omega0 - p.h1 / 2) / 2), 0, 0, 1, 1)
        .addTerm(Coeff(2 * (p.omega0 + p.h1 / 2)), 1, 1, 0, 0)
        .addTerm(Coeff(-g2), 1, 0, 1, 0)
        .addTerm(Coeff(-g2), 0, 0, 0, 0)
        .addTerm(Coeff(g2), 0, 1, 0, 1)
        .addTerm(Coeff(-p.gamma / 4), 0, 0, 2, 0)
        .addTerm(Coeff(-p.gamma), 0, 2, 0, 0);
    return op;
}

DiffOp mklLiouvillianEP(const Rational& omegaTilde, const Rational& gamma)
{
    return mklLiouvillian(MKLParams::atEP(omegaTilde, gamma));
}

DiffOp hpzLiouvillian(const HPZParams& p)
{
    if (p.bplus <= 0 || p.bminus <= 0)
        throw std::invalid_argument("hpzLiouvillian: b+ and b- must be positive");
    DiffOp op(Frame::HPZ);
    Coeff w0(p.omega0);
    op.addTerm(w0 * Coeff::sqrtOfRational(p.bminus / p.bplus) * Coeff(Rational(1, 2)),
               0, 0, 1, 1);
    op.addTerm(w0 * Coeff::sqrtOfRational(p.bplus / p.bminus) * Coeff(2), 1, 1, 0, 0);
    op.addTerm(Coeff(p.gamma), 0, 1, 0, 1);
    op.addTerm(Coeff(-2 * p.gamma), 0, 2, 0, 0);
    op.addTerm(w0 * Coeff(p.bplus - p.bminus) / Coeff::sqrtOfRational(p.bplus * p.bminus),
               0, 1, 1, 0);
    return op;
}

DiffOp hpzLiouvillianEP(const HPZParams& p)
{
    HPZParams ep = p;
    ep.gamma = 2 * p.omega0;
    return hpzLiouvillian(ep);
}

SimilarityMap hatOperatorsCL(const CLParams& p)
{
    Rational d = p.delta2();
    if (d == 0 || d == 2)
        throw std::invalid_argument("hatOperatorsCL: delta2 in {0, 2} is singular");
    // cosh(phi) = omega0/omega2, sinh(phi) = -gamma/(2 omega2); the quartic
    // roots cancel in the combinations below, leaving sqrt(delta2) and
    // sqrt(2 - delta2) only.
    Coeff s2 = Coeff::sqrtOfRational(d);
    Coeff s2p = Coeff::sqrtOfRational(2 - d);
    Coeff inv2 = Coeff(1) / s2;
    Coeff inv2p = Coeff(1) / s2p;
    Coeff half(Rational(1, 2));
    Coeff A = (s2 + s2p) * half;                          // cosh(phi/2)/sqrt(cosh phi)
    Coeff B = (s2 - s2p) * half;                          // sinh(phi/2)/sqrt(cosh phi)
    Coeff C = Coeff(-(1 - d)) * half * (inv2 + inv2p);    // sinh(phi) * A
    Coeff D = Coeff(1 - d) * half * (inv2 - inv2p);       // sinh(phi) * B
    Coeff E = half * (inv2 + inv2p);                      // sqrt(cosh phi) cosh(phi/2)
    Coeff F = half * (inv2p - inv2);                      // sqrt(cosh phi) sinh(phi/2)

    DiffOp hatQ(Frame::CL);
    hatQ.addTerm(A, 1, 0, 0, 0)
        .addTerm(C, 0, 1, 0, 0)
        .addTerm(-B * half, 0, 0, 0, 1)
        .addTerm(-D * half, 0, 0, 1, 0);
    DiffOp hatIR(Frame::CL);
    hatIR.addTerm(E, 0, 1, 0, 0).addTerm(-F * half, 0, 0, 1, 0);
    return {hatQ, hatIR, clEnvelope(), Frame::CL};
}

SimilarityMap hatOperatorsMKL(const MKLParams& p)
{
    Rational omega1sq = p.omega0 * p.omega0 - p.h1 * p.h1 / 4;
    Rational gsq4 = p.gamma * p.gamma / 4;
    if (omega1sq + gsq4 == 0 || omega1sq <= 0)
        throw std::invalid_argument("hatOperatorsMKL: singular parameters");
    Coeff omega1 = Coeff::sqrtOfRational(omega1sq);
    Coeff pre = Coeff::sqrtOfRational((p.omega0 + p.h1 / 2) /
                                      (p.omega0 * (omega1sq + gsq4))) /
                omega1;
    DiffOp hatQ(Frame::MKL);
    hatQ.addTerm(pre * Coeff(omega1sq + gsq4), 1, 0, 0, 0)
        .addTerm(pre * Coeff(p.gamma * p.gamma / 8), 0, 0, 1, 0)
        .addTerm(pre * Coeff(p.gamma * p.h1 / 4), 0, 1, 0, 0);
    DiffOp hatIR(Frame::MKL);
    hatIR.addTerm(Coeff::sqrtOfRational(p.omega0 * (p.omega0 + p.h1 / 2) /
                                        (omega1sq + gsq4)),
                  0, 1, 0, 0);
    return {hatQ, hatIR, mklEnvelope(p), Frame::MKL};
}

SimilarityMap hatOperatorsHPZ(const HPZParams& p)
{
    Rational bsum = p.bplus + p.bminus;
    DiffOp hatQ(Frame::HPZ);
    Coeff pre = Coeff(1) / Coeff::sqrtOfRational(2 * p.bplus * bsum);
    hatQ.addTerm(pre * Coeff(2 * p.bplus), 1, 0, 0, 0)
        .addTerm(pre * Coeff((p.bplus - p.bminus) / 2), 0, 0, 1, 0);
    DiffOp hatIR(Frame::HPZ);
    hatIR.addTerm(Coeff::sqrtOfRational(bsum / (2 * p.bminus)), 0, 1, 0, 0);
    return {hatQ, hatIR, hpzEnvelope(), Frame::HPZ};
}

namespace {

std::complex<double> diffQ(const WeightedState& st, int ord, std::complex<double> q,
                           std::complex<double> s, double h)
{
    switch (ord) {
    case 0:
        return st.evalQS(q, s);
    case 1:
        return (st.evalQS(q + h, s) - st.evalQS(q - h, s)) / (2 * h);
    case 2:
        return (st.evalQS(q + h, s) - 2.0 * st.evalQS(q, s) + st.evalQS(q - h, s)) /
               (h * h);
    default:
        throw std::invalid_argument("finiteDifferenceOracle: dQ order > 2");
    }
}

std::complex<double> diffQS(const WeightedState& st, int ordQ, int ordS,
                            std::complex<double> q, std::complex<double> s, double h)
{
    switch (ordS) {
    case 0:
        return diffQ(st, ordQ, q, s, h);
    case 1:
        return (diffQ(st, ordQ, q, s + h, h) - diffQ(st, ordQ, q, s - h, h)) / (2 * h);
    case 2:
        return (diffQ(st, ordQ, q, s + h, h) - 2.0 * diffQ(st, ordQ, q, s, h) +
                diffQ(st, ordQ, q, s - h, h)) /
               (h * h);
    default:
        throw std::invalid_argument("finiteDifferenceOracle: dS order > 2");
    }
}

} // namespace

std::complex<double> finiteDifferenceOracle(const DiffOp& op, const WeightedState& state,
                                            double q0, double r0, double h)
{
    if (h <= 0)
        throw std::invalid_argument("finiteDifferenceOracle: h must be positive");
    std::complex<double> s0(0, r0); // s = i r
    std::complex<double> v = 0;
    for (const auto& t : op.terms()) {
        std::complex<double> term = t.coeff.toComplex();
        for (int i = 0; i < t.qPow; ++i)
            term *= q0;
        for (int i = 0; i < t.sPow; ++i)
            term *= s0;
        v += term * diffQS(state, t.dQOrd, t.dSOrd, q0, s0, h);
    }
    return v;
}

} // namespace liouvep
