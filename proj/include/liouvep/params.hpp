#pragma once

#include "liouvep/coeff.hpp"

namespace liouvep {

// Coordinate frames.  Each model absorbs its scale parameters into the
// coordinates differently, so states and operators are tagged and never
// mixed across frames implicitly.
enum class Frame {
    KL,  // raw (Q, r)
    CL,  // (Qbar, rbar), bbar absorbed
    MKL, // (Qtilde, rtilde), btilde absorbed
    HPZ, // (Q+, r-)
};

std::string frameName(Frame f);

struct KLParams {
    Rational omega = 1;
    Rational gamma = Rational(1, 2);
    Rational b = Rational(1, 2);
};

struct CLParams {
    Rational omega0 = 1;
    Rational gamma = 1;

    Rational delta2() const { return 1 - gamma / (2 * omega0); }
    static CLParams fromDelta2(const Rational& omega0, const Rational& delta2)
    {
        return {omega0, 2 * omega0 * (1 - delta2)};
    }
    static CLParams atEP(const Rational& omega0) { return {omega0, 2 * omega0}; }
    // Modified frequency omega2 = omega0*sqrt(delta2*(2-delta2)); imaginary
    // when overdamped.
    Coeff omega2() const
    {
        return Coeff(omega0) * Coeff::sqrtOfRational(delta2() * (2 - delta2()));
    }
};

struct MKLParams {
    Rational omega0 = 1;
    Rational gamma = 2;
    Rational h1 = 0;

    Rational delta1() const { return 1 - h1 / (2 * omega0); }
    Rational omegaTilde() const { return 2 * omega0 / gamma; }
    static MKLParams fromDelta1(const Rational& omega0, const Rational& gamma,
                                const Rational& delta1)
    {
        return {omega0, gamma, 2 * omega0 * (1 - delta1)};
    }
    static MKLParams atEP(const Rational& omegaTilde, const Rational& gamma = 2)
    {
        Rational omega0 = omegaTilde * gamma / 2;
        return {omega0, gamma, 2 * omega0};
    }
    Coeff omega1() const
    {
        return Coeff(omega0) * Coeff::sqrtOfRational(delta1() * (2 - delta1()));
    }
};

struct HPZParams {
    Rational bplus = 1;
    Rational bminus = Rational(1, 2);
    Rational omega0 = 1;
    Rational gamma = 2;

    static HPZParams atEP(const Rational& bplus, const Rational& bminus,
                          const Rational& omega0 = 1)
    {
        return {bplus, bminus, omega0, 2 * omega0};
    }
};

// Couplings of the generic Markovian Liouvillian
//   K = 2*omega0*iL0 + h1*iM1 + h2*iM2 + gamma*(O0 - I/2)
//       + g0*O+ + g1*L1+ + g2*L2+
struct GenericParams {
    Rational omega0 = 1;
    Rational h1 = 0;
    Rational h2 = 0;
    Rational gamma = 0;
    Rational g0 = 0;
    Rational g1 = 0;
    Rational g2 = 0;
};

} // namespace liouvep
