#pragma once

#include "liouvep/jordan.hpp"
#include "liouvep/spectra.hpp"

namespace liouvep {

// Propagator of a single Jordan block at time t, with the overall factor
// e^{-lambda t} stripped: entry [i][j] = (-lambda t)^(j-i)/(j-i)! for j >= i,
// so c'_i(t) = e^{-lambda t} sum_j P[i][j] c_j.
std::vector<std::vector<Coeff>> jordanPropagator(const Coeff& lambda,
                                                 const Rational& t, int N);

// Solve target = sum_i x_i basis_i exactly; throws when the system is
// inconsistent or the basis is linearly dependent.
std::vector<Coeff> decomposeExact(const Poly2& target, const std::vector<Poly2>& basis);

// Coefficients of the state in the rank basis of a chain.
std::vector<Coeff> decomposeIntoChain(const WeightedState& state,
                                      const JordanChain& chain);

// Closed-form evolved state: sum over decay rates of
// e^{-rate t} * sum_k t^k * tPowers[k](Q, s), all over a shared envelope.
struct ExpTerm {
    Coeff rate;
    std::vector<Poly2> tPowers;
};

struct ExpState {
    GaussianEnvelope env;
    std::vector<ExpTerm> terms;

    std::complex<double> evalQR(double t, std::complex<double> q,
                                std::complex<double> r) const;
    // Exact trace at t = 0.
    Coeff initialTrace() const;
    // True iff every decaying or secular component is traceless, which makes
    // the trace a constant of motion.
    bool isTraceConserved() const;
};

// Evolve sum_z coeffs[z] F^(z) under the block propagator; the t-dependence
// stays symbolic (secular powers of t times a single decay rate).
ExpState evolveChain(const JordanChain& chain, const std::vector<Coeff>& coeffs);

// Relaxation of the first excited oscillator state at three damping
// strengths gamma = omega0, 2*omega0 (exceptional point), 3*omega0.
enum class Regime { underdamped, critical, overdamped };

std::string regimeName(Regime r);

ExpState relaxationScenario(Regime r, const Rational& omega0 = 1);

struct DatasetRow {
    std::string regime;
    double t;
    std::string axis;
    double coord;
    double value;
};

// Diagonal and off-diagonal slices of all three regimes on a shared grid.
std::vector<DatasetRow> figure2Dataset(const std::vector<double>& times,
                                       const std::vector<double>& grid);

} // namespace liouvep
