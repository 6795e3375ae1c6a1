#pragma once

#include <vector>

#include "liouvep/gaussian.hpp"

namespace liouvep {

// One summand coeff * Q^qPow * s^sPow * dQ^dQOrd * dS^dSOrd.  The
// derivative factors act first, the monomial prefactor multiplies after.
struct DiffOpTerm {
    Coeff coeff;
    int qPow = 0;
    int sPow = 0;
    int dQOrd = 0;
    int dSOrd = 0;
};

class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(Frame f) : frame_(f) {}

    Frame frame() const { return frame_; }
    const std::vector<DiffOpTerm>& terms() const { return terms_; }

    DiffOp& addTerm(const Coeff& c, int qPow, int sPow, int dQOrd, int dSOrd);
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp scaled(const Coeff& c) const;
    bool operator==(const DiffOp& o) const;

    // Exact action on a weighted state: derivatives fold into the envelope,
    // the result shares the envelope.
    WeightedState apply(const WeightedState& state) const;

    // Coordinate change Q = fq*Q', s = fs*s'; returns the operator expressed
    // in the primed frame.
    DiffOp rescaled(const Coeff& fq, const Coeff& fs, Frame newFrame) const;

private:
    Frame frame_ = Frame::KL;
    std::vector<DiffOpTerm> terms_;
    void canonicalize();
};

inline WeightedState applyOp(const DiffOp& op, const WeightedState& s)
{
    return op.apply(s);
}

enum class Generator { iL0, iM1, iM2, O0MinusHalf, OPlus, L1Plus, L2Plus };

// The seven generators of the generic Markovian Liouvillian, in the raw
// (Q, s) coordinates.
DiffOp buildGenerator(Generator g);

DiffOp klLiouvillian(const KLParams& p);
DiffOp klUnitaryPart(const Rational& omega);
DiffOp klDissipativePart(const Rational& gamma, const Rational& b);
DiffOp genericLiouvillian(const GenericParams& p);
DiffOp clLiouvillian(const CLParams& p);
DiffOp clLiouvillianEP(const Rational& omega0);
DiffOp mklLiouvillian(const MKLParams& p);
DiffOp mklLiouvillianEP(const Rational& omegaTilde, const Rational& gamma = 2);
DiffOp hpzLiouvillian(const HPZParams& p);
DiffOp hpzLiouvillianEP(const HPZParams& p);

// Hat-coordinate operators S X S^-1 realizing the similarity maps on the
// coordinate level; products applied to the target stationary state generate
// the transformed eigenfunctions.
struct SimilarityMap {
    DiffOp hatQ;  // image of Q/sqrt(2b)
    DiffOp hatIR; // image of i*r*sqrt(b/2)
    GaussianEnvelope targetEnvelope;
    Frame frame;
};

SimilarityMap hatOperatorsCL(const CLParams& p);
SimilarityMap hatOperatorsMKL(const MKLParams& p);
SimilarityMap hatOperatorsHPZ(const HPZParams& p);

// Central-difference evaluation of (op state)(Q0, r0); test-only oracle,
// independent of the symbolic folding in DiffOp::apply.
std::complex<double> finiteDifferenceOracle(const DiffOp& op, const WeightedState& state,
                                            double q0, double r0, double h);

} // namespace liouvep
