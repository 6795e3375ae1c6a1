#pragma once

#include "liouvep/diffop.hpp"

namespace liouvep {

// Two chain families related by a lower-triangular Toeplitz transform:
// phi is the primary recursion, psi the alternate choice.
enum class ChainFamily { phi, psi };

// A Jordan chain of length N+1 at the exceptional point: states[z] is the
// generalized eigenvector of rank z, satisfying
//   K F^(0) = lambda F^(0),  K F^(z) = lambda (F^(z) + F^(z-1)).
// With primeConvention set the states are rescaled by lambda^-z and satisfy
//   K F'^(z) = lambda F'^(z) + F'^(z-1).
struct JordanChain {
    Frame frame = Frame::CL;
    int N = 0;
    Coeff lambda;
    std::vector<WeightedState> states;
    bool primeConvention = false;
};

// Chain polynomials Phi_N^(z) (family phi) or Psi_N^(z) (family psi) in the
// (Q, s) coordinates of each model at its exceptional point.
Poly2 chainPolynomialCL(int N, int z, ChainFamily family = ChainFamily::phi);
Poly2 chainPolynomialMKL(int N, int z, const Rational& omegaTilde,
                         ChainFamily family = ChainFamily::phi);
Poly2 chainPolynomialHPZ(int N, int z, const HPZParams& p,
                         ChainFamily family = ChainFamily::phi);

JordanChain buildChainCL(int N, const Rational& omega0,
                         ChainFamily family = ChainFamily::phi);
// p must lie at the exceptional point h1 = 2*omega0.
JordanChain buildChainMKL(int N, const MKLParams& p,
                          ChainFamily family = ChainFamily::phi);
// p must lie at the exceptional point gamma = 2*omega0.
JordanChain buildChainHPZ(int N, const HPZParams& p,
                          ChainFamily family = ChainFamily::phi);

// Exact check of the generalized eigenvalue relations; the residual of every
// rank must vanish identically.
bool verifyChain(const DiffOp& liouvillian, const JordanChain& chain);

// The diagonal and parallel recursions overlap for z = 1..N-1; true iff they
// produce identical polynomials there.
bool representationsAgreeCL(int N);
bool representationsAgreeMKL(int N, const Rational& omegaTilde);
bool representationsAgreeHPZ(int N, const HPZParams& p);

// Inverse of a lower-triangular Toeplitz transform given by its first
// column c (c[0] != 0).
std::vector<Coeff> freedomInverse(const std::vector<Coeff>& c);

// (N+1)x(N+1) lower-triangular Toeplitz matrix with first column c.
std::vector<std::vector<Coeff>> freedomMatrix(const std::vector<Coeff>& c, int N);

// G^(z) = sum_i c[i] F^(z-i); maps valid chains to valid chains.
JordanChain applyFreedom(const JordanChain& chain, const std::vector<Coeff>& c);

// Rescale to the literature convention F'^(z) = F^(z)/lambda^z.
JordanChain renormalizeConvention(const JordanChain& chain);

} // namespace liouvep
