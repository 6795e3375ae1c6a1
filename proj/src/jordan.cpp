#include "liouvep/jordan.hpp"

#include <stdexcept>

namespace liouvep {

namespace {

// Model-specific ingredients of the two recursions for the normalized
// polynomials Phi_N^(z)/N^z:
//   diagonal (z != N): diag * prev(N-1, z) - ((N-1-z)/2) * diagSkip * prev(N-2, z)
//   parallel (z != 0): (1/z) * par * prev(N-1, z-1) + (1/z) * parSkip * prev(N-2, z-2)
struct Recursion {
    Poly2 diag;
    Coeff diagSkip = Coeff(1);
    Coeff diagDerivQ; // coefficient of dQ prev(N-1, z) in the diagonal step
    Poly2 par;
    Poly2 parSkip; // zero unless the model has a two-step parallel term
};

Recursion clRecursion()
{
    Recursion r;
    r.diag = Poly2::variableQ() - Poly2::variableS();
    r.par = Poly2::variableS().scaled(Coeff(-1));
    return r;
}

Recursion mklRecursion(const Rational& omegaTilde)
{
    Recursion r;
    r.diag = Poly2::variableS().scaled(Coeff(omegaTilde));
    r.diagSkip = Coeff(0);
    r.par = Poly2::variableQ().scaled(Coeff(Rational(1, 2)));
    r.parSkip = Poly2(Coeff(Rational(-1, 8)));
    return r;
}

// The chain is the similarity image of the damping-route chain; the
// diagonal factor is the conjugated coordinate operator, whose derivative
// part survives on non-constant lower-order polynomials.
Recursion hpzRecursion(const HPZParams& p)
{
    Rational bsum = p.bplus + p.bminus;
    Coeff diagPre = Coeff::sqrtOfRational(bsum / (2 * p.bplus));
    Coeff slope = Coeff::sqrtOfRational(p.bplus / p.bminus);
    Recursion r;
    r.diag = (Poly2::variableQ() - Poly2::variableS().scaled(slope)).scaled(diagPre);
    r.diagDerivQ = diagPre * Coeff((p.bplus - p.bminus) / (2 * bsum));
    r.par = Poly2::variableS().scaled(-Coeff::sqrtOfRational(bsum / (2 * p.bminus)));
    return r;
}

// Phi_N^(z)/N^z; the recursions are closed in this normalization.
Poly2 normalizedPhi(const Recursion& r, int N, int z)
{
    if (z < 0 || z > N || N < 0)
        return Poly2();
    if (N == 0)
        return Poly2(1);
    if (z < N) {
        Poly2 prev = normalizedPhi(r, N - 1, z);
        Poly2 out = r.diag * prev;
        if (!r.diagDerivQ.isZero())
            out += prev.diff(Poly2::Var::Q).scaled(r.diagDerivQ);
        if (!r.diagSkip.isZero() && N - 1 - z != 0)
            out -= normalizedPhi(r, N - 2, z)
                       .scaled(r.diagSkip * Coeff(Rational(N - 1 - z, 2)));
        return out;
    }
    Coeff invZ = Coeff(Rational(1, z));
    Poly2 out = (r.par * normalizedPhi(r, N - 1, z - 1)).scaled(invZ);
    if (!r.parSkip.isZero())
        out += (r.parSkip * normalizedPhi(r, N - 2, z - 2)).scaled(invZ);
    return out;
}

Coeff intPow(int base, int z)
{
    Int p = 1;
    for (int i = 0; i < z; ++i)
        p *= base;
    return Coeff(Rational(p));
}

Poly2 phi(const Recursion& r, int N, int z)
{
    return normalizedPhi(r, N, z).scaled(intPow(N, z));
}

// Alternate family: Psi_N^(z) = sum_i c_i Phi_N^(z-i) with c_i = base^i/i!.
Poly2 psi(const Recursion& r, int N, int z, int base)
{
    Poly2 out;
    Int fact = 1;
    Int pow = 1;
    for (int i = 0; i <= z; ++i) {
        if (i > 0) {
            fact *= i;
            pow *= base;
        }
        out += phi(r, N, z - i).scaled(Coeff(Rational(pow, fact)));
    }
    return out;
}

Poly2 chainPolynomial(const Recursion& r, int N, int z, ChainFamily family,
                      int psiBase)
{
    if (N < 0 || z < 0 || z > N)
        throw std::invalid_argument("chainPolynomial: need 0 <= z <= N");
    return family == ChainFamily::phi ? phi(r, N, z) : psi(r, N, z, psiBase);
}

JordanChain assembleChain(const Recursion& r, Frame frame, int N,
                          const GaussianEnvelope& env, const Coeff& lambda,
                          ChainFamily family, int psiBase)
{
    if (N < 0)
        throw std::invalid_argument("buildChain: N must be non-negative");
    JordanChain chain;
    chain.frame = frame;
    chain.N = N;
    chain.lambda = lambda;
    for (int z = 0; z <= N; ++z)
        chain.states.push_back({chainPolynomial(r, N, z, family, psiBase), env});
    return chain;
}

bool representationsAgree(const Recursion& r, int N)
{
    for (int z = 1; z < N; ++z) {
        Poly2 prev = normalizedPhi(r, N - 1, z);
        Poly2 diag = r.diag * prev;
        if (!r.diagDerivQ.isZero())
            diag += prev.diff(Poly2::Var::Q).scaled(r.diagDerivQ);
        if (!r.diagSkip.isZero() && N - 1 - z != 0)
            diag -= normalizedPhi(r, N - 2, z)
                        .scaled(r.diagSkip * Coeff(Rational(N - 1 - z, 2)));
        Coeff invZ = Coeff(Rational(1, z));
        Poly2 par = (r.par * normalizedPhi(r, N - 1, z - 1)).scaled(invZ);
        if (!r.parSkip.isZero())
            par += (r.parSkip * normalizedPhi(r, N - 2, z - 2)).scaled(invZ);
        if (diag != par)
            return false;
    }
    return true;
}

} // namespace

Poly2 chainPolynomialCL(int N, int z, ChainFamily family)
{
    return chainPolynomial(clRecursion(), N, z, family, -N);
}

Poly2 chainPolynomialMKL(int N, int z, const Rational& omegaTilde, ChainFamily family)
{
    return chainPolynomial(mklRecursion(omegaTilde), N, z, family, N);
}

Poly2 chainPolynomialHPZ(int N, int z, const HPZParams& p, ChainFamily family)
{
    return chainPolynomial(hpzRecursion(p), N, z, family, -N);
}

JordanChain buildChainCL(int N, const Rational& omega0, ChainFamily family)
{
    return assembleChain(clRecursion(), Frame::CL, N, clEnvelope(),
                         Coeff(Rational(N) * omega0), family, -N);
}

JordanChain buildChainMKL(int N, const MKLParams& p, ChainFamily family)
{
    if (p.h1 != 2 * p.omega0)
        throw std::invalid_argument("buildChainMKL: parameters not at the exceptional point");
    return assembleChain(mklRecursion(p.omegaTilde()), Frame::MKL, N, mklEnvelope(p),
                         Coeff(Rational(N) * p.gamma / 2), family, N);
}

JordanChain buildChainHPZ(int N, const HPZParams& p, ChainFamily family)
{
    if (p.gamma != 2 * p.omega0)
        throw std::invalid_argument("buildChainHPZ: parameters not at the exceptional point");
    return assembleChain(hpzRecursion(p), Frame::HPZ, N, hpzEnvelope(),
                         Coeff(Rational(N) * p.omega0), family, -N);
}

bool verifyChain(const DiffOp& liouvillian, const JordanChain& chain)
{
    if (static_cast<int>(chain.states.size()) != chain.N + 1)
        return false;
    for (int z = 0; z <= chain.N; ++z) {
        WeightedState expected = chain.states[z].scaled(chain.lambda);
        if (z > 0)
            expected = expected +
                       chain.states[z - 1].scaled(chain.primeConvention
                                                      ? Coeff(1)
                                                      : chain.lambda);
        WeightedState got = liouvillian.apply(chain.states[z]);
        if (got.poly != expected.poly)
            return false;
    }
    return true;
}

bool representationsAgreeCL(int N)
{
    return representationsAgree(clRecursion(), N);
}

bool representationsAgreeMKL(int N, const Rational& omegaTilde)
{
    return representationsAgree(mklRecursion(omegaTilde), N);
}

bool representationsAgreeHPZ(int N, const HPZParams& p)
{
    return representationsAgree(hpzRecursion(p), N);
}

std::vector<Coeff> freedomInverse(const std::vector<Coeff>& c)
{
    if (c.empty() || c[0].isZero())
        throw std::invalid_argument("freedomInverse: need c[0] != 0");
    std::vector<Coeff> d(c.size());
    d[0] = Coeff(1) / c[0];
    for (size_t z = 1; z < c.size(); ++z) {
        Coeff acc;
        for (size_t i = 0; i < z; ++i)
            acc += c[z - i] * d[i];
        d[z] = -acc / c[0];
    }
    return d;
}

std::vector<std::vector<Coeff>> freedomMatrix(const std::vector<Coeff>& c, int N)
{
    if (c.empty() || c[0].isZero())
        throw std::invalid_argument("freedomMatrix: need c[0] != 0");
    std::vector<std::vector<Coeff>> m(N + 1, std::vector<Coeff>(N + 1));
    for (int row = 0; row <= N; ++row)
        for (int col = 0; col <= row; ++col) {
            size_t k = static_cast<size_t>(row - col);
            m[row][col] = k < c.size() ? c[k] : Coeff(0);
        }
    return m;
}

JordanChain applyFreedom(const JordanChain& chain, const std::vector<Coeff>& c)
{
    if (c.empty() || c[0].isZero())
        throw std::invalid_argument("applyFreedom: need c[0] != 0");
    JordanChain out = chain;
    for (int z = 0; z <= chain.N; ++z) {
        WeightedState acc = chain.states[z].scaled(c[0]);
        for (int i = 1; i <= z && i < static_cast<int>(c.size()); ++i)
            acc = acc + chain.states[z - i].scaled(c[i]);
        out.states[z] = acc;
    }
    return out;
}

JordanChain renormalizeConvention(const JordanChain& chain)
{
    if (chain.primeConvention)
        return chain;
    if (chain.N == 0)
        throw std::invalid_argument("renormalizeConvention: N = 0 chain has no rank structure");
    JordanChain out = chain;
    out.primeConvention = true;
    Coeff scale(1);
    for (int z = 1; z <= chain.N; ++z) {
        scale /= chain.lambda;
        out.states[z] = chain.states[z].scaled(scale);
    }
    return out;
}

} // namespace liouvep
