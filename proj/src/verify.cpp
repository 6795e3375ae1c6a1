#include "liouvep/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "liouvep/evolve.hpp"
#include "liouvep/spectra.hpp"

namespace liouvep {

namespace {

using Matrix = std::vector<std::vector<Coeff>>;

Matrix matMul(const Matrix& a, const Matrix& b)
{
    size_t n = a.size();
    Matrix r(n, std::vector<Coeff>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].isZero())
                continue;
            for (size_t j = 0; j < n; ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// lambda * (I + lower shift), the matrix of the Liouvillian on one Jordan
// block in the rank basis.
Matrix blockMatrix(const Coeff& lambda, int N)
{
    Matrix k(N + 1, std::vector<Coeff>(N + 1));
    for (int i = 0; i <= N; ++i) {
        k[i][i] = lambda;
        if (i > 0)
            k[i][i - 1] = lambda;
    }
    return k;
}

Rational randomRational(std::mt19937& rng, bool nonzero = false)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int n = num(rng);
    while (nonzero && n == 0)
        n = num(rng);
    return Rational(n, den(rng));
}

void check(std::vector<CheckResult>& out, const std::string& name, bool ok,
           const std::string& detail = "")
{
    out.push_back({name, ok, detail});
}

std::vector<CheckResult> klEigenSuite(int mMax)
{
    std::vector<CheckResult> out;
    KLParams params{1, Rational(1, 2), Rational(1, 2)};
    DiffOp k = klLiouvillian(params);
    bool ok = true;
    for (int m = 0; m <= mMax && ok; ++m)
        for (int n = 0; n <= m && ok; ++n)
            for (int sign : {+1, -1}) {
                if (n == 0 && sign < 0)
                    continue;
                EigIndex idx{m, n, sign};
                WeightedState f = klEigenfunction(idx, params.b);
                WeightedState residual =
                    k.apply(f) - f.scaled(klEigenvalue(params, idx));
                if (!residual.poly.isZero()) {
                    ok = false;
                    break;
                }
            }
    check(out, "kl-eigen: eigen-relations exact", ok);
    return out;
}

std::vector<CheckResult> chainsSuite(int nMax)
{
    std::vector<CheckResult> out;
    const Rational omega0 = 1;
    DiffOp kCL = clLiouvillianEP(omega0);
    MKLParams mkl = MKLParams::atEP(1);
    DiffOp kMKL = mklLiouvillian(mkl);
    HPZParams hpz = HPZParams::atEP(1, Rational(1, 2));
    DiffOp kHPZ = hpzLiouvillianEP(hpz);
    for (ChainFamily fam : {ChainFamily::phi, ChainFamily::psi}) {
        bool cl = true, mk = true, hp = true;
        for (int N = 0; N <= nMax; ++N) {
            cl = cl && verifyChain(kCL, buildChainCL(N, omega0, fam));
            mk = mk && verifyChain(kMKL, buildChainMKL(N, mkl, fam));
            hp = hp && verifyChain(kHPZ, buildChainHPZ(N, hpz, fam));
        }
        std::string tag = fam == ChainFamily::phi ? "primary" : "alternative";
        check(out, "chains: CL " + tag + " chains exact", cl);
        check(out, "chains: mKL " + tag + " chains exact", mk);
        check(out, "chains: HPZ " + tag + " chains exact", hp);
    }
    bool agree = true;
    for (int N = 0; N <= nMax; ++N)
        agree = agree && representationsAgreeCL(N) &&
                representationsAgreeMKL(N, mkl.omegaTilde()) &&
                representationsAgreeHPZ(N, hpz);
    check(out, "chains: diagonal/parallel overlap agreement", agree);
    return out;
}

std::vector<CheckResult> freedomSuite(int nMax)
{
    std::vector<CheckResult> out;
    std::mt19937 rng(20230217);
    const Rational omega0 = 1;
    DiffOp kCL = clLiouvillianEP(omega0);
    bool invariant = true, chainsOk = true;
    for (int trial = 0; trial < 20; ++trial) {
        int N = std::min(nMax, 1 + static_cast<int>(rng() % 6));
        std::vector<Coeff> c(N + 1);
        c[0] = Coeff(randomRational(rng, true));
        for (int i = 1; i <= N; ++i)
            c[i] = Coeff(randomRational(rng));
        Matrix t = freedomMatrix(c, N);
        Matrix tInv = freedomMatrix(freedomInverse(c), N);
        Coeff lambda(Rational(N) * omega0);
        Matrix k = blockMatrix(lambda, N);
        if (matMul(matMul(t, k), tInv) != k)
            invariant = false;
        JordanChain chain = applyFreedom(buildChainCL(N, omega0), c);
        if (!verifyChain(kCL, chain))
            chainsOk = false;
    }
    check(out, "freedom: T K T^-1 = K for random transforms", invariant);
    check(out, "freedom: transformed chains satisfy the chain relations", chainsOk);

    std::vector<Coeff> ones{Coeff(1), Coeff(1), Coeff(1), Coeff(1)};
    std::vector<Coeff> d = freedomInverse(ones);
    bool worked = d == std::vector<Coeff>{Coeff(1), Coeff(-1), Coeff(0), Coeff(0)};
    check(out, "freedom: c=1 inverse is (1,-1,0,0)", worked);
    return out;
}

std::vector<CheckResult> traceSuite(int nMax)
{
    std::vector<CheckResult> out;
    MKLParams mkl = MKLParams::atEP(1);
    HPZParams hpz = HPZParams::atEP(1, Rational(1, 2));
    bool ok = true;
    for (ChainFamily fam : {ChainFamily::phi, ChainFamily::psi})
        for (int N = 0; N <= nMax && ok; ++N) {
            std::vector<JordanChain> chains{buildChainCL(N, 1, fam),
                                            buildChainMKL(N, mkl, fam),
                                            buildChainHPZ(N, hpz, fam)};
            for (const auto& chain : chains)
                for (int z = 0; z <= N; ++z) {
                    Coeff expected = (N == 0 && z == 0) ? Coeff(1) : Coeff(0);
                    if (traceIntegral(chain.states[z]) != expected) {
                        ok = false;
                        break;
                    }
                }
        }
    check(out, "trace: tr F_N^(z) = delta_N0 delta_z0", ok);
    return out;
}

std::vector<CheckResult> oracleSuite()
{
    std::vector<CheckResult> out;
    std::mt19937 rng(71302);
    std::uniform_int_distribution<int> ord(0, 2);
    std::uniform_real_distribution<double> point(-1.5, 1.5);
    // derivative orders capped at two in total, like the model Liouvillians
    const std::pair<int, int> derivs[] = {{0, 0}, {1, 0}, {0, 1},
                                          {2, 0}, {0, 2}, {1, 1}};
    bool ok = true;
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        DiffOp op(Frame::KL);
        for (int t = 0; t < 3; ++t) {
            auto [dq, ds] = derivs[rng() % 6];
            op.addTerm(Coeff(randomRational(rng)), ord(rng), ord(rng), dq, ds);
        }
        Poly2 poly;
        for (int t = 0; t < 3; ++t)
            poly += Poly2::monomial(ord(rng), ord(rng), Coeff(randomRational(rng)));
        poly += Poly2(1);
        WeightedState state{poly, klEnvelope(Rational(1, 2))};
        double q0 = point(rng), r0 = point(rng);
        auto symbolic = op.apply(state).evalQR(q0, r0);
        auto numeric = finiteDifferenceOracle(op, state, q0, r0, 1e-4);
        double scale = std::max(1.0, std::abs(symbolic));
        double err = std::abs(symbolic - numeric) / scale;
        worst = std::max(worst, err);
        if (err > 1e-6)
            ok = false;
    }
    std::ostringstream detail;
    detail << "max rel err " << worst;
    check(out, "oracle: symbolic apply matches finite differences", ok, detail.str());
    return out;
}

} // namespace

std::vector<CheckResult> runSuite(const std::string& suite, int nMax)
{
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> r) {
        out.insert(out.end(), r.begin(), r.end());
    };
    bool all = suite == "all";
    bool known = all;
    if (all || suite == "kl-eigen")
        append(klEigenSuite(std::min(nMax, 6))), known = true;
    if (all || suite == "chains")
        append(chainsSuite(nMax)), known = true;
    if (all || suite == "freedom")
        append(freedomSuite(std::max(1, nMax))), known = true;
    if (all || suite == "trace")
        append(traceSuite(nMax)), known = true;
    if (all || suite == "oracle")
        append(oracleSuite()), known = true;
    if (!known)
        throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

bool allPassed(const std::vector<CheckResult>& results)
{
    for (const auto& r : results)
        if (!r.ok)
            return false;
    return true;
}

} // namespace liouvep
