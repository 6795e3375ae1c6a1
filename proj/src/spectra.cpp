#include "liouvep/spectra.hpp"

#include <stdexcept>

namespace liouvep {

Coeff klEigenvalue(const KLParams& p, const EigIndex& idx)
{
    if (!idx.valid())
        throw std::invalid_argument("klEigenvalue: invalid index");
    Rational re = Rational(idx.degeneracy()) * p.gamma / 2;
    Rational im = Rational(idx.sign * idx.n) * p.omega;
    return Coeff(SurdReal(re), SurdReal(im));
}

Coeff clEigenvalue(const CLParams& p, const EigIndex& idx)
{
    if (!idx.valid())
        throw std::invalid_argument("clEigenvalue: invalid index");
    Coeff decay(Rational(idx.degeneracy()) * p.gamma / 2);
    return decay + Coeff::i() * Coeff(idx.sign * idx.n) * p.omega2();
}

std::vector<Rational> hermitePoly(int n)
{
    if (n < 0)
        throw std::invalid_argument("hermitePoly: negative order");
    // H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}
    std::vector<Rational> prev{1};
    if (n == 0)
        return prev;
    std::vector<Rational> cur{0, 2};
    for (int k = 1; k < n; ++k) {
        std::vector<Rational> next(k + 2, Rational(0));
        for (int p = 0; p <= k; ++p)
            next[p + 1] += 2 * cur[p];
        for (int p = 0; p < k; ++p)
            next[p] -= 2 * k * prev[p];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly2 klPiUV(const EigIndex& idx)
{
    if (!idx.valid())
        throw std::invalid_argument("klPiUV: invalid index");
    const int m = idx.m, n = idx.n, sign = idx.sign;
    // Overall factor sqrt((m-n)!/m!) = 1/sqrt((m-n+1)...m)
    Int ratioDen = 1;
    for (int k = m - n + 1; k <= m; ++k)
        ratioDen *= k;
    Coeff overall = Coeff(1) / Coeff::sqrtOfRational(Rational(ratioDen));
    // 1/i^n = (-i)^n
    for (int k = 0; k < n; ++k)
        overall *= -Coeff::i();

    Poly2 out;
    for (int mu = 0; mu <= m - n; ++mu) {
        for (int nu = 0; nu <= mu; ++nu) {
            for (int sigma = 0; sigma <= n; ++sigma) {
                Rational c = Rational(binomial(m, n + mu)) * binomial(mu, nu) *
                             binomial(n, sigma);
                c /= Rational(factorial(mu) * (Int(1) << (2 * nu + sigma)));
                if ((mu + nu) % 2 != 0)
                    c = -c;
                if (sign < 0 && (n + sigma) % 2 != 0)
                    c = -c;
                // H_{2nu+sigma}(Y) with Y = -i*V: the power p contributes
                // (-i)^p V^p.
                const int uPow = 2 * (mu - nu) + n - sigma;
                auto herm = hermitePoly(2 * nu + sigma);
                for (int p = 0; p < static_cast<int>(herm.size()); ++p) {
                    if (herm[p] == 0)
                        continue;
                    Coeff term = overall * Coeff(c * herm[p]);
                    switch (p % 4) {
                    case 1: term *= -Coeff::i(); break;
                    case 2: term = -term; break;
                    case 3: term *= Coeff::i(); break;
                    default: break;
                    }
                    out += Poly2::monomial(uPow, p, term);
                }
            }
        }
    }
    return out;
}

Poly2 klPi(const EigIndex& idx, const Rational& b)
{
    if (b <= 0)
        throw std::invalid_argument("klPi: b must be positive");
    Coeff cq = Coeff(1) / Coeff::sqrtOfRational(2 * b);
    Coeff cs = Coeff::sqrtOfRational(b / 2);
    return klPiUV(idx).substituteLinear(cq, cs);
}

WeightedState klEigenfunction(const EigIndex& idx, const Rational& b)
{
    return {klPi(idx, b), klEnvelope(b)};
}

WeightedState transformedEigenfunction(const SimilarityMap& map, const EigIndex& idx)
{
    return hatSubstitute(map, klPiUV(idx));
}

WeightedState hatSubstitute(const SimilarityMap& map, const Poly2& poly)
{
    WeightedState base{Poly2(1), map.targetEnvelope};
    WeightedState out{Poly2(), map.targetEnvelope};
    for (const auto& [key, c] : poly.terms()) {
        WeightedState cur = base;
        for (int i = 0; i < key.first; ++i)
            cur = map.hatQ.apply(cur);
        for (int i = 0; i < key.second; ++i)
            cur = map.hatIR.apply(cur);
        out = out + cur.scaled(c);
    }
    return out;
}

} // namespace liouvep
