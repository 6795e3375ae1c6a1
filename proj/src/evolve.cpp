#include "liouvep/evolve.hpp"

#include <map>
#include <stdexcept>

namespace liouvep {

std::vector<std::vector<Coeff>> jordanPropagator(const Coeff& lambda,
                                                 const Rational& t, int N)
{
    if (N < 0)
        throw std::invalid_argument("jordanPropagator: N must be non-negative");
    std::vector<std::vector<Coeff>> p(N + 1, std::vector<Coeff>(N + 1));
    std::vector<Coeff> powers(N + 1);
    powers[0] = Coeff(1);
    for (int k = 1; k <= N; ++k)
        powers[k] = powers[k - 1] * (-lambda) * Coeff(t) / Coeff(k);
    for (int i = 0; i <= N; ++i)
        for (int j = i; j <= N; ++j)
            p[i][j] = powers[j - i];
    return p;
}

std::vector<Coeff> decomposeExact(const Poly2& target, const std::vector<Poly2>& basis)
{
    const size_t n = basis.size();
    std::map<Poly2::Key, size_t> rowOf;
    auto rowFor = [&](const Poly2::Key& k) {
        return rowOf.emplace(k, rowOf.size()).first->second;
    };
    for (const auto& b : basis)
        for (const auto& [k, c] : b.terms())
            rowFor(k);
    for (const auto& [k, c] : target.terms())
        rowFor(k);

    const size_t rows = rowOf.size();
    if (rows < n)
        throw std::invalid_argument("decomposeExact: basis is linearly dependent");
    std::vector<std::vector<Coeff>> a(rows, std::vector<Coeff>(n + 1));
    for (size_t col = 0; col < n; ++col)
        for (const auto& [k, c] : basis[col].terms())
            a[rowOf[k]][col] = c;
    for (const auto& [k, c] : target.terms())
        a[rowOf[k]][n] = c;

    // Gaussian elimination over the exact field.
    size_t rank = 0;
    std::vector<size_t> pivotRow(n);
    for (size_t col = 0; col < n && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col].isZero())
            ++pivot;
        if (pivot == rows)
            throw std::invalid_argument("decomposeExact: basis is linearly dependent");
        std::swap(a[rank], a[pivot]);
        Coeff inv = Coeff(1) / a[rank][col];
        for (size_t j = col; j <= n; ++j)
            a[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].isZero())
                continue;
            Coeff f = a[r][col];
            for (size_t j = col; j <= n; ++j)
                a[r][j] -= f * a[rank][j];
        }
        pivotRow[col] = rank;
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (!a[r][n].isZero())
            throw std::invalid_argument("decomposeExact: target outside the span");

    std::vector<Coeff> x(n);
    for (size_t col = 0; col < n; ++col)
        x[col] = a[pivotRow[col]][n];
    return x;
}

std::vector<Coeff> decomposeIntoChain(const WeightedState& state,
                                      const JordanChain& chain)
{
    if (state.env != chain.states.at(0).env)
        throw std::invalid_argument("decomposeIntoChain: envelope mismatch");
    std::vector<Poly2> basis;
    basis.reserve(chain.states.size());
    for (const auto& st : chain.states)
        basis.push_back(st.poly);
    return decomposeExact(state.poly, basis);
}

std::complex<double> ExpState::evalQR(double t, std::complex<double> q,
                                      std::complex<double> r) const
{
    std::complex<double> v = 0;
    for (const auto& term : terms) {
        std::complex<double> poly = 0;
        double tk = 1;
        for (const auto& p : term.tPowers) {
            poly += tk * p.evalQR(q, r);
            tk *= t;
        }
        v += std::exp(-term.rate.toComplex() * t) * poly;
    }
    return v * env.evalQR(q, r);
}

Coeff ExpState::initialTrace() const
{
    Coeff tr;
    for (const auto& term : terms)
        if (!term.tPowers.empty())
            tr += traceIntegral({term.tPowers[0], env});
    return tr;
}

bool ExpState::isTraceConserved() const
{
    for (const auto& term : terms) {
        for (size_t k = 0; k < term.tPowers.size(); ++k) {
            if (term.rate.isZero() && k == 0)
                continue;
            if (!traceIntegral({term.tPowers[k], env}).isZero())
                return false;
        }
    }
    return true;
}

ExpState evolveChain(const JordanChain& chain, const std::vector<Coeff>& coeffs)
{
    if (coeffs.size() != chain.states.size())
        throw std::invalid_argument("evolveChain: need one coefficient per rank");
    const Coeff step = chain.primeConvention ? Coeff(-1) : -chain.lambda;
    ExpTerm term;
    term.rate = chain.lambda;
    Coeff factor(1); // step^k / k!
    for (int k = 0; k <= chain.N; ++k) {
        if (k > 0)
            factor *= step / Coeff(k);
        Poly2 p;
        for (int z = 0; z + k <= chain.N; ++z)
            p += chain.states[z].poly.scaled(factor * coeffs[z + k]);
        if (!p.isZero())
            term.tPowers.resize(k + 1), term.tPowers[k] = p;
    }
    ExpState out;
    out.env = chain.states.at(0).env;
    out.terms.push_back(std::move(term));
    return out;
}

std::string regimeName(Regime r)
{
    switch (r) {
    case Regime::underdamped: return "underdamped";
    case Regime::critical: return "critical";
    case Regime::overdamped: return "overdamped";
    }
    return "?";
}

namespace {

// Initial condition shared by all regimes: the relaxing excited state
// 1 - (3/2) * (2/3)(1 - 2Q^2 + 2Qs - 2s^2), over the unit envelope.
Poly2 initialDeviation()
{
    Poly2 pi10 = (Poly2(1) - Poly2::monomial(2, 0, Coeff(2)) +
                  Poly2::monomial(1, 1, Coeff(2)) - Poly2::monomial(0, 2, Coeff(2)))
                     .scaled(Coeff(Rational(2, 3)));
    return pi10.scaled(Coeff(Rational(-3, 2)));
}

ExpState eigenmodeScenario(const CLParams& params)
{
    SimilarityMap map = hatOperatorsCL(params);
    const std::vector<EigIndex> modes{{1, 0, +1}, {2, 2, +1}, {2, 2, -1}};
    std::vector<Poly2> basis;
    for (const auto& idx : modes)
        basis.push_back(transformedEigenfunction(map, idx).poly);
    std::vector<Coeff> coeffs = decomposeExact(initialDeviation(), basis);

    ExpState out;
    out.env = clEnvelope();
    out.terms.push_back({Coeff(0), {Poly2(1)}});
    for (size_t i = 0; i < modes.size(); ++i) {
        if (coeffs[i].isZero())
            continue;
        out.terms.push_back(
            {clEigenvalue(params, modes[i]), {basis[i].scaled(coeffs[i])}});
    }
    return out;
}

} // namespace

ExpState relaxationScenario(Regime r, const Rational& omega0)
{
    switch (r) {
    case Regime::underdamped:
        return eigenmodeScenario({omega0, omega0});
    case Regime::overdamped:
        return eigenmodeScenario({omega0, 3 * omega0});
    case Regime::critical: {
        JordanChain chain = buildChainCL(2, omega0);
        std::vector<Coeff> coeffs =
            decomposeIntoChain({initialDeviation(), clEnvelope()}, chain);
        ExpState out = evolveChain(chain, coeffs);
        out.terms.push_back({Coeff(0), {Poly2(1)}});
        return out;
    }
    }
    throw std::logic_error("relaxationScenario: unknown regime");
}

std::vector<DatasetRow> figure2Dataset(const std::vector<double>& times,
                                       const std::vector<double>& grid)
{
    std::vector<DatasetRow> rows;
    for (Regime r : {Regime::underdamped, Regime::critical, Regime::overdamped}) {
        ExpState state = relaxationScenario(r);
        for (double t : times) {
            for (double x : grid)
                rows.push_back({regimeName(r), t, "diagonal", x,
                                state.evalQR(t, x, 0.0).real()});
            for (double x : grid)
                rows.push_back({regimeName(r), t, "offDiagonal", x,
                                state.evalQR(t, 0.0, x).real()});
        }
    }
    return rows;
}

} // namespace liouvep
