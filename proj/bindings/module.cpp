#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liouvep/render.hpp"
#include "liouvep/verify.hpp"

namespace py = pybind11;
using namespace liouvep;

namespace {

ChainFamily parseVariant(const std::string& name)
{
    if (name == "primary")
        return ChainFamily::phi;
    if (name == "alternative")
        return ChainFamily::psi;
    throw std::invalid_argument("unknown variant: " + name);
}

Regime parseRegime(const std::string& name)
{
    if (name == "underdamped")
        return Regime::underdamped;
    if (name == "critical")
        return Regime::critical;
    if (name == "overdamped")
        return Regime::overdamped;
    throw std::invalid_argument("unknown regime: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact spectral data of damped-oscillator Liouvillians at and "
              "around their exceptional points";

    m.def(
        "chain_table",
        [](const std::string& model, int nMax, const std::string& variant,
           const std::string& fmt, const std::string& omegaTilde) {
            return renderChains(parseModel(model), nMax, parseVariant(variant),
                                parseFormat(fmt), parseRational(omegaTilde));
        },
        py::arg("model"), py::arg("n_max") = 3, py::arg("variant") = "primary",
        py::arg("format") = "text", py::arg("omega_tilde") = "1",
        "Jordan-chain polynomial tables for 0 <= z <= N <= n_max.");

    m.def(
        "chain_polynomial",
        [](const std::string& model, int N, int z, const std::string& variant,
           const std::string& omegaTilde) {
            ChainFamily fam = parseVariant(variant);
            switch (parseModel(model)) {
            case Model::cl: return chainPolynomialCL(N, z, fam).serialize();
            case Model::mkl:
                return chainPolynomialMKL(N, z, parseRational(omegaTilde), fam)
                    .serialize();
            case Model::hpz:
                return chainPolynomialHPZ(N, z, HPZParams::atEP(1, Rational(1, 2)),
                                          fam)
                    .serialize();
            }
            throw std::logic_error("unreachable");
        },
        py::arg("model"), py::arg("n"), py::arg("z"),
        py::arg("variant") = "primary", py::arg("omega_tilde") = "1",
        "One serialized chain polynomial, exact coefficients.");

    m.def(
        "spectrum",
        [](const std::vector<std::string>& omegas, const std::string& gamma,
           int mMax, const std::string& fmt) {
            return renderSpectrum(spectrumSweep(omegas, parseRational(gamma), mMax),
                                  parseFormat(fmt));
        },
        py::arg("omegas"), py::arg("gamma") = "1/2", py::arg("m_max") = 2,
        py::arg("format") = "csv",
        "Eigenvalue sweep; omega tokens ending in 'i' are imaginary.");

    m.def(
        "eigenvalue",
        [](int mIdx, int nIdx, int sign, const std::string& omega,
           const std::string& gamma) {
            auto rows = spectrumSweep({omega}, parseRational(gamma),
                                      std::max(mIdx, nIdx));
            for (const auto& r : rows)
                if (r.m == mIdx && r.n == nIdx && r.sign == sign)
                    return r.lambda.toComplex();
            throw std::invalid_argument("invalid eigenvalue index");
        },
        py::arg("m"), py::arg("n"), py::arg("sign") = +1, py::arg("omega") = "1",
        py::arg("gamma") = "1/2",
        "lambda = sign*i*n*omega + (2m - n)*gamma/2 as a complex number.");

    m.def(
        "verify",
        [](const std::string& suite, int nMax) {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& r : runSuite(suite, nMax))
                out.emplace_back(r.name, r.ok, r.detail);
            return out;
        },
        py::arg("suite") = "all", py::arg("n_max") = 6,
        "Run an invariant suite; returns (name, ok, detail) triples.");

    m.def(
        "evolve_dataset",
        [](const std::vector<double>& times, const std::vector<double>& grid,
           const std::string& fmt) {
            return renderEvolve(figure2Dataset(times, grid), parseFormat(fmt));
        },
        py::arg("times"), py::arg("grid"), py::arg("format") = "csv",
        "Diagonal/off-diagonal slices of the three damping regimes.");

    m.def(
        "scenario_value",
        [](const std::string& regime, double t, double q, double r) {
            return relaxationScenario(parseRegime(regime)).evalQR(t, q, r);
        },
        py::arg("regime"), py::arg("t"), py::arg("q"), py::arg("r") = 0.0,
        "Evaluate the relaxing excited state at time t and point (Q, r).");

    m.attr("__version__") = "1.0.0";
}
