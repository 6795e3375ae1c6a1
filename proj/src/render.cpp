#include "liouvep/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace liouvep {

namespace {

std::string fmtDouble(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v == 0 ? 0.0 : v);
    return buf;
}

} // namespace

OutputFormat parseFormat(const std::string& name)
{
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    if (name == "text")
        return OutputFormat::text;
    throw std::invalid_argument("unknown format: " + name);
}

Model parseModel(const std::string& name)
{
    if (name == "cl")
        return Model::cl;
    if (name == "mkl")
        return Model::mkl;
    if (name == "hpz")
        return Model::hpz;
    throw std::invalid_argument("unknown model: " + name);
}

Rational parseRational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty number");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac = text.size() - dot - 1;
        Int den = 1;
        for (size_t i = 0; i < frac; ++i)
            den *= 10;
        return Rational(Int(digits), den);
    }
    return Rational(text);
}

std::vector<SpectrumRow> spectrumSweep(const std::vector<std::string>& omegaTokens,
                                       const Rational& gamma, int mMax)
{
    if (mMax < 0)
        throw std::invalid_argument("spectrumSweep: mMax must be non-negative");
    std::vector<SpectrumRow> rows;
    for (const auto& token : omegaTokens) {
        bool imag = !token.empty() && token.back() == 'i';
        Rational q = parseRational(imag ? token.substr(0, token.size() - 1) : token);
        Coeff omega = imag ? Coeff::i() * Coeff(q) : Coeff(q);
        for (int m = 0; m <= mMax; ++m) {
            for (int n = 0; n <= m; ++n) {
                for (int sign : {+1, -1}) {
                    if (n == 0 && sign < 0)
                        continue;
                    Coeff lambda = Coeff(sign * n) * Coeff::i() * omega +
                                   Coeff(Rational(2 * m - n) * gamma / 2);
                    rows.push_back({token, m, n, sign, lambda});
                }
            }
        }
    }
    return rows;
}

std::string renderSpectrum(const std::vector<SpectrumRow>& rows, OutputFormat fmt)
{
    if (fmt == OutputFormat::csv || fmt == OutputFormat::text) {
        std::ostringstream os;
        os << "omega,m,n,sign,re_lambda,im_lambda\n";
        for (const auto& r : rows)
            os << r.omega << "," << r.m << "," << r.n << "," << r.sign << ","
               << fmtDouble(r.lambda.re().toDouble()) << ","
               << fmtDouble(r.lambda.im().toDouble()) << "\n";
        return os.str();
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{"omega", r.omega},
                     {"m", r.m},
                     {"n", r.n},
                     {"sign", r.sign},
                     {"re_lambda", r.lambda.re().toDouble()},
                     {"im_lambda", r.lambda.im().toDouble()},
                     {"lambda", r.lambda.str()}});
    return j.dump(2) + "\n";
}

namespace {

Poly2 chainPoly(Model model, int N, int z, ChainFamily family,
                const Rational& omegaTilde, const HPZParams& hpz)
{
    switch (model) {
    case Model::cl: return chainPolynomialCL(N, z, family);
    case Model::mkl: return chainPolynomialMKL(N, z, omegaTilde, family);
    case Model::hpz: return chainPolynomialHPZ(N, z, hpz, family);
    }
    throw std::logic_error("chainPoly: unknown model");
}

std::string modelName(Model model)
{
    switch (model) {
    case Model::cl: return "cl";
    case Model::mkl: return "mkl";
    case Model::hpz: return "hpz";
    }
    return "?";
}

} // namespace

std::string renderChains(Model model, int nMax, ChainFamily family, OutputFormat fmt,
                         const Rational& omegaTilde, const HPZParams& hpz)
{
    if (nMax < 0)
        throw std::invalid_argument("renderChains: nMax must be non-negative");
    const std::string variant = family == ChainFamily::phi ? "primary" : "alternative";
    if (fmt == OutputFormat::text) {
        std::ostringstream os;
        os << "model: " << modelName(model) << "\n";
        os << "variant: " << variant << "\n";
        for (int N = 0; N <= nMax; ++N)
            for (int z = 0; z <= N; ++z) {
                os << "[N=" << N << " z=" << z << "]\n";
                os << chainPoly(model, N, z, family, omegaTilde, hpz).serialize();
            }
        return os.str();
    }
    if (fmt == OutputFormat::json) {
        nlohmann::json j;
        j["model"] = modelName(model);
        j["variant"] = variant;
        nlohmann::json chains = nlohmann::json::array();
        for (int N = 0; N <= nMax; ++N) {
            nlohmann::json entry;
            entry["N"] = N;
            nlohmann::json polys = nlohmann::json::object();
            for (int z = 0; z <= N; ++z)
                polys[std::to_string(z)] =
                    chainPoly(model, N, z, family, omegaTilde, hpz).serialize();
            entry["polynomials"] = polys;
            chains.push_back(entry);
        }
        j["chains"] = chains;
        return j.dump(2) + "\n";
    }
    throw std::invalid_argument("renderChains: csv output is not defined for tables");
}

std::string renderEvolve(const std::vector<DatasetRow>& rows, OutputFormat fmt)
{
    if (fmt == OutputFormat::csv || fmt == OutputFormat::text) {
        std::ostringstream os;
        os << "regime,t,axis,coord,value\n";
        for (const auto& r : rows)
            os << r.regime << "," << fmtDouble(r.t) << "," << r.axis << ","
               << fmtDouble(r.coord) << "," << fmtDouble(r.value) << "\n";
        return os.str();
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{"regime", r.regime},
                     {"t", r.t},
                     {"axis", r.axis},
                     {"coord", r.coord},
                     {"value", r.value}});
    return j.dump(2) + "\n";
}

} // namespace liouvep
