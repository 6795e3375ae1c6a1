#pragma once

#include "liouvep/evolve.hpp"

namespace liouvep {

enum class OutputFormat { csv, json, text };

// Throws std::invalid_argument on unknown names.
OutputFormat parseFormat(const std::string& name);

enum class Model { cl, mkl, hpz };

Model parseModel(const std::string& name);

struct SpectrumRow {
    std::string omega; // sweep token, e.g. "1", "1/2", "0.5i"
    int m = 0;
    int n = 0;
    int sign = +1;
    Coeff lambda;
};

// Eigenvalues lambda = sign*i*n*omega + (2m-n)*gamma/2 across a frequency
// sweep; tokens ending in 'i' denote imaginary omega (the overdamped side of
// the exceptional point).
std::vector<SpectrumRow> spectrumSweep(const std::vector<std::string>& omegaTokens,
                                       const Rational& gamma, int mMax);

std::string renderSpectrum(const std::vector<SpectrumRow>& rows, OutputFormat fmt);

// Chain tables for 0 <= z <= N <= nMax; text output is the golden-file
// format, one serialized polynomial block per (N, z).
std::string renderChains(Model model, int nMax, ChainFamily family,
                         OutputFormat fmt, const Rational& omegaTilde = 1,
                         const HPZParams& hpz = HPZParams::atEP(1, Rational(1, 2)));

std::string renderEvolve(const std::vector<DatasetRow>& rows, OutputFormat fmt);

// Parse "a/b", integers, or plain decimals ("0.5") exactly.
Rational parseRational(const std::string& text);

} // namespace liouvep
